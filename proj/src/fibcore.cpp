#include "circfib/fibcore.hpp"

#include <algorithm>
#include <charconv>

#include "circfib/errors.hpp"

namespace circfib {

BigInt fib(int k) {
  if (k < -2) throw domain_error("fib: index below -2: " + std::to_string(k));
  BigInt prev = 0;  // F_{-2}
  BigInt cur = 1;   // F_{-1}
  for (int i = -1; i < k; ++i) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return k == -2 ? prev : cur;
}

BigInt classical_fib(int n) {
  if (n < 0) throw domain_error("classical_fib: negative index");
  BigInt a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

DigitWord::DigitWord(std::vector<Digit> digits) : digits_(std::move(digits)) {
  if (digits_.empty()) throw domain_error("empty digit word");
}

DigitWord::DigitWord(std::size_t length, Digit fill) : DigitWord(std::vector<Digit>(length, fill)) {}

DigitWord DigitWord::parse(std::string_view text) {
  std::vector<Digit> digits;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto end = std::min(text.find(',', start), text.size());
      const auto field = text.substr(start, end - start);
      Digit value = 0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
        throw domain_error("bad digit field '" + std::string(field) + "'");
      digits.push_back(value);
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw domain_error(std::string("bad digit '") + c + "'");
      digits.push_back(static_cast<Digit>(c - '0'));
    }
  }
  return DigitWord(std::move(digits));
}

Digit DigitWord::max_digit() const { return *std::max_element(digits_.begin(), digits_.end()); }

bool DigitWord::is_zero() const {
  return std::all_of(digits_.begin(), digits_.end(), [](Digit d) { return d == 0; });
}

bool DigitWord::is_binary() const {
  return std::all_of(digits_.begin(), digits_.end(), [](Digit d) { return d <= 1; });
}

std::string DigitWord::str() const {
  std::string out;
  if (max_digit() <= 9) {
    for (Digit d : digits_) out.push_back(static_cast<char>('0' + d));
    return out;
  }
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(digits_[i]);
  }
  return out;
}

CircWord alternating_word(std::size_t n, Digit first) {
  std::vector<Digit> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = (i % 2 == 0) ? first : 1 - first;
  return CircWord(std::move(d));
}

BigInt valuation(const DigitWord& w) {
  BigInt total = 0;
  BigInt f0 = 1, f1 = 2;  // F_i, F_{i+1}
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i]) total += f0 * w[i];
    BigInt next = f0 + f1;
    f0 = std::move(f1);
    f1 = std::move(next);
  }
  return total;
}

DigitWord zeckendorf(const BigInt& n, std::size_t len) {
  if (n < 0) throw domain_error("zeckendorf: negative value");
  std::vector<BigInt> f;
  f.reserve(len);
  for (std::size_t i = 0; i < len; ++i) f.push_back(i < 2 ? BigInt(i + 1) : f[i - 1] + f[i - 2]);
  const BigInt capacity = len == 1 ? BigInt(2) : f[len - 1] + f[len - 2];
  if (n >= capacity)
    throw Error(ErrorKind::capacity,
                "zeckendorf: " + n.str() + " needs more than " + std::to_string(len) + " digits");

  std::vector<Digit> digits(len, 0);
  BigInt rest = n;
  for (std::size_t i = len; i-- > 0 && rest > 0;) {
    if (f[i] <= rest) {
      digits[i] = 1;
      rest -= f[i];
    }
  }
  return DigitWord(std::move(digits));
}

bool is_admissible(const CircWord& w) {
  if (!w.linear().is_binary()) return false;
  const auto n = static_cast<std::ptrdiff_t>(w.size());
  if (n == 1) return w[0] == 0;
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (w.at(i - 1) == 1 && w.at(i) == 1) return false;
  }
  return true;
}

CircWord rotate(const CircWord& w) { return rotate(w, 1); }

CircWord rotate(const CircWord& w, std::ptrdiff_t times) {
  std::vector<Digit> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    out[w.wrap(static_cast<std::ptrdiff_t>(i) + times)] = w[i];
  return CircWord(std::move(out));
}

LetterWord::LetterWord(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_)
    if (c != 'a' && c != 'b') throw domain_error(std::string("letter outside {a,b}: ") + c);
}

LetterWord LetterWord::substr(std::size_t pos, std::size_t len) const {
  return LetterWord(letters_.substr(pos, len));
}

LetterWord fibonacci_word_prefix(std::size_t n) {
  std::string w = "a";
  while (w.size() < n) {
    std::string next;
    next.reserve(w.size() * 2);
    for (char c : w) {
      if (c == 'a') next += "ab";
      else next += 'a';
    }
    w = std::move(next);
  }
  w.resize(n);
  return LetterWord(std::move(w));
}

LetterCounts letter_counts(const LetterWord& w) {
  const auto a = static_cast<std::size_t>(std::count(w.str().begin(), w.str().end(), 'a'));
  return {a, w.size() - a};
}

bool check_balanced(const LetterWord& w, std::size_t window) {
  if (window == 0 || window > w.size())
    throw domain_error("check_balanced: window must lie in [1, |w|]");
  const auto& s = w.str();
  std::size_t count = static_cast<std::size_t>(std::count(s.begin(), s.begin() + window, 'a'));
  std::size_t lo = count, hi = count;
  for (std::size_t i = window; i < s.size(); ++i) {
    count += (s[i] == 'a');
    count -= (s[i - window] == 'a');
    lo = std::min(lo, count);
    hi = std::max(hi, count);
  }
  return hi - lo <= 1;
}

}  // namespace circfib
