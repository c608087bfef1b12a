#include "circfib/rewrite.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <string>
#include <unordered_set>

#include "circfib/errors.hpp"

namespace circfib {

namespace {

struct Delta {
  std::ptrdiff_t offset;
  int amount;
};

// Offsets relative to the anchor for the forward form of each rule.
constexpr std::array<Delta, 3> kRuleA{{{-1, -1}, {0, -1}, {1, +1}}};
constexpr std::array<Delta, 3> kRuleB{{{-2, +1}, {0, -2}, {1, +1}}};

const std::array<Delta, 3>& deltas_of(Rule r) { return r == Rule::A ? kRuleA : kRuleB; }

int signed_amount(const Delta& d, Direction dir) { return dir == Direction::forward ? d.amount : -d.amount; }

// Each position must cover its own decrements; on short words several
// offsets share a position and their decrements add up.
bool applicable(const CircWord& w, const RewriteMove& m) {
  const auto& ds = deltas_of(m.rule);
  const auto k = static_cast<std::ptrdiff_t>(m.position);
  for (const auto& d : ds) {
    const std::size_t pos = w.wrap(k + d.offset);
    Digit need = 0;
    for (const auto& e : ds) {
      const int a = signed_amount(e, m.direction);
      if (a < 0 && w.wrap(k + e.offset) == pos) need += static_cast<Digit>(-a);
    }
    if (w[pos] < need) return false;
  }
  return true;
}

std::string key_of(std::span<const Digit> digits) {
  std::string k(digits.size(), '\0');
  for (std::size_t i = 0; i < digits.size(); ++i) k[i] = static_cast<char>(digits[i]);
  return k;
}

CircWord word_of(const std::string& key) {
  std::vector<Digit> d(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) d[i] = static_cast<unsigned char>(key[i]);
  return CircWord(std::move(d));
}

}  // namespace

bool is_applicable(const CircWord& w, const RewriteMove& m) {
  return m.position < w.size() && applicable(w, m);
}

CircWord apply_move(const CircWord& w, const RewriteMove& m) {
  if (!is_applicable(w, m))
    throw Error(ErrorKind::inapplicable_move, std::string("rule ") + (m.rule == Rule::A ? "A" : "B") +
                                                  (m.direction == Direction::forward ? " forward" : " backward") +
                                                  " does not apply at " + std::to_string(m.position) + " of " +
                                                  w.str());
  CircWord out = w;
  const auto k = static_cast<std::ptrdiff_t>(m.position);
  for (const auto& d : deltas_of(m.rule)) {
    Digit& digit = out.at(k + d.offset);
    digit = static_cast<Digit>(static_cast<std::int64_t>(digit) + signed_amount(d, m.direction));
  }
  return out;
}

bool crosses_seam(std::size_t length, const RewriteMove& m) {
  const auto k = static_cast<std::ptrdiff_t>(m.position);
  const auto n = static_cast<std::ptrdiff_t>(length);
  for (const auto& d : deltas_of(m.rule)) {
    if (k + d.offset < 0 || k + d.offset >= n) return true;
  }
  return false;
}

std::vector<RewriteMove> applicable_moves(const CircWord& w) {
  std::vector<RewriteMove> moves;
  for (std::size_t k = 0; k < w.size(); ++k) {
    for (Rule r : {Rule::A, Rule::B}) {
      for (Direction dir : {Direction::forward, Direction::backward}) {
        const RewriteMove m{r, k, dir};
        if (applicable(w, m)) moves.push_back(m);
      }
    }
  }
  return moves;
}

Orbit orbit(const CircWord& w, Digit digit_cap, std::size_t size_cap) {
  Orbit result;
  std::unordered_set<std::string> seen;
  std::deque<CircWord> queue;
  seen.insert(key_of(w.digits()));
  queue.push_back(w);
  while (!queue.empty() && !result.truncated) {
    const CircWord u = std::move(queue.front());
    queue.pop_front();
    for (const auto& m : applicable_moves(u)) {
      CircWord v = apply_move(u, m);
      if (v.linear().max_digit() > digit_cap) continue;
      if (!seen.insert(key_of(v.digits())).second) continue;
      if (seen.size() > size_cap) {
        result.truncated = true;
        break;
      }
      queue.push_back(std::move(v));
    }
  }
  result.members.reserve(seen.size());
  for (const auto& k : seen) result.members.push_back(word_of(k));
  std::sort(result.members.begin(), result.members.end());
  return result;
}

std::vector<CircWord> admissible_members(const Orbit& o) {
  std::vector<CircWord> out;
  std::copy_if(o.members.begin(), o.members.end(), std::back_inserter(out),
               [](const CircWord& u) { return is_admissible(u); });
  return out;
}

OracleResult admissible_equivalents(const CircWord& w, const OracleLimits& limits) {
  OracleResult result;
  Digit cap = std::max<Digit>(2, w.linear().max_digit()) + 1;
  while (true) {
    const Orbit o = orbit(w, cap, limits.size_cap);
    result.admissible = admissible_members(o);
    result.digit_cap = cap;
    result.truncated = o.truncated;
    if (!result.admissible.empty() || o.truncated || cap * 2 > limits.cap_ceiling) return result;
    cap *= 2;
  }
}

std::optional<CircWord> oracle_normal_form(const CircWord& w, const OracleLimits& limits) {
  const OracleResult r = admissible_equivalents(w, limits);
  if (r.admissible.size() == 1) return r.admissible.front();
  if (r.admissible.size() == 2 && w.size() % 2 == 0 && r.admissible[0] == canonical_identity(w.size()) &&
      r.admissible[1] == alternating_word(w.size(), 1))
    return r.admissible[0];
  return std::nullopt;
}

CircWord canonical_identity(std::size_t length) { return alternating_word(length, 0); }

bool is_identity_spelling(const CircWord& w) {
  return w.size() % 2 == 0 && (w == alternating_word(w.size(), 0) || w == alternating_word(w.size(), 1));
}

// Forward moves only. Rule A is applied at the first applicable anchor in
// index order; when no A applies, rule B fires at the highest index holding a
// digit >= 2. Anchors below scan_from are known not to admit rule A.
CircWord normalize(const CircWord& w, const NormalizeOptions& options) {
  const std::size_t n = w.size();
  if (n % 2 != 0) throw domain_error("normalize: odd length " + std::to_string(n) + " has no admissible form");
  if (w.linear().is_zero()) throw Error(ErrorKind::zero_word, "normalize: the zero word has no admissible form");

  std::vector<Digit> d(w.digits().begin(), w.digits().end());
  const auto at = [&](std::size_t i, std::ptrdiff_t off) -> Digit& {
    const auto m = static_cast<std::ptrdiff_t>(n);
    return d[static_cast<std::size_t>(((static_cast<std::ptrdiff_t>(i) + off) % m + m) % m)];
  };
  const auto wrap = [&](std::size_t i) { return i % n; };

  std::size_t scan_from = 0;
  for (std::size_t steps = 0;; ++steps) {
    if (steps > options.max_steps)
      throw Error(ErrorKind::normalization, "normalize: no admissible form reached from " + w.str() + " within " +
                                                std::to_string(options.max_steps) + " steps");
    std::size_t k = scan_from;
    while (k < n && !(at(k, -1) >= 1 && d[k] >= 1)) ++k;
    if (k < n) {
      at(k, -1) -= 1;
      d[k] -= 1;
      at(k, 1) += 1;
      scan_from = std::min({k, wrap(k + 1), wrap(k + 2)});
      continue;
    }
    const auto high = std::find_if(d.rbegin(), d.rend(), [](Digit x) { return x >= 2; });
    if (high == d.rend()) break;
    const auto j = static_cast<std::size_t>(d.rend() - high) - 1;
    at(j, -2) += 1;
    d[j] -= 2;
    at(j, 1) += 1;
    scan_from = std::min({wrap(j + n - 2), wrap(j + n - 1), wrap(j + 1), wrap(j + 2)});
  }

  CircWord out{std::move(d)};
  if (is_identity_spelling(out)) return canonical_identity(n);
  return out;
}

bool equivalent(const CircWord& u, const CircWord& v) {
  if (u.size() != v.size()) throw domain_error("equivalent: length mismatch");
  return normalize(u) == normalize(v);
}

}  // namespace circfib
