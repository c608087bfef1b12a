#include "circfib/typology.hpp"

#include "circfib/errors.hpp"
#include "circfib/orderq.hpp"
#include "circfib/rewrite.hpp"

namespace circfib {

std::string to_string(TypeTag t) {
  switch (t) {
    case TypeTag::T01: return "T01";
    case TypeTag::T10: return "T10";
    case TypeTag::T11: return "T11";
  }
  return "?";
}

CircWord type_word(TypeTag t, std::size_t ell) {
  switch (t) {
    case TypeTag::T01: return alternating_word(2 * ell, 0);
    case TypeTag::T10: return alternating_word(2 * ell, 1);
    case TypeTag::T11: break;
  }
  return CircWord(DigitWord(2 * ell, 1));
}

TypeTag classify(const GroupElement& u) {
  if (u.is_identity()) return TypeTag::T01;
  const BigInt total = valuation(u.word()) + valuation(neg(u).word());
  for (TypeTag t : kTypeTags) {
    if (total == valuation(type_word(t, u.ell()))) return t;
  }
  throw Error(ErrorKind::partition, "classify: N(W) + N(-W) = " + total.str() + " matches no type for " + u.str());
}

TypeTag classify_word(const CircWord& w) {
  if (w.size() % 2 == 0 && w == alternating_word(w.size(), 1)) return TypeTag::T10;
  return classify(GroupElement::from_word(w));
}

TypeTag structural_class(const GroupElement& u) {
  if (u.is_identity()) throw Error(ErrorKind::classification, "structural_class: identity has no shape class");
  const auto digits = u.word().digits();
  std::size_t zeros = 0;
  while (zeros < digits.size() && digits[zeros] == 0) ++zeros;
  if (zeros == digits.size()) throw Error(ErrorKind::classification, "structural_class: no 1 in " + u.str());
  if (zeros % 2 == 1) return TypeTag::T01;
  return digits.back() == 0 ? TypeTag::T10 : TypeTag::T11;
}

std::map<TypeTag, std::set<BigInt>> computed_image_sets(std::size_t ell, std::size_t max_ell) {
  std::map<TypeTag, std::set<BigInt>> out{{TypeTag::T01, {}}, {TypeTag::T10, {}}, {TypeTag::T11, {}}};
  for (const auto& u : enumerate(ell, max_ell)) out[classify(u)].insert(valuation(u.word()));
  out[TypeTag::T10].insert(valuation(alternating_word(2 * ell, 1)));
  return out;
}

std::map<TypeTag, std::set<BigInt>> printed_image_sets(std::size_t ell) {
  if (ell < 1) throw domain_error("printed_image_sets: l must be at least 1");
  std::map<TypeTag, std::set<BigInt>> out{{TypeTag::T01, {}}, {TypeTag::T10, {}}, {TypeTag::T11, {}}};
  const int l = static_cast<int>(ell);
  const auto range01 = static_cast<std::size_t>(fib(2 * l - 2));
  const std::size_t range11 = ell >= 3 ? static_cast<std::size_t>(fib(2 * l - 5) - 1) : 0;
  const BigInt base11 = fib(2 * l - 1) + 3;
  const LetterWord m = fibonacci_word_prefix(std::max(range01, range11));
  std::size_t a = 0, b = 0;  // letter counts of M_k
  for (std::size_t k = 0; k < std::max(range01, range11); ++k) {
    if (k < range01) {
      out[TypeTag::T10].insert(BigInt(1 + 2 * a + b));
      out[TypeTag::T01].insert(BigInt(1 + 3 * a + 2 * b));
    }
    if (k < range11) out[TypeTag::T11].insert(base11 + 5 * a + 3 * b);
    (m[k] == 'a' ? a : b) += 1;
  }
  return out;
}

ImageSets image_sets(std::size_t ell, std::size_t max_ell) {
  ImageSets r{computed_image_sets(ell, max_ell), printed_image_sets(ell), {}};
  for (TypeTag t : kTypeTags) {
    const auto& c = r.computed[t];
    const auto& p = r.printed[t];
    std::optional<BigInt> offset;
    if (c.size() == p.size()) {
      if (c.empty()) {
        offset = BigInt(0);
      } else {
        const BigInt shift = *c.begin() - *p.begin();
        std::set<BigInt> moved;
        for (const auto& x : p) moved.insert(x + shift);
        if (moved == c) offset = shift;
      }
    }
    r.offset[t] = offset;
  }
  return r;
}

bool sigma_relation_check(std::size_t ell, std::size_t max_ell) {
  std::set<CircWord> t10{alternating_word(2 * ell, 1)}, t01;
  for (const auto& u : enumerate(ell, max_ell)) {
    const TypeTag t = classify(u);
    if (t == TypeTag::T10) t10.insert(u.word());
    if (t == TypeTag::T01) t01.insert(u.word());
  }
  std::set<CircWord> image;
  for (const auto& w : t10) image.insert(rotate(w));
  return image.size() == t10.size() && image == t01;
}

bool FibPartition::constant_counts() const {
  for (const auto& blk : blocks) {
    if (blk.a_count != blocks.front().a_count || blk.b_count != blocks.front().b_count) return false;
  }
  return true;
}

FibPartition fib_partition(std::size_t ell, BlockRule rule) {
  if (ell <= 2) throw domain_error("fib_partition: l must exceed 2");
  const auto total = static_cast<std::size_t>(fib(static_cast<int>(2 * ell - 2)));
  const auto d = static_cast<std::size_t>(d_value(ell));
  if (total % d != 0)
    throw Error(ErrorKind::partition, "fib_partition: d_" + std::to_string(ell) + " = " + std::to_string(d) +
                                          " does not divide F_{2l-2} = " + std::to_string(total));
  FibPartition p;
  p.ell = ell;
  p.block_count = rule == BlockRule::d_blocks ? d : total / d;
  p.block_length = total / p.block_count;
  const LetterWord word(std::string("b") + fibonacci_word_prefix(total).str());
  p.trailing = word[word.size() - 1];
  if (p.trailing != 'a')
    throw Error(ErrorKind::partition, std::string("fib_partition: trailing letter is ") + p.trailing);
  for (std::size_t i = 0; i < p.block_count; ++i) {
    LetterWord blk = word.substr(i * p.block_length, p.block_length);
    const LetterCounts c = letter_counts(blk);
    p.blocks.push_back({i + 1, std::move(blk), c.a, c.b});
  }
  return p;
}

namespace {

PiWords pi_words_at(std::size_t ell) {
  if (ell < 3) throw domain_error("d_l must be at least 2, which needs l >= 3");
  const auto q = static_cast<std::uint64_t>(d_value(ell));
  if (minimal_even_length(q) != 2 * ell)
    throw domain_error("minimal even length of d_" + std::to_string(ell) + " is not 2l");
  return pi_words(q);
}

}  // namespace

TypeFamilyReport k_pi_type_check(std::size_t ell) {
  const PiWords w = pi_words_at(ell);
  TypeFamilyReport r;
  r.ell = ell;
  r.q = static_cast<std::uint64_t>(d_value(ell));
  GroupElement a = w.pi, b = w.pi_prime;
  for (std::uint64_t k = 1; k < r.q; ++k) {
    ++r.pi_tags[classify(a)];
    ++r.pi_prime_tags[classify(b)];
    a = add(a, w.pi);
    b = add(b, w.pi_prime);
  }
  return r;
}

bool consecutive_multiples_check(std::size_t ell) {
  const PiWords w = pi_words_at(ell);
  const auto q = static_cast<std::uint64_t>(d_value(ell));
  BigInt previous = 0;
  GroupElement acc = w.pi;
  for (std::uint64_t i = 1; i <= q; ++i) {
    if (i > 1) acc = add(acc, w.pi);
    const BigInt current = valuation(acc.word());
    if (current - previous != w.pi_value) return false;
    previous = current;
  }
  return true;
}

}  // namespace circfib
