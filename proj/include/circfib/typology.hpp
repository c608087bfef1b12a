#ifndef CIRCFIB_TYPOLOGY_HPP
#define CIRCFIB_TYPOLOGY_HPP

// Type partition of G*_l. An element W other than the identity has type X,
// X in {(01)^l, (10)^l, (11)^l}, when N(W) + N(-W) = N(X). The identity
// spellings go to their own classes: (01)^l to T01 and (10)^l to T10.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "circfib/group.hpp"

namespace circfib {

enum class TypeTag { T01, T10, T11 };

inline constexpr std::array<TypeTag, 3> kTypeTags{TypeTag::T01, TypeTag::T10, TypeTag::T11};

std::string to_string(TypeTag t);
/// (01)^l, (10)^l or (11)^l.
CircWord type_word(TypeTag t, std::size_t ell);

/// Type by the valuation equation. Throws ErrorKind::partition if no X fits.
TypeTag classify(const GroupElement& u);
/// Type of a raw identity spelling or of any element's word.
TypeTag classify_word(const CircWord& w);

/// Prefix/suffix reading of the type. With the zeros counted from index 0,
/// an odd run before the first 1 gives T01, an even run with final digit 0
/// gives T10, and an even run with final digit 1 gives T11. This is the
/// printed characterization with the T01/T10 labels exchanged, which is the
/// only orientation that reproduces classify().
TypeTag structural_class(const GroupElement& u);

/// N-values of each type class over G*_l, identity spellings included.
std::map<TypeTag, std::set<BigInt>> computed_image_sets(std::size_t ell, std::size_t max_ell = kDefaultMaxEll);

/// The closed forms over Fibonacci-word prefixes M_k:
///   T10: 1 + 2|M_k|_a + |M_k|_b,              0 <= k < F_{2l-2}
///   T01: 1 + 3|M_k|_a + 2|M_k|_b,             0 <= k < F_{2l-2}
///   T11: F_{2l-1} + 3 + 5|M_k|_a + 3|M_k|_b,  0 <= k < F_{2l-5} - 1
std::map<TypeTag, std::set<BigInt>> printed_image_sets(std::size_t ell);

struct ImageSets {
  std::map<TypeTag, std::set<BigInt>> computed;
  std::map<TypeTag, std::set<BigInt>> printed;
  /// c with computed = printed + c, when one exists.
  std::map<TypeTag, std::optional<BigInt>> offset;
};

ImageSets image_sets(std::size_t ell, std::size_t max_ell = kDefaultMaxEll);

/// Whether sigma maps the T10 class bijectively onto the T01 class.
bool sigma_relation_check(std::size_t ell, std::size_t max_ell = kDefaultMaxEll);

struct PartitionBlock {
  std::size_t index = 0;
  LetterWord block;
  std::size_t a_count = 0;
  std::size_t b_count = 0;
};

enum class BlockRule {
  d_blocks,  // d_l blocks of length F_{2l-2} / d_l
  d_length,  // blocks of length d_l, F_{2l-2} / d_l of them (the printed statement)
};

struct FibPartition {
  std::size_t ell = 0;
  std::size_t block_length = 0;
  std::size_t block_count = 0;
  std::vector<PartitionBlock> blocks;
  char trailing = 'a';
  bool constant_counts() const;
};

/// Splits N_l = b M_{F_{2l-2}} into equal blocks followed by a single 'a'.
/// Throws ErrorKind::partition on a non-integral split or a trailing letter other than 'a'.
FibPartition fib_partition(std::size_t ell, BlockRule rule = BlockRule::d_blocks);

struct TypeFamilyReport {
  std::size_t ell = 0;
  std::uint64_t q = 0;
  std::map<TypeTag, std::size_t> pi_tags;        // tags of k Pi, 1 <= k < q
  std::map<TypeTag, std::size_t> pi_prime_tags;  // tags of k Pi', 1 <= k < q
  bool single_tag_per_family() const { return pi_tags.size() == 1 && pi_prime_tags.size() == 1; }
};

/// Classifies the multiples of Pi and Pi' for q = d_l, lifted to length 2l.
TypeFamilyReport k_pi_type_check(std::size_t ell);

/// N(i Pi) - N((i-1) Pi) = N(Pi) for 1 <= i <= q with q = d_l, reading 0 Pi as the zero word.
bool consecutive_multiples_check(std::size_t ell);

}  // namespace circfib

#endif  // CIRCFIB_TYPOLOGY_HPP
