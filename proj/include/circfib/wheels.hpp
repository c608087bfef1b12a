#ifndef CIRCFIB_WHEELS_HPP
#define CIRCFIB_WHEELS_HPP

// Spanning trees of the l-wheel: rim vertices v_0..v_{l-1}, center c,
// spokes r_i = c v_i and rim edges s_i = v_i v_{i+1 mod l}. For l = 1 the
// rim edge would be a loop and is left out; for l = 2 the two rim edges are
// parallel and kept distinct.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "circfib/group.hpp"

namespace circfib {

struct WheelTree {
  std::size_t ell = 0;
  std::uint32_t spokes = 0;  // bit i set iff r_i is in the tree
  std::uint32_t rims = 0;    // bit i set iff s_i is in the tree

  friend bool operator==(const WheelTree&, const WheelTree&) = default;
  friend auto operator<=>(const WheelTree&, const WheelTree&) = default;
};

/// Whether the edge set is acyclic, has l edges and spans all l + 1 vertices.
bool is_spanning_tree(const WheelTree& t);

/// All spanning trees, by backtracking with union-find. Throws a resource
/// error above max_ell.
std::vector<WheelTree> spanning_trees(std::size_t ell, std::size_t max_ell = kDefaultMaxEll);

/// Determinant of the reduced Laplacian.
std::uint64_t count_trees_matrix(std::size_t ell);

/// w_{2i} = 1 iff r_i in t, w_{2i+1} = 0 iff s_i in t.
CircWord tree_to_word(const WheelTree& t);

GroupElement taxonomy(const WheelTree& t);

/// Nonzero binary word whose maximal cyclic blocks of 0s all have even length.
bool is_tree_word(const CircWord& w);

/// The star: every spoke, no rim edge.
WheelTree star_tree(std::size_t ell);

/// Taxonomy map for one wheel and its inverse, built once from the enumeration.
class TaxonomyTable {
 public:
  explicit TaxonomyTable(std::size_t ell, std::size_t max_ell = kDefaultMaxEll);

  std::size_t ell() const noexcept { return ell_; }
  const std::vector<WheelTree>& trees() const noexcept { return trees_; }
  const GroupElement& element_of(const WheelTree& t) const;
  const WheelTree& tree_of(const GroupElement& g) const;
  /// Whether distinct trees got distinct elements and every element was hit.
  bool is_bijective() const noexcept { return bijective_; }

 private:
  std::size_t ell_;
  std::vector<WheelTree> trees_;
  std::map<WheelTree, GroupElement> forward_;
  std::map<GroupElement, WheelTree> inverse_;
  bool bijective_ = false;
};

WheelTree tree_add(const TaxonomyTable& table, const WheelTree& t1, const WheelTree& t2);
WheelTree tree_neg(const TaxonomyTable& table, const WheelTree& t);

}  // namespace circfib

#endif  // CIRCFIB_WHEELS_HPP
