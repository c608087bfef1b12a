#include "circfib/wheels.hpp"

#include <bit>
#include <numeric>
#include <utility>

#include <Eigen/Core>

#include "circfib/errors.hpp"
#include "circfib/rewrite.hpp"

namespace circfib {

namespace {

struct Edge {
  bool spoke;
  std::size_t index;
  std::size_t u, v;
};

std::vector<Edge> wheel_edges(std::size_t ell) {
  const std::size_t center = ell;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ell; ++i) {
    edges.push_back({true, i, center, i});
    if (ell > 1) edges.push_back({false, i, i, (i + 1) % ell});
  }
  return edges;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  /// false when x and y were already joined
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[x] = y;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

void check_ell(std::size_t ell) {
  if (ell < 1) throw domain_error("wheel: l must be at least 1");
  if (ell > 31) throw domain_error("wheel: l above 31 does not fit the edge bitmasks");
}

}  // namespace

bool is_spanning_tree(const WheelTree& t) {
  check_ell(t.ell);
  const std::uint32_t mask = (1u << t.ell) - 1;
  if ((t.spokes & ~mask) || (t.rims & ~mask)) return false;
  if (t.ell == 1 && t.rims) return false;
  if (static_cast<std::size_t>(std::popcount(t.spokes) + std::popcount(t.rims)) != t.ell) return false;
  DisjointSets sets(t.ell + 1);
  for (const auto& e : wheel_edges(t.ell)) {
    const bool in = e.spoke ? (t.spokes >> e.index) & 1u : (t.rims >> e.index) & 1u;
    if (in && !sets.unite(e.u, e.v)) return false;
  }
  return true;
}

std::vector<WheelTree> spanning_trees(std::size_t ell, std::size_t max_ell) {
  check_ell(ell);
  if (ell > max_ell)
    throw resource_error("spanning_trees: l = " + std::to_string(ell) + " exceeds the bound " + std::to_string(max_ell));
  const auto edges = wheel_edges(ell);
  std::vector<WheelTree> out;
  // Decide edges in order r_0, s_0, r_1, s_1, ...; a tree has exactly l edges.
  const auto search = [&](auto&& self, std::size_t next, std::size_t taken, WheelTree t, DisjointSets sets) -> void {
    if (taken == ell) {
      out.push_back(t);
      return;
    }
    if (edges.size() - next < ell - taken) return;
    const Edge& e = edges[next];
    DisjointSets with = sets;
    if (with.unite(e.u, e.v)) {
      WheelTree t2 = t;
      (e.spoke ? t2.spokes : t2.rims) |= 1u << e.index;
      self(self, next + 1, taken + 1, t2, std::move(with));
    }
    self(self, next + 1, taken, t, std::move(sets));
  };
  search(search, 0, 0, WheelTree{ell, 0, 0}, DisjointSets(ell + 1));
  return out;
}

std::uint64_t count_trees_matrix(std::size_t ell) {
  check_ell(ell);
  using Matrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
  const auto n = static_cast<Eigen::Index>(ell + 1);
  Matrix laplacian = Matrix::Zero(n, n);
  for (const auto& e : wheel_edges(ell)) {
    const auto u = static_cast<Eigen::Index>(e.u), v = static_cast<Eigen::Index>(e.v);
    laplacian(u, u) += 1;
    laplacian(v, v) += 1;
    laplacian(u, v) -= 1;
    laplacian(v, u) -= 1;
  }
  // Drop the center row and column, then fraction-free (Bareiss) elimination.
  Matrix m = laplacian.topLeftCorner(n - 1, n - 1);
  const Eigen::Index k = m.rows();
  long long sign = 1, previous = 1;
  for (Eigen::Index p = 0; p < k; ++p) {
    if (m(p, p) == 0) {
      Eigen::Index swap = p + 1;
      while (swap < k && m(swap, p) == 0) ++swap;
      if (swap == k) return 0;
      m.row(p).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = p + 1; i < k; ++i) {
      for (Eigen::Index j = p + 1; j < k; ++j) {
        const __int128 num = static_cast<__int128>(m(i, j)) * m(p, p) - static_cast<__int128>(m(i, p)) * m(p, j);
        m(i, j) = static_cast<long long>(num / previous);
      }
      m(i, p) = 0;
    }
    previous = m(p, p);
  }
  return static_cast<std::uint64_t>(sign * m(k - 1, k - 1));
}

CircWord tree_to_word(const WheelTree& t) {
  check_ell(t.ell);
  std::vector<Digit> w(2 * t.ell);
  for (std::size_t i = 0; i < t.ell; ++i) {
    w[2 * i] = (t.spokes >> i) & 1u;
    w[2 * i + 1] = ((t.rims >> i) & 1u) ? 0 : 1;
  }
  return CircWord(std::move(w));
}

GroupElement taxonomy(const WheelTree& t) { return GroupElement::from_word(normalize(tree_to_word(t))); }

bool is_tree_word(const CircWord& w) {
  if (!w.linear().is_binary() || w.linear().is_zero()) return false;
  const std::size_t n = w.size();
  std::size_t start = 0;
  while (w[start] != 1) ++start;
  std::size_t run = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (w[(start + i) % n] == 0) {
      ++run;
    } else {
      if (run % 2 != 0) return false;
      run = 0;
    }
  }
  return true;
}

WheelTree star_tree(std::size_t ell) {
  check_ell(ell);
  return WheelTree{ell, static_cast<std::uint32_t>((1ull << ell) - 1), 0};
}

TaxonomyTable::TaxonomyTable(std::size_t ell, std::size_t max_ell) : ell_(ell), trees_(spanning_trees(ell, max_ell)) {
  for (const auto& t : trees_) {
    GroupElement g = taxonomy(t);
    forward_.emplace(t, g);
    inverse_.emplace(std::move(g), t);
  }
  bijective_ = inverse_.size() == trees_.size() && inverse_.size() == enumerate(ell, max_ell).size();
}

const GroupElement& TaxonomyTable::element_of(const WheelTree& t) const {
  const auto it = forward_.find(t);
  if (it == forward_.end()) throw domain_error("not a spanning tree of the " + std::to_string(ell_) + "-wheel");
  return it->second;
}

const WheelTree& TaxonomyTable::tree_of(const GroupElement& g) const {
  const auto it = inverse_.find(g);
  if (it == inverse_.end()) throw domain_error("no spanning tree maps to " + g.str());
  return it->second;
}

WheelTree tree_add(const TaxonomyTable& table, const WheelTree& t1, const WheelTree& t2) {
  return table.tree_of(add(table.element_of(t1), table.element_of(t2)));
}

WheelTree tree_neg(const TaxonomyTable& table, const WheelTree& t) { return table.tree_of(neg(table.element_of(t))); }

}  // namespace circfib
