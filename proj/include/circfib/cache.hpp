#ifndef CIRCFIB_CACHE_HPP
#define CIRCFIB_CACHE_HPP

// On-disk cache of computed tables. One UTF-8 file per key: a header line
// "circfib-cache <TAB> v<version> <TAB> <module>/<param>" followed by TSV rows.
// Writes go to a temporary file that is renamed into place. A missing,
// stale or unreadable entry is reported on stderr and recomputed.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "circfib/group.hpp"
#include "circfib/wheels.hpp"

namespace circfib {

struct CacheKey {
  std::string module;
  std::string param;
};

using CacheRows = std::vector<std::vector<std::string>>;

class Cache {
 public:
  static constexpr int kVersion = 1;

  /// Disabled cache: loads miss, stores do nothing.
  Cache() = default;
  explicit Cache(std::filesystem::path dir, int version = kVersion);

  /// Directory from the flag if given, else from CIRCFIB_CACHE, else disabled.
  static Cache from_settings(const std::optional<std::string>& flag);

  bool enabled() const noexcept { return dir_.has_value(); }
  std::filesystem::path path_of(const CacheKey& key) const;

  void store(const CacheKey& key, const CacheRows& rows) const;
  std::optional<CacheRows> load(const CacheKey& key) const;

 private:
  std::string header(const CacheKey& key) const;

  std::optional<std::filesystem::path> dir_;
  int version_ = kVersion;
};

std::vector<GroupElement> cached_enumerate(const Cache& cache, std::size_t ell, std::size_t max_ell = kDefaultMaxEll);

struct CayleyEntry {
  GroupElement left, right, sum;
};
std::vector<CayleyEntry> cached_cayley_table(const Cache& cache, std::size_t ell);

struct TaxonomyRow {
  WheelTree tree;
  CircWord raw;
  GroupElement normal;
};
std::vector<TaxonomyRow> cached_taxonomy(const Cache& cache, std::size_t ell, std::size_t max_ell = kDefaultMaxEll);

}  // namespace circfib

#endif  // CIRCFIB_CACHE_HPP
