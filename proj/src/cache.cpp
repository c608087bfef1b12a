#include "circfib/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>

#include "circfib/errors.hpp"
#include "circfib/rewrite.hpp"

namespace circfib {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

void warn(const std::string& what) { std::cerr << "warning: " << what << '\n'; }

}  // namespace

Cache::Cache(std::filesystem::path dir, int version) : dir_(std::move(dir)), version_(version) {}

Cache Cache::from_settings(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return Cache(*flag);
  if (const char* env = std::getenv("CIRCFIB_CACHE"); env && *env) return Cache(env);
  return Cache();
}

std::filesystem::path Cache::path_of(const CacheKey& key) const {
  return *dir_ / (key.module + "-" + key.param + ".tsv");
}

std::string Cache::header(const CacheKey& key) const {
  return "circfib-cache\tv" + std::to_string(version_) + "\t" + key.module + "/" + key.param;
}

void Cache::store(const CacheKey& key, const CacheRows& rows) const {
  if (!enabled()) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  const auto target = path_of(key);
  auto temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) {
      warn("cannot write cache entry " + target.string());
      return;
    }
    out << header(key) << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
      out << '\n';
    }
    if (!out) {
      warn("cannot write cache entry " + target.string());
      return;
    }
  }
  std::filesystem::rename(temp, target, ec);
  if (ec) warn("cannot publish cache entry " + target.string() + ": " + ec.message());
}

std::optional<CacheRows> Cache::load(const CacheKey& key) const {
  if (!enabled()) return std::nullopt;
  const auto path = path_of(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != header(key)) {
    warn("ignoring stale or corrupt cache entry " + path.string());
    return std::nullopt;
  }
  CacheRows rows;
  while (std::getline(in, line)) rows.push_back(split(line, '\t'));
  return rows;
}

std::vector<GroupElement> cached_enumerate(const Cache& cache, std::size_t ell, std::size_t max_ell) {
  const CacheKey key{"group", "l" + std::to_string(ell)};
  if (auto rows = cache.load(key)) {
    try {
      std::vector<GroupElement> out;
      for (const auto& row : *rows) {
        if (row.size() != 1 || row[0].size() != 2 * ell) throw domain_error("bad row");
        out.push_back(GroupElement::parse(row[0]));
      }
      if (ell <= max_ell) return out;
    } catch (const Error&) {
      warn("ignoring corrupt cache entry " + cache.path_of(key).string());
    }
  }
  auto elements = enumerate(ell, max_ell);
  CacheRows rows;
  for (const auto& g : elements) rows.push_back({g.str()});
  cache.store(key, rows);
  return elements;
}

std::vector<CayleyEntry> cached_cayley_table(const Cache& cache, std::size_t ell) {
  const CacheKey key{"cayley", "l" + std::to_string(ell)};
  if (auto rows = cache.load(key)) {
    try {
      std::vector<CayleyEntry> out;
      for (const auto& row : *rows) {
        if (row.size() != 3) throw domain_error("bad row");
        out.push_back({GroupElement::parse(row[0]), GroupElement::parse(row[1]), GroupElement::parse(row[2])});
      }
      return out;
    } catch (const Error&) {
      warn("ignoring corrupt cache entry " + cache.path_of(key).string());
    }
  }
  const auto elements = cached_enumerate(cache, ell);
  std::vector<CayleyEntry> out;
  CacheRows rows;
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      out.push_back({a, b, add(a, b)});
      rows.push_back({a.str(), b.str(), out.back().sum.str()});
    }
  }
  cache.store(key, rows);
  return out;
}

std::vector<TaxonomyRow> cached_taxonomy(const Cache& cache, std::size_t ell, std::size_t max_ell) {
  const CacheKey key{"taxonomy", "l" + std::to_string(ell)};
  if (auto rows = cache.load(key)) {
    try {
      std::vector<TaxonomyRow> out;
      for (const auto& row : *rows) {
        if (row.size() != 4) throw domain_error("bad row");
        const WheelTree t{ell, static_cast<std::uint32_t>(std::stoul(row[0])),
                          static_cast<std::uint32_t>(std::stoul(row[1]))};
        if (!is_spanning_tree(t)) throw domain_error("bad tree");
        out.push_back({t, CircWord::parse(row[2]), GroupElement::parse(row[3])});
      }
      if (ell <= max_ell) return out;
    } catch (const std::exception&) {
      warn("ignoring corrupt cache entry " + cache.path_of(key).string());
    }
  }
  std::vector<TaxonomyRow> out;
  CacheRows rows;
  for (const auto& t : spanning_trees(ell, max_ell)) {
    out.push_back({t, tree_to_word(t), taxonomy(t)});
    rows.push_back({std::to_string(t.spokes), std::to_string(t.rims), out.back().raw.str(), out.back().normal.str()});
  }
  cache.store(key, rows);
  return out;
}

}  // namespace circfib
