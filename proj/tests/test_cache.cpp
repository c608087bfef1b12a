#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <random>

#include "circfib/cache.hpp"
#include "support.hpp"

using namespace circfib;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("circfib-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("no cache directory configured") {
  const Cache off;
  CHECK_FALSE(off.enabled());
  CHECK_FALSE(off.load({"group", "l2"}).has_value());
  CHECK(cached_enumerate(off, 3) == enumerate(3));
  CHECK(cached_cayley_table(off, 2).size() == 25);
  CHECK(cached_taxonomy(off, 2).size() == 5);
}

TEST_CASE("enumerations round-trip through the cache") {
  TempDir dir;
  const Cache cache(dir.path);
  const auto first = cached_enumerate(cache, 5);
  CHECK(fs::exists(cache.path_of({"group", "l5"})));
  const auto rows = cache.load({"group", "l5"});
  REQUIRE(rows);
  CHECK(rows->size() == 121);
  CHECK(cached_enumerate(cache, 5) == first);
  CHECK(first == enumerate(5));

  std::ifstream in(cache.path_of({"group", "l5"}));
  std::string header;
  std::getline(in, header);
  CHECK(header == "circfib-cache\tv1\tgroup/l5");
}

TEST_CASE("Cayley tables and taxonomy tables round-trip") {
  TempDir dir;
  const Cache cache(dir.path);
  const auto table = cached_cayley_table(cache, 2);
  const auto again = cached_cayley_table(cache, 2);
  REQUIRE(table.size() == again.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    CHECK(table[i].left == again[i].left);
    CHECK(table[i].sum == again[i].sum);
  }
  const auto tax = cached_taxonomy(cache, 3);
  const auto tax2 = cached_taxonomy(cache, 3);
  REQUIRE(tax.size() == 16);
  for (std::size_t i = 0; i < tax.size(); ++i) {
    CHECK(tax[i].tree == tax2[i].tree);
    CHECK(tax[i].raw == tax2[i].raw);
    CHECK(tax[i].normal == tax2[i].normal);
  }
}

TEST_CASE("stale version is recomputed") {
  TempDir dir;
  const Cache old(dir.path, 0);
  old.store({"group", "l3"}, {{"0001"}});
  const Cache cache(dir.path);
  CHECK_FALSE(cache.load({"group", "l3"}).has_value());
  CHECK(cached_enumerate(cache, 3) == enumerate(3));
  CHECK(cache.load({"group", "l3"})->size() == 16);
}

TEST_CASE("corrupt entries are ignored") {
  TempDir dir;
  const Cache cache(dir.path);
  cache.store({"group", "l3"}, {{"0110"}, {"zz"}});
  CHECK(cached_enumerate(cache, 3) == enumerate(3));
  cache.store({"taxonomy", "l2"}, {{"x", "1", "1001", "0100"}});
  CHECK(cached_taxonomy(cache, 2).size() == 5);
  {
    std::ofstream out(cache.path_of({"cayley", "l2"}));
    out << "garbage\n";
  }
  CHECK(cached_cayley_table(cache, 2).size() == 25);
}

TEST_CASE("directory from the flag or the environment") {
  ::unsetenv("CIRCFIB_CACHE");
  CHECK_FALSE(Cache::from_settings(std::nullopt).enabled());
  CHECK(Cache::from_settings(std::string("/tmp/x")).enabled());
  ::setenv("CIRCFIB_CACHE", "/tmp/y", 1);
  const Cache env = Cache::from_settings(std::nullopt);
  CHECK(env.enabled());
  CHECK(env.path_of({"group", "l1"}) == fs::path("/tmp/y/group-l1.tsv"));
  CHECK(Cache::from_settings(std::string("/tmp/x")).path_of({"group", "l1"}) == fs::path("/tmp/x/group-l1.tsv"));
  ::unsetenv("CIRCFIB_CACHE");
}
