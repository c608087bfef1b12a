#include <doctest.h>

#include "circfib/records.hpp"
#include "support.hpp"

using namespace circfib;
using test::error_kind;

namespace {

std::vector<Record> sample() {
  return {
      Record{}.add("word", "010010").add("value", "21"),
      Record{}.add("word", "tab\there").add("value", "line\nbreak"),
      Record{}.add("word", "back\\slash").add("value", "ünïcode"),
      Record{}.add("type", "T01").add("computed", "2,5,7").add("printed", ""),
  };
}

}  // namespace

TEST_CASE("tsv layout") {
  const std::string text = write_tsv({Record{}.add("a", "1").add("b", "2"), Record{}.add("a", "3").add("b", "4")});
  CHECK(text == "a\tb\n1\t2\n3\t4\n");
  CHECK(write_tsv({}).empty());
}

TEST_CASE("jsonlines layout keeps field order") {
  CHECK(write_jsonlines({Record{}.add("z", "1").add("a", "2")}) == "{\"z\":\"1\",\"a\":\"2\"}\n");
}

TEST_CASE("both formats round-trip the same records") {
  const auto records = sample();
  for (Format f : {Format::tsv, Format::jsonlines}) CHECK(parse_records(write_records(records, f), f) == records);
}

TEST_CASE("record access and format names") {
  const Record r = sample().front();
  CHECK(r.at("value") == "21");
  CHECK(error_kind([&] { r.at("missing"); }) == ErrorKind::domain);
  CHECK(parse_format("tsv") == Format::tsv);
  CHECK(parse_format("jsonlines") == Format::jsonlines);
  CHECK(error_kind([] { parse_format("csv"); }) == ErrorKind::domain);
  CHECK(error_kind([] { parse_tsv("a\tb\n1\n"); }) == ErrorKind::domain);
}
