// circfib: command-line front end for circular Fibonacci words.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 resource bound exceeded.

#include <algorithm>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circfib/baseb.hpp"
#include "circfib/cache.hpp"
#include "circfib/errors.hpp"
#include "circfib/group.hpp"
#include "circfib/orderq.hpp"
#include "circfib/records.hpp"
#include "circfib/rewrite.hpp"
#include "circfib/typology.hpp"
#include "circfib/verify.hpp"
#include "circfib/wheels.hpp"

using namespace circfib;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct Globals {
  std::string format = "tsv";
  std::optional<std::string> cache_dir;
  std::size_t max_ell = kDefaultMaxEll;
  std::uint64_t max_q = 10;
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::resource:
    case ErrorKind::normalization: return kExitResource;
    case ErrorKind::structural_mismatch:
    case ErrorKind::partition:
    case ErrorKind::classification: return kExitVerify;
    default: return kExitInput;
  }
}

std::string join_set(const std::set<BigInt>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ",") + x.str();
  return out;
}

Record element_record(const GroupElement& g) {
  return Record{}.add("word", g.str()).add("value", valuation(g.word()).str());
}

// Adds a required exactly-one-of group of mode flags.
CLI::Option_group* modes(CLI::App* sub) {
  auto* g = sub->add_option_group("mode", "exactly one of");
  g->require_option(1);
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circular Fibonacci words: normal forms, groups, types and wheels"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"tsv", "jsonlines"}));
  app.add_option("--cache-dir", g.cache_dir, "Cache directory (default: $CIRCFIB_CACHE, else no cache)");
  app.add_option("--max-ell", g.max_ell, "Enumeration bound on l")->check(CLI::PositiveNumber);
  app.add_option("--max-q", g.max_q, "Bound on q for verification")->check(CLI::PositiveNumber);

  std::vector<Record> out;
  int status = 0;
  const auto cache = [&] { return Cache::from_settings(g.cache_dir); };

  // reduce / orbit
  std::string word;
  auto* reduce = app.add_subcommand("reduce", "Normal form of an even-length word (index 0 leftmost)");
  reduce->add_option("word", word, "Digit word, e.g. 020111 or 0,2,0,1,1,1")->required();
  reduce->callback([&] {
    const CircWord w = CircWord::parse(word);
    out.push_back(Record{}.add("input", w.str()).add("normal_form", normalize(w).str()));
  });

  std::optional<Digit> cap;
  auto* orbit_cmd = app.add_subcommand("orbit", "Members of the rewriting orbit, one per line");
  orbit_cmd->add_option("word", word, "Digit word")->required();
  orbit_cmd->add_option("--cap", cap, "Digit cap (default: max(2, max digit) + 1)")->check(CLI::PositiveNumber);
  orbit_cmd->callback([&] {
    const CircWord w = CircWord::parse(word);
    const Digit c = cap ? *cap : std::max<Digit>(2, w.linear().max_digit()) + 1;
    const Orbit o = orbit(w, c, OracleLimits{}.size_cap);
    if (o.truncated) throw resource_error("orbit exceeds " + std::to_string(OracleLimits{}.size_cap) + " members");
    for (const auto& m : o.members) out.push_back(Record{}.add("word", m.str()));
  });

  // group arithmetic
  std::string left, right;
  auto* add_cmd = app.add_subcommand("add", "Sum of two group elements");
  add_cmd->add_option("u", left)->required();
  add_cmd->add_option("v", right)->required();
  add_cmd->callback([&] { out.push_back(element_record(add(GroupElement::parse(left), GroupElement::parse(right)))); });

  auto* neg_cmd = app.add_subcommand("neg", "Inverse of a group element");
  neg_cmd->add_option("u", left)->required();
  neg_cmd->callback([&] { out.push_back(element_record(neg(GroupElement::parse(left)))); });

  std::int64_t k = 0;
  auto* mul_cmd = app.add_subcommand("mul", "k-fold multiple of a group element");
  mul_cmd->add_option("k", k)->required();
  mul_cmd->add_option("u", left)->required();
  mul_cmd->callback([&] { out.push_back(element_record(scalar_mul(k, GroupElement::parse(left)))); });

  // group
  std::size_t ell = 0;
  bool list = false, count = false, structure = false, table = false;
  auto* group_cmd = app.add_subcommand("group", "The group G*_l of admissible words of length 2l");
  group_cmd->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
  {
    auto* m = modes(group_cmd);
    m->add_flag("--list", list, "All elements in lexicographic order");
    m->add_flag("--count", count, "Group order");
    m->add_flag("--structure", structure, "Certified invariant factors");
    m->add_flag("--table", table, "Cayley table (l <= 4)");
  }
  group_cmd->callback([&] {
    if (list) {
      for (const auto& e : cached_enumerate(cache(), ell, g.max_ell)) out.push_back(element_record(e));
    } else if (count) {
      out.push_back(Record{}.add("ell", std::to_string(ell)).add("order",
                                                                   std::to_string(cached_enumerate(cache(), ell, g.max_ell).size())));
    } else if (structure) {
      const GroupStructure s = decompose(ell, g.max_ell);
      out.push_back(Record{}
                        .add("ell", std::to_string(ell))
                        .add("order", std::to_string(s.order))
                        .add("d", s.d.str())
                        .add("structure", "Z/" + std::to_string(s.e1) + " x Z/" + std::to_string(s.e2)));
    } else {
      if (ell > 4) throw resource_error("group --table is limited to l <= 4");
      for (const auto& e : cached_cayley_table(cache(), ell))
        out.push_back(Record{}.add("u", e.left.str()).add("v", e.right.str()).add("sum", e.sum.str()));
    }
  });

  // orderq
  std::uint64_t q = 0;
  bool min_length = false, pi = false, elements = false, verify_flag = false;
  auto* orderq_cmd = app.add_subcommand("orderq", "Elements of order dividing q");
  orderq_cmd->add_option("--q", q)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 20));
  {
    auto* m = modes(orderq_cmd);
    m->add_flag("--min-length", min_length, "Least even length carrying Z/q x Z/q");
    m->add_flag("--pi", pi, "The words Pi and Pi'");
    m->add_flag("--elements", elements, "All elements of order dividing q");
    m->add_flag("--verify", verify_flag, "Check the multiples, rotation and uniqueness claims");
  }
  orderq_cmd->callback([&] {
    if (min_length) {
      out.push_back(Record{}.add("q", std::to_string(q)).add("length", std::to_string(minimal_even_length(q))));
    } else if (pi) {
      const PiWords w = pi_words(q);
      out.push_back(Record{}.add("name", "Pi").add("word", w.pi.str()).add("value", w.pi_value.str()));
      out.push_back(Record{}.add("name", "Pi'").add("word", w.pi_prime.str()).add("value", w.pi_prime_value.str()));
    } else if (elements) {
      for (const auto& p : p_group(q, std::max(g.max_ell, kDefaultMaxPeriodicEll)))
        out.push_back(element_record(p.element()).add("period", p.period().str()));
    } else {
      const PiMultiplesReport r = verify_pi_multiples(q, std::max(g.max_ell, kDefaultMaxPeriodicEll));
      const auto yes = [](bool b) { return std::string(b ? "pass" : "fail"); };
      out.push_back(Record{}
                        .add("q", std::to_string(q))
                        .add("length", std::to_string(r.length))
                        .add("multiples", yes(r.multiples_ok))
                        .add("rotation", yes(r.rotation_ok))
                        .add("uniqueness", r.uniqueness_ok ? yes(*r.uniqueness_ok) : "skipped")
                        .add("span_index", r.span_index ? std::to_string(*r.span_index) : "skipped"));
      if (!r.multiples_ok || !r.rotation_ok || (r.uniqueness_ok && !*r.uniqueness_ok)) status = kExitVerify;
    }
  });

  // types
  bool partition = false, images = false;
  auto* types_cmd = app.add_subcommand("types", "Partition of G*_l into the types T01, T10, T11");
  types_cmd->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
  {
    auto* m = modes(types_cmd);
    m->add_flag("--partition", partition, "Type of every element");
    m->add_flag("--image-sets", images, "N-images per type, computed and printed");
    m->add_flag("--verify", verify_flag, "Type-partition checks up to l");
  }
  types_cmd->callback([&] {
    if (partition) {
      for (const auto& e : cached_enumerate(cache(), ell, g.max_ell))
        out.push_back(element_record(e).add("type", to_string(classify(e))));
    } else if (images) {
      const ImageSets s = image_sets(ell, g.max_ell);
      for (TypeTag t : kTypeTags) {
        const auto& off = s.offset.at(t);
        out.push_back(Record{}
                          .add("type", to_string(t))
                          .add("computed", join_set(s.computed.at(t)))
                          .add("printed", join_set(s.printed.at(t)))
                          .add("offset", off ? off->str() : "none"));
      }
    } else {
      VerifyOptions o;
      o.max_ell = std::min(ell, g.max_ell);
      o.cache = cache();
      const VerificationReport r = verify_type_partition(o);
      out = to_records(r);
      if (!r.passed()) status = kExitVerify;
    }
  });

  // fibword
  auto* fibword_cmd = app.add_subcommand("fibword", "Blocks of b M_{F_{2l-2}}");
  fibword_cmd->add_option("--ell", ell)->required()->check(CLI::Range(3, 40));
  fibword_cmd->add_flag("--partition", partition)->required();
  fibword_cmd->callback([&] {
    for (const auto& b : fib_partition(ell).blocks)
      out.push_back(Record{}
                        .add("index", std::to_string(b.index))
                        .add("block", b.block.str())
                        .add("a_count", std::to_string(b.a_count))
                        .add("b_count", std::to_string(b.b_count)));
  });

  // wheel
  bool trees = false, map = false, bijection = false;
  auto* wheel_cmd = app.add_subcommand("wheel", "Spanning trees of the l-wheel");
  wheel_cmd->add_option("--ell", ell)->required()->check(CLI::Range(1, 31));
  {
    auto* m = modes(wheel_cmd);
    m->add_flag("--count", count, "Tree counts by backtracking and by determinant");
    m->add_flag("--trees", trees, "All spanning trees as edge bitmasks");
    m->add_flag("--map", map, "Taxonomy words of every tree");
    m->add_flag("--verify-bijection", bijection, "Check that taxonomy is one-to-one onto G*_l");
  }
  wheel_cmd->callback([&] {
    if (count) {
      out.push_back(Record{}
                        .add("ell", std::to_string(ell))
                        .add("trees", std::to_string(spanning_trees(ell, g.max_ell).size()))
                        .add("matrix_tree", std::to_string(count_trees_matrix(ell))));
    } else if (trees) {
      for (const auto& t : spanning_trees(ell, g.max_ell))
        out.push_back(Record{}.add("spokes", std::to_string(t.spokes)).add("rims", std::to_string(t.rims)));
    } else if (map) {
      for (const auto& row : cached_taxonomy(cache(), ell, g.max_ell))
        out.push_back(Record{}
                          .add("spokes", std::to_string(row.tree.spokes))
                          .add("rims", std::to_string(row.tree.rims))
                          .add("raw", row.raw.str())
                          .add("normal_form", row.normal.str()));
    } else {
      const TaxonomyTable t(ell, g.max_ell);
      out.push_back(Record{}
                        .add("ell", std::to_string(ell))
                        .add("trees", std::to_string(t.trees().size()))
                        .add("bijective", t.is_bijective() ? "pass" : "fail"));
      if (!t.is_bijective()) status = kExitVerify;
    }
  });

  // gcd-check
  std::size_t max_index = 30;
  auto* gcd_cmd = app.add_subcommand("gcd-check", "gcd(d_m, d_n) = d_gcd(m,n) and d_2l = f_2l");
  gcd_cmd->add_option("--max", max_index)->required()->check(CLI::Range(2, 10000));
  gcd_cmd->callback([&] {
    const GcdReport r = gcd_property_report(max_index);
    out.push_back(Record{}
                      .add("max", std::to_string(max_index))
                      .add("pairs_checked", std::to_string(r.pairs_checked))
                      .add("even_indices_checked", std::to_string(r.even_indices_checked))
                      .add("failures", std::to_string(r.failures.size()))
                      .add("status", r.passed() ? "pass" : "fail"));
    if (!r.passed()) status = kExitVerify;
  });

  // demo-base
  unsigned base = 10;
  auto* demo_cmd = app.add_subcommand(
      "demo-base", "Multiples of the period of 1/q in base b (most significant digit first, unlike other commands)");
  demo_cmd->add_option("--base", base)->required()->check(CLI::Range(2u, 36u));
  demo_cmd->add_option("--q", q)->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 20));
  demo_cmd->callback([&] {
    const CyclicGroupReport r = verify_cyclic_group(base, q);
    for (std::size_t i = 0; i < r.multiples.size(); ++i)
      out.push_back(Record{}
                        .add("i", std::to_string(i + 1))
                        .add("word", r.multiples[i].str())
                        .add("value", r.multiples[i].value().str()));
    if (!r.passed) status = kExitVerify;
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run every verification suite within --max-ell and --max-q");
  verify_cmd->callback([&] {
    VerifyOptions o;
    o.max_ell = g.max_ell;
    o.max_q = g.max_q;
    o.cache = cache();
    const VerificationReport r = run_verify(o);
    out = to_records(r);
    if (!r.passed()) status = kExitVerify;
  });

  try {
    app.parse(argc, argv);
    std::cout << write_records(out, parse_format(g.format));
    return status;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
