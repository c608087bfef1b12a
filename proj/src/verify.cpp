#include "circfib/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "circfib/baseb.hpp"
#include "circfib/certify.hpp"
#include "circfib/errors.hpp"
#include "circfib/orderq.hpp"
#include "circfib/rewrite.hpp"
#include "circfib/typology.hpp"
#include "circfib/wheels.hpp"

namespace circfib {

namespace {

template <class Range>
std::string join(const Range& values, const char* sep = " ") {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    out << (first ? "" : sep) << v;
    first = false;
  }
  return out.str();
}

std::string join_words(const std::vector<CircWord>& words) {
  std::vector<std::string> s;
  for (const auto& w : words) s.push_back(w.str());
  return join(s, ",");
}

std::size_t periodic_bound(const VerifyOptions& o) { return std::max(o.max_ell, kDefaultMaxPeriodicEll); }

}  // namespace

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::discrepancy: return "discrepancy";
  }
  return "?";
}

void VerificationReport::check(std::string id, std::string anchor, bool ok, std::string detail, std::string expected,
                               std::string computed) {
  claims.push_back({{}, std::move(id), std::move(anchor), ok ? ClaimStatus::pass : ClaimStatus::fail, std::move(detail),
                    std::move(expected), std::move(computed)});
}

void VerificationReport::discrepancy(std::string id, std::string anchor, std::string detail, std::string expected,
                                     std::string computed) {
  claims.push_back({{}, std::move(id), std::move(anchor), ClaimStatus::discrepancy, std::move(detail), std::move(expected),
                    std::move(computed)});
}

void VerificationReport::append(const VerificationReport& other) {
  claims.insert(claims.end(), other.claims.begin(), other.claims.end());
}

std::size_t VerificationReport::count(ClaimStatus s) const {
  return static_cast<std::size_t>(std::count_if(claims.begin(), claims.end(), [&](const Claim& c) { return c.status == s; }));
}

VerificationReport verify_cardinalities(const VerifyOptions& o) {
  VerificationReport r{"cardinalities", {}};
  const std::vector<std::uint64_t> printed{1, 5, 16, 45, 121, 320};
  const std::size_t top = std::min<std::size_t>(printed.size(), o.max_ell);
  std::vector<std::uint64_t> expected(printed.begin(), printed.begin() + static_cast<std::ptrdiff_t>(top));
  std::vector<std::uint64_t> counted, predicted;
  for (std::size_t l = 1; l <= top; ++l) {
    counted.push_back(cached_enumerate(o.cache, l, o.max_ell).size());
    predicted.push_back(predicted_structure(l, o.d_formula).order);
  }
  r.check("group-order", "first terms of the group order sequence", counted == expected,
          "enumerated |G*_l| for l = 1.." + std::to_string(top), join(expected), join(counted));
  r.check("group-order-formula", "order predicted by the d_l formula", predicted == counted,
          "d_l^2 for odd l, 5 d_l^2 for even l", join(counted), join(predicted));
  return r;
}

VerificationReport verify_structure(const VerifyOptions& o) {
  VerificationReport r{"structure", {}};
  for (std::size_t l = 2; l <= std::min<std::size_t>(7, o.max_ell); ++l) {
    const GroupStructure p = predicted_structure(l, o.d_formula);
    const std::string expected = "Z/" + std::to_string(p.e1) + " x Z/" + std::to_string(p.e2);
    try {
      const GroupStructure g = decompose(l, o.max_ell, o.d_formula);
      r.check("structure-l" + std::to_string(l), "invariant factors of G*_l", true, "two-generator certificate found",
              expected, "Z/" + std::to_string(g.e1) + " x Z/" + std::to_string(g.e2));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::structural_mismatch) throw;
      r.check("structure-l" + std::to_string(l), "invariant factors of G*_l", false, e.what(), expected, "mismatch");
    }
  }
  return r;
}

VerificationReport verify_normal_forms(const VerifyOptions& o) {
  VerificationReport r{"normal-forms", {}};
  for (std::size_t n : {4u, 6u, 8u}) {
    if (n / 2 > o.max_ell) continue;
    const CircWord id01 = alternating_word(n, 0), id10 = alternating_word(n, 1);
    const std::vector<CircWord> ones_expected{id01, id10};

    std::map<CircWord, std::size_t> class_of;
    std::vector<std::vector<CircWord>> class_admissible;
    std::size_t words = 0, non_unique = 0, normalizer_mismatch = 0, two_member_classes = 0;
    std::string first_problem;

    std::vector<Digit> digits(n, 0);
    while (true) {
      std::size_t i = 0;
      while (i < n && digits[i] == 2) digits[i++] = 0;
      if (i == n) break;
      ++digits[i];
      const CircWord w{DigitWord(digits)};
      ++words;

      auto it = class_of.find(w);
      if (it == class_of.end()) {
        const Orbit orb = orbit(w, 3, OracleLimits{}.size_cap);
        auto admissible = admissible_members(orb);
        const std::size_t id = class_admissible.size();
        if (admissible.empty() || orb.truncated) {
          admissible = admissible_equivalents(w).admissible;
          class_of.emplace(w, id);
        } else {
          for (const auto& m : orb.members)
            if (m.linear().max_digit() <= 2) class_of.emplace(m, id);
        }
        if (admissible.size() == 2) ++two_member_classes;
        class_admissible.push_back(std::move(admissible));
        it = class_of.find(w);
      }
      const auto& adm = class_admissible[it->second];
      const CircWord nf = normalize(w);
      if (adm == ones_expected) {
        if (!(nf == id01)) ++normalizer_mismatch;
      } else if (adm.size() != 1) {
        ++non_unique;
        if (first_problem.empty()) first_problem = w.str() + " -> {" + join_words(adm) + "}";
      } else if (!(nf == adm.front())) {
        ++normalizer_mismatch;
        if (first_problem.empty()) first_problem = "normalize(" + w.str() + ") = " + nf.str() + ", oracle " + adm.front().str();
      }
    }

    const std::string tag = "-n" + std::to_string(n);
    const auto& ones = class_admissible[class_of.at(CircWord(DigitWord(n, 1)))];
    r.check("unique-admissible" + tag, "unique admissible equivalent", non_unique == 0,
            std::to_string(words) + " nonzero {0,1,2}-words, " + std::to_string(class_admissible.size()) +
                " orbits" + (first_problem.empty() ? "" : "; " + first_problem),
            "0 words with several admissible equivalents", std::to_string(non_unique));
    r.check("normalizer-agrees" + tag, "normal form equals the oracle", normalizer_mismatch == 0,
            "normalize against BFS oracle", "0 mismatches", std::to_string(normalizer_mismatch));
    r.check("ones-orbit" + tag, "orbit of the all-ones word", ones == ones_expected && two_member_classes == 1,
            "admissible members of the all-ones orbit", join_words(ones_expected), join_words(ones));
  }
  return r;
}

VerificationReport verify_group_axioms(const VerifyOptions& o) {
  VerificationReport r{"group-axioms", {}};
  for (std::size_t l = 1; l <= std::min<std::size_t>(4, o.max_ell); ++l) {
    const auto elements = cached_enumerate(o.cache, l, o.max_ell);
    const std::size_t n = elements.size();
    std::map<GroupElement, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(elements[i], i);
    std::vector<std::size_t> table(n * n);
    for (const auto& e : cached_cayley_table(o.cache, l)) table[index.at(e.left) * n + index.at(e.right)] = index.at(e.sum);
    const std::size_t zero = index.at(identity(l));

    std::size_t assoc = 0, comm = 0, ident = 0, inv = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (table[zero * n + a] != a) ++ident;
      const std::size_t minus = index.at(neg(elements[a]));
      if (table[a * n + minus] != zero) ++inv;
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a * n + b] != table[b * n + a]) ++comm;
        for (std::size_t c = 0; c < n; ++c)
          if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]]) ++assoc;
      }
    }
    const std::string tag = "-l" + std::to_string(l);
    const std::string scope = std::to_string(n) + " elements, exhaustive";
    r.check("associativity" + tag, "group law", assoc == 0, scope, "0", std::to_string(assoc));
    r.check("commutativity" + tag, "group law", comm == 0, scope, "0", std::to_string(comm));
    r.check("identity" + tag, "group law", ident == 0, scope, "0", std::to_string(ident));
    r.check("inverse" + tag, "group law", inv == 0, scope, "0", std::to_string(inv));
  }
  for (std::size_t l = 1; l <= std::min<std::size_t>(6, o.max_ell); ++l) {
    std::size_t bad = 0;
    const auto elements = cached_enumerate(o.cache, l, o.max_ell);
    for (const auto& u : elements)
      if (!add(u, neg(u)).is_identity() || !(neg(neg(u)) == u)) ++bad;
    r.check("negation-l" + std::to_string(l), "complement-and-normalize negation", bad == 0,
            std::to_string(elements.size()) + " elements", "0", std::to_string(bad));
  }
  return r;
}

VerificationReport verify_minimal_length(const VerifyOptions& o) {
  VerificationReport r{"minimal-length", {}};
  for (std::uint64_t q = 2; q <= std::min<std::uint64_t>(10, o.max_q); ++q) {
    const std::string tag = "-q" + std::to_string(q);
    const std::size_t n = minimal_even_length(q);
    const auto via_d = minimal_even_length_via_d(q);
    r.check("min-length" + tag, "least even n with F_n = F_{n-1} = 1 mod q", via_d && *via_d == n,
            "cross-checked against 2 min{l : q | d_l}", std::to_string(n), via_d ? std::to_string(*via_d) : "none");

    const PiMultiplesReport p = verify_pi_multiples(q, periodic_bound(o));
    r.check("rotation" + tag, "rotating Pi' gives Pi", p.rotation_ok, "Pi = " + p.words.pi.str() + ", Pi' = " +
            p.words.pi_prime.str());
    r.check("multiples" + tag, "i Pi equals the Zeckendorf word of i N(Pi)", p.multiples_ok,
            "i = 1.." + std::to_string(q) + " for Pi and Pi'");
    const auto qq = static_cast<std::int64_t>(q);
    r.check("q-torsion" + tag, "q Pi is the identity",
            scalar_mul(qq, p.words.pi).is_identity() && scalar_mul(qq, p.words.pi_prime).is_identity(),
            "length " + std::to_string(n));
    if (p.uniqueness_ok) {
      r.check("unique-pair" + tag, "only Pi and Pi' have integer multiples", *p.uniqueness_ok,
              "scan of all elements of order dividing q", "{" + p.words.pi.str() + "," + p.words.pi_prime.str() + "}",
              std::to_string(p.satisfiers.size()) + " satisfiers");
      r.check("span-index" + tag, "index of <Pi, Pi'>", true, "reported, not asserted", "",
              std::to_string(*p.span_index));
    }
  }
  return r;
}

VerificationReport verify_periodic_group(const VerifyOptions& o) {
  VerificationReport r{"periodic-group", {}};
  for (std::uint64_t q = 2; q <= std::min<std::uint64_t>(6, o.max_q); ++q) {
    const std::string tag = "-q" + std::to_string(q);
    const auto group = p_group(q, periodic_bound(o));
    std::vector<GroupElement> elements;
    for (const auto& p : group) elements.push_back(p.element());
    const GroupElement zero = identity(elements.front().ell());

    std::uint64_t exponent = 1;
    for (const auto& g : elements) exponent = std::lcm(exponent, element_order(g));
    const auto cert = certify_two_generators<GroupElement>(elements, zero, add);
    r.check("order" + tag, "order q^2", elements.size() == q * q, "", std::to_string(q * q),
            std::to_string(elements.size()));
    r.check("exponent" + tag, "exponent q", exponent == q, "", std::to_string(q), std::to_string(exponent));
    r.check("certificate" + tag, "two cyclic factors of order q", cert && cert->e1 == q && cert->e2 == q,
            cert ? "g1 = " + cert->g1.str() + ", g2 = " + cert->g2.str() : "no certificate", "Z/q x Z/q",
            cert ? "Z/" + std::to_string(cert->e1) + " x Z/" + std::to_string(cert->e2) : "none");

    const std::set<PeriodicElement> members(group.begin(), group.end());
    std::size_t open = 0;
    for (const auto& a : group)
      for (const auto& b : group)
        if (!members.count(PeriodicElement(oplus(a, b)))) ++open;
    r.check("closure" + tag, "closed under the mixed-length sum", open == 0, "all pairs", "0", std::to_string(open));
  }

  std::size_t bad_identity = 0, checked = 0;
  const GroupElement unit = identity(1);
  for (std::size_t l = 1; l <= std::min<std::size_t>(4, o.max_ell); ++l) {
    for (const auto& u : cached_enumerate(o.cache, l, o.max_ell)) {
      ++checked;
      if (!(oplus(u, unit) == u) || !(oplus(unit, u) == u)) ++bad_identity;
    }
  }
  r.check("oplus-identity", "length-2 identity is neutral", bad_identity == 0,
          std::to_string(checked) + " elements, exhaustive", "0", std::to_string(bad_identity));

  std::mt19937 rng(20240601);
  const std::size_t top = std::min<std::size_t>(4, o.max_ell);
  std::vector<std::vector<GroupElement>> pools;
  for (std::size_t l = 1; l <= top; ++l) pools.push_back(cached_enumerate(o.cache, l, o.max_ell));
  const auto pick = [&]() -> const GroupElement& {
    const auto& pool = pools[rng() % pools.size()];
    return pool[rng() % pool.size()];
  };
  std::size_t bad_mixed = 0;
  const std::size_t samples = 400;
  for (std::size_t s = 0; s < samples; ++s) {
    const GroupElement& u = pick();
    const GroupElement& v = pick();
    const GroupElement& w = pick();
    const GroupElement uv = oplus(u, v);
    const std::size_t m = std::lcm(u.size(), v.size());
    const bool ok = uv.size() == m && uv == oplus(v, u) && oplus(uv, unit) == uv &&
                    uv == add(repeat_morphism(u, m / u.size()), repeat_morphism(v, m / v.size())) &&
                    oplus(uv, w) == oplus(u, oplus(v, w));
    if (!ok) ++bad_mixed;
  }
  r.check("oplus-mixed", "closure and identity at lcm length", bad_mixed == 0,
          std::to_string(samples) + " sampled triples, l <= " + std::to_string(top), "0", std::to_string(bad_mixed));
  return r;
}

VerificationReport verify_gcd_property(const VerifyOptions& o) {
  VerificationReport r{"gcd-property", {}};
  const GcdReport g = gcd_property_report(30, o.d_formula);
  r.check("gcd-d", "d_l has the gcd-property", g.passed(),
          std::to_string(g.pairs_checked) + " pairs, " + std::to_string(g.even_indices_checked) + " even indices" +
              (g.failures.empty() ? "" : "; " + g.failures.front().detail),
          "0 failures", std::to_string(g.failures.size()));

  const std::vector<std::pair<std::size_t, std::size_t>> pairs{{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}};
  for (const auto& [l, n] : pairs) {
    if (l > o.max_ell) continue;
    const auto elements = cached_enumerate(o.cache, l, o.max_ell);
    std::set<GroupElement> images;
    std::size_t bad = 0;
    for (const auto& u : elements) {
      images.insert(repeat_morphism(u, n));
      for (const auto& v : elements)
        if (!(add(repeat_morphism(u, n), repeat_morphism(v, n)) == repeat_morphism(add(u, v), n))) ++bad;
    }
    const std::string tag = "-l" + std::to_string(l) + "-n" + std::to_string(n);
    r.check("repeat-hom" + tag, "repetition is a morphism", bad == 0, "exhaustive over pairs", "0", std::to_string(bad));
    r.check("repeat-injective" + tag, "repetition is injective", images.size() == elements.size(), "",
            std::to_string(elements.size()), std::to_string(images.size()));
  }
  return r;
}

VerificationReport verify_type_partition(const VerifyOptions& o) {
  VerificationReport r{"type-partition", {}};
  for (std::size_t l = 1; l <= std::min<std::size_t>(7, o.max_ell); ++l) {
    const auto elements = cached_enumerate(o.cache, l, o.max_ell);
    std::size_t bad_total = 0, bad_struct = 0;
    for (const auto& u : elements) {
      if (u.is_identity()) continue;
      const BigInt total = valuation(u.word()) + valuation(neg(u).word());
      std::size_t matches = 0;
      for (TypeTag t : kTypeTags) matches += total == valuation(type_word(t, l)) ? 1 : 0;
      if (matches != 1) {
        ++bad_total;
        continue;
      }
      if (structural_class(u) != classify(u)) ++bad_struct;
    }
    const std::string tag = "-l" + std::to_string(l);
    r.check("partition" + tag, "each element has exactly one type", bad_total == 0,
            std::to_string(elements.size() - 1) + " non-identity elements", "0", std::to_string(bad_total));
    r.check("structural" + tag, "prefix/suffix characterization", bad_struct == 0,
            "zero run read from index 0", "0", std::to_string(bad_struct));
    r.check("sigma" + tag, "rotation maps T10 onto T01", sigma_relation_check(l, o.max_ell), "bijective image");
  }
  if (o.max_ell >= 2)
    r.discrepancy("structural-labels", "prefix/suffix characterization",
                  "read from index 0, the (01) and (10) prefix patterns select the swapped types",
                  "labels as printed", "T01 and T10 labels swapped");

  const std::size_t top = std::min<std::size_t>(6, o.max_ell);
  std::map<TypeTag, std::set<std::string>> offsets;
  bool t10_exact = true;
  std::string t10_detail;
  for (std::size_t l = 1; l <= top; ++l) {
    const ImageSets s = image_sets(l, o.max_ell);
    if (s.computed.at(TypeTag::T10) != s.printed.at(TypeTag::T10)) {
      t10_exact = false;
      if (t10_detail.empty()) t10_detail = "first mismatch at l = " + std::to_string(l);
    }
    for (TypeTag t : {TypeTag::T01, TypeTag::T11}) {
      if (s.computed.at(t).empty() && s.printed.at(t).empty()) continue;
      const auto& off = s.offset.at(t);
      offsets[t].insert(off ? off->str() : "none");
    }
  }
  if (top >= 1) {
    r.check("image-T10", "N-image of T10", t10_exact, t10_detail.empty() ? "l = 1.." + std::to_string(top) : t10_detail);
    const ImageSets sample = image_sets(std::min<std::size_t>(2, top), o.max_ell);
    for (TypeTag t : {TypeTag::T01, TypeTag::T11}) {
      const std::string id = "image-" + to_string(t);
      const auto& off = offsets[t];
      if (off.empty()) continue;
      const bool constant = off.size() == 1 && *off.begin() != "none";
      if (!constant) {
        r.check(id, "N-image of " + to_string(t), false, "no single additive constant", "", join(off, ","));
      } else if (*off.begin() == "0") {
        r.check(id, "N-image of " + to_string(t), true, "equal to the printed set", "offset 0", "offset 0");
      } else {
        r.discrepancy(id, "N-image of " + to_string(t),
                      "computed set = printed set + " + *off.begin() + " for every l checked; at l = " +
                          std::to_string(std::min<std::size_t>(2, top)) + " printed {" +
                          join(sample.printed.at(t), ",") + "} computed {" + join(sample.computed.at(t), ",") + "}",
                      "offset 0", "offset " + *off.begin());
      }
    }
  }

  for (std::size_t l = 3; l <= std::min<std::size_t>(6, o.max_ell); ++l) {
    const TypeFamilyReport k = k_pi_type_check(l);
    const std::string tag = "-l" + std::to_string(l);
    const auto tags = [](const std::map<TypeTag, std::size_t>& m) {
      std::vector<std::string> s;
      for (const auto& [t, n] : m) s.push_back(to_string(t) + ":" + std::to_string(n));
      return join(s, ",");
    };
    const std::string computed = "k Pi " + tags(k.pi_tags) + "; k Pi' " + tags(k.pi_prime_tags);
    if (!k.single_tag_per_family()) {
      r.check("k-pi-types" + tag, "types of k Pi and k Pi'", false, "q = " + std::to_string(k.q), "one tag per family",
              computed);
      continue;
    }
    const TypeTag a = k.pi_tags.begin()->first, b = k.pi_prime_tags.begin()->first;
    if (a == TypeTag::T10 && b == TypeTag::T01) {
      r.check("k-pi-types" + tag, "types of k Pi and k Pi'", true, "q = " + std::to_string(k.q),
              "k Pi T10; k Pi' T01", computed);
    } else if (a == TypeTag::T01 && b == TypeTag::T10) {
      r.discrepancy("k-pi-types" + tag, "types of k Pi and k Pi'",
                    "one tag per family holds with the labels mirrored, q = " + std::to_string(k.q),
                    "k Pi T10; k Pi' T01", computed);
    } else {
      r.check("k-pi-types" + tag, "types of k Pi and k Pi'", false, "q = " + std::to_string(k.q),
              "k Pi T10; k Pi' T01", computed);
    }
  }
  return r;
}

VerificationReport verify_fib_partition(const VerifyOptions& o) {
  VerificationReport r{"fib-partition", {}};
  std::vector<std::string> literal_fails;
  for (std::size_t l = 3; l <= std::min<std::size_t>(10, o.max_ell); ++l) {
    const FibPartition p = fib_partition(l, BlockRule::d_blocks);
    const auto total = static_cast<std::size_t>(fib(static_cast<int>(2 * l - 2)));
    const auto& first = p.blocks.front();
    r.check("blocks-l" + std::to_string(l), "constant letter counts per block",
            p.constant_counts() && p.trailing == 'a' && p.block_count * p.block_length == total,
            std::to_string(p.block_count) + " blocks of length " + std::to_string(p.block_length) + ", trailing " +
                p.trailing,
            "constant counts", "a=" + std::to_string(first.a_count) + " b=" + std::to_string(first.b_count));
    if (!fib_partition(l, BlockRule::d_length).constant_counts()) literal_fails.push_back(std::to_string(l));
  }
  if (o.max_ell >= 3) {
    if (literal_fails.empty())
      r.check("printed-split", "block length d_l", true, "blocks of length d_l also have constant counts");
    else
      r.discrepancy("printed-split", "block length d_l",
                    "blocks of length d_l have varying counts; d_l blocks of length F_{2l-2}/d_l are used",
                    "constant counts for all l", "varying at l = " + join(literal_fails, ","));
  }
  for (std::size_t l = 3; l <= std::min<std::size_t>(6, o.max_ell); ++l) {
    r.check("consecutive-l" + std::to_string(l), "N(i Pi) - N((i-1) Pi) = N(Pi)", consecutive_multiples_check(l),
            "q = d_" + std::to_string(l) + ", i = 1..q");
  }
  return r;
}

VerificationReport verify_wheels(const VerifyOptions& o) {
  VerificationReport r{"wheels", {}};
  const std::vector<std::uint64_t> expected_all{1, 5, 16, 45, 121, 320, 841, 2205};
  const std::size_t top = std::min<std::size_t>(8, o.max_ell);
  std::vector<std::uint64_t> expected(expected_all.begin(), expected_all.begin() + static_cast<std::ptrdiff_t>(top));
  std::vector<std::uint64_t> trees, matrix, group;
  for (std::size_t l = 1; l <= top; ++l) {
    trees.push_back(spanning_trees(l, o.max_ell).size());
    matrix.push_back(count_trees_matrix(l));
    group.push_back(cached_enumerate(o.cache, l, o.max_ell).size());
  }
  r.check("tree-count", "spanning trees of the l-wheel", trees == expected, "backtracking", join(expected), join(trees));
  r.check("matrix-tree", "spanning trees of the l-wheel", matrix == expected, "reduced Laplacian determinant",
          join(expected), join(matrix));
  r.check("tree-group", "trees and group elements are equinumerous", group == trees, "", join(trees), join(group));

  std::vector<std::string> fiber_sizes, word_counts, group_counts;
  for (std::size_t l = 1; l <= std::min<std::size_t>(6, o.max_ell); ++l) {
    const std::string tag = "-l" + std::to_string(l);
    const auto rows = cached_taxonomy(o.cache, l, o.max_ell);
    const TaxonomyTable table(l, o.max_ell);
    r.check("bijection" + tag, "taxonomy is one-to-one onto G*_l", table.is_bijective(),
            std::to_string(rows.size()) + " trees");

    std::set<CircWord> images;
    for (const auto& row : rows) images.insert(row.raw);
    const std::size_t n = 2 * l;
    std::size_t mismatched = 0, fiber = 0;
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
      std::vector<Digit> d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = (bits >> i) & 1u;
      const CircWord w{DigitWord(d)};
      const bool tree_word = is_tree_word(w);
      if (tree_word != (images.count(w) > 0)) ++mismatched;
      if (tree_word && normalize(w) == canonical_identity(n)) ++fiber;
    }
    r.check("even-zero-blocks" + tag, "tree words have even zero blocks",
            mismatched == 0 && images.size() == rows.size(), "both inclusions over all binary words, injective",
            "0", std::to_string(mismatched));
    fiber_sizes.push_back(std::to_string(fiber));
    word_counts.push_back(std::to_string(images.size()));
    group_counts.push_back(std::to_string(cached_enumerate(o.cache, l, o.max_ell).size()));
  }
  if (!fiber_sizes.empty()) {
    const bool as_printed =
        std::all_of(fiber_sizes.begin(), fiber_sizes.end(), [](const std::string& s) { return s == "2"; });
    if (as_printed)
      r.check("identity-fiber", "identity written as 1^{2l}", true, "fiber sizes " + join(fiber_sizes, ","));
    else
      r.discrepancy("identity-fiber", "identity written as 1^{2l}",
                    "even-zero-block word counts " + join(word_counts, ",") + " vs |G*_l| " + join(group_counts, ","),
                    "|G*_l| + 1 words, identity fiber 2", "identity fiber sizes " + join(fiber_sizes, ","));
  }

  for (std::size_t l = 1; l <= std::min<std::size_t>(3, o.max_ell); ++l) {
    const TaxonomyTable table(l, o.max_ell);
    const auto& ts = table.trees();
    const WheelTree star = star_tree(l);
    std::size_t bad = 0;
    for (const auto& a : ts) {
      if (!(tree_add(table, a, star) == a) || !(tree_add(table, a, tree_neg(table, a)) == star)) ++bad;
      for (const auto& b : ts) {
        if (!(tree_add(table, a, b) == tree_add(table, b, a))) ++bad;
        for (const auto& c : ts)
          if (!(tree_add(table, tree_add(table, a, b), c) == tree_add(table, a, tree_add(table, b, c)))) ++bad;
      }
    }
    r.check("tree-group-l" + std::to_string(l), "transported group law on trees", bad == 0,
            std::to_string(ts.size()) + " trees, exhaustive", "0", std::to_string(bad));
  }
  return r;
}

VerificationReport verify_base_demo(const VerifyOptions&) {
  VerificationReport r{"base-demo", {}};
  const std::string pi = period_word(10, 7).str();
  r.check("period-10-7", "period of 1/7", pi == "142857", "", "142857", pi);
  const CyclicGroupReport c = verify_cyclic_group(10, 7);
  std::vector<std::string> multiples;
  for (const auto& m : c.multiples) multiples.push_back(m.str());
  const std::vector<std::string> printed{"142857", "285714", "428571", "571428", "714285", "857142", "000000"};
  r.check("multiples-10-7", "multiples table of 142857", c.passed && multiples == printed, "i = 1..7",
          join(printed, ","), join(multiples, ","));
  for (std::size_t n = 1; n <= 4; ++n)
    r.check("isomorphism-b2-n" + std::to_string(n), "words modulo b^n - 1", check_isomorphism(2, n), "exhaustive");
  return r;
}

VerificationReport verify_balanced(const VerifyOptions&) {
  VerificationReport r{"balanced", {}};
  const LetterWord m = fibonacci_word_prefix(10000);
  std::vector<std::string> failing;
  for (std::size_t window = 1; window <= 50; ++window)
    if (!check_balanced(m, window)) failing.push_back(std::to_string(window));
  r.check("balanced", "balanced property of the Fibonacci word", failing.empty(),
          "all factor lengths 1..50 of the length-10000 prefix", "none unbalanced",
          failing.empty() ? "none" : join(failing, ","));
  return r;
}

const std::vector<AcceptanceSuite>& acceptance_suites() {
  static const std::vector<AcceptanceSuite> suites{
      {1, "cardinalities", 10, verify_cardinalities},   {2, "structure", 60, verify_structure},
      {3, "normal-forms", 120, verify_normal_forms},    {4, "group-axioms", 60, verify_group_axioms},
      {5, "minimal-length", 60, verify_minimal_length}, {6, "periodic-group", 60, verify_periodic_group},
      {7, "gcd-property", 10, verify_gcd_property},     {8, "type-partition", 60, verify_type_partition},
      {9, "fib-partition", 10, verify_fib_partition},   {10, "wheels", 120, verify_wheels},
      {11, "base-demo", 5, verify_base_demo},           {12, "balanced", 10, verify_balanced},
  };
  return suites;
}

VerificationReport run_suite(const AcceptanceSuite& s, const VerifyOptions& o) {
  try {
    VerificationReport r = s.run(o);
    r.suite = s.name;
    return r;
  } catch (const std::exception& e) {
    VerificationReport r{s.name, {}};
    r.check("infrastructure", s.name, false, e.what());
    return r;
  }
}

VerificationReport run_verify(const VerifyOptions& o) {
  VerificationReport all{"verify", {}};
  for (const auto& s : acceptance_suites()) {
    VerificationReport r = run_suite(s, o);
    for (auto& c : r.claims) c.suite = s.name;
    all.append(r);
  }
  return all;
}

std::vector<Record> to_records(const VerificationReport& r) {
  std::vector<Record> out;
  for (const auto& c : r.claims) {
    Record rec;
    rec.add("suite", c.suite.empty() ? r.suite : c.suite)
        .add("claim", c.id)
        .add("anchor", c.anchor)
        .add("status", to_string(c.status))
        .add("expected", c.expected)
        .add("computed", c.computed)
        .add("detail", c.detail);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace circfib
