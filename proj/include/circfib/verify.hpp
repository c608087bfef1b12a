#ifndef CIRCFIB_VERIFY_HPP
#define CIRCFIB_VERIFY_HPP

// Verification suites. Each suite checks one group of claims at bounds
// clipped by VerifyOptions and reports pass, fail or discrepancy per claim.
// A discrepancy marks a printed value that differs from the computed one in
// a documented way; it never fails a run.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "circfib/cache.hpp"
#include "circfib/group.hpp"
#include "circfib/records.hpp"

namespace circfib {

enum class ClaimStatus { pass, fail, discrepancy };

std::string to_string(ClaimStatus s);

struct Claim {
  std::string suite;  // set when claims from several suites are merged
  std::string id;
  std::string anchor;
  ClaimStatus status = ClaimStatus::pass;
  std::string detail;
  std::string expected;
  std::string computed;
};

struct VerificationReport {
  std::string suite;
  std::vector<Claim> claims;

  /// Adds a pass or fail claim.
  void check(std::string id, std::string anchor, bool ok, std::string detail, std::string expected = {},
             std::string computed = {});
  void discrepancy(std::string id, std::string anchor, std::string detail, std::string expected, std::string computed);
  void append(const VerificationReport& other);

  std::size_t count(ClaimStatus s) const;
  bool passed() const { return count(ClaimStatus::fail) == 0; }
};

struct VerifyOptions {
  std::size_t max_ell = kDefaultMaxEll;
  std::uint64_t max_q = 10;
  std::function<BigInt(std::size_t)> d_formula = d_value;
  Cache cache;
};

VerificationReport verify_cardinalities(const VerifyOptions& o);
VerificationReport verify_structure(const VerifyOptions& o);
VerificationReport verify_normal_forms(const VerifyOptions& o);
VerificationReport verify_group_axioms(const VerifyOptions& o);
VerificationReport verify_minimal_length(const VerifyOptions& o);
VerificationReport verify_periodic_group(const VerifyOptions& o);
VerificationReport verify_gcd_property(const VerifyOptions& o);
VerificationReport verify_type_partition(const VerifyOptions& o);
VerificationReport verify_fib_partition(const VerifyOptions& o);
VerificationReport verify_wheels(const VerifyOptions& o);
VerificationReport verify_base_demo(const VerifyOptions& o);
VerificationReport verify_balanced(const VerifyOptions& o);

struct AcceptanceSuite {
  int criterion;
  std::string name;
  double time_limit_seconds;
  VerificationReport (*run)(const VerifyOptions&);
};

/// The twelve suites in criterion order.
const std::vector<AcceptanceSuite>& acceptance_suites();

/// Runs one suite; a thrown error becomes a failed infrastructure claim.
VerificationReport run_suite(const AcceptanceSuite& s, const VerifyOptions& o);

/// Every suite, concatenated.
VerificationReport run_verify(const VerifyOptions& o);

std::vector<Record> to_records(const VerificationReport& r);

}  // namespace circfib

#endif  // CIRCFIB_VERIFY_HPP
