#ifndef CIRCFIB_REWRITE_HPP
#define CIRCFIB_REWRITE_HPP

// The Fibonacci rewriting system on circular digit words.
//
// Rule A at anchor k:  w[k-1] -1, w[k] -1, w[k+1] +1   (F_{k-1} + F_k = F_{k+1})
// Rule B at anchor k:  w[k-2] +1, w[k] -2, w[k+1] +1   (2 F_k = F_{k-2} + F_{k+1})
//
// Indices are taken modulo the length. Backward moves are the exact inverses,
// and every move must leave all digits nonnegative. A move whose window wraps
// past index 0 changes the valuation N; the others preserve it.

#include <cstddef>
#include <optional>
#include <vector>

#include "circfib/fibcore.hpp"

namespace circfib {

enum class Rule { A, B };
enum class Direction { forward, backward };

struct RewriteMove {
  Rule rule = Rule::A;
  std::size_t position = 0;
  Direction direction = Direction::forward;

  friend bool operator==(const RewriteMove&, const RewriteMove&) = default;
};

bool is_applicable(const CircWord& w, const RewriteMove& m);
/// Throws ErrorKind::inapplicable_move when a digit would go negative.
CircWord apply_move(const CircWord& w, const RewriteMove& m);
/// Whether the move's index window wraps around the seam between w[n-1] and w[0].
bool crosses_seam(std::size_t length, const RewriteMove& m);
std::vector<RewriteMove> applicable_moves(const CircWord& w);

struct Orbit {
  std::vector<CircWord> members;  // sorted
  bool truncated = false;
};

/// Breadth-first closure of w under all moves in both directions, skipping
/// states with a digit above digit_cap. Stops and flags truncation once more
/// than size_cap states have been seen.
Orbit orbit(const CircWord& w, Digit digit_cap, std::size_t size_cap);

std::vector<CircWord> admissible_members(const Orbit& o);

struct OracleLimits {
  Digit cap_ceiling = 32;
  std::size_t size_cap = 5'000'000;
};

struct OracleResult {
  std::vector<CircWord> admissible;  // sorted
  Digit digit_cap = 0;               // cap of the final search
  bool truncated = false;
};

/// Admissible members of the orbit of w, searched with digit cap
/// max(2, max digit) + 1 and doubled until one is found or the ceiling is hit.
OracleResult admissible_equivalents(const CircWord& w, const OracleLimits& limits = {});

/// Oracle normal form: the unique admissible member, or (01)^l when the orbit
/// holds both (01)^l and (10)^l. Returns nullopt when the search finds nothing.
std::optional<CircWord> oracle_normal_form(const CircWord& w, const OracleLimits& limits = {});

struct NormalizeOptions {
  std::size_t max_steps = 50'000'000;
};

/// The admissible form of w. Even length and a nonzero word are required.
/// Both identity spellings (01)^l and (10)^l come back as (01)^l.
CircWord normalize(const CircWord& w, const NormalizeOptions& options = {});

bool equivalent(const CircWord& u, const CircWord& v);

/// (01)^l, the canonical spelling of the identity class.
CircWord canonical_identity(std::size_t length);
bool is_identity_spelling(const CircWord& w);

}  // namespace circfib

#endif  // CIRCFIB_REWRITE_HPP
