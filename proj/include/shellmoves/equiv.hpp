#pragma once

// S-equivalence decisions, realization of invariant targets, and a bounded
// breadth-first search over the move graph.

#include "shellmoves/algebra.hpp"
#include "shellmoves/diagram.hpp"
#include "shellmoves/invariants.hpp"
#include "shellmoves/moves.hpp"
#include "shellmoves/normal_form.hpp"

#include <optional>
#include <string>
#include <vector>

namespace shellmoves {

struct Verdict {
  bool equivalent = false;
  std::string reason;
};

Verdict s_equivalent(const GaussDiagram& g, const GaussDiagram& h);
/// Same decision on precomputed profiles.
Verdict s_equivalent(const InvariantProfile& p, const InvariantProfile& q);

/// A knot whose writhe polynomial is f; requires f(1) = f'(1) = 0.
GaussDiagram realize_knot(const LaurentPoly& f);

/// Targets for a 2-component link.
///
///   λ = 0:  a, b over n != 0 (slot 1 included); c, d over all m (F = [Σ c t^m, Σ d t^m])
///   λ = 1:  a over n != 0, -1; b over n != 0, 1; c = {0: c}, d = {0: c - 1}
///   λ >= 2: a over n != 0, -λ; b over n != 0, λ; c, d over 0..λ-1 (F = [Σ c t^m, Σ d t^-m])
struct LinkTarget {
  long lambda = 0;
  Coeffs a;
  Coeffs b;
  Coeffs c;
  Coeffs d;
  std::optional<long> shell_sum;
};

/// Throws ConstraintViolated naming clause (a) or (b), BadSupport, or NegativeLambda.
GaussDiagram realize_link(const LinkTarget& t);

/// Checks (a)/(b) only; returns the violated clause, or nothing.
std::optional<std::string> violated_clause(const LinkTarget& t);

/// The relation between J-sums, shell sum and F' (exact for λ = 0, mod |λ|
/// for |λ| >= 2); vacuous for |λ| = 1.
bool check_consistency(const LinkProfile& p);

/// Breadth-first search from both ends over diagrams up to isomorphism.
/// Returns a trace turning g into a diagram isomorphic to h, or nothing if none
/// exists within `max_depth` moves. Throws BudgetExceeded past `node_budget`
/// stored diagrams.
std::optional<std::vector<MoveSite>> bfs_witness(const GaussDiagram& g, const GaussDiagram& h, int max_depth,
                                                 std::size_t chord_cap, std::size_t node_budget = 200000);

}  // namespace shellmoves
