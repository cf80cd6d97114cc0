#pragma once

// Snail encodings and snail normal forms of knots and 2-component links.

#include "shellmoves/diagram.hpp"
#include "shellmoves/invariants.hpp"

#include <map>
#include <string>

namespace shellmoves {

enum class SnailKind { self, nonself_12, nonself_21 };

/// A single εS(n) (one circle) or εS_ij(n) (two circles) as a diagram.
///
///   self, ε = +    g< s1< .. sk< g> sk> .. s1>
///   self, ε = -    g< s1> .. sk> g> sk< .. s1<
///   nonself        shells sit on the source circle around g<
///
/// with k = |n| shells of sign -ε·sgn(n).
GaussDiagram encode_snail(SnailKind kind, Sign eps, long n);

/// How the nonself snails of a link form are indexed.
///   general:  c_m S_12(m),   d_m S_21(m)
///   standard: c_m S_12(p+m), d_m S_21(-p-m)
enum class NonselfLayout { general, standard };

using Coeffs = std::map<long, long>;  // zero entries are dropped

struct SnailForm {
  int mu = 1;
  Coeffs a;
  Coeffs b;
  Coeffs c;
  Coeffs d;
  long p = 0;
  NonselfLayout layout = NonselfLayout::general;

  friend bool operator==(const SnailForm&, const SnailForm&) = default;
};

/// Σ a_n S(n) in ascending n; a_0 and a_1 must vanish.
GaussDiagram build_knot_form(const Coeffs& a);

/// Type-1 snails, type-2 snails, then the nonself snails laid out in parallel.
GaussDiagram build_link_form(const SnailForm& sf, long lambda);

/// Dispatches on sf.mu.
GaussDiagram build_form(const SnailForm& sf, long lambda = 0);

/// The canonical snail form determined by a profile (λ >= 0 for links).
SnailForm canonical_form(const InvariantProfile& pr);

/// `a: {n:k,...} b: {...} c: [...] d: [...] p: <int>`; maps for λ = 0.
std::string format_snail_form(const SnailForm& sf, long lambda);

/// Drops zero entries.
Coeffs normalized(const Coeffs& m);

}  // namespace shellmoves
