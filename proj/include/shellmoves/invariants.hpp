#pragma once

// Chord indices, n-writhes, writhe polynomial, linking numbers, linking class,
// and the S-invariant profile of a knot or 2-component link.

#include "shellmoves/algebra.hpp"
#include "shellmoves/diagram.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>

namespace shellmoves {

using WritheTable = std::map<long, long>;  // n -> J_n, zero entries dropped

/// Sum of endpoint signs strictly inside the arc from γ's initial to its
/// terminal endpoint (μ = 1).
long knot_index(const GaussDiagram& g, ChordId gamma);

struct KnotWrithes {
  WritheTable n_writhes;  // n != 0
  LaurentPoly writhe_poly;
  long odd_writhe = 0;
};

KnotWrithes writhe_polynomial(const GaussDiagram& g);

/// Ind' of a self-chord: the same arc sum on its own circle.
long self_index(const GaussDiagram& g, ChordId gamma);

/// Index of a nonself-chord after surgery along gamma0; 0 when gamma == gamma0.
long nonself_index(const GaussDiagram& g, ChordId gamma, ChordId gamma0);

struct LinkingData {
  long lk12 = 0;
  long lk21 = 0;
  long lambda = 0;
  friend bool operator==(const LinkingData&, const LinkingData&) = default;
};

LinkingData linking_data(const GaussDiagram& g);

/// Diagram-level J_n(K_1; L) and J_n(K_2; L) for all n != 0, including the
/// slots that are not S-invariant.
struct LinkWrithes {
  WritheTable j1;
  WritheTable j2;
};

LinkWrithes link_writhes(const GaussDiagram& g);

/// F_12(t; γ0) and F_21(t; γ0).
std::pair<LaurentPoly, LaurentPoly> index_polynomials(const GaussDiagram& g, ChordId gamma0);

/// Class of (F_12, F_21) in Γ(|λ|), using the lowest-id nonself-chord as γ0.
LinkingClass linking_class(const GaussDiagram& g);

/// Index sets dropped from the profile for a link with the given λ.
bool excluded_slot_1(long n, long lambda);
bool excluded_slot_2(long n, long lambda);

/// J_1(K_1) + J_1(K_2) when λ = 0; adds J_{-λ+1}(K_1) + J_{λ+1}(K_2) when |λ| >= 2.
std::optional<long> shell_sum(const LinkWrithes& w, long lambda);

struct KnotProfile {
  LaurentPoly writhe_poly;
  WritheTable n_writhes;
  long odd_writhe = 0;
  friend bool operator==(const KnotProfile&, const KnotProfile&) = default;
};

struct LinkProfile {
  long lk12 = 0;
  long lk21 = 0;
  long lambda = 0;
  WritheTable jn1;  // invariant slots only
  WritheTable jn2;
  std::optional<long> shell_sum;
  LinkingClass linking_class;
  std::optional<Integer> f_prime;  // exact for λ = 0, residue mod |λ| for |λ| >= 2
  friend bool operator==(const LinkProfile&, const LinkProfile&) = default;
};

using InvariantProfile = std::variant<KnotProfile, LinkProfile>;

InvariantProfile profile(const GaussDiagram& g);
KnotProfile knot_profile(const GaussDiagram& g);
LinkProfile link_profile(const GaussDiagram& g);

/// Key-sorted `key: value` lines.
std::string format_profile(const InvariantProfile& p);
/// Same content as a JSON object.
std::string profile_json(const InvariantProfile& p);

}  // namespace shellmoves
