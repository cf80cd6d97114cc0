#pragma once

// Integer Laurent polynomials and the twisted quotient Γ(s) used by the
// linking class of a two-component link.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shellmoves {

using Integer = boost::multiprecision::cpp_int;
using Exponent = std::int64_t;

/// Sparse element of Z[t, t^-1]. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Terms& terms);
  LaurentPoly(std::initializer_list<std::pair<const Exponent, Integer>> terms);

  static LaurentPoly constant(const Integer& c) { return monomial(c, 0); }
  static LaurentPoly monomial(const Integer& c, Exponent e);

  /// Parses the textual form produced by to_string(), e.g. "t^-1 - 2*t + t^3".
  static LaurentPoly parse(std::string_view text);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coeff(Exponent e) const;
  std::optional<Exponent> min_exponent() const;
  std::optional<Exponent> max_exponent() const;

  LaurentPoly& add_term(Exponent e, const Integer& c);
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs *= rhs; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Ascending exponents, `c*t^e` terms joined by ` + ` / ` - `; zero prints as "0".
  std::string to_string() const;

 private:
  Terms terms_;
};

Integer lp_eval_at_one(const LaurentPoly& p);

/// Value of the formal derivative at t = 1, i.e. sum of e * coeff(e).
Integer lp_derivative_at_one(const LaurentPoly& p);

/// Multiplication by t^k.
LaurentPoly lp_twist(const LaurentPoly& p, Exponent k);

/// Reduction modulo t^s - 1 (s >= 1): every exponent folded into {0, ..., s-1}.
LaurentPoly lp_reduce(const LaurentPoly& p, Exponent s);

/// An element of Γ(s): pairs (f, g) of polynomials modulo t^s - 1, up to the
/// simultaneous twist (f, g) -> (t^k f, t^-k g). Always held in canonical position,
/// so two classes are equal iff their stored representatives are equal.
class LinkingClass {
 public:
  LinkingClass() = default;

  Exponent modulus() const noexcept { return modulus_; }
  const LaurentPoly& first() const noexcept { return first_; }
  const LaurentPoly& second() const noexcept { return second_; }

  /// f'(1) + g'(1) of the stored representative.
  Integer derivative_sum() const;

  /// Length-s coefficient vectors of the representative (s >= 1).
  std::vector<Integer> first_vector() const;
  std::vector<Integer> second_vector() const;

  friend bool operator==(const LinkingClass&, const LinkingClass&) = default;

  std::string to_string() const;

 private:
  friend LinkingClass gamma_class(Exponent s, const LaurentPoly& f, const LaurentPoly& g);

  Exponent modulus_ = 0;
  LaurentPoly first_;
  LaurentPoly second_;
};

/// Canonical element of Γ(s) represented by (f, g).
///
/// s = 0: shift so that f (or g when f = 0) has minimum exponent 0.
/// s = 1: the integer pair (f(1), g(1)).
/// s >= 2: reduce both mod t^s - 1 and pick the twist k in [0, s) whose
/// concatenated coefficient vectors (t^k f, t^-k g) are lexicographically least.
LinkingClass gamma_class(Exponent s, const LaurentPoly& f, const LaurentPoly& g);

/// Floor-style residue in [0, m) for m > 0.
Integer mod_floor(const Integer& value, const Integer& m);

}  // namespace shellmoves
