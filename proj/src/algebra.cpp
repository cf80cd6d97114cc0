#include "shellmoves/algebra.hpp"

#include "shellmoves/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace shellmoves {

LaurentPoly::LaurentPoly(const Terms& terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const Exponent, Integer>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, Exponent e) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

Integer LaurentPoly::coeff(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<Exponent> LaurentPoly::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<Exponent> LaurentPoly::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::add_term(Exponent e, const Integer& c) {
  if (c == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  LaurentPoly product;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) product.add_term(e1 + e2, c1 * c2);
  *this = std::move(product);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw Error(Errc::syntax, "empty polynomial");

  LaurentPoly out;
  std::size_t i = 0;
  auto read_digits = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw Error(Errc::syntax, "expected '+' or '-' in polynomial '" + std::string(text) + "'");
    }
    std::string digits = read_digits(i);
    Integer c = digits.empty() ? Integer(1) : Integer(digits);
    Exponent e = 0;
    bool has_t = false;
    if (i < s.size() && s[i] == '*') {
      if (digits.empty()) throw Error(Errc::syntax, "dangling '*' in polynomial");
      ++i;
      if (i >= s.size() || s[i] != 't') throw Error(Errc::syntax, "expected 't' after '*'");
    }
    if (i < s.size() && s[i] == 't') {
      has_t = true;
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
          esign = s[i] == '-' ? -1 : 1;
          ++i;
        }
        std::string ed = read_digits(i);
        if (ed.empty()) throw Error(Errc::syntax, "missing exponent in polynomial");
        e = esign * std::stoll(ed);
      }
    }
    if (digits.empty() && !has_t) throw Error(Errc::syntax, "empty term in polynomial '" + std::string(text) + "'");
    out.add_term(e, sign * c);
  }
  return out;
}

Integer lp_eval_at_one(const LaurentPoly& p) {
  Integer sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c;
  return sum;
}

Integer lp_derivative_at_one(const LaurentPoly& p) {
  Integer sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c * e;
  return sum;
}

LaurentPoly lp_twist(const LaurentPoly& p, Exponent k) {
  LaurentPoly::Terms shifted;
  for (const auto& [e, c] : p.terms()) shifted.emplace(e + k, c);
  return LaurentPoly(shifted);
}

namespace {

Exponent floor_mod(Exponent a, Exponent m) {
  Exponent r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<Integer> coefficient_vector(const LaurentPoly& reduced, Exponent s) {
  std::vector<Integer> v(static_cast<std::size_t>(s));
  for (const auto& [e, c] : reduced.terms()) v[static_cast<std::size_t>(e)] = c;
  return v;
}

LaurentPoly from_vector(const std::vector<Integer>& v) {
  LaurentPoly p;
  for (std::size_t i = 0; i < v.size(); ++i) p.add_term(static_cast<Exponent>(i), v[i]);
  return p;
}

// (t^k f)[i] = f[i - k]
std::vector<Integer> rotate_by(const std::vector<Integer>& v, Exponent k) {
  const auto s = static_cast<Exponent>(v.size());
  std::vector<Integer> out(v.size());
  for (Exponent i = 0; i < s; ++i) out[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(floor_mod(i - k, s))];
  return out;
}

}  // namespace

LaurentPoly lp_reduce(const LaurentPoly& p, Exponent s) {
  if (s < 1) throw Error(Errc::bad_support, "reduction modulus must be positive");
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term(floor_mod(e, s), c);
  return out;
}

Integer mod_floor(const Integer& value, const Integer& m) {
  Integer r = value % m;
  if (r < 0) r += m;
  return r;
}

LinkingClass gamma_class(Exponent s, const LaurentPoly& f, const LaurentPoly& g) {
  if (s < 0) throw Error(Errc::bad_support, "Γ(s) requires s >= 0");
  LinkingClass out;
  out.modulus_ = s;
  if (s == 0) {
    Exponent k = 0;
    if (!f.is_zero())
      k = -*f.min_exponent();
    else if (!g.is_zero())
      k = *g.min_exponent();
    out.first_ = lp_twist(f, k);
    out.second_ = lp_twist(g, -k);
    return out;
  }
  if (s == 1) {
    out.first_ = LaurentPoly::constant(lp_eval_at_one(f));
    out.second_ = LaurentPoly::constant(lp_eval_at_one(g));
    return out;
  }
  const auto fv = coefficient_vector(lp_reduce(f, s), s);
  const auto gv = coefficient_vector(lp_reduce(g, s), s);
  std::vector<Integer> best;
  for (Exponent k = 0; k < s; ++k) {
    auto cand = rotate_by(fv, k);
    auto gk = rotate_by(gv, -k);
    cand.insert(cand.end(), gk.begin(), gk.end());
    if (best.empty() || std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end()))
      best = std::move(cand);
  }
  const auto half = static_cast<std::ptrdiff_t>(s);
  out.first_ = from_vector(std::vector<Integer>(best.begin(), best.begin() + half));
  out.second_ = from_vector(std::vector<Integer>(best.begin() + half, best.end()));
  return out;
}

Integer LinkingClass::derivative_sum() const {
  return lp_derivative_at_one(first_) + lp_derivative_at_one(second_);
}

std::vector<Integer> LinkingClass::first_vector() const {
  if (modulus_ < 1) throw Error(Errc::bad_support, "coefficient vectors need modulus >= 1");
  return modulus_ == 1 ? std::vector<Integer>{lp_eval_at_one(first_)} : coefficient_vector(first_, modulus_);
}

std::vector<Integer> LinkingClass::second_vector() const {
  if (modulus_ < 1) throw Error(Errc::bad_support, "coefficient vectors need modulus >= 1");
  return modulus_ == 1 ? std::vector<Integer>{lp_eval_at_one(second_)} : coefficient_vector(second_, modulus_);
}

std::string LinkingClass::to_string() const {
  std::ostringstream os;
  os << '[' << first_.to_string() << ", " << second_.to_string() << "] in Gamma(" << modulus_ << ')';
  return os.str();
}

}  // namespace shellmoves
