#include "shellmoves/normal_form.hpp"

#include "shellmoves/errors.hpp"

#include <sstream>
#include <vector>

namespace shellmoves {

namespace {

using Word = std::vector<Endpoint>;

Sign shell_sign(Sign eps, long n) { return n > 0 ? -eps : eps; }

long magnitude(long n) { return n < 0 ? -n : n; }

// g< near g> far, contiguous.
Word self_snail(GaussDiagram& g, Sign eps, long n) {
  const ChordId main = g.add_chord(eps);
  std::vector<ChordId> shells;
  for (long i = 0; i < magnitude(n); ++i) shells.push_back(g.add_chord(shell_sign(eps, n)));
  const EndKind near = eps == Sign::plus ? EndKind::initial : EndKind::terminal;
  Word w{{main, EndKind::initial}};
  for (ChordId s : shells) w.push_back({s, near});
  w.push_back({main, EndKind::terminal});
  for (auto it = shells.rbegin(); it != shells.rend(); ++it) w.push_back({*it, opposite(near)});
  return w;
}

struct NonselfSnail {
  Word source;  // shells wrapped around the initial endpoint
  Endpoint head;
};

NonselfSnail nonself_snail(GaussDiagram& g, Sign eps, long n) {
  const ChordId main = g.add_chord(eps);
  std::vector<ChordId> shells;
  for (long i = 0; i < magnitude(n); ++i) shells.push_back(g.add_chord(shell_sign(eps, n)));
  // The initial endpoint has sign -ε, so for ε = + the shells open with their terminal.
  const EndKind outer = eps == Sign::plus ? EndKind::terminal : EndKind::initial;
  NonselfSnail s;
  for (ChordId c : shells) s.source.push_back({c, outer});
  s.source.push_back({main, EndKind::initial});
  for (auto it = shells.rbegin(); it != shells.rend(); ++it) s.source.push_back({*it, opposite(outer)});
  s.head = {main, EndKind::terminal};
  return s;
}

void append(Word& dst, const Word& src) { dst.insert(dst.end(), src.begin(), src.end()); }

Sign sign_of_count(long k) { return k < 0 ? Sign::minus : Sign::plus; }

[[noreturn]] void malformed(const std::string& why) { throw Error(Errc::malformed_snail_form, why); }

long weighted(const Coeffs& m) {
  long s = 0;
  for (const auto& [n, k] : m) s += n * k;
  return s;
}

long total(const Coeffs& m) {
  long s = 0;
  for (const auto& [n, k] : m) s += k;
  return s;
}

}  // namespace

Coeffs normalized(const Coeffs& m) {
  Coeffs out;
  for (const auto& [n, k] : m)
    if (k != 0) out[n] = k;
  return out;
}

GaussDiagram encode_snail(SnailKind kind, Sign eps, long n) {
  if (kind == SnailKind::self) {
    GaussDiagram g(1);
    g.mutable_circle(0) = self_snail(g, eps, n);
    return g;
  }
  GaussDiagram g(2);
  const int src = kind == SnailKind::nonself_12 ? 0 : 1;
  NonselfSnail s = nonself_snail(g, eps, n);
  g.mutable_circle(src) = s.source;
  g.mutable_circle(1 - src) = {s.head};
  return g;
}

GaussDiagram build_knot_form(const Coeffs& a) {
  for (long bad : {0L, 1L}) {
    auto it = a.find(bad);
    if (it != a.end() && it->second != 0)
      throw Error(Errc::bad_support, "a_" + std::to_string(bad) + " must be zero in a knot form");
  }
  GaussDiagram g(1);
  Word w;
  for (const auto& [n, k] : a)
    for (long i = 0; i < magnitude(k); ++i) append(w, self_snail(g, sign_of_count(k), n));
  g.mutable_circle(0) = std::move(w);
  return g;
}

GaussDiagram build_link_form(const SnailForm& sf, long lambda) {
  if (sf.mu != 2) malformed("link form needs mu = 2");
  if (lambda < 0) malformed("lambda must be nonnegative");
  for (const auto& [n, k] : sf.a)
    if (k != 0 && excluded_slot_1(n, lambda)) malformed("a_" + std::to_string(n) + " lies in an excluded slot");
  for (const auto& [n, k] : sf.b)
    if (k != 0 && excluded_slot_2(n, lambda)) malformed("b_" + std::to_string(n) + " lies in an excluded slot");
  if (total(sf.c) - total(sf.d) != lambda) malformed("sum(c) - sum(d) must equal lambda");
  if (sf.layout == NonselfLayout::standard) {
    if (lambda < 1) malformed("standard layout needs lambda >= 1");
    for (const Coeffs* m : {&sf.c, &sf.d})
      for (const auto& [i, k] : *m)
        if (k != 0 && (i < 0 || i >= lambda)) malformed("nonself index " + std::to_string(i) + " outside 0..lambda-1");
  } else if (sf.p != 0) {
    malformed("p is only meaningful in the standard layout");
  }

  GaussDiagram g(2);
  Word c1, c2;
  for (const auto& [n, k] : sf.a)
    for (long i = 0; i < magnitude(k); ++i) append(c1, self_snail(g, sign_of_count(k), n));
  for (const auto& [n, k] : sf.b)
    for (long i = 0; i < magnitude(k); ++i) append(c2, self_snail(g, sign_of_count(k), n));

  const bool standard = sf.layout == NonselfLayout::standard;
  std::vector<std::pair<bool, NonselfSnail>> nonself;  // (from C1, snail)
  for (const auto& [m, k] : sf.c)
    for (long i = 0; i < magnitude(k); ++i)
      nonself.emplace_back(true, nonself_snail(g, sign_of_count(k), standard ? sf.p + m : m));
  for (const auto& [m, k] : sf.d)
    for (long i = 0; i < magnitude(k); ++i)
      nonself.emplace_back(false, nonself_snail(g, sign_of_count(k), standard ? -sf.p - m : m));

  for (const auto& [from1, s] : nonself) {
    if (from1)
      append(c1, s.source);
    else
      c1.push_back(s.head);
  }
  for (auto it = nonself.rbegin(); it != nonself.rend(); ++it) {
    if (it->first)
      c2.push_back(it->second.head);
    else
      append(c2, it->second.source);
  }
  g.mutable_circle(0) = std::move(c1);
  g.mutable_circle(1) = std::move(c2);
  return g;
}

GaussDiagram build_form(const SnailForm& sf, long lambda) {
  if (sf.mu == 1) return build_knot_form(sf.a);
  return build_link_form(sf, lambda);
}

SnailForm canonical_form(const InvariantProfile& pr) {
  if (const auto* k = std::get_if<KnotProfile>(&pr)) {
    SnailForm sf;
    sf.mu = 1;
    for (const auto& [n, j] : k->n_writhes)
      if (n != 0 && n != 1 && j != 0) sf.a[n] = j;
    return sf;
  }
  const auto& l = std::get<LinkProfile>(pr);
  if (l.lambda < 0) throw Error(Errc::negative_lambda, "swap the components before normalizing (lambda < 0)");
  SnailForm sf;
  sf.mu = 2;
  sf.a = normalized(l.jn1);
  sf.b = normalized(l.jn2);
  const long lambda = l.lambda;
  if (lambda == 0) {
    for (const auto& [e, c] : l.linking_class.first().terms()) sf.c[e] = static_cast<long>(c);
    for (const auto& [e, c] : l.linking_class.second().terms()) sf.d[e] = static_cast<long>(c);
    sf.layout = NonselfLayout::general;
    const Integer lhs = Integer(weighted(sf.a)) + weighted(sf.b) + l.shell_sum.value_or(0) + l.f_prime.value_or(0);
    if (lhs != 0) throw Error(Errc::inconsistent_profile, "J-sums, shell sum and F' do not cancel (lambda = 0)");
    return sf;
  }
  sf.layout = NonselfLayout::standard;
  if (lambda == 1) {
    if (l.lk12 != 0) sf.c[0] = l.lk12;
    if (l.lk21 != 0) sf.d[0] = l.lk21;
    return sf;
  }
  const auto fv = l.linking_class.first_vector();
  const auto gv = l.linking_class.second_vector();
  for (long m = 0; m < lambda; ++m) {
    const long cm = static_cast<long>(fv[static_cast<std::size_t>(m)]);
    const long dm = static_cast<long>(gv[static_cast<std::size_t>((lambda - m) % lambda)]);
    if (cm != 0) sf.c[m] = cm;
    if (dm != 0) sf.d[m] = dm;
  }
  if (!l.shell_sum) throw Error(Errc::inconsistent_profile, "missing shell sum");
  const long numerator = -*l.shell_sum - weighted(sf.a) - weighted(sf.b) - weighted(sf.c) + weighted(sf.d);
  if (numerator % lambda != 0)
    throw Error(Errc::inconsistent_profile, "shell sum is not compatible with the J-sums modulo lambda");
  sf.p = numerator / lambda;
  return sf;
}

namespace {

std::string map_text(const Coeffs& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [n, k] : m) {
    if (k == 0) continue;
    os << (first ? "" : ", ") << n << ':' << k;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string list_text(const Coeffs& m, long len) {
  std::ostringstream os;
  os << '[';
  for (long i = 0; i < len; ++i) {
    auto it = m.find(i);
    os << (i ? ", " : "") << (it == m.end() ? 0 : it->second);
  }
  os << ']';
  return os.str();
}

}  // namespace

std::string format_snail_form(const SnailForm& sf, long lambda) {
  std::ostringstream os;
  os << "a: " << map_text(sf.a);
  if (sf.mu == 1) return os.str();
  os << " b: " << map_text(sf.b);
  if (sf.layout == NonselfLayout::standard)
    os << " c: " << list_text(sf.c, lambda) << " d: " << list_text(sf.d, lambda);
  else
    os << " c: " << map_text(sf.c) << " d: " << map_text(sf.d);
  os << " p: " << sf.p;
  return os.str();
}

}  // namespace shellmoves
