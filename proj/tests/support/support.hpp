#pragma once

// Random generators and brute-force oracles shared by the unit and acceptance tests.
// The oracles recompute indices and Γ-classes from scratch without calling the
// library's invariant code.

#include "shellmoves/algebra.hpp"
#include "shellmoves/diagram.hpp"
#include "shellmoves/normal_form.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace support {

using namespace shellmoves;

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Sign random_sign(std::mt19937_64& rng) { return uniform(rng, 0, 1) ? Sign::plus : Sign::minus; }

/// Random signs, random placement of every endpoint on a random circle, random cyclic order.
inline GaussDiagram random_diagram(std::mt19937_64& rng, int mu, int chords) {
  GaussDiagram g(mu);
  std::vector<std::vector<Endpoint>> words(static_cast<std::size_t>(mu));
  for (int i = 0; i < chords; ++i) {
    const ChordId id = g.add_chord(random_sign(rng));
    for (EndKind k : {EndKind::initial, EndKind::terminal})
      words[static_cast<std::size_t>(uniform(rng, 0, mu - 1))].push_back({id, k});
  }
  for (int c = 0; c < mu; ++c) {
    auto& w = words[static_cast<std::size_t>(c)];
    std::shuffle(w.begin(), w.end(), rng);
    g.mutable_circle(c) = w;
  }
  return g;
}

// --- oracles -------------------------------------------------------------

inline int oracle_esign(const GaussDiagram& g, const Endpoint& e) {
  const int s = g.chord(e.chord).sign == Sign::plus ? 1 : -1;
  return e.kind == EndKind::initial ? -s : s;
}

inline std::size_t position(const std::vector<Endpoint>& w, ChordId id, EndKind k) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i].chord == id && w[i].kind == k) return i;
  return w.size();
}

/// Sum of endpoint signs strictly after the tail and before the head of `id`
/// on the cyclic word `w`.
inline long arc_sum(const GaussDiagram& g, const std::vector<Endpoint>& w, ChordId id) {
  const std::size_t n = w.size();
  long s = 0;
  for (std::size_t i = (position(w, id, EndKind::initial) + 1) % n; !(w[i].chord == id && w[i].kind == EndKind::terminal);
       i = (i + 1) % n)
    s += oracle_esign(g, w[i]);
  return s;
}

/// J_n for every n (n = 0 included) of a self-chord table on one circle.
inline std::map<long, long> oracle_self_writhes(const GaussDiagram& g, int circle) {
  std::map<long, long> j;
  for (const auto& [id, ch] : g.chords()) {
    const auto& w = g.circle(circle);
    if (position(w, id, EndKind::initial) == w.size() || position(w, id, EndKind::terminal) == w.size()) continue;
    j[arc_sum(g, w, id)] += ch.sign == Sign::plus ? 1 : -1;
  }
  std::erase_if(j, [](const auto& kv) { return kv.second == 0; });
  return j;
}

/// The single word obtained by cutting both circles at γ0 and joining them.
inline std::vector<Endpoint> oracle_surgery_word(const GaussDiagram& g, ChordId gamma0) {
  std::vector<Endpoint> merged;
  for (int c = 0; c < 2; ++c) {
    const auto& w = g.circle(c);
    std::size_t at = 0;
    while (w[at].chord != gamma0) ++at;
    for (std::size_t k = 1; k < w.size(); ++k) merged.push_back(w[(at + k) % w.size()]);
  }
  return merged;
}

/// Index of every nonself-chord after surgery along γ0, γ0 itself at 0.
inline std::pair<std::map<long, long>, std::map<long, long>> oracle_nonself_tables(const GaussDiagram& g,
                                                                                  ChordId gamma0) {
  const auto w = oracle_surgery_word(g, gamma0);
  std::map<long, long> t12, t21;
  for (const auto& [id, ch] : g.chords()) {
    const auto [ci, ct] = g.chord_type(id);
    if (ci == ct) continue;
    const long n = id == gamma0 ? 0 : arc_sum(g, w, id);
    (ci == 0 ? t12 : t21)[n] += ch.sign == Sign::plus ? 1 : -1;
  }
  std::erase_if(t12, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(t21, [](const auto& kv) { return kv.second == 0; });
  return {t12, t21};
}

inline LaurentPoly poly_of(const std::map<long, long>& table) {
  LaurentPoly p;
  for (const auto& [n, k] : table) p.add_term(n, k);
  return p;
}

/// Coefficients of p folded into Z/s (s >= 1).
inline std::vector<long> folded(const LaurentPoly& p, long s) {
  std::vector<long> v(static_cast<std::size_t>(s), 0);
  for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(((e % s) + s) % s)] += c.convert_to<long>();
  return v;
}

/// Brute-force membership of (f1, g1) and (f2, g2) in the same class of Γ(s), s >= 1.
inline bool oracle_same_class(long s, const LaurentPoly& f1, const LaurentPoly& g1, const LaurentPoly& f2,
                              const LaurentPoly& g2) {
  for (long k = 0; k < s; ++k)
    if (folded(lp_twist(f1, k), s) == folded(f2, s) && folded(lp_twist(g1, -k), s) == folded(g2, s)) return true;
  return false;
}

/// Γ(0): equal up to one simultaneous shift.
inline bool oracle_same_class_free(const LaurentPoly& f1, const LaurentPoly& g1, const LaurentPoly& f2,
                                   const LaurentPoly& g2) {
  for (long k = -64; k <= 64; ++k)
    if (lp_twist(f1, k) == f2 && lp_twist(g1, -k) == g2) return true;
  return false;
}

/// Exponent vectors (f, g) of t^k F_12 and t^-k F_21 for F = [Σ c_m t^m, Σ d_m t^-m] in Γ(s).
inline std::vector<long> twisted_vectors(const std::vector<long>& c, const std::vector<long>& d, long k) {
  const long s = static_cast<long>(c.size());
  auto at = [s](const std::vector<long>& v, long i) { return v[static_cast<std::size_t>(((i % s) + s) % s)]; };
  std::vector<long> out;
  for (long e = 0; e < s; ++e) out.push_back(at(c, e - k));
  for (long e = 0; e < s; ++e) out.push_back(at(d, -e - k));
  return out;
}

// --- random snail forms ---------------------------------------------------

inline Coeffs random_coeffs(std::mt19937_64& rng, long lo, long hi, int terms, long mag, auto excluded) {
  Coeffs out;
  for (int i = 0; i < terms; ++i) {
    const long n = uniform(rng, lo, hi);
    if (excluded(n)) continue;
    out[n] += uniform(rng, -mag, mag);
  }
  return normalized(out);
}

/// Coefficient vector (length s) of a standard-layout map.
inline std::vector<long> dense(const Coeffs& m, long s) {
  std::vector<long> v(static_cast<std::size_t>(s), 0);
  for (const auto& [i, k] : m) v[static_cast<std::size_t>(i)] = k;
  return v;
}

inline Coeffs sparse(const std::vector<long>& v) {
  Coeffs m;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) m[static_cast<long>(i)] = v[i];
  return m;
}

/// A random SnailForm already in canonical position for the given λ >= 0.
inline SnailForm random_canonical_form(std::mt19937_64& rng, long lambda) {
  SnailForm sf;
  sf.mu = 2;
  sf.a = random_coeffs(rng, -4, 4, 2, 1, [&](long n) { return n == 0 || n == 1 || n == -lambda || n == 1 - lambda; });
  sf.b = random_coeffs(rng, -4, 4, 2, 1, [&](long n) { return n == 0 || n == 1 || n == lambda || n == 1 + lambda; });
  if (lambda == 0) {
    sf.layout = NonselfLayout::general;
    sf.c = random_coeffs(rng, 0, 3, 2, 2, [](long) { return false; });
    sf.d = random_coeffs(rng, -2, 3, 2, 2, [](long) { return false; });
    long diff = 0;
    for (const auto& [m, k] : sf.c) diff += k;
    for (const auto& [m, k] : sf.d) diff -= k;
    sf.d[uniform(rng, -1, 2)] += diff;
    sf.d = normalized(sf.d);
    // canonical position: the first nonzero polynomial starts at exponent 0
    const Coeffs& lead = sf.c.empty() ? sf.d : sf.c;
    if (!lead.empty()) {
      // (t^-k f, t^k g) with k the lead exponent; g alone is shifted down when f = 0
      const long shift = lead.begin()->first;
      const long dshift = sf.c.empty() ? -shift : shift;
      Coeffs c, d;
      for (const auto& [m, k] : sf.c) c[m - shift] = k;
      for (const auto& [m, k] : sf.d) d[m + dshift] = k;
      sf.c = c;
      sf.d = d;
    }
    return sf;
  }
  sf.layout = NonselfLayout::standard;
  if (lambda == 1) {
    const long c0 = uniform(rng, -2, 3);
    sf.c = normalized({{0, c0}});
    sf.d = normalized({{0, c0 - 1}});
    return sf;
  }
  std::vector<long> c(static_cast<std::size_t>(lambda)), d(static_cast<std::size_t>(lambda));
  for (auto& x : c) x = uniform(rng, -1, 2);
  for (auto& x : d) x = uniform(rng, -1, 1);
  long diff = lambda;
  for (long x : c) diff -= x;
  for (long x : d) diff += x;
  c[static_cast<std::size_t>(uniform(rng, 0, lambda - 1))] += diff;
  // twist into the lexicographically least exponent vectors
  long best = 0;
  for (long k = 1; k < lambda; ++k)
    if (twisted_vectors(c, d, k) < twisted_vectors(c, d, best)) best = k;
  const auto r = twisted_vectors(c, d, best);
  std::vector<long> c2(r.begin(), r.begin() + lambda), d2(static_cast<std::size_t>(lambda));
  for (long m = 0; m < lambda; ++m) d2[static_cast<std::size_t>(m)] = r[static_cast<std::size_t>(lambda + (lambda - m) % lambda)];
  sf.c = sparse(c2);
  sf.d = sparse(d2);
  sf.p = uniform(rng, -3, 3);
  return sf;
}

// --- small diagram pool ---------------------------------------------------

/// All diagrams with `mu` circles and exactly `chords` chords, one per isomorphism class.
inline std::vector<GaussDiagram> all_diagrams(int mu, int chords) {
  std::vector<GaussDiagram> out;
  std::set<std::string> keys;
  const int ends = 2 * chords;
  // assign each endpoint token 0..ends-1 to a circle, then order each circle
  std::vector<int> circle_of(static_cast<std::size_t>(ends), 0);
  const long assignments = mu == 1 ? 1 : (1L << ends);
  for (long mask = 0; mask < assignments; ++mask) {
    for (int t = 0; t < ends; ++t) circle_of[static_cast<std::size_t>(t)] = mu == 1 ? 0 : static_cast<int>(mask >> t & 1);
    std::vector<std::vector<int>> words(static_cast<std::size_t>(mu));
    for (int t = 0; t < ends; ++t) words[static_cast<std::size_t>(circle_of[static_cast<std::size_t>(t)])].push_back(t);
    std::vector<std::vector<int>> perm0 = words;
    // iterate over all orderings of circle 0 and circle 1
    auto& w0 = perm0[0];
    std::sort(w0.begin(), w0.end());
    do {
      std::vector<int> w1 = mu == 2 ? perm0[1] : std::vector<int>{};
      std::sort(w1.begin(), w1.end());
      do {
        for (long signs = 0; signs < (1L << chords); ++signs) {
          GaussDiagram g(mu);
          for (int i = 0; i < chords; ++i) g.add_chord(signs >> i & 1 ? Sign::minus : Sign::plus);
          auto tok = [](int t) { return Endpoint{ChordId(t / 2), t % 2 ? EndKind::terminal : EndKind::initial}; };
          for (int t : w0) g.mutable_circle(0).push_back(tok(t));
          if (mu == 2)
            for (int t : w1) g.mutable_circle(1).push_back(tok(t));
          if (keys.insert(canonical_key(g)).second) out.push_back(g);
        }
      } while (std::next_permutation(w1.begin(), w1.end()));
    } while (std::next_permutation(w0.begin(), w0.end()));
  }
  return out;
}

}  // namespace support
