#include "shellmoves/equiv.hpp"

#include "shellmoves/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace shellmoves {

namespace {

long at(const Coeffs& m, long n) {
  auto it = m.find(n);
  return it == m.end() ? 0 : it->second;
}

long total(const Coeffs& m) {
  long s = 0;
  for (const auto& [n, k] : m) s += k;
  return s;
}

long weighted(const Coeffs& m) {
  long s = 0;
  for (const auto& [n, k] : m) s += n * k;
  return s;
}

std::optional<std::string> first_difference(const WritheTable& x, const WritheTable& y, const char* name) {
  std::set<long> keys;
  for (const auto& [n, j] : x) keys.insert(n);
  for (const auto& [n, j] : y) keys.insert(n);
  for (long n : keys) {
    const long u = at(x, n), v = at(y, n);
    if (u != v) {
      std::ostringstream os;
      os << name << " differs at n=" << n << " (" << u << " vs " << v << ")";
      return os.str();
    }
  }
  return std::nullopt;
}

LinkProfile swapped(const LinkProfile& p) {
  LinkProfile q = p;
  q.lk12 = p.lk21;
  q.lk21 = p.lk12;
  q.lambda = -p.lambda;
  q.jn1 = p.jn2;
  q.jn2 = p.jn1;
  q.linking_class = gamma_class(p.linking_class.modulus(), p.linking_class.second(), p.linking_class.first());
  return q;
}

}  // namespace

Verdict s_equivalent(const InvariantProfile& p, const InvariantProfile& q) {
  if (p.index() != q.index()) throw Error(Errc::component_count_mismatch, "cannot compare a knot with a link");
  if (const auto* k = std::get_if<KnotProfile>(&p)) {
    const auto& k2 = std::get<KnotProfile>(q);
    if (k->writhe_poly == k2.writhe_poly) return {true, "all conditions met"};
    return {false, "writhe polynomial differs (" + k->writhe_poly.to_string() + " vs " + k2.writhe_poly.to_string() + ")"};
  }
  LinkProfile l1 = std::get<LinkProfile>(p);
  LinkProfile l2 = std::get<LinkProfile>(q);
  if (l1.lambda != l2.lambda)
    return {false, "lambda differs (" + std::to_string(l1.lambda) + " vs " + std::to_string(l2.lambda) + ")"};
  if (l1.lambda < 0) {
    l1 = swapped(l1);
    l2 = swapped(l2);
  }
  if (auto d = first_difference(l1.jn1, l2.jn1, "J_n(K_1)")) return {false, *d};
  if (auto d = first_difference(l1.jn2, l2.jn2, "J_n(K_2)")) return {false, *d};
  if (!(l1.linking_class == l2.linking_class))
    return {false, "linking class differs (" + l1.linking_class.to_string() + " vs " + l2.linking_class.to_string() + ")"};
  if (l1.lambda >= 2 && l1.shell_sum != l2.shell_sum)
    return {false, "shell sum J_1(K_1)+J_{1-lambda}(K_1)+J_1(K_2)+J_{1+lambda}(K_2) differs (" +
                       std::to_string(l1.shell_sum.value_or(0)) + " vs " + std::to_string(l2.shell_sum.value_or(0)) + ")"};
  return {true, "all conditions met"};
}

Verdict s_equivalent(const GaussDiagram& g, const GaussDiagram& h) {
  if (g.mu() != h.mu())
    throw Error(Errc::component_count_mismatch,
                std::to_string(g.mu()) + " circle(s) vs " + std::to_string(h.mu()) + " circle(s)");
  return s_equivalent(profile(g), profile(h));
}

GaussDiagram realize_knot(const LaurentPoly& f) {
  if (lp_eval_at_one(f) != 0) throw Error(Errc::not_realizable, "f(1) = " + lp_eval_at_one(f).str() + " is not 0");
  if (lp_derivative_at_one(f) != 0)
    throw Error(Errc::not_realizable, "f'(1) = " + lp_derivative_at_one(f).str() + " is not 0");
  Coeffs a;
  for (const auto& [e, c] : f.terms()) {
    if (e == 0 || e == 1) continue;
    if (c > Integer(1000000) || c < Integer(-1000000))
      throw Error(Errc::not_realizable, "coefficient of t^" + std::to_string(e) + " is too large to build");
    a[e] = static_cast<long>(c);
  }
  return build_knot_form(a);
}

// --- link realization ---------------------------------------------------------

namespace {

[[noreturn]] void bad_support(const std::string& what) { throw Error(Errc::bad_support, what); }

void check_supports(const LinkTarget& t) {
  const long l = t.lambda;
  for (const auto& [n, k] : t.a) {
    if (k == 0) continue;
    if (n == 0 || (l >= 1 && n == -l)) bad_support("a_" + std::to_string(n) + " is not a target slot");
  }
  for (const auto& [n, k] : t.b) {
    if (k == 0) continue;
    if (n == 0 || (l >= 1 && n == l)) bad_support("b_" + std::to_string(n) + " is not a target slot");
  }
  if (l >= 1) {
    for (const Coeffs* m : {&t.c, &t.d})
      for (const auto& [i, k] : *m)
        if (k != 0 && (i < 0 || i >= l)) bad_support("nonself coefficient index " + std::to_string(i) + " outside 0..lambda-1");
  }
}

Coeffs without(const Coeffs& m, std::initializer_list<long> drop) {
  Coeffs out;
  for (const auto& [n, k] : m) {
    if (k == 0) continue;
    if (std::find(drop.begin(), drop.end(), n) != drop.end()) continue;
    out[n] = k;
  }
  return out;
}

std::vector<Endpoint> endpoints(std::initializer_list<std::pair<ChordId, EndKind>> toks) {
  std::vector<Endpoint> out;
  for (const auto& [c, k] : toks) out.push_back({c, k});
  return out;
}

constexpr EndKind I = EndKind::initial;
constexpr EndKind T = EndKind::terminal;

// h< k< h> k>, both chords of sign s.
void gadget_pair(GaussDiagram& g, int circle, Sign s) {
  const ChordId h = g.add_chord(s), k = g.add_chord(s);
  auto w = endpoints({{h, I}, {k, I}, {h, T}, {k, T}});
  auto& word = g.mutable_circle(circle);
  word.insert(word.end(), w.begin(), w.end());
}

// h< k> h> k<, h negative and k positive.
void gadget_crossed(GaussDiagram& g, int circle) {
  const ChordId h = g.add_chord(Sign::minus), k = g.add_chord(Sign::plus);
  auto w = endpoints({{h, I}, {k, T}, {h, T}, {k, I}});
  auto& word = g.mutable_circle(circle);
  word.insert(word.end(), w.begin(), w.end());
}

// h< k< h> m> k> m<, h positive, k and m negative.
void gadget_triple(GaussDiagram& g, int circle) {
  const ChordId h = g.add_chord(Sign::plus), k = g.add_chord(Sign::minus), m = g.add_chord(Sign::minus);
  auto w = endpoints({{h, I}, {k, I}, {h, T}, {m, T}, {k, T}, {m, I}});
  auto& word = g.mutable_circle(circle);
  word.insert(word.end(), w.begin(), w.end());
}

void add_shells(GaussDiagram& g, Endpoint e, long count, Sign s) {
  for (long i = 0; i < count; ++i) {
    const ChordId sh = g.add_chord(s);
    const Location loc = g.locate(e);
    auto& word = g.mutable_circle(loc.circle);
    const bool positive = endpoint_sign(g, e) > 0;
    const Endpoint before{sh, positive ? I : T}, after{sh, positive ? T : I};
    word.insert(word.begin() + static_cast<std::ptrdiff_t>(loc.pos) + 1, after);
    word.insert(word.begin() + static_cast<std::ptrdiff_t>(loc.pos), before);
  }
}

// Moves x from J_1(K_1) to J_1(K_2) (λ = 0) or between the two shell sums
// (|λ| >= 2) by shelling both ends of one nonself-chord.
void transfer_shells(GaussDiagram& g, long x) {
  if (x == 0) return;
  std::optional<ChordId> gamma;
  for (const auto& [id, ch] : g.chords())
    if (!g.is_self_chord(id)) {
      gamma = id;
      break;
    }
  if (!gamma) {
    const ChordId p = g.add_chord(Sign::plus), q = g.add_chord(Sign::minus);
    auto& c1 = g.mutable_circle(0);
    c1.push_back({p, I});
    c1.push_back({q, I});
    auto& c2 = g.mutable_circle(1);
    c2.push_back({q, T});
    c2.push_back({p, T});
    gamma = p;
  }
  const Location li = g.initial_location(*gamma);
  const Endpoint on1{*gamma, li.circle == 0 ? I : T};
  const Endpoint on2{*gamma, li.circle == 0 ? T : I};
  const Sign s = x > 0 ? Sign::plus : Sign::minus;
  const long n = x > 0 ? x : -x;
  add_shells(g, on1, n, s);
  add_shells(g, on2, n, -s);
}

long slot(const WritheTable& t, long n) {
  auto it = t.find(n);
  return it == t.end() ? 0 : it->second;
}

}  // namespace

std::optional<std::string> violated_clause(const LinkTarget& t) {
  const long l = t.lambda;
  if (l == 0) {
    if (total(t.c) != total(t.d)) return "(a)";
    if (weighted(t.a) + weighted(t.b) + weighted(t.c) + weighted(t.d) != 0) return "(b)";
    if (t.shell_sum && *t.shell_sum != at(t.a, 1) + at(t.b, 1)) return "(shell sum)";
    return std::nullopt;
  }
  if (total(t.c) - total(t.d) != l) return "(a)";
  if (l == 1) {
    if (t.shell_sum) return "(shell sum)";
    return std::nullopt;
  }
  const long lhs = weighted(t.a) + weighted(t.b) + weighted(t.c) - weighted(t.d);
  if (lhs % l != 0) return "(b)";
  if (t.shell_sum && *t.shell_sum != at(t.a, 1) + at(t.a, 1 - l) + at(t.b, 1) + at(t.b, 1 + l)) return "(shell sum)";
  return std::nullopt;
}

GaussDiagram realize_link(const LinkTarget& t) {
  const long l = t.lambda;
  if (l < 0) throw Error(Errc::negative_lambda, "swap the components to get lambda >= 0");
  check_supports(t);
  if (auto clause = violated_clause(t)) {
    std::string what;
    if (*clause == "(a)")
      what = l == 1 ? "d_0 must equal c_0 - 1" : l == 0 ? "sum of c must equal sum of d" : "sum of c minus sum of d must equal lambda";
    else if (*clause == "(b)")
      what = l == 0 ? "weighted J, c and d sums must cancel" : "weighted J, c and d sums must vanish modulo lambda";
    else
      what = "shell sum disagrees with a and b";
    throw Error(Errc::constraint_violated, *clause + " " + what);
  }

  SnailForm sf;
  sf.mu = 2;
  sf.c = without(t.c, {});
  sf.d = without(t.d, {});
  if (l == 0) {
    sf.a = without(t.a, {0, 1});
    sf.b = without(t.b, {0, 1});
    sf.layout = NonselfLayout::general;
    GaussDiagram g = build_link_form(sf, 0);
    transfer_shells(g, at(t.a, 1) - slot(link_writhes(g).j1, 1));
    return g;
  }
  sf.layout = NonselfLayout::standard;
  if (l == 1) {
    sf.a = without(t.a, {0, 1, -1});
    sf.b = without(t.b, {0, 1, 2});
    GaussDiagram g = build_link_form(sf, 1);
    const LinkWrithes w = link_writhes(g);
    const long d1 = at(t.a, 1) - slot(w.j1, 1);
    const long d2 = at(t.b, 2) - slot(w.j2, 2);
    for (long i = 0; i < (d1 < 0 ? -d1 : d1); ++i) gadget_pair(g, 0, d1 > 0 ? Sign::plus : Sign::minus);
    for (long i = 0; i < (d2 < 0 ? -d2 : d2); ++i) {
      if (d2 > 0)
        gadget_crossed(g, 1);
      else
        gadget_triple(g, 1);
    }
    return g;
  }
  const long k = (weighted(t.a) + weighted(t.b) + weighted(t.c) - weighted(t.d)) / l;
  sf.p = -k - at(t.a, 1 - l) + at(t.b, 1 + l);
  sf.a = without(t.a, {0, 1, -l, 1 - l});
  sf.b = without(t.b, {0, 1, l, 1 + l});
  GaussDiagram g = build_link_form(sf, l);
  {
    const LinkWrithes w = link_writhes(g);
    transfer_shells(g, at(t.a, 1) + at(t.a, 1 - l) - slot(w.j1, 1) - slot(w.j1, 1 - l));
  }
  const LinkWrithes w = link_writhes(g);
  const long d1 = at(t.a, 1) - slot(w.j1, 1);
  const long d2 = at(t.b, 1) - slot(w.j2, 1);
  for (int circle : {0, 1}) {
    const long d = circle == 0 ? d1 : d2;
    for (long i = 0; i < (d < 0 ? -d : d); ++i) {
      if (d > 0)
        gadget_triple(g, circle);
      else
        gadget_crossed(g, circle);
    }
  }
  return g;
}

bool check_consistency(const LinkProfile& p) {
  const long s = p.lambda < 0 ? -p.lambda : p.lambda;
  if (s == 1) return true;
  if (!p.shell_sum || !p.f_prime) return false;
  Integer sum = *p.shell_sum + *p.f_prime;
  for (const auto& [n, j] : p.jn1) sum += Integer(n) * j;
  for (const auto& [n, j] : p.jn2) sum += Integer(n) * j;
  if (s == 0) return sum == 0;
  return mod_floor(sum, s) == 0;
}

// --- bounded search -------------------------------------------------------------

namespace {

struct Visit {
  GaussDiagram diagram;
  std::string parent;
  MoveSite site;
  int depth = 0;
};

using Visited = std::unordered_map<std::string, Visit>;

}  // namespace

std::optional<std::vector<MoveSite>> bfs_witness(const GaussDiagram& g, const GaussDiagram& h, int max_depth,
                                                 std::size_t chord_cap, std::size_t node_budget) {
  if (g.mu() != h.mu())
    throw Error(Errc::component_count_mismatch, "diagrams have different numbers of circles");
  const std::string gk = canonical_key(g), hk = canonical_key(h);
  if (gk == hk) return std::vector<MoveSite>{};

  Visited side[2];
  side[0].emplace(gk, Visit{g, {}, {}, 0});
  side[1].emplace(hk, Visit{h, {}, {}, 0});
  std::vector<std::string> frontier[2] = {{gk}, {hk}};
  int depth[2] = {0, 0};

  std::optional<std::pair<std::string, std::string>> meet;  // (forward key, backward key) joined by one move
  MoveSite bridge;

  while (!meet && depth[0] + depth[1] < max_depth) {
    const int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<std::string> next;
    for (const auto& key : frontier[s]) {
      const GaussDiagram cur = side[s].at(key).diagram;
      for (const auto& site : find_all_move_sites(cur, chord_cap)) {
        GaussDiagram nd = apply_move(cur, site);
        std::string nk = canonical_key(nd);
        if (side[s].count(nk)) continue;
        if (side[1 - s].count(nk)) {
          if (s == 0) {
            meet = std::make_pair(key, nk);
            bridge = site;
          } else {
            // Reached the forward tree from the backward one: the forward node is nk.
            side[1].emplace(nk, Visit{std::move(nd), key, site, depth[1] + 1});
            meet = std::make_pair(nk, nk);
          }
          break;
        }
        side[s].emplace(nk, Visit{std::move(nd), key, site, depth[s] + 1});
        next.push_back(std::move(nk));
        if (side[0].size() + side[1].size() > node_budget)
          throw Error(Errc::budget_exceeded, "search stored more than " + std::to_string(node_budget) + " diagrams");
      }
      if (meet) break;
    }
    if (meet) break;
    ++depth[s];
    if (next.empty()) return std::nullopt;
    frontier[s] = std::move(next);
  }
  if (!meet) return std::nullopt;

  // Forward half: replay recorded sites from g.
  std::vector<MoveSite> trace;
  {
    std::vector<MoveSite> rev;
    std::string k = meet->first;
    while (k != gk) {
      const Visit& v = side[0].at(k);
      rev.push_back(v.site);
      k = v.parent;
    }
    trace.assign(rev.rbegin(), rev.rend());
  }
  GaussDiagram cur = replay(g, trace);
  std::vector<std::string> targets;
  if (meet->first != meet->second) {
    trace.push_back(bridge);
    cur = apply_move(cur, bridge);
    targets.push_back(meet->second);
  } else {
    targets.push_back(meet->second);
  }
  // Backward half: walk parents towards h, choosing a site that reaches each key.
  std::string k = targets.back();
  const Visited& back = side[1];
  while (k != hk) {
    const std::string& parent = back.at(k).parent;
    bool found = false;
    for (const auto& site : find_all_move_sites(cur, chord_cap)) {
      GaussDiagram nd = apply_move(cur, site);
      if (canonical_key(nd) == parent) {
        trace.push_back(site);
        cur = std::move(nd);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("move set is not closed under inverses");
    k = parent;
  }
  return trace;
}

}  // namespace shellmoves
