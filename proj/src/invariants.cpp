#include "shellmoves/invariants.hpp"

#include "shellmoves/errors.hpp"

#include "json.hpp"

#include <sstream>

namespace shellmoves {

namespace {

void require_mu(const GaussDiagram& g, int mu) {
  if (g.mu() != mu)
    throw Error(Errc::wrong_component_count,
                "expected " + std::to_string(mu) + " circle(s), got " + std::to_string(g.mu()));
}

// Arc sum strictly between positions `from` and `to` of a cyclic word.
long arc_sum(const GaussDiagram& g, const std::vector<Endpoint>& w, std::size_t from, std::size_t to) {
  long sum = 0;
  for (std::size_t i = (from + 1) % w.size(); i != to; i = (i + 1) % w.size()) sum += endpoint_sign(g, w[i]);
  return sum;
}

long self_arc(const GaussDiagram& g, ChordId gamma) {
  const Location li = g.initial_location(gamma), lt = g.terminal_location(gamma);
  if (li.circle != lt.circle) throw Error(Errc::not_a_self_chord, "chord " + g.chord(gamma).label + " joins two circles");
  return arc_sum(g, g.circle(li.circle), li.pos, lt.pos);
}

// The merged word of surgery along gamma0, with positions of every chord in it.
struct Merged {
  std::vector<Endpoint> word;
  std::vector<long> prefix;  // prefix[i] = sum of signs of word[0..i)
  std::map<ChordId, std::pair<std::size_t, std::size_t>> pos;
};

Merged merge(const GaussDiagram& g, ChordId gamma0) {
  Merged m;
  for (int c = 0; c < 2; ++c) {
    const auto& w = g.circle(c);
    std::size_t start = 0;
    for (std::size_t p = 0; p < w.size(); ++p)
      if (w[p].chord == gamma0) start = p;
    for (std::size_t i = 1; i < w.size(); ++i) m.word.push_back(w[(start + i) % w.size()]);
  }
  m.prefix.assign(m.word.size() + 1, 0);
  for (std::size_t i = 0; i < m.word.size(); ++i) {
    m.prefix[i + 1] = m.prefix[i] + endpoint_sign(g, m.word[i]);
    auto& slot = m.pos[m.word[i].chord];
    (m.word[i].kind == EndKind::initial ? slot.first : slot.second) = i;
  }
  return m;
}

long merged_index(const Merged& m, ChordId gamma) {
  const auto [pi, pt] = m.pos.at(gamma);
  if (pi < pt) return m.prefix[pt] - m.prefix[pi + 1];
  // Wraps past the end; the whole merged word sums to zero.
  return -(m.prefix[pi + 1] - m.prefix[pt]);
}

void check_nonself(const GaussDiagram& g, ChordId id) {
  if (g.is_self_chord(id)) throw Error(Errc::not_a_nonself_chord, "chord " + g.chord(id).label + " is a self-chord");
}

void bump(WritheTable& t, long n, long s) {
  if ((t[n] += s) == 0) t.erase(n);
}

}  // namespace

long knot_index(const GaussDiagram& g, ChordId gamma) {
  require_mu(g, 1);
  return self_arc(g, gamma);
}

KnotWrithes writhe_polynomial(const GaussDiagram& g) {
  require_mu(g, 1);
  KnotWrithes out;
  for (const auto& [id, ch] : g.chords()) {
    const long n = self_arc(g, id);
    if (n != 0) bump(out.n_writhes, n, value(ch.sign));
  }
  long total = 0;
  for (const auto& [n, j] : out.n_writhes) {
    out.writhe_poly.add_term(n, j);
    total += j;
    if (n % 2 != 0) out.odd_writhe += j;
  }
  out.writhe_poly.add_term(0, -total);
  return out;
}

long self_index(const GaussDiagram& g, ChordId gamma) { return self_arc(g, gamma); }

long nonself_index(const GaussDiagram& g, ChordId gamma, ChordId gamma0) {
  require_mu(g, 2);
  check_nonself(g, gamma);
  check_nonself(g, gamma0);
  if (gamma == gamma0) return 0;
  return merged_index(merge(g, gamma0), gamma);
}

LinkingData linking_data(const GaussDiagram& g) {
  require_mu(g, 2);
  LinkingData d;
  for (const auto& [id, ch] : g.chords()) {
    const auto [ci, ct] = g.chord_type(id);
    if (ci == 0 && ct == 1) d.lk12 += value(ch.sign);
    if (ci == 1 && ct == 0) d.lk21 += value(ch.sign);
  }
  d.lambda = d.lk12 - d.lk21;
  return d;
}

LinkWrithes link_writhes(const GaussDiagram& g) {
  require_mu(g, 2);
  LinkWrithes out;
  for (const auto& [id, ch] : g.chords()) {
    const auto [ci, ct] = g.chord_type(id);
    if (ci != ct) continue;
    const long n = self_arc(g, id);
    if (n != 0) bump(ci == 0 ? out.j1 : out.j2, n, value(ch.sign));
  }
  return out;
}

std::pair<LaurentPoly, LaurentPoly> index_polynomials(const GaussDiagram& g, ChordId gamma0) {
  require_mu(g, 2);
  check_nonself(g, gamma0);
  const Merged m = merge(g, gamma0);
  LaurentPoly f12, f21;
  for (const auto& [id, ch] : g.chords()) {
    const auto [ci, ct] = g.chord_type(id);
    if (ci == ct) continue;
    const long n = id == gamma0 ? 0 : merged_index(m, id);
    (ci == 0 ? f12 : f21).add_term(n, value(ch.sign));
  }
  return {f12, f21};
}

LinkingClass linking_class(const GaussDiagram& g) {
  const LinkingData ld = linking_data(g);
  const Exponent s = ld.lambda < 0 ? -ld.lambda : ld.lambda;
  for (const auto& [id, ch] : g.chords()) {
    if (g.is_self_chord(id)) continue;
    auto [f, h] = index_polynomials(g, id);
    return gamma_class(s, f, h);
  }
  return gamma_class(s, {}, {});
}

bool excluded_slot_1(long n, long lambda) { return n == 0 || n == 1 || n == -lambda || n == -lambda + 1; }
bool excluded_slot_2(long n, long lambda) { return n == 0 || n == 1 || n == lambda || n == lambda + 1; }

std::optional<long> shell_sum(const LinkWrithes& w, long lambda) {
  auto at = [](const WritheTable& t, long n) {
    auto it = t.find(n);
    return it == t.end() ? 0L : it->second;
  };
  if (lambda == 0) return at(w.j1, 1) + at(w.j2, 1);
  if (lambda == 1 || lambda == -1) return std::nullopt;
  return at(w.j1, 1) + at(w.j1, -lambda + 1) + at(w.j2, 1) + at(w.j2, lambda + 1);
}

KnotProfile knot_profile(const GaussDiagram& g) {
  const KnotWrithes w = writhe_polynomial(g);
  return {w.writhe_poly, w.n_writhes, w.odd_writhe};
}

LinkProfile link_profile(const GaussDiagram& g) {
  const LinkingData ld = linking_data(g);
  const LinkWrithes w = link_writhes(g);
  LinkProfile p;
  p.lk12 = ld.lk12;
  p.lk21 = ld.lk21;
  p.lambda = ld.lambda;
  for (const auto& [n, j] : w.j1)
    if (!excluded_slot_1(n, ld.lambda)) p.jn1[n] = j;
  for (const auto& [n, j] : w.j2)
    if (!excluded_slot_2(n, ld.lambda)) p.jn2[n] = j;
  p.shell_sum = shell_sum(w, ld.lambda);
  p.linking_class = linking_class(g);
  const long s = ld.lambda < 0 ? -ld.lambda : ld.lambda;
  if (s == 0)
    p.f_prime = p.linking_class.derivative_sum();
  else if (s >= 2)
    p.f_prime = mod_floor(p.linking_class.derivative_sum(), s);
  return p;
}

InvariantProfile profile(const GaussDiagram& g) {
  if (g.mu() == 1) return knot_profile(g);
  if (g.mu() == 2) return link_profile(g);
  throw Error(Errc::unsupported_component_count, "invariants are defined for 1 or 2 circles, got " + std::to_string(g.mu()));
}

namespace {

std::string table_text(const WritheTable& t) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [n, j] : t) {
    os << (first ? "" : ", ") << n << ':' << j;
    first = false;
  }
  os << '}';
  return os.str();
}

nlohmann::json table_json(const WritheTable& t) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [n, v] : t) j[std::to_string(n)] = v;
  return j;
}

}  // namespace

std::string format_profile(const InvariantProfile& p) {
  std::ostringstream os;
  if (const auto* k = std::get_if<KnotProfile>(&p)) {
    os << "J: " << table_text(k->n_writhes) << '\n';
    os << "W: " << k->writhe_poly.to_string() << '\n';
    os << "components: 1\n";
    os << "odd_writhe: " << k->odd_writhe << '\n';
    return os.str();
  }
  const auto& l = std::get<LinkProfile>(p);
  os << "F: " << l.linking_class.to_string() << '\n';
  os << "F_prime: ";
  if (!l.f_prime)
    os << "n/a";
  else if (l.lambda == 0)
    os << *l.f_prime;
  else
    os << *l.f_prime << " mod " << (l.lambda < 0 ? -l.lambda : l.lambda);
  os << '\n';
  os << "J1: " << table_text(l.jn1) << '\n';
  os << "J2: " << table_text(l.jn2) << '\n';
  os << "components: 2\n";
  os << "lambda: " << l.lambda << '\n';
  os << "lk: (" << l.lk12 << ", " << l.lk21 << ")\n";
  os << "shell_sum: ";
  if (l.shell_sum)
    os << *l.shell_sum;
  else
    os << "n/a";
  os << '\n';
  return os.str();
}

std::string profile_json(const InvariantProfile& p) {
  nlohmann::json j;
  if (const auto* k = std::get_if<KnotProfile>(&p)) {
    j["components"] = 1;
    j["W"] = k->writhe_poly.to_string();
    j["J"] = table_json(k->n_writhes);
    j["odd_writhe"] = k->odd_writhe;
    return j.dump(2);
  }
  const auto& l = std::get<LinkProfile>(p);
  j["components"] = 2;
  j["lk12"] = l.lk12;
  j["lk21"] = l.lk21;
  j["lambda"] = l.lambda;
  j["J1"] = table_json(l.jn1);
  j["J2"] = table_json(l.jn2);
  j["shell_sum"] = l.shell_sum ? nlohmann::json(*l.shell_sum) : nlohmann::json();
  j["F"] = {{"modulus", l.linking_class.modulus()},
            {"f", l.linking_class.first().to_string()},
            {"g", l.linking_class.second().to_string()}};
  j["F_prime"] = l.f_prime ? nlohmann::json(l.f_prime->str()) : nlohmann::json();
  return j.dump(2);
}

}  // namespace shellmoves
