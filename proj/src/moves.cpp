#include "shellmoves/moves.hpp"

#include "shellmoves/errors.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

namespace shellmoves {

const char* to_string(MoveKind k) noexcept {
  switch (k) {
    case MoveKind::r1_insert: return "R1_insert";
    case MoveKind::r1_delete: return "R1_delete";
    case MoveKind::r2_insert: return "R2_insert";
    case MoveKind::r2_delete: return "R2_delete";
    case MoveKind::r3: return "R3";
    case MoveKind::s1: return "S1";
    case MoveKind::s2_insert: return "S2_insert";
    case MoveKind::s2_delete: return "S2_delete";
  }
  return "?";
}

std::optional<MoveKind> move_kind_from_string(std::string_view s) {
  for (MoveKind k : all_move_kinds)
    if (s == to_string(k)) return k;
  return std::nullopt;
}

bool is_insertion(MoveKind k) noexcept {
  return k == MoveKind::r1_insert || k == MoveKind::r2_insert || k == MoveKind::s2_insert;
}

int chords_added(MoveKind k) noexcept {
  switch (k) {
    case MoveKind::r1_insert: return 1;
    case MoveKind::r2_insert:
    case MoveKind::s2_insert: return 2;
    default: return 0;
  }
}

namespace {

using Word = std::vector<Endpoint>;

const Endpoint& cyc(const Word& w, std::size_t i) { return w[i % w.size()]; }

[[noreturn]] void stale(const MoveSite& site, const std::string& why) {
  throw Error(Errc::stale_site, std::string(to_string(site.kind)) + " @ " + std::to_string(site.at.circle + 1) + ":" +
                                    std::to_string(site.at.pos) + ": " + why);
}

void check_circle(const GaussDiagram& g, const MoveSite& site, const Location& loc) {
  if (loc.circle < 0 || loc.circle >= g.mu()) stale(site, "no such circle");
}

bool adjacent(const GaussDiagram& g, const Location& a, const Location& b) {
  if (a.circle != b.circle) return false;
  const std::size_t n = g.circle(a.circle).size();
  return (a.pos + 1) % n == b.pos || (b.pos + 1) % n == a.pos;
}

// Shell tokens wrapped around endpoint e, orientation forced by e's sign.
std::array<Endpoint, 3> wrap(const GaussDiagram& g, ChordId shell, Endpoint e) {
  if (endpoint_sign(g, e) > 0) return {Endpoint{shell, EndKind::initial}, e, Endpoint{shell, EndKind::terminal}};
  return {Endpoint{shell, EndKind::terminal}, e, Endpoint{shell, EndKind::initial}};
}

bool wraps(const GaussDiagram& g, const Endpoint& left, const Endpoint& mid, const Endpoint& right) {
  if (left.chord != right.chord || left.chord == mid.chord || left.kind == right.kind) return false;
  return left.kind == (endpoint_sign(g, mid) > 0 ? EndKind::initial : EndKind::terminal);
}

Word rotated(const Word& w, std::size_t start) {
  Word out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[(start + i) % w.size()]);
  return out;
}

// --- R3 pattern matching ----------------------------------------------------

struct R3Match {
  Location pairs[3];
};

std::optional<R3Match> match_r3(const GaussDiagram& g, Location at, bool right) {
  const auto& w = g.circle(at.circle);
  const std::size_t n = w.size();
  if (n < 2 || at.pos >= n) return std::nullopt;
  const Endpoint e1 = w[at.pos];
  const Endpoint e2 = cyc(w, at.pos + 1);
  if (e1.kind != EndKind::initial || e2.kind != EndKind::initial || e1.chord == e2.chord) return std::nullopt;
  R3Match m;
  m.pairs[0] = at;
  if (!right) {
    // (a< b<) (a> c<) (b> c>)
    const ChordId a = e1.chord, b = e2.chord;
    const Location la = g.terminal_location(a);
    const auto& wa = g.circle(la.circle);
    const Endpoint next = cyc(wa, la.pos + 1);
    if (next.kind != EndKind::initial || next.chord == a || next.chord == b) return std::nullopt;
    const ChordId c = next.chord;
    const Location lb = g.terminal_location(b);
    const auto& wb = g.circle(lb.circle);
    if (cyc(wb, lb.pos + 1) != Endpoint{c, EndKind::terminal}) return std::nullopt;
    if (g.chord_sign(a) != g.chord_sign(b) || g.chord_sign(b) != g.chord_sign(c)) return std::nullopt;
    m.pairs[1] = la;
    m.pairs[2] = lb;
  } else {
    // (b< a<) (c< a>) (c> b>)
    const ChordId b = e1.chord, a = e2.chord;
    const Location la = g.terminal_location(a);
    const auto& wa = g.circle(la.circle);
    const std::size_t na = wa.size();
    const Endpoint prev = wa[(la.pos + na - 1) % na];
    if (prev.kind != EndKind::initial || prev.chord == a || prev.chord == b) return std::nullopt;
    const ChordId c = prev.chord;
    const Location lb = g.terminal_location(b);
    const auto& wb = g.circle(lb.circle);
    const std::size_t nb = wb.size();
    if (wb[(lb.pos + nb - 1) % nb] != Endpoint{c, EndKind::terminal}) return std::nullopt;
    if (g.chord_sign(a) != g.chord_sign(b) || g.chord_sign(b) != g.chord_sign(c)) return std::nullopt;
    m.pairs[1] = {la.circle, (la.pos + na - 1) % na};
    m.pairs[2] = {lb.circle, (lb.pos + nb - 1) % nb};
  }
  return m;
}

// --- S2 block matching --------------------------------------------------------

bool match_s2_block(const GaussDiagram& g, const Word& w, std::size_t p) {
  if (w.size() < 6) return false;
  const Endpoint t0 = cyc(w, p), t1 = cyc(w, p + 1), t2 = cyc(w, p + 2);
  const Endpoint t3 = cyc(w, p + 3), t4 = cyc(w, p + 4), t5 = cyc(w, p + 5);
  if (!wraps(g, t0, t1, t2) || !wraps(g, t3, t4, t5)) return false;
  if (t1.chord == t4.chord || t0.chord == t3.chord) return false;
  const int s1 = endpoint_sign(g, t4) * endpoint_sign(g, t1);
  return value(g.chord_sign(t3.chord)) == s1 && value(g.chord_sign(t0.chord)) == -s1;
}

void gaps(const GaussDiagram& g, std::vector<Location>& out) {
  for (int c = 0; c < g.mu(); ++c) {
    const std::size_t n = std::max<std::size_t>(g.circle(c).size(), 1);
    for (std::size_t p = 0; p < n; ++p) out.push_back({c, p});
  }
}

bool fits(const GaussDiagram& g, MoveKind kind, std::size_t cap) {
  return g.chord_count() + static_cast<std::size_t>(chords_added(kind)) <= cap;
}

}  // namespace

std::vector<MoveSite> find_move_sites(const GaussDiagram& g, MoveKind kind, std::size_t chord_cap) {
  std::vector<MoveSite> out;
  if (is_insertion(kind) && !fits(g, kind, chord_cap)) return out;
  switch (kind) {
    case MoveKind::r1_insert: {
      for (int c = 0; c < g.mu(); ++c) {
        const std::size_t n = g.circle(c).size();
        for (std::size_t p = 0; p < std::max<std::size_t>(n, 1); ++p)
          for (Sign s : {Sign::plus, Sign::minus})
            for (bool flag : {false, true}) {
              if (flag && n == 0) continue;
              MoveSite site{kind, {c, p}};
              site.sign = s;
              site.flag = flag;
              out.push_back(site);
            }
      }
      break;
    }
    case MoveKind::r1_delete: {
      for (const auto& [id, ch] : g.chords()) {
        const Location li = g.initial_location(id), lt = g.terminal_location(id);
        if (li.circle != lt.circle) continue;
        const std::size_t n = g.circle(li.circle).size();
        if ((li.pos + 1) % n == lt.pos)
          out.push_back({kind, li});
        else if ((lt.pos + 1) % n == li.pos)
          out.push_back({kind, lt});
      }
      break;
    }
    case MoveKind::r2_insert: {
      std::vector<Location> all;
      gaps(g, all);
      for (const auto& a : all)
        for (const auto& b : all)
          for (Sign s : {Sign::plus, Sign::minus})
            for (bool flag : {false, true})
              for (bool hf : {false, true}) {
                if (hf && !(a == b)) continue;
                MoveSite site{kind, a, b, s, flag, hf};
                out.push_back(site);
              }
      break;
    }
    case MoveKind::r2_delete: {
      for (int c = 0; c < g.mu(); ++c) {
        const auto& w = g.circle(c);
        const std::size_t n = w.size();
        if (n < 2) continue;
        for (std::size_t p = 0; p < n; ++p) {
          const Endpoint e1 = w[p], e2 = cyc(w, p + 1);
          if (e1.kind != EndKind::initial || e2.kind != EndKind::initial || e1.chord == e2.chord) continue;
          if (g.chord_sign(e1.chord) == g.chord_sign(e2.chord)) continue;
          if (!adjacent(g, g.terminal_location(e1.chord), g.terminal_location(e2.chord))) continue;
          out.push_back({kind, {c, p}});
        }
      }
      break;
    }
    case MoveKind::r3: {
      for (int c = 0; c < g.mu(); ++c)
        for (std::size_t p = 0; p < g.circle(c).size(); ++p)
          for (bool right : {false, true})
            if (match_r3(g, {c, p}, right)) {
              MoveSite site{kind, {c, p}};
              site.flag = right;
              out.push_back(site);
            }
      break;
    }
    case MoveKind::s1: {
      for (int c = 0; c < g.mu(); ++c)
        for (std::size_t p = 0; p < g.circle(c).size(); ++p)
          if (flanks_as_shell(g, {c, p})) out.push_back({kind, {c, p}});
      break;
    }
    case MoveKind::s2_insert: {
      for (int c = 0; c < g.mu(); ++c) {
        const auto& w = g.circle(c);
        if (w.size() < 2) continue;
        for (std::size_t p = 0; p < w.size(); ++p)
          if (w[p].chord != cyc(w, p + 1).chord) out.push_back({kind, {c, p}});
      }
      break;
    }
    case MoveKind::s2_delete: {
      for (int c = 0; c < g.mu(); ++c) {
        const auto& w = g.circle(c);
        for (std::size_t p = 0; p < w.size(); ++p)
          if (match_s2_block(g, w, p)) out.push_back({kind, {c, p}});
      }
      break;
    }
  }
  return out;
}

std::vector<MoveSite> find_all_move_sites(const GaussDiagram& g, std::size_t chord_cap) {
  std::vector<MoveSite> out;
  for (MoveKind k : all_move_kinds) {
    auto part = find_move_sites(g, k, chord_cap);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

GaussDiagram apply_move(const GaussDiagram& g, const MoveSite& site) {
  check_circle(g, site, site.at);
  GaussDiagram out = g;
  const auto& w = g.circle(site.at.circle);
  const std::size_t n = w.size();
  switch (site.kind) {
    case MoveKind::r1_insert: {
      if (site.at.pos > n) stale(site, "gap out of range");
      const ChordId x = out.add_chord(site.sign);
      Endpoint first{x, site.flag ? EndKind::terminal : EndKind::initial};
      Endpoint second{x, opposite(first.kind)};
      auto& word = out.mutable_circle(site.at.circle);
      word.insert(word.begin() + static_cast<std::ptrdiff_t>(site.at.pos), {first, second});
      break;
    }
    case MoveKind::r1_delete: {
      if (n < 2 || site.at.pos >= n) stale(site, "position out of range");
      if (w[site.at.pos].chord != cyc(w, site.at.pos + 1).chord) stale(site, "endpoints are not adjacent");
      out.remove_chord(w[site.at.pos].chord);
      break;
    }
    case MoveKind::r2_insert: {
      check_circle(g, site, site.to);
      if (site.at.pos > n || site.to.pos > g.circle(site.to.circle).size()) stale(site, "gap out of range");
      const ChordId x = out.add_chord(site.sign);
      const ChordId y = out.add_chord(-site.sign);
      const std::vector<Endpoint> tails{{x, EndKind::initial}, {y, EndKind::initial}};
      const std::vector<Endpoint> heads = site.flag
                                              ? std::vector<Endpoint>{{y, EndKind::terminal}, {x, EndKind::terminal}}
                                              : std::vector<Endpoint>{{x, EndKind::terminal}, {y, EndKind::terminal}};
      auto insert_at = [&](Location loc, const std::vector<Endpoint>& toks) {
        auto& word = out.mutable_circle(loc.circle);
        word.insert(word.begin() + static_cast<std::ptrdiff_t>(loc.pos), toks.begin(), toks.end());
      };
      if (site.at == site.to) {
        std::vector<Endpoint> both = site.heads_first ? heads : tails;
        const auto& rest = site.heads_first ? tails : heads;
        both.insert(both.end(), rest.begin(), rest.end());
        insert_at(site.at, both);
      } else if (site.at.circle == site.to.circle && site.at.pos < site.to.pos) {
        insert_at(site.to, heads);
        insert_at(site.at, tails);
      } else {
        insert_at(site.at, tails);
        insert_at(site.to, heads);
      }
      break;
    }
    case MoveKind::r2_delete: {
      if (n < 2 || site.at.pos >= n) stale(site, "position out of range");
      const Endpoint e1 = w[site.at.pos], e2 = cyc(w, site.at.pos + 1);
      if (e1.kind != EndKind::initial || e2.kind != EndKind::initial || e1.chord == e2.chord ||
          g.chord_sign(e1.chord) == g.chord_sign(e2.chord) ||
          !adjacent(g, g.terminal_location(e1.chord), g.terminal_location(e2.chord)))
        stale(site, "no R2 pair here");
      out.remove_chord(e1.chord);
      out.remove_chord(e2.chord);
      break;
    }
    case MoveKind::r3: {
      const auto m = match_r3(g, site.at, site.flag);
      if (!m) stale(site, "no R3 triangle here");
      for (const auto& loc : m->pairs) {
        auto& word = out.mutable_circle(loc.circle);
        std::swap(word[loc.pos], word[(loc.pos + 1) % word.size()]);
      }
      break;
    }
    case MoveKind::s1: {
      if (site.at.pos >= n || !flanks_as_shell(g, site.at)) stale(site, "no shell around this endpoint");
      const Endpoint e = w[site.at.pos];
      const ChordId shell = cyc(w, site.at.pos + 1).chord;
      auto& src = out.mutable_circle(site.at.circle);
      src.erase(std::remove_if(src.begin(), src.end(), [shell](const Endpoint& t) { return t.chord == shell; }),
                src.end());
      const Endpoint target{e.chord, opposite(e.kind)};
      const Location lt = out.locate(target);
      const auto toks = wrap(out, shell, target);
      auto& dst = out.mutable_circle(lt.circle);
      dst.insert(dst.begin() + static_cast<std::ptrdiff_t>(lt.pos) + 1, toks[2]);
      dst.insert(dst.begin() + static_cast<std::ptrdiff_t>(lt.pos), toks[0]);
      break;
    }
    case MoveKind::s2_insert: {
      if (n < 2 || site.at.pos >= n) stale(site, "position out of range");
      const Endpoint e1 = w[site.at.pos], e2 = cyc(w, site.at.pos + 1);
      if (e1.chord == e2.chord) stale(site, "endpoints belong to one chord");
      const int s1 = endpoint_sign(g, e1) * endpoint_sign(g, e2);
      const ChordId c1 = out.add_chord(s1 > 0 ? Sign::plus : Sign::minus);
      const ChordId c2 = out.add_chord(s1 > 0 ? Sign::minus : Sign::plus);
      Word word = rotated(w, site.at.pos);
      const auto b2 = wrap(out, c2, e2);
      const auto b1 = wrap(out, c1, e1);
      Word block(b2.begin(), b2.end());
      block.insert(block.end(), b1.begin(), b1.end());
      word.erase(word.begin(), word.begin() + 2);
      word.insert(word.begin(), block.begin(), block.end());
      out.mutable_circle(site.at.circle) = std::move(word);
      break;
    }
    case MoveKind::s2_delete: {
      if (site.at.pos >= n || !match_s2_block(g, w, site.at.pos)) stale(site, "no S2 block here");
      Word word = rotated(w, site.at.pos);
      const Endpoint e2 = word[1], e1 = word[4];
      const ChordId c2 = word[0].chord, c1 = word[3].chord;
      word.erase(word.begin(), word.begin() + 6);
      word.insert(word.begin(), {e1, e2});
      out.mutable_circle(site.at.circle) = std::move(word);
      out.remove_chord(c1);
      out.remove_chord(c2);
      break;
    }
  }
  return out;
}

// --- random walks -------------------------------------------------------------

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  // Rejection sampling keeps results identical across standard libraries.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

MoveSite sample_r2_insert(const GaussDiagram& g, std::mt19937_64& rng) {
  std::vector<Location> all;
  gaps(g, all);
  MoveSite site{MoveKind::r2_insert};
  site.at = all[uniform_below(rng, all.size())];
  site.to = all[uniform_below(rng, all.size())];
  site.sign = uniform_below(rng, 2) == 0 ? Sign::plus : Sign::minus;
  site.flag = uniform_below(rng, 2) == 1;
  if (site.at == site.to) site.heads_first = uniform_below(rng, 2) == 1;
  return site;
}

}  // namespace

WalkResult random_walk(const GaussDiagram& g, int steps, std::uint64_t seed, std::size_t chord_cap) {
  std::mt19937_64 rng(seed);
  WalkResult res{g, {}};
  for (int step = 0; step < steps; ++step) {
    std::vector<MoveKind> kinds;
    std::vector<std::vector<MoveSite>> sites;
    for (MoveKind k : all_move_kinds) {
      if (k == MoveKind::r2_insert) {
        if (fits(res.diagram, k, chord_cap)) {
          kinds.push_back(k);
          sites.emplace_back();
        }
        continue;
      }
      auto found = find_move_sites(res.diagram, k, chord_cap);
      if (found.empty()) continue;
      kinds.push_back(k);
      sites.push_back(std::move(found));
    }
    if (kinds.empty()) break;
    const std::size_t pick = uniform_below(rng, kinds.size());
    const MoveSite site = kinds[pick] == MoveKind::r2_insert
                              ? sample_r2_insert(res.diagram, rng)
                              : sites[pick][uniform_below(rng, sites[pick].size())];
    res.diagram = apply_move(res.diagram, site);
    res.trace.push_back(site);
  }
  return res;
}

// --- traces -------------------------------------------------------------------

std::string format_site(const MoveSite& site) {
  std::ostringstream os;
  os << to_string(site.kind) << " @ " << site.at.circle + 1 << ':' << site.at.pos;
  const char sign = site.sign == Sign::plus ? '+' : '-';
  switch (site.kind) {
    case MoveKind::r1_insert:
      os << " sign=" << sign << " order=" << (site.flag ? "TI" : "IT");
      break;
    case MoveKind::r2_insert:
      os << " to=" << site.to.circle + 1 << ':' << site.to.pos << " sign=" << sign
         << " heads=" << (site.flag ? "anti" : "parallel");
      if (site.at == site.to) os << " first=" << (site.heads_first ? "heads" : "tails");
      break;
    case MoveKind::r3:
      os << " pattern=" << (site.flag ? 'R' : 'L');
      break;
    default:
      break;
  }
  return os.str();
}

namespace {

Location parse_location(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw Error(Errc::syntax, "expected <circle>:<pos>, got '" + s + "'");
  try {
    std::size_t used = 0;
    const int c = std::stoi(s.substr(0, colon), &used);
    if (used != colon || c < 1) throw Error(Errc::syntax, "bad circle in '" + s + "'");
    const std::string rest = s.substr(colon + 1);
    const unsigned long long p = std::stoull(rest, &used);
    if (used != rest.size() || rest.empty() || rest[0] == '-') throw Error(Errc::syntax, "bad position in '" + s + "'");
    return {c - 1, static_cast<std::size_t>(p)};
  } catch (const std::logic_error&) {
    throw Error(Errc::syntax, "bad location '" + s + "'");
  }
}

}  // namespace

MoveSite parse_site(std::string_view line) {
  std::istringstream is{std::string(line)};
  std::string kind, at, loc;
  if (!(is >> kind >> at >> loc) || at != "@") throw Error(Errc::syntax, "expected '<kind> @ <circle>:<pos>'");
  const auto k = move_kind_from_string(kind);
  if (!k) throw Error(Errc::syntax, "unknown move kind '" + kind + "'");
  MoveSite site{*k, parse_location(loc)};
  std::string kv;
  while (is >> kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw Error(Errc::syntax, "expected key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
    if (key == "sign" && (val == "+" || val == "-"))
      site.sign = val == "+" ? Sign::plus : Sign::minus;
    else if (key == "order" && (val == "IT" || val == "TI"))
      site.flag = val == "TI";
    else if (key == "to")
      site.to = parse_location(val);
    else if (key == "heads" && (val == "parallel" || val == "anti"))
      site.flag = val == "anti";
    else if (key == "first" && (val == "heads" || val == "tails"))
      site.heads_first = val == "heads";
    else if (key == "pattern" && (val == "L" || val == "R"))
      site.flag = val == "R";
    else
      throw Error(Errc::syntax, "unexpected parameter '" + kv + "'");
  }
  return site;
}

std::string format_trace(const std::vector<MoveSite>& trace) {
  std::string out;
  for (const auto& s : trace) out += format_site(s) + '\n';
  return out;
}

std::vector<MoveSite> parse_trace(std::string_view text) {
  std::vector<MoveSite> out;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_site(line));
  }
  return out;
}

GaussDiagram replay(const GaussDiagram& g, const std::vector<MoveSite>& trace) {
  GaussDiagram cur = g;
  for (const auto& s : trace) cur = apply_move(cur, s);
  return cur;
}

}  // namespace shellmoves
