#include "shellmoves/diagram.hpp"

#include "shellmoves/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace shellmoves {

GaussDiagram::GaussDiagram(int mu) {
  if (mu < 1) throw Error(Errc::circle_count_mismatch, "a diagram needs at least one circle");
  circles_.resize(static_cast<std::size_t>(mu));
}

const Chord& GaussDiagram::chord(ChordId id) const {
  auto it = chords_.find(id);
  if (it == chords_.end()) throw Error(Errc::unknown_chord_id, "no chord with id " + std::to_string(id));
  return it->second;
}

Location GaussDiagram::locate(Endpoint e) const {
  for (std::size_t c = 0; c < circles_.size(); ++c) {
    const auto& word = circles_[c];
    for (std::size_t p = 0; p < word.size(); ++p)
      if (word[p] == e) return {static_cast<int>(c), p};
  }
  throw Error(Errc::unknown_chord_id, "endpoint of chord " + std::to_string(e.chord) + " not on any circle");
}

bool GaussDiagram::is_self_chord(ChordId id) const {
  auto [a, b] = chord_type(id);
  return a == b;
}

std::pair<int, int> GaussDiagram::chord_type(ChordId id) const {
  return {initial_location(id).circle, terminal_location(id).circle};
}

const Endpoint& GaussDiagram::at(int c, std::ptrdiff_t pos) const {
  const auto& word = circle(c);
  const auto n = static_cast<std::ptrdiff_t>(word.size());
  std::ptrdiff_t r = pos % n;
  if (r < 0) r += n;
  return word[static_cast<std::size_t>(r)];
}

ChordId GaussDiagram::add_chord(Sign sign, std::string label) {
  const ChordId id = next_id_++;
  if (label.empty()) {
    std::set<std::string> used;
    for (const auto& [cid, ch] : chords_) used.insert(ch.label);
    ChordId n = id;
    do {
      label = "c" + std::to_string(n++);
    } while (used.count(label) != 0);
  }
  chords_.emplace(id, Chord{id, sign, std::move(label)});
  return id;
}

void GaussDiagram::remove_chord(ChordId id) {
  chords_.erase(id);
  for (auto& word : circles_)
    word.erase(std::remove_if(word.begin(), word.end(), [id](const Endpoint& e) { return e.chord == id; }), word.end());
}

void GaussDiagram::set_sign(ChordId id, Sign sign) {
  auto it = chords_.find(id);
  if (it == chords_.end()) throw Error(Errc::unknown_chord_id, "no chord with id " + std::to_string(id));
  it->second.sign = sign;
}

int endpoint_sign(const GaussDiagram& g, Endpoint e) {
  const int s = value(g.chord_sign(e.chord));
  return e.kind == EndKind::initial ? -s : s;
}

long circle_sign_sum(const GaussDiagram& g, int circle) {
  long sum = 0;
  for (const auto& e : g.circle(circle)) sum += endpoint_sign(g, e);
  return sum;
}

// --- text format -----------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.' || ch == '\'';
  });
}

int parse_int(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    throw Error(Errc::syntax, "expected a number for " + what + ", got '" + s + "'");
  return std::stoi(s);
}

}  // namespace

GaussDiagram parse_gauss_code(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string current;
    for (char ch : text) {
      if (ch == '\n' || ch == '/') {
        lines.push_back(current);
        current.clear();
      } else {
        current.push_back(ch);
      }
    }
    lines.push_back(current);
  }

  int mu = 0;
  GaussDiagram g(1);
  std::map<std::string, ChordId> ids;
  std::vector<bool> seen_circle;
  std::set<Endpoint> placed;

  for (auto raw : lines) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    if (mu == 0) {
      if (line.rfind("circles", 0) != 0) throw Error(Errc::syntax, "first line must be 'circles: <n>'");
      auto colon = line.find(':');
      if (colon == std::string::npos) throw Error(Errc::syntax, "missing ':' after 'circles'");
      mu = parse_int(trim(line.substr(colon + 1)), "circle count");
      if (mu < 1) throw Error(Errc::circle_count_mismatch, "circle count must be positive");
      g = GaussDiagram(mu);
      seen_circle.assign(static_cast<std::size_t>(mu), false);
      continue;
    }

    std::istringstream is(line);
    std::string head;
    is >> head;
    if (head == "chord") {
      std::string label, sign, extra;
      is >> label >> sign;
      if (is >> extra) throw Error(Errc::syntax, "trailing text in chord declaration: '" + line + "'");
      if (!valid_label(label)) throw Error(Errc::syntax, "bad chord id '" + label + "'");
      if (sign != "+" && sign != "-") throw Error(Errc::bad_sign, "chord " + label + " has sign '" + sign + "'");
      if (ids.count(label) != 0) throw Error(Errc::duplicate_chord, "chord " + label + " declared twice");
      ids[label] = g.add_chord(sign == "+" ? Sign::plus : Sign::minus, label);
    } else if (head.rfind("circle", 0) == 0 && head != "circles") {
      auto colon = line.find(':');
      if (colon == std::string::npos) throw Error(Errc::syntax, "missing ':' in circle line '" + line + "'");
      std::string index_text = trim(line.substr(6, colon - 6));
      int index = parse_int(index_text, "circle index");
      if (index < 1 || index > mu)
        throw Error(Errc::circle_count_mismatch, "circle " + std::to_string(index) + " outside 1.." + std::to_string(mu));
      if (seen_circle[static_cast<std::size_t>(index - 1)])
        throw Error(Errc::circle_count_mismatch, "circle " + std::to_string(index) + " listed twice");
      seen_circle[static_cast<std::size_t>(index - 1)] = true;
      std::istringstream toks(line.substr(colon + 1));
      std::string tok;
      auto& word = g.mutable_circle(index - 1);
      while (toks >> tok) {
        const char mark = tok.back();
        if (tok.size() < 2 || (mark != '<' && mark != '>'))
          throw Error(Errc::syntax, "bad endpoint token '" + tok + "'");
        std::string label = tok.substr(0, tok.size() - 1);
        auto it = ids.find(label);
        if (it == ids.end()) throw Error(Errc::unknown_chord_id, "chord '" + label + "' is not declared");
        Endpoint e{it->second, mark == '<' ? EndKind::initial : EndKind::terminal};
        if (!placed.insert(e).second) throw Error(Errc::duplicate_endpoint, "endpoint '" + tok + "' appears twice");
        word.push_back(e);
      }
    } else {
      throw Error(Errc::syntax, "unrecognised line '" + line + "'");
    }
  }

  if (mu == 0) throw Error(Errc::syntax, "missing 'circles:' header");
  for (std::size_t i = 0; i < seen_circle.size(); ++i)
    if (!seen_circle[i]) throw Error(Errc::circle_count_mismatch, "circle " + std::to_string(i + 1) + " is not listed");
  for (const auto& [label, id] : ids) {
    if (placed.count({id, EndKind::initial}) == 0 || placed.count({id, EndKind::terminal}) == 0)
      throw Error(Errc::missing_endpoint, "chord " + label + " lacks an endpoint");
  }
  return g;
}

std::string serialize(const GaussDiagram& g) {
  std::ostringstream os;
  os << "circles: " << g.mu() << '\n';
  for (const auto& [id, ch] : g.chords()) os << "chord " << ch.label << ' ' << (ch.sign == Sign::plus ? '+' : '-') << '\n';
  for (int c = 0; c < g.mu(); ++c) {
    os << "circle " << c + 1 << ':';
    for (const auto& e : g.circle(c)) os << ' ' << g.chord(e.chord).label << (e.kind == EndKind::initial ? '<' : '>');
    os << '\n';
  }
  return os.str();
}

namespace {

template <class T>
bool equal_up_to_rotation(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t r = 0; r < a.size(); ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[(i + r) % a.size()] == b[i];
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool isomorphic_by_label(const GaussDiagram& a, const GaussDiagram& b) {
  if (a.mu() != b.mu() || a.chord_count() != b.chord_count()) return false;
  std::map<std::string, Sign> sa, sb;
  for (const auto& [id, ch] : a.chords()) sa[ch.label] = ch.sign;
  for (const auto& [id, ch] : b.chords()) sb[ch.label] = ch.sign;
  if (sa != sb) return false;
  using Tok = std::pair<std::string, EndKind>;
  for (int c = 0; c < a.mu(); ++c) {
    std::vector<Tok> wa, wb;
    for (const auto& e : a.circle(c)) wa.emplace_back(a.chord(e.chord).label, e.kind);
    for (const auto& e : b.circle(c)) wb.emplace_back(b.chord(e.chord).label, e.kind);
    if (!equal_up_to_rotation(wa, wb)) return false;
  }
  return true;
}

std::string canonical_key(const GaussDiagram& g) {
  const int mu = g.mu();
  std::vector<std::size_t> rot(static_cast<std::size_t>(mu), 0);
  std::string best;
  bool have = false;
  std::map<ChordId, std::uint32_t> rename;
  std::string key;
  while (true) {
    rename.clear();
    key.clear();
    for (int c = 0; c < mu; ++c) {
      const auto& word = g.circle(c);
      key.push_back('|');
      for (std::size_t i = 0; i < word.size(); ++i) {
        const auto& e = word[(i + rot[static_cast<std::size_t>(c)]) % word.size()];
        auto [it, fresh] = rename.try_emplace(e.chord, static_cast<std::uint32_t>(rename.size()));
        const std::uint32_t code = it->second * 4u + (e.kind == EndKind::terminal ? 2u : 0u) +
                                   (g.chord_sign(e.chord) == Sign::plus ? 1u : 0u);
        key.push_back(static_cast<char>('0' + (code >> 6)));
        key.push_back(static_cast<char>('0' + (code & 63u)));
      }
    }
    if (!have || key < best) {
      best = key;
      have = true;
    }
    int c = 0;
    for (; c < mu; ++c) {
      const auto n = std::max<std::size_t>(g.circle(c).size(), 1);
      if (++rot[static_cast<std::size_t>(c)] < n) break;
      rot[static_cast<std::size_t>(c)] = 0;
    }
    if (c == mu) break;
  }
  return best;
}

// --- shells ----------------------------------------------------------------

namespace {

// Flank test on an arbitrary (possibly peeled) word.
bool flanks(const GaussDiagram& g, const std::vector<Endpoint>& word, std::size_t pos) {
  const std::size_t n = word.size();
  if (n < 3) return false;
  const Endpoint& e = word[pos];
  const Endpoint& left = word[(pos + n - 1) % n];
  const Endpoint& right = word[(pos + 1) % n];
  if (left.chord != right.chord || left.chord == e.chord) return false;
  const EndKind first = endpoint_sign(g, e) > 0 ? EndKind::initial : EndKind::terminal;
  return left.kind == first;
}

}  // namespace

bool flanks_as_shell(const GaussDiagram& g, Location at) {
  return flanks(g, g.circle(at.circle), at.pos);
}

std::map<ChordId, ChordId> detect_shells(const GaussDiagram& g) {
  std::map<ChordId, ChordId> base;
  auto words = g.circles();
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& word : words) {
      for (std::size_t p = 0; p < word.size(); ++p) {
        if (!flanks(g, word, p)) continue;
        const std::size_t n = word.size();
        const ChordId shell = word[(p + 1) % n].chord;
        const ChordId target = word[p].chord;
        if (base.count(shell) != 0) continue;
        // Two chords flanking each other: keep only the first reading.
        if (auto it = base.find(target); it != base.end() && it->second == shell) continue;
        base[shell] = target;
        word.erase(std::remove_if(word.begin(), word.end(), [shell](const Endpoint& x) { return x.chord == shell; }),
                   word.end());
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  // Collapse chains so that every shell points at the chord it ultimately surrounds.
  for (auto& [shell, target] : base) {
    ChordId t = target;
    std::set<ChordId> visited{shell};
    while (base.count(t) != 0 && visited.insert(t).second) t = base.at(t);
    if (base.count(t) == 0) target = t;
  }
  return base;
}

// --- surgery / relabeling ----------------------------------------------------

GaussDiagram surgery(const GaussDiagram& g, ChordId gamma0) {
  if (g.mu() != 2) throw Error(Errc::wrong_component_count, "surgery needs a 2-component diagram");
  if (!g.has_chord(gamma0)) throw Error(Errc::unknown_chord_id, "no chord with id " + std::to_string(gamma0));
  if (g.is_self_chord(gamma0)) throw Error(Errc::not_a_nonself_chord, "surgery chord must join the two circles");

  GaussDiagram out(1);
  for (const auto& [id, ch] : g.chords())
    if (id != gamma0) out.add_chord(ch.sign, ch.label);
  // add_chord hands out fresh ids; map the survivors in order.
  std::map<ChordId, ChordId> remap;
  {
    auto it = out.chords().begin();
    for (const auto& [id, ch] : g.chords()) {
      if (id == gamma0) continue;
      remap[id] = it->first;
      ++it;
    }
  }
  auto& merged = out.mutable_circle(0);
  for (int c = 0; c < 2; ++c) {
    const auto& word = g.circle(c);
    std::size_t start = 0;
    for (std::size_t p = 0; p < word.size(); ++p)
      if (word[p].chord == gamma0) start = p;
    for (std::size_t i = 1; i < word.size(); ++i) {
      const auto& e = word[(start + i) % word.size()];
      merged.push_back({remap.at(e.chord), e.kind});
    }
  }
  return out;
}

GaussDiagram swap_components(const GaussDiagram& g) {
  if (g.mu() != 2) throw Error(Errc::wrong_component_count, "swap needs a 2-component diagram");
  GaussDiagram out = g;
  std::swap(out.mutable_circle(0), out.mutable_circle(1));
  return out;
}

}  // namespace shellmoves
