#include "shellmoves/cli.hpp"

#include "shellmoves/equiv.hpp"
#include "shellmoves/errors.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace shellmoves {

namespace {

constexpr int exit_usage = 64;
constexpr int exit_parse = 65;
constexpr int exit_violation = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

GaussDiagram load(const std::string& path) { return parse_gauss_code(slurp(path)); }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long parse_long(const std::string& s) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw Error(Errc::syntax, "bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw Error(Errc::syntax, "bad integer '" + s + "'");
  }
}

// `{n:k, ...}` or `[k0, k1, ...]`.
Coeffs parse_coeffs(const std::string& text) {
  const std::string s = trim(text);
  Coeffs out;
  if (s.size() < 2) throw Error(Errc::syntax, "expected {..} or [..], got '" + s + "'");
  const std::string body = s.substr(1, s.size() - 2);
  std::vector<std::string> items;
  std::stringstream ss(body);
  for (std::string item; std::getline(ss, item, ',');)
    if (!trim(item).empty()) items.push_back(trim(item));
  if (s.front() == '{' && s.back() == '}') {
    for (const auto& item : items) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw Error(Errc::syntax, "expected n:k, got '" + item + "'");
      const long n = parse_long(trim(item.substr(0, colon)));
      const long k = parse_long(trim(item.substr(colon + 1)));
      if (out.count(n)) throw Error(Errc::syntax, "index " + std::to_string(n) + " repeated");
      if (k != 0) out[n] = k;
    }
  } else if (s.front() == '[' && s.back() == ']') {
    for (std::size_t i = 0; i < items.size(); ++i) {
      const long k = parse_long(items[i]);
      if (k != 0) out[static_cast<long>(i)] = k;
    }
  } else {
    throw Error(Errc::syntax, "expected {..} or [..], got '" + s + "'");
  }
  return out;
}

struct RealizeSpec {
  bool knot = true;
  LaurentPoly w;
  LinkTarget link;
};

RealizeSpec parse_realize_spec(const std::string& text) {
  RealizeSpec spec;
  std::map<std::string, std::string> kv;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw Error(Errc::syntax, "expected 'key: value', got '" + line + "'");
    const std::string key = trim(line.substr(0, colon));
    if (kv.count(key)) throw Error(Errc::syntax, "key '" + key + "' repeated");
    kv[key] = trim(line.substr(colon + 1));
  }
  const auto kind = kv.find("kind");
  if (kind == kv.end()) throw Error(Errc::syntax, "missing 'kind: knot|link'");
  if (kind->second == "knot") {
    for (const auto& [k, v] : kv)
      if (k != "kind" && k != "W") throw Error(Errc::syntax, "unexpected key '" + k + "' for a knot");
    if (!kv.count("W")) throw Error(Errc::syntax, "missing 'W: <polynomial>'");
    spec.w = LaurentPoly::parse(kv["W"]);
    return spec;
  }
  if (kind->second != "link") throw Error(Errc::syntax, "kind must be knot or link");
  spec.knot = false;
  for (const auto& [k, v] : kv) {
    if (k == "kind") continue;
    if (k == "lambda")
      spec.link.lambda = parse_long(v);
    else if (k == "a")
      spec.link.a = parse_coeffs(v);
    else if (k == "b")
      spec.link.b = parse_coeffs(v);
    else if (k == "c")
      spec.link.c = parse_coeffs(v);
    else if (k == "d")
      spec.link.d = parse_coeffs(v);
    else if (k == "shell_sum")
      spec.link.shell_sum = parse_long(v);
    else
      throw Error(Errc::syntax, "unexpected key '" + k + "'");
  }
  if (!kv.count("lambda")) throw Error(Errc::syntax, "missing 'lambda: <n>'");
  return spec;
}

int cmd_invariants(const std::string& file, bool json, std::ostream& out) {
  const auto p = profile(load(file));
  out << (json ? profile_json(p) + "\n" : format_profile(p));
  return 0;
}

int cmd_normalize(const std::string& file, std::ostream& out) {
  GaussDiagram g = load(file);
  if (g.mu() == 2 && linking_data(g).lambda < 0) {
    out << "# components swapped (lambda < 0)\n";
    g = swap_components(g);
  }
  const auto p = profile(g);
  const long lambda = g.mu() == 2 ? std::get<LinkProfile>(p).lambda : 0;
  const SnailForm sf = canonical_form(p);
  out << format_snail_form(sf, lambda) << '\n';
  out << serialize(build_form(sf, lambda));
  return 0;
}

int cmd_equiv(const std::string& a, const std::string& b, std::ostream& out) {
  const Verdict v = s_equivalent(load(a), load(b));
  out << (v.equivalent ? "equivalent" : "not equivalent") << '\n';
  out << "reason: " << v.reason << '\n';
  return v.equivalent ? 0 : 1;
}

int cmd_realize(const std::string& file, std::ostream& out) {
  const RealizeSpec spec = parse_realize_spec(slurp(file));
  const GaussDiagram g = spec.knot ? realize_knot(spec.w) : realize_link(spec.link);
  out << serialize(g);
  return 0;
}

int cmd_fuzz(const std::string& file, int steps, std::uint64_t seed, std::size_t cap, const std::string& trace_out,
             std::ostream& out, std::ostream& err) {
  const GaussDiagram g = load(file);
  if (cap < g.chord_count()) throw UsageError("--cap is below the current chord count");
  const auto before = profile(g);
  const WalkResult walk = random_walk(g, steps, seed, cap);
  const auto after = profile(walk.diagram);
  if (!trace_out.empty()) {
    std::ofstream t(trace_out);
    if (!t) throw UsageError("cannot write " + trace_out);
    t << format_trace(walk.trace);
  }
  out << "moves: " << walk.trace.size() << '\n';
  out << "chords: " << g.chord_count() << " -> " << walk.diagram.chord_count() << '\n';
  if (before != after) {
    err << "invariant violation after random walk\nbefore:\n"
        << format_profile(before) << "after:\n"
        << format_profile(after) << "trace:\n"
        << format_trace(walk.trace);
    return exit_violation;
  }
  out << "profile preserved\n";
  return 0;
}

int cmd_witness(const std::string& a, const std::string& b, int depth, std::size_t cap, std::size_t budget,
                std::ostream& out) {
  const GaussDiagram g = load(a), h = load(b);
  std::optional<std::vector<MoveSite>> trace;
  try {
    trace = bfs_witness(g, h, depth, cap, budget);
  } catch (const Error& e) {
    if (e.code() != Errc::budget_exceeded) throw;
    out << "none within bounds (node budget exhausted)\n";
    return 1;
  }
  if (!trace) {
    out << "none within bounds\n";
    return 1;
  }
  out << format_trace(*trace);
  return 0;
}

int cmd_replay(const std::string& file, const std::string& trace, std::ostream& out) {
  const GaussDiagram g = load(file);
  const auto sites = parse_trace(slurp(trace));
  out << serialize(replay(g, sites));
  return 0;
}

int cmd_fmt(const std::string& file, std::ostream& out) {
  out << serialize(load(file));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gauss diagrams of virtual knots and 2-links up to shell moves", "shellmoves"};
  app.require_subcommand(1);

  std::string file_a, file_b, spec_file, trace_file, trace_out;
  bool json = false;
  int steps = 0, depth = 6;
  std::uint64_t seed = 0;
  std::size_t cap = 40, witness_cap = 8, budget = 200000;

  auto* inv = app.add_subcommand("invariants", "print the invariant profile");
  inv->add_option("file", file_a)->required();
  inv->add_flag("--json", json, "machine-readable output");

  auto* norm = app.add_subcommand("normalize", "print the canonical snail form and its diagram");
  norm->add_option("file", file_a)->required();

  auto* eq = app.add_subcommand("equiv", "decide S-equivalence (exit 0 if equivalent, 1 if not)");
  eq->add_option("a", file_a)->required();
  eq->add_option("b", file_b)->required();

  auto* real = app.add_subcommand("realize", "build a diagram with prescribed invariants");
  real->add_option("--spec", spec_file, "target description")->required();

  auto* fz = app.add_subcommand("fuzz", "random walk and check that the profile is unchanged");
  fz->add_option("file", file_a)->required();
  fz->add_option("--steps", steps)->required()->check(CLI::NonNegativeNumber);
  fz->add_option("--seed", seed)->required();
  fz->add_option("--cap", cap, "chord cap")->capture_default_str();
  fz->add_option("--trace", trace_out, "write the move trace here");

  auto* wit = app.add_subcommand("witness", "search for a move sequence between two diagrams");
  wit->add_option("a", file_a)->required();
  wit->add_option("b", file_b)->required();
  wit->add_option("--depth", depth)->capture_default_str()->check(CLI::NonNegativeNumber);
  wit->add_option("--cap", witness_cap, "chord cap")->capture_default_str();
  wit->add_option("--budget", budget, "stored-diagram limit")->capture_default_str();

  auto* rep = app.add_subcommand("replay", "apply a move trace and print the result");
  rep->add_option("file", file_a)->required();
  rep->add_option("trace", trace_file)->required();

  auto* fmt = app.add_subcommand("fmt", "print a diagram in canonical text form");
  fmt->add_option("file", file_a)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return exit_usage;
  }

  try {
    if (inv->parsed()) return cmd_invariants(file_a, json, out);
    if (norm->parsed()) return cmd_normalize(file_a, out);
    if (eq->parsed()) return cmd_equiv(file_a, file_b, out);
    if (real->parsed()) return cmd_realize(spec_file, out);
    if (fz->parsed()) return cmd_fuzz(file_a, steps, seed, cap, trace_out, out, err);
    if (wit->parsed()) return cmd_witness(file_a, file_b, depth, witness_cap, budget, out);
    if (rep->parsed()) return cmd_replay(file_a, trace_file, out);
    if (fmt->parsed()) return cmd_fmt(file_a, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (is_parse_error(e.code())) return exit_parse;
    if (e.code() == Errc::component_count_mismatch || e.code() == Errc::unsupported_component_count ||
        e.code() == Errc::wrong_component_count)
      return exit_usage;
    return 1;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_violation;
  }
  return exit_usage;
}

}  // namespace shellmoves
