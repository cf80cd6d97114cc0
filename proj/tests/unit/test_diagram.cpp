#include "doctest.h"

#include "../support/support.hpp"

#include "shellmoves/diagram.hpp"
#include "shellmoves/errors.hpp"

using namespace shellmoves;

namespace {

Errc parse_code(const std::string& text) {
  try {
    parse_gauss_code(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parsed: " << text);
  return Errc::syntax;
}

}  // namespace

TEST_CASE("parse and serialize round trip") {
  const std::string text =
      "circles: 2\n"
      "chord g +\n"
      "chord s -\n"
      "circle 1: g< s< s>\n"
      "circle 2: g>\n";
  const GaussDiagram g = parse_gauss_code(text);
  CHECK(g.mu() == 2);
  CHECK(g.chord_count() == 2);
  CHECK(serialize(g) == text);
  CHECK(serialize(parse_gauss_code("circles: 2 / chord g + / chord s - / circle 2: g> / circle 1: g< s< s>")) == text);
}

TEST_CASE("comments and blank circles") {
  const GaussDiagram g = parse_gauss_code("# nothing here\ncircles: 1\ncircle 1:\n");
  CHECK(g.empty());
  CHECK(g.circle(0).empty());
}

TEST_CASE("parse errors carry their category") {
  CHECK(parse_code("circles: 1 / chord g + / chord g - / circle 1: g< g>") == Errc::duplicate_chord);
  CHECK(parse_code("circles: 1 / chord g * / circle 1: g< g>") == Errc::bad_sign);
  CHECK(parse_code("circles: 1 / chord g + / circle 1: g< h>") == Errc::unknown_chord_id);
  CHECK(parse_code("circles: 1 / chord g + / circle 1: g< g< g>") == Errc::duplicate_endpoint);
  CHECK(parse_code("circles: 1 / chord g + / circle 1: g<") == Errc::missing_endpoint);
  CHECK(parse_code("circles: 2 / chord g + / circle 1: g< g>") == Errc::circle_count_mismatch);
  CHECK(parse_code("circles: 1 / chord g + / circle 3: g< g>") == Errc::circle_count_mismatch);
  CHECK(is_parse_error(parse_code("chord g +")));
  CHECK(is_parse_error(parse_code("circles: 1 / chord g + / circle 1: g? g>")));
}

TEST_CASE("endpoint signs") {
  const GaussDiagram g = parse_gauss_code("circles: 1 / chord p + / chord m - / circle 1: p< m< p> m>");
  CHECK(endpoint_sign(g, {0, EndKind::initial}) == -1);
  CHECK(endpoint_sign(g, {0, EndKind::terminal}) == 1);
  CHECK(endpoint_sign(g, {1, EndKind::initial}) == 1);
  CHECK(endpoint_sign(g, {1, EndKind::terminal}) == -1);
  CHECK(circle_sign_sum(g, 0) == 0);
}

TEST_CASE("endpoint sign sums on a link are -lambda and +lambda") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const GaussDiagram g = support::random_diagram(rng, 2, 8);
    long lambda = 0;
    for (const auto& [id, ch] : g.chords()) {
      const auto [ci, ct] = g.chord_type(id);
      if (ci != ct) lambda += (ci == 0 ? 1 : -1) * value(ch.sign);
    }
    CHECK(circle_sign_sum(g, 0) == -lambda);
    CHECK(circle_sign_sum(g, 1) == lambda);
  }
}

TEST_CASE("canonical key ignores rotation and labels") {
  const GaussDiagram a = parse_gauss_code("circles: 1 / chord x + / chord y - / circle 1: x< y< x> y>");
  const GaussDiagram b = parse_gauss_code("circles: 1 / chord q - / chord r + / circle 1: r> q> r< q<");
  const GaussDiagram c = parse_gauss_code("circles: 1 / chord x + / chord y + / circle 1: x< y< x> y>");
  CHECK(canonical_key(a) == canonical_key(b));
  CHECK(canonical_key(a) != canonical_key(c));
  CHECK_FALSE(isomorphic_by_label(a, b));
  CHECK(isomorphic_by_label(a, parse_gauss_code("circles: 1 / chord x + / chord y - / circle 1: y> x< y< x>")));
}

TEST_CASE("canonical key keeps circle numbering") {
  const GaussDiagram a = parse_gauss_code("circles: 2 / chord g + / circle 1: g< / circle 2: g>");
  CHECK(canonical_key(a) != canonical_key(swap_components(a)));
  CHECK(canonical_key(swap_components(swap_components(a))) == canonical_key(a));
}

TEST_CASE("shell detection peels nested layers") {
  const GaussDiagram g = parse_gauss_code(
      "circles: 1 / chord g + / chord s1 - / chord s2 - / circle 1: g< s1< s2< g> s2> s1>");
  const auto shells = detect_shells(g);
  CHECK(shells.size() == 2);
  CHECK(shells.at(2) == 0);
  CHECK(shells.at(1) == 0);
  CHECK(flanks_as_shell(g, Location{0, 3}));
  CHECK(flanks_as_shell(g, Location{0, 0}));  // s1> g< s1< cyclically
  CHECK_FALSE(flanks_as_shell(g, Location{0, 1}));
}

TEST_CASE("shell orientation follows the endpoint sign") {
  // terminal endpoint of a positive chord has sign +, so the shell runs s< g> s>
  CHECK(detect_shells(parse_gauss_code("circles: 1 / chord g + / chord s - / circle 1: g< s< g> s>")).size() == 1);
  CHECK(detect_shells(parse_gauss_code("circles: 1 / chord g + / chord s - / circle 1: g< s> g> s<")).empty());
}

TEST_CASE("surgery merges the circles and drops the chord") {
  const GaussDiagram g =
      parse_gauss_code("circles: 2 / chord g + / chord h + / chord s - / circle 1: s< g< h< s> / circle 2: h> g>");
  const GaussDiagram m = surgery(g, 0);
  CHECK(m.mu() == 1);
  CHECK(m.chord_count() == 2);
  for (const auto& [id, ch] : m.chords()) CHECK(ch.label != "g");
  CHECK(m.circle(0).size() == 4);
  CHECK_THROWS_AS(surgery(g, 2), Error);
}
