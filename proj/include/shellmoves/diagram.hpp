#pragma once

// Gauss diagrams: oriented circles carrying signed, oriented chords.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shellmoves {

using ChordId = std::uint32_t;

enum class Sign : int { minus = -1, plus = 1 };

constexpr int value(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign operator-(Sign s) noexcept { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr Sign operator*(Sign a, Sign b) noexcept { return a == b ? Sign::plus : Sign::minus; }
constexpr Sign sign_of(long long x) noexcept { return x < 0 ? Sign::minus : Sign::plus; }

enum class EndKind : std::uint8_t { initial, terminal };

constexpr EndKind opposite(EndKind k) noexcept {
  return k == EndKind::initial ? EndKind::terminal : EndKind::initial;
}

struct Endpoint {
  ChordId chord = 0;
  EndKind kind = EndKind::initial;

  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct Chord {
  ChordId id = 0;
  Sign sign = Sign::plus;
  std::string label;
};

/// Circle index plus offset into that circle's stored word.
struct Location {
  int circle = 0;
  std::size_t pos = 0;

  friend bool operator==(const Location&, const Location&) = default;
};

/// A Gauss diagram with `mu` circles, numbered 0..mu-1 internally (1-based in text).
///
/// Each circle is a cyclic word of endpoints; the stored rotation is arbitrary.
/// Every chord owns exactly one initial and one terminal endpoint somewhere on
/// the circles. Mutators are building blocks for parsers, moves and
/// constructors; they do not re-validate.
class GaussDiagram {
 public:
  explicit GaussDiagram(int mu = 1);

  int mu() const noexcept { return static_cast<int>(circles_.size()); }
  const std::vector<Endpoint>& circle(int i) const { return circles_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::vector<Endpoint>>& circles() const noexcept { return circles_; }
  const std::map<ChordId, Chord>& chords() const noexcept { return chords_; }
  std::size_t chord_count() const noexcept { return chords_.size(); }
  bool empty() const noexcept { return chords_.empty(); }

  bool has_chord(ChordId id) const { return chords_.count(id) != 0; }
  const Chord& chord(ChordId id) const;
  Sign chord_sign(ChordId id) const { return chord(id).sign; }

  Location locate(Endpoint e) const;
  Location initial_location(ChordId id) const { return locate({id, EndKind::initial}); }
  Location terminal_location(ChordId id) const { return locate({id, EndKind::terminal}); }

  bool is_self_chord(ChordId id) const;
  /// Circle of the initial and terminal endpoints.
  std::pair<int, int> chord_type(ChordId id) const;

  /// Token at a cyclic offset of circle c.
  const Endpoint& at(int c, std::ptrdiff_t pos) const;

  // --- building blocks -------------------------------------------------
  ChordId add_chord(Sign sign, std::string label = {});
  void remove_chord(ChordId id);
  void set_sign(ChordId id, Sign sign);
  std::vector<Endpoint>& mutable_circle(int i) { return circles_.at(static_cast<std::size_t>(i)); }
  void append_circle() { circles_.emplace_back(); }

 private:
  std::vector<std::vector<Endpoint>> circles_;
  std::map<ChordId, Chord> chords_;
  ChordId next_id_ = 0;
};

/// −sign(chord) on the initial endpoint, +sign(chord) on the terminal one.
int endpoint_sign(const GaussDiagram& g, Endpoint e);

/// Parses the line-oriented Gauss-code format:
///
///     circles: 2
///     chord g +
///     circle 1: g<
///     circle 2: g>
///
/// `#` starts a comment; ` / ` may be used instead of a newline.
GaussDiagram parse_gauss_code(std::string_view text);

/// Text form accepted by parse_gauss_code, chords declared in id order.
std::string serialize(const GaussDiagram& g);

/// Same chords (by label), signs and cyclic words up to rotation of each circle.
bool isomorphic_by_label(const GaussDiagram& a, const GaussDiagram& b);

/// Rotation/relabeling-invariant key: two diagrams have the same key iff they
/// are isomorphic as Gauss diagrams with numbered circles.
std::string canonical_key(const GaussDiagram& g);

/// Shells (self-chords flanking an endpoint of another chord, oriented by that
/// endpoint's sign), mapped to the chord whose endpoint they surround. Nested
/// shells are found by peeling the innermost layer repeatedly.
std::map<ChordId, ChordId> detect_shells(const GaussDiagram& g);

/// True if the self-chord `shell` directly flanks endpoint location `at` with the
/// orientation forced by that endpoint's sign.
bool flanks_as_shell(const GaussDiagram& g, Location at);

/// Merges the two circles of a 2-component diagram along the nonself-chord
/// `gamma0`, which disappears; every other chord survives unchanged.
GaussDiagram surgery(const GaussDiagram& g, ChordId gamma0);

/// Exchanges circles 1 and 2.
GaussDiagram swap_components(const GaussDiagram& g);

/// Sum of endpoint signs over one circle.
long circle_sign_sum(const GaussDiagram& g, int circle);

}  // namespace shellmoves
