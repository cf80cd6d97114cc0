#pragma once

// Reidemeister moves R1-R3 and shell moves S1/S2 on Gauss diagrams.
//
// Sites are positional: they name a circle and an offset in the stored word of
// the diagram they were found on, so a recorded trace can be replayed from the
// same starting diagram.

#include "shellmoves/diagram.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shellmoves {

enum class MoveKind : std::uint8_t { r1_insert, r1_delete, r2_insert, r2_delete, r3, s1, s2_insert, s2_delete };

inline constexpr MoveKind all_move_kinds[] = {MoveKind::r1_insert, MoveKind::r1_delete, MoveKind::r2_insert,
                                              MoveKind::r2_delete, MoveKind::r3,        MoveKind::s1,
                                              MoveKind::s2_insert, MoveKind::s2_delete};

const char* to_string(MoveKind k) noexcept;
std::optional<MoveKind> move_kind_from_string(std::string_view s);
bool is_insertion(MoveKind k) noexcept;
/// Chords added by an insertion kind (0 for the others).
int chords_added(MoveKind k) noexcept;

/// One application point of a move.
///
///   R1_insert  at = gap (new tokens go before `at.pos`); sign; flag = terminal first
///   R1_delete  at = first token of the adjacent pair
///   R2_insert  at = gap for the tails `x< y<`, to = gap for the heads; sign = sign of x
///              (y gets the opposite); flag = heads antiparallel (`y> x>`);
///              heads_first breaks the tie when both gaps coincide
///   R2_delete  at = first of the two adjacent initial endpoints
///   R3         at = first token of the anchor pair; flag = right-hand pattern
///   S1         at = endpoint currently surrounded by the innermost shell
///   S2_insert  at = first of the two adjacent endpoints
///   S2_delete  at = first token of the six-token block
struct MoveSite {
  MoveKind kind = MoveKind::r1_insert;
  Location at;
  Location to;
  Sign sign = Sign::plus;
  bool flag = false;
  bool heads_first = false;

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

inline constexpr std::size_t no_chord_cap = std::numeric_limits<std::size_t>::max();

/// Every site of the given kind. Insertion kinds are omitted entirely when they
/// would push the chord count above `chord_cap`.
std::vector<MoveSite> find_move_sites(const GaussDiagram& g, MoveKind kind, std::size_t chord_cap = no_chord_cap);

/// All sites of all kinds, in kind order.
std::vector<MoveSite> find_all_move_sites(const GaussDiagram& g, std::size_t chord_cap = no_chord_cap);

/// Rewrites `g` at `site`. Throws StaleSite if the local pattern is absent.
GaussDiagram apply_move(const GaussDiagram& g, const MoveSite& site);

struct WalkResult {
  GaussDiagram diagram;
  std::vector<MoveSite> trace;
};

/// `steps` moves, each chosen by picking a kind uniformly among those with at
/// least one site and then a site of that kind uniformly. Stops early if no
/// kind applies. Deterministic in `seed`.
WalkResult random_walk(const GaussDiagram& g, int steps, std::uint64_t seed, std::size_t chord_cap);

/// `<kind> @ <circle>:<pos> [key=value ...]`, circles 1-based.
std::string format_site(const MoveSite& site);
MoveSite parse_site(std::string_view line);

std::string format_trace(const std::vector<MoveSite>& trace);
std::vector<MoveSite> parse_trace(std::string_view text);

GaussDiagram replay(const GaussDiagram& g, const std::vector<MoveSite>& trace);

}  // namespace shellmoves
