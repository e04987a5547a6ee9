#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seqgames/expr.hpp"

namespace seqgames {

enum class Polarity { O, P };
inline Polarity flip(Polarity p) { return p == Polarity::O ? Polarity::P : Polarity::O; }
inline char to_char(Polarity p) { return p == Polarity::O ? 'O' : 'P'; }

/// One step of a move address: l/r select a binary connective side,
/// i:<n> a product factor, c:<n> a bang copy.
struct Tag {
  enum class Kind : std::uint8_t { L, R, Index, Copy };
  Kind kind = Kind::L;
  int n = 0;

  static Tag l() { return {Kind::L, 0}; }
  static Tag r() { return {Kind::R, 0}; }
  static Tag index(int n) { return {Kind::Index, n}; }
  static Tag copy(int n) { return {Kind::Copy, n}; }

  friend bool operator==(const Tag&, const Tag&) = default;
  friend std::strong_ordering operator<=>(const Tag& a, const Tag& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    return a.n <=> b.n;
  }
};

/// A move of a compound game: the address of the base game it lives in,
/// plus the base-move name.
struct Move {
  std::vector<Tag> path;
  std::string base;

  Move prefixed(Tag t) const {
    Move m = *this;
    m.path.insert(m.path.begin(), t);
    return m;
  }
  /// Strips the leading tag (the move as seen by the addressed component).
  Move stripped() const {
    Move m = *this;
    m.path.erase(m.path.begin());
    return m;
  }

  friend bool operator==(const Move&, const Move&) = default;
  friend std::strong_ordering operator<=>(const Move& a, const Move& b) {
    if (auto c = a.path <=> b.path; c != 0) return c;
    return a.base <=> b.base;
  }
};

using Position = std::vector<Move>;
using PositionView = std::span<const Move>;

/// Textual move encoding: address tags joined by dots, base move last,
/// e.g. "r.c:3.q", "l.i:1.x".
std::string to_string(const Move& m);
Move parse_move(const std::string& text);
std::string to_string(PositionView s);

/// Polarity of a move in the given game, independent of position.  The left
/// side of a linear implication flips polarity.  Throws std::invalid_argument
/// if the move does not address a move of the game.
Polarity polarity_of(const GameExpr& game, const Move& m);

/// True iff m extends s to a legal position of the game.
bool move_legal(const GameExpr& game, PositionView s, const Move& m);

/// Legality oracle: alternation starting with O at every connective level,
/// plus each connective's switching discipline.
bool is_position(const GameExpr& game, PositionView s);

/// Exactly the moves m with is_position(s + m), in canonical sorted order.
std::vector<Move> next_moves(const GameExpr& game, PositionView s);

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All positions of length <= depth, breadth first.  Throws ResourceError
/// when the expansion exceeds node_budget positions.
std::vector<Position> positions_up_to(const GameExpr& game, int depth,
                                      std::size_t node_budget = 1 << 20);

/// Convenience constructors mirroring the base games of the model.
GameExpr flat_game(std::vector<std::string> values);
GameExpr unit_game();

/// Trace file format: one move per line, "O <move>" / "P <move>".
std::string format_trace(const GameExpr& game, PositionView s);
Position parse_trace(const std::string& text);

}  // namespace seqgames
