#pragma once

#include <map>
#include <memory>

#include "seqgames/game.hpp"
#include "seqgames/ordinal.hpp"

namespace seqgames {

/// Supremum of play lengths of a game, as a CNF ordinal, computed
/// compositionally.  Supported shapes: the empty game (0), bounded base
/// games, products (max), tensor/sequoid/implication of two finite bounds
/// (sum), of two omega operands (w*2, the interleaving supremum), or of
/// omega with a finite bound (w+n); bang of a bounded game with a length-2
/// play (omega).  Anything else raises OrdinalError rather than guessing.
ord::CnfOrdinal length_sup(const GameExpr& e);

/// A win-condition formula: the shape of a game expression with each bang
/// node carrying a mode: the plain exponential, or the waning variant where
/// opening infinitely many copies is a win for P.
struct ZetaFormula {
  enum class BangMode { kPlain, kWaning };

  GameExpr shape;
  /// Modes by bang-node position in pre-order; missing entries mean kPlain.
  std::map<int, BangMode> bang_modes;

  static ZetaFormula plain(GameExpr shape) { return ZetaFormula{std::move(shape), {}}; }
};

/// A symbolic (possibly infinite) position, mirroring the formula's shape.
struct SymbolicPosition {
  enum class Kind { kLeaf, kPair, kChosen, kBang };

  Kind kind = Kind::kLeaf;
  Position play;                                  // kLeaf: a finite play
  std::vector<SymbolicPosition> children;         // kPair: two; kBang: opened copies
  int chosen_factor = -1;                         // kChosen
  bool infinitely_many_more = false;              // kBang: rest of the copies are
                                                  // opened and complete

  static SymbolicPosition leaf(Position play);
  static SymbolicPosition pair(SymbolicPosition l, SymbolicPosition r);
  static SymbolicPosition chosen(int factor, SymbolicPosition inner);
  static SymbolicPosition bang(std::vector<SymbolicPosition> copies,
                               bool infinitely_many_more);
};

/// Evaluates the win condition on a symbolic position: P wins a leaf play
/// that is complete (empty or ending with a P-move); connectives combine by
/// conjunction, implication flips through the left of -o, a bang is the
/// conjunction over all copies, and a waning bang with infinitely many
/// opened copies is P regardless.  Throws std::invalid_argument when the
/// position does not match the formula's shape.
Polarity zeta_eval(const ZetaFormula& f, const SymbolicPosition& pos);

}  // namespace seqgames
