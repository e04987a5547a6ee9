#pragma once

#include <functional>
#include <optional>
#include <string>

#include "seqgames/game.hpp"

namespace seqgames {

/// A deterministic strategy for its host game, represented as a pure response
/// function from O-positions to an optional P-move.  Absence of a response
/// models partiality.  Prefix closure, determinism and O-reply closure are
/// structural under this representation.
struct Strategy {
  GameExpr host;
  std::string name;
  std::function<std::optional<Move>(const Position&)> respond;

  std::optional<Move> operator()(const Position& s) const { return respond(s); }
};

struct HostMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The strategy {epsilon}: never responds.
Strategy empty_strategy(GameExpr host, std::string name = "undefined");

/// Mirror copycat on A -o A.
Strategy copycat(const GameExpr& a);

/// <x>: I -o <X>, answering the opening question with x.
Strategy flat_value_strategy(const GameExpr& flat, const std::string& value);

/// OK = <*>: I -o Sigma.
Strategy ok_strategy();

/// The unique morphism A -> I (the host limp(A, I) has no positions to
/// respond at).
Strategy terminal_strategy(const GameExpr& a);

/// Copycat defined by a move translation.  The translation receives the
/// O-move just played together with the full host position (some structural
/// maps need the position to resolve product factors) and returns the mirror
/// move.  Used for identities, structural isomorphisms and projections.
Strategy translation_copycat(
    GameExpr host, std::string name,
    std::function<Move(const Move&, const Position&)> translate);

/// Same strategy over a different host whose moves are a subset of the
/// original host's (e.g. a sequoid restriction of a tensor host).
Strategy restrict_host(Strategy s, GameExpr new_host);

struct ValidationReport {
  bool ok = true;
  std::optional<Position> failing;
  std::string message;
};

/// Walks every position reachable by playing the strategy against all legal
/// O-moves up to the given depth and checks each response is legal.
ValidationReport validate_strategy(const Strategy& s, int depth);

/// A strategy on A -o B is strict when its reply (if any) to every opening
/// move in B is a move in A.  Identities and all the structural copycats are
/// strict; strategies answering inside B are not.
bool is_strict(const Strategy& s);

/// Host pieces of a linear-implication host; throws HostMismatchError if the
/// host is not a Limp.
const GameExpr& host_source(const Strategy& s);
const GameExpr& host_target(const Strategy& s);

}  // namespace seqgames
