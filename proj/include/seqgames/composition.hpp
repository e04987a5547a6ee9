#pragma once

#include <optional>
#include <string>

#include "seqgames/strategy.hpp"

namespace seqgames {

inline constexpr int kDefaultBudget = 64;
inline constexpr int kDefaultDepth = 6;

/// Raised when the hidden interaction exceeds the internal-move budget while
/// computing one visible response.
struct LivelockError : std::runtime_error {
  LivelockError(std::string msg, Position at)
      : std::runtime_error(std::move(msg)), position(std::move(at)) {}
  Position position;
};

/// Strategy composition by interaction and hiding: sigma : A -o B and
/// tau : B -o C yield a strategy on A -o C.  Each visible response is
/// computed by replaying the visible position and letting the two strategies
/// exchange hidden B-moves, at most `budget` of them per visible move.
Strategy compose(const Strategy& sigma, const Strategy& tau,
                 int budget = kDefaultBudget);

/// How equivalence checking treats a LivelockError from either side.
enum class DivergencePolicy {
  kError,         // rethrow: a budget hit is a distinguished failure
  kTreatAsBottom  // count the diverging side as "no response"
};

struct Counterexample {
  Position position;
  std::optional<Move> lhs;
  std::optional<Move> rhs;
  bool lhs_diverged = false;
  bool rhs_diverged = false;
};

struct EquivResult {
  bool equivalent = true;
  std::optional<Counterexample> counterexample;
};

/// Exhaustively explores every O-move sequence of total visible length <= d
/// (responses included in the count) and reports the first disagreement in
/// move-address order, which is the lexicographically least failing
/// exploration.
EquivResult equiv_up_to(const Strategy& sigma, const Strategy& tau, int depth,
                        DivergencePolicy policy = DivergencePolicy::kError);

/// Failure-report serialization: game expr, depth, trace in the trace-file
/// format, expected/actual response.
std::string format_counterexample(const GameExpr& host, int depth,
                                  const Counterexample& cex);

/// Monoidal-closed currying: (A (x) B) -o C  <->  A -o (B -o C).
/// Pure retagging of move addresses; curry and uncurry are exact inverses.
Strategy curry(const Strategy& s);
Strategy uncurry(const Strategy& s);

}  // namespace seqgames
