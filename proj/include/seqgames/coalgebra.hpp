#pragma once

#include "seqgames/composition.hpp"
#include "seqgames/connectives.hpp"
#include "seqgames/strategy.hpp"

namespace seqgames {

/// A state transformer: step : B -o (A (/) B), with B the state game and A
/// the payload exposed once per unfolding stage.
struct SequoidCoalgebra {
  GameExpr state_game;
  GameExpr payload_game;
  Strategy step;
};

/// The algebra dual: step : (A (/) C) -o C.
struct SequoidAlgebra {
  GameExpr carrier;
  GameExpr payload_game;
  Strategy step;
};

/// The structure map alpha_A : !A -o A (/) !A, the copycat sending copy 0 to
/// the payload and copy n+1 to copy n of the inner !A.  It is strict.
Strategy alpha(const GameExpr& a);

/// The anamorphism of a state transformer: the strategy B -o !A that unfolds
/// step once per opened copy of A, threading the hidden state between
/// stages.  Stages are simulated on demand, never materialised.
Strategy ana(const SequoidCoalgebra& c, int budget = kDefaultBudget);

/// Lambek inverse (A (/) !A) -o !A, constructed as the anamorphism of
/// id_A (/) alpha_A.
Strategy lambek_inv(const GameExpr& a, int budget = kDefaultBudget);

/// The catamorphism of an algebra: !A -o C.  Available because the final
/// coalgebra is bifree in this finite-play setting.
Strategy cata(const SequoidAlgebra& a, int budget = kDefaultBudget);

/// Evaluation counit (A -o A) (/) A -o A: uncurried identity over the
/// sequoid host.
Strategy eval_counit(const GameExpr& a);

/// Fixed point via the bifree algebra: fix(f) = !name(f) ; cata(eval).
/// For unproductive f the composite chatters forever and respond raises
/// LivelockError once the budget runs out.
Strategy fix(const Strategy& f, int budget = kDefaultBudget);

}  // namespace seqgames
