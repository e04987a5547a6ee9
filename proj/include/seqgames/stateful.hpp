#pragma once

#include "seqgames/coalgebra.hpp"
#include "seqgames/comonoid.hpp"

namespace seqgames {

/// A variable type: finite value set with a default.
struct VarSpec {
  std::vector<std::string> values;
  std::string default_value;
};

/// Var[X] = Sigma^X x <X>: one command factor per value (the write methods)
/// plus one <X> factor (the read method).  Factor i < |X| is Sigma for
/// values[i]; factor |X| is <X>.
GameExpr var_game(const VarSpec& v);

/// The cell state transformer !<X> -o Var[X] (/) !<X>: the pairing of the
/// write_x composites (discard the old state, emit a constant stream of x)
/// with read = alpha_<X>, followed by the product/sequoid distribution.
SequoidCoalgebra cell_transformer(const VarSpec& v, int budget = kDefaultBudget);

/// cell_init : !<X> -o !Var[X], the anamorphism of the transformer.
Strategy cell_init(const VarSpec& v, int budget = kDefaultBudget);

/// cell : I -o !Var[X], the default-value stream followed by cell_init.
Strategy cell(const VarSpec& v, int budget = kDefaultBudget);

/// The history-scanning oracle: answers q_x with *_x and the read question
/// with the most recently written value, or the default if none.
Strategy combinatorial_cell(const VarSpec& v);

/// Bounded-stack state transformer.  The state game stores whole stacks
/// (top first) up to depth K; push_x answers *_x and prepends x (saturating
/// at K); pop answers the head, or "empty" on the empty stack, and drops it.
/// The payload game is prod(Sigma_push_x..., <X + {empty}>).
SequoidCoalgebra stack_transformer(const VarSpec& v, int bound = 8,
                                   int budget = kDefaultBudget);

/// stack : I -o !StackGame, starting from the empty stack.
Strategy stack(const VarSpec& v, int bound = 8, int budget = kDefaultBudget);

/// The stack's visible payload game.
GameExpr stack_game(const VarSpec& v);

}  // namespace seqgames
