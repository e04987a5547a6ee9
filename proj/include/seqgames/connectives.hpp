#pragma once

#include <vector>

#include "seqgames/composition.hpp"
#include "seqgames/strategy.hpp"

namespace seqgames {

/// Names of the structural maps.  All but wk come with a two-sided inverse.
enum class IsoName {
  kDist,    // A (x) B  ~  (A (/) B) x (B (/) A)
  kDec,     // (A x B) (/) C  ~  (A (/) C) x (B (/) C)
  kPassoc,  // (A (/) B) (/) C  ~  A (/) (B (x) C)
  kR,       // A (/) I  ~  A
  kDist0,   // I (/) C  ~  I
  kDec0,    // I  ~  1
  kSym,     // A (x) B  ~  B (x) A
  kAssoc,   // (A (x) B) (x) C  ~  A (x) (B (x) C)
  kLunit,   // I (x) A  ~  A
  kRunit,   // A (x) I  ~  A
  kWk       // A (x) B  ->  A (/) B   (projection, not invertible)
};

IsoName iso_from_name(const std::string& name);
std::string iso_to_name(IsoName n);

struct Iso {
  Strategy fwd;
  Strategy inv;  // for kWk: the formal reverse copycat, not a genuine inverse
};

/// Builds the named structural map on the given argument games.  Throws
/// std::invalid_argument on arity mismatch.
Iso structural_iso(IsoName n, const std::vector<GameExpr>& args);

/// Canonical shortcuts.
Strategy wk_strategy(const GameExpr& a, const GameExpr& b);  // A(x)B -o A(/)B
Iso dist_iso(const GameExpr& a, const GameExpr& b);
Iso dec_iso(const GameExpr& a, const GameExpr& b, const GameExpr& c);
/// n-ary dec: (prod A_i) (/) C  ~  prod (A_i (/) C).
Iso dec_iso_nary(const std::vector<GameExpr>& factors, const GameExpr& c);
Iso passoc_iso(const GameExpr& a, const GameExpr& b, const GameExpr& c);
Iso r_iso(const GameExpr& a);
Iso sym_iso(const GameExpr& a, const GameExpr& b);
Iso assoc_iso(const GameExpr& a, const GameExpr& b, const GameExpr& c);
Iso lunit_iso(const GameExpr& a);
Iso runit_iso(const GameExpr& a);

/// Product-side structural isomorphisms (used by the monoidal-coherence
/// suite; the Cartesian structure of the model).
Iso prod_assoc_iso(const GameExpr& a, const GameExpr& b, const GameExpr& c);
Iso prod_sym_iso(const GameExpr& a, const GameExpr& b);
Iso prod_lunit_iso(const GameExpr& a);  // 1 x A ~ A
Iso prod_runit_iso(const GameExpr& a);  // A x 1 ~ A

/// Functorial action of the tensor: interleaved play, each component handled
/// by its strategy.
Strategy map_tensor(const Strategy& sigma, const Strategy& tau);

/// Functorial action of the sequoid: requires sigma strict (the reply to an
/// opening move in its target must land in its source), otherwise P could be
/// forced to play in tau's source before sigma's source has been opened.
/// Throws std::invalid_argument when sigma is not strict.
Strategy map_seq(const Strategy& sigma, const Strategy& tau);

/// Pairing <sigma_i> : B -o prod(A_i) from strategies with a common source.
Strategy map_product(const std::vector<Strategy>& components);

/// Projection pr_i : prod(A) -o A_i.
Strategy projection(const std::vector<GameExpr>& factors, std::size_t i);

/// prod(X_i) -o prod(Y_i) acting factor-wise.
Strategy product_of(const std::vector<Strategy>& components);

/// Diagonal <id,id> : A -o A x A.
Strategy diagonal(const GameExpr& a);

/// Right-nested tensor/sequoid powers: pow(A, 0) = I, pow(A, n+1) = A * pow(A, n).
GameExpr tensor_power(const GameExpr& a, int n);
GameExpr seq_power(const GameExpr& a, int n);

/// Permutation copycat on the n-fold tensor power: factor j of the source
/// plays against factor perm[j] of the target.
Strategy tensor_permutation(const GameExpr& a, const std::vector<int>& perm);

/// wk^n : A^(x)n -o A^(/)n from the paper's recursion
/// wk^(n+1) = wk_{A,A^(x)n} ; (id_A (/) wk^n).
Strategy wk_power(const GameExpr& a, int n, int budget = kDefaultBudget);

/// eq_n : A^(/)n -o A^(x)n, the symmetrising copycat: the k-th tensor factor
/// opened on the right plays against sequoid slot k on the left.
Strategy eq_power(const GameExpr& a, int n);

}  // namespace seqgames
