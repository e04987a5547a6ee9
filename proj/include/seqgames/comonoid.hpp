#pragma once

#include "seqgames/coalgebra.hpp"
#include "seqgames/composition.hpp"
#include "seqgames/connectives.hpp"

namespace seqgames {

/// kappa_{A,B} : !A (x) !B -o (A (/) (!A (x) !B)) x (B (/) (!A (x) !B)),
/// the four-stage composite dist; (alpha (/) id) x (alpha (/) id);
/// passoc x passoc; id x (id (/) sym).
Strategy kappa(const GameExpr& a, const GameExpr& b, int budget = kDefaultBudget);

/// The strong-monoidal mediator !A (x) !B -o !(A x B), as the anamorphism of
/// kappa followed by the product/sequoid distribution.
Strategy int_fwd(const GameExpr& a, const GameExpr& b, int budget = kDefaultBudget);

/// Hand-written copycat oracle for int_fwd: opens a fresh copy of A on the
/// left whenever a copy of A x B choosing the A factor is opened on the
/// right, and similarly for B.
Strategy int_fwd_oracle(const GameExpr& a, const GameExpr& b);

/// Inverse mediator !(A x B) -o !A (x) !B, as the catamorphism of the
/// inverted step.
Strategy int_inv(const GameExpr& a, const GameExpr& b, int budget = kDefaultBudget);

/// sigma_A : !A -o !(A x A), anamorphism of alpha; diagonal; distribution.
Strategy sigma(const GameExpr& a, int budget = kDefaultBudget);

/// Comultiplication mu_A = sigma_A ; int_inv : !A -o !A (x) !A.
Strategy mu(const GameExpr& a, int budget = kDefaultBudget);

/// Alternative comultiplication built as a catamorphism; behaviourally
/// equivalent to mu (checked by the comonoid suite).
Strategy mu_via_cata(const GameExpr& a, int budget = kDefaultBudget);

/// Dereliction der_A : !A -o A, reading the first copy.
Strategy der(const GameExpr& a, int budget = kDefaultBudget);

/// Counit eta_A : !A -o I (the unique morphism to the unit).
Strategy eta(const GameExpr& a);

/// eps : I -o !I, an isomorphism of empty games.
Strategy eps_strategy();

/// Functorial action !f : !A -o !B, anamorphism of mu; der (x) id; f (x) id; wk.
Strategy bang_map(const Strategy& f, int budget = kDefaultBudget);

/// A commutative comonoid presentation used by promotion.
struct ComonoidPresentation {
  GameExpr carrier;
  Strategy comult;  // carrier -o carrier (x) carrier
  Strategy counit;  // carrier -o I
};

/// Comonoid for (!A, mu, eta).
ComonoidPresentation bang_comonoid(const GameExpr& a, int budget = kDefaultBudget);
/// The trivial comonoid on I.
ComonoidPresentation trivial_comonoid();

/// Checks the comonoid laws (coassociativity, cocommutativity, both counit
/// triangles) up to the given depth.
struct ComonoidLawReport {
  bool ok = true;
  std::string failed_law;
  std::optional<Counterexample> counterexample;
};
ComonoidLawReport check_comonoid_laws(const ComonoidPresentation& cm, int depth,
                                      int budget = kDefaultBudget);

/// Promotion f! : B -o !A of f : B -o A along a commutative comonoid on B,
/// the anamorphism of comult; f (x) id; wk.  Throws std::invalid_argument
/// when the comonoid laws fail at law_depth.
Strategy promote(const Strategy& f, const ComonoidPresentation& cm,
                 int law_depth = 4, int budget = kDefaultBudget);

struct SymPowerReport {
  bool ok = true;
  std::vector<std::string> failures;
};

struct SymPower {
  Strategy wk_n;  // A^(x)n -o A^(/)n
  Strategy eq_n;  // A^(/)n -o A^(x)n
  SymPowerReport report;
};

/// Symmetric tensor powers: builds wk^n and eq_n and verifies, at the given
/// depth, eq_n; sym^pi; wk^n = id for every permutation pi, the equalising
/// property eq_n; sym^pi = eq_n, and its preservation under B (x) -.
/// Throws ResourceError for n > 4.
SymPower sym_power(const GameExpr& a, int n, int depth,
                   int budget = kDefaultBudget);

}  // namespace seqgames
