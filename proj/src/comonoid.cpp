#include "seqgames/comonoid.hpp"

#include <algorithm>

namespace seqgames {

namespace {

Strategy chain(std::vector<Strategy> stages, int budget, const std::string& name) {
  Strategy out = stages.at(0);
  for (std::size_t i = 1; i < stages.size(); ++i) out = compose(out, stages[i], budget);
  out.name = name;
  return out;
}

}  // namespace

Strategy kappa(const GameExpr& a, const GameExpr& b, int budget) {
  GameExpr ba = GameExpr::bang(a);
  GameExpr bb = GameExpr::bang(b);
  GameExpr s = GameExpr::tensor(ba, bb);
  Strategy st1 = dist_iso(ba, bb).fwd;
  Strategy st2 = product_of(
      {map_seq(alpha(a), copycat(bb)), map_seq(alpha(b), copycat(ba))});
  Strategy st3 = product_of(
      {passoc_iso(a, ba, bb).fwd, passoc_iso(b, bb, ba).fwd});
  Strategy st4 = product_of({copycat(GameExpr::seq(a, s)),
                             map_seq(copycat(b), sym_iso(bb, ba).fwd)});
  return chain({st1, st2, st3, st4}, budget, "kappa");
}

namespace {

Strategy kappa_inv(const GameExpr& a, const GameExpr& b, int budget) {
  GameExpr ba = GameExpr::bang(a);
  GameExpr bb = GameExpr::bang(b);
  GameExpr s = GameExpr::tensor(ba, bb);
  Strategy st4 = product_of({copycat(GameExpr::seq(a, s)),
                             map_seq(copycat(b), sym_iso(ba, bb).fwd)});
  Strategy st3 = product_of(
      {passoc_iso(a, ba, bb).inv, passoc_iso(b, bb, ba).inv});
  Strategy st2 = product_of({map_seq(lambek_inv(a, budget), copycat(bb)),
                             map_seq(lambek_inv(b, budget), copycat(ba))});
  Strategy st1 = dist_iso(ba, bb).inv;
  return chain({st4, st3, st2, st1}, budget, "kappa_inv");
}

}  // namespace

Strategy int_fwd(const GameExpr& a, const GameExpr& b, int budget) {
  GameExpr s = GameExpr::tensor(GameExpr::bang(a), GameExpr::bang(b));
  Strategy step =
      chain({kappa(a, b, budget), dec_iso(a, b, s).inv}, budget, "int_step");
  SequoidCoalgebra c{s, GameExpr::prod({a, b}), step};
  Strategy out = ana(c, budget);
  out.name = "int";
  return out;
}

Strategy int_fwd_oracle(const GameExpr& a, const GameExpr& b) {
  GameExpr s = GameExpr::tensor(GameExpr::bang(a), GameExpr::bang(b));
  GameExpr host = GameExpr::limp(s, GameExpr::bang(GameExpr::prod({a, b})));
  return translation_copycat(
      host, "int_oracle", [](const Move& m, const Position& pos) -> Move {
        // Factor choice of each opened right copy, in copy order.
        std::vector<int> factor_of;
        for (const Move& mv : pos) {
          if (mv.path.front().kind != Tag::Kind::R) continue;
          const int n = mv.path.at(1).n;
          if (static_cast<int>(factor_of.size()) <= n)
            factor_of.resize(static_cast<std::size_t>(n) + 1, -1);
          if (factor_of[static_cast<std::size_t>(n)] < 0)
            factor_of[static_cast<std::size_t>(n)] = mv.path.at(2).n;
        }
        auto count_same_before = [&](int n, int f) {
          int k = 0;
          for (int i = 0; i < n; ++i)
            if (factor_of[static_cast<std::size_t>(i)] == f) ++k;
          return k;
        };
        if (m.path.front().kind == Tag::Kind::R) {
          const int n = m.path.at(1).n;
          const int f = m.path.at(2).n;
          const int k = count_same_before(n, f);
          Move core = m.stripped().stripped().stripped();
          return core.prefixed(Tag::copy(k))
              .prefixed(f == 0 ? Tag::l() : Tag::r())
              .prefixed(Tag::l());
        }
        const int f = m.path.at(1).kind == Tag::Kind::L ? 0 : 1;
        const int k = m.path.at(2).n;
        // the k-th right copy that chose factor f
        int n = -1, seen = 0;
        for (std::size_t i = 0; i < factor_of.size(); ++i) {
          if (factor_of[i] == f && seen++ == k) {
            n = static_cast<int>(i);
            break;
          }
        }
        if (n < 0) throw std::invalid_argument("int oracle: unbound left copy");
        Move core = m.stripped().stripped().stripped();
        return core.prefixed(Tag::index(f)).prefixed(Tag::copy(n)).prefixed(Tag::r());
      });
}

Strategy int_inv(const GameExpr& a, const GameExpr& b, int budget) {
  GameExpr s = GameExpr::tensor(GameExpr::bang(a), GameExpr::bang(b));
  Strategy step = chain({dec_iso(a, b, s).fwd, kappa_inv(a, b, budget)}, budget,
                        "int_inv_step");
  SequoidAlgebra alg{s, GameExpr::prod({a, b}), step};
  Strategy out = cata(alg, budget);
  out.name = "int_inv";
  return out;
}

Strategy sigma(const GameExpr& a, int budget) {
  GameExpr ba = GameExpr::bang(a);
  Strategy step = chain({alpha(a), diagonal(GameExpr::seq(a, ba)),
                         dec_iso(a, a, ba).inv},
                        budget, "sigma_step");
  SequoidCoalgebra c{ba, GameExpr::prod({a, a}), step};
  Strategy out = ana(c, budget);
  out.name = "sigma";
  return out;
}

Strategy mu(const GameExpr& a, int budget) {
  Strategy out = compose(sigma(a, budget), int_inv(a, a, budget), budget);
  out.name = "mu";
  return out;
}

Strategy mu_via_cata(const GameExpr& a, int budget) {
  GameExpr ba = GameExpr::bang(a);
  GameExpr s = GameExpr::tensor(ba, ba);
  GameExpr head = GameExpr::seq(a, s);
  Strategy comp1 = chain({passoc_iso(a, ba, ba).inv,
                          map_seq(lambek_inv(a, budget), copycat(ba))},
                         budget, "fold_fst");
  Strategy comp2 = chain({map_seq(copycat(a), sym_iso(ba, ba).fwd),
                          passoc_iso(a, ba, ba).inv,
                          map_seq(lambek_inv(a, budget), copycat(ba))},
                         budget, "fold_snd");
  Strategy step = chain({diagonal(head), product_of({comp1, comp2}),
                         dist_iso(ba, ba).inv},
                        budget, "mu_fold_step");
  SequoidAlgebra alg{s, a, step};
  Strategy out = cata(alg, budget);
  out.name = "mu_via_cata";
  return out;
}

Strategy der(const GameExpr& a, int budget) {
  GameExpr ba = GameExpr::bang(a);
  Strategy out = chain({alpha(a), map_seq(copycat(a), terminal_strategy(ba)),
                        r_iso(a).fwd},
                       budget, "der");
  return out;
}

Strategy eta(const GameExpr& a) {
  Strategy s = terminal_strategy(GameExpr::bang(a));
  s.name = "eta";
  return s;
}

Strategy eps_strategy() {
  return empty_strategy(
      GameExpr::limp(GameExpr::unit(), GameExpr::bang(GameExpr::unit())), "eps");
}

Strategy bang_map(const Strategy& f, int budget) {
  const GameExpr& a = host_source(f);
  const GameExpr& b = host_target(f);
  GameExpr ba = GameExpr::bang(a);
  Strategy step = chain({mu(a, budget), map_tensor(der(a, budget), copycat(ba)),
                         map_tensor(f, copycat(ba)), wk_strategy(b, ba)},
                        budget, "bang_step(" + f.name + ")");
  SequoidCoalgebra c{ba, b, step};
  Strategy out = ana(c, budget);
  out.name = "!(" + f.name + ")";
  return out;
}

ComonoidPresentation bang_comonoid(const GameExpr& a, int budget) {
  return ComonoidPresentation{GameExpr::bang(a), mu(a, budget), eta(a)};
}

ComonoidPresentation trivial_comonoid() {
  GameExpr i = GameExpr::unit();
  return ComonoidPresentation{
      i, empty_strategy(GameExpr::limp(i, GameExpr::tensor(i, i)), "delta_I"),
      empty_strategy(GameExpr::limp(i, i), "eps_I")};
}

ComonoidLawReport check_comonoid_laws(const ComonoidPresentation& cm, int depth,
                                      int budget) {
  const GameExpr& c = cm.carrier;
  auto fail = [](std::string law, EquivResult r) {
    return ComonoidLawReport{false, std::move(law), r.counterexample};
  };
  {
    Strategy lhs = compose(compose(cm.comult, map_tensor(cm.comult, copycat(c)),
                                   budget),
                           assoc_iso(c, c, c).fwd, budget);
    Strategy rhs = compose(cm.comult, map_tensor(copycat(c), cm.comult), budget);
    EquivResult r = equiv_up_to(lhs, rhs, depth);
    if (!r.equivalent) return fail("coassociativity", r);
  }
  {
    Strategy lhs = compose(cm.comult, sym_iso(c, c).fwd, budget);
    EquivResult r = equiv_up_to(lhs, cm.comult, depth);
    if (!r.equivalent) return fail("cocommutativity", r);
  }
  {
    Strategy lhs = compose(compose(cm.comult, map_tensor(cm.counit, copycat(c)),
                                   budget),
                           lunit_iso(c).fwd, budget);
    EquivResult r = equiv_up_to(lhs, copycat(c), depth);
    if (!r.equivalent) return fail("left counit", r);
  }
  {
    Strategy lhs = compose(compose(cm.comult, map_tensor(copycat(c), cm.counit),
                                   budget),
                           runit_iso(c).fwd, budget);
    EquivResult r = equiv_up_to(lhs, copycat(c), depth);
    if (!r.equivalent) return fail("right counit", r);
  }
  return ComonoidLawReport{};
}

Strategy promote(const Strategy& f, const ComonoidPresentation& cm, int law_depth,
                 int budget) {
  if (!(host_source(f) == cm.carrier))
    throw HostMismatchError("promote: strategy source must be the comonoid carrier");
  ComonoidLawReport laws = check_comonoid_laws(cm, law_depth, budget);
  if (!laws.ok)
    throw std::invalid_argument("promote: comonoid law '" + laws.failed_law +
                                "' fails on " + cm.carrier.str());
  const GameExpr& b = cm.carrier;
  const GameExpr& a = host_target(f);
  Strategy step = chain(
      {cm.comult, map_tensor(f, copycat(b)), wk_strategy(a, b)}, budget,
      "promote_step(" + f.name + ")");
  SequoidCoalgebra c{b, a, step};
  Strategy out = ana(c, budget);
  out.name = f.name + "!";
  return out;
}

namespace {

void permutations_of(int n, std::vector<std::vector<int>>& out) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

SymPower sym_power(const GameExpr& a, int n, int depth, int budget) {
  if (n > 4) throw ResourceError("sym_power supports n <= 4");
  SymPower out{wk_power(a, n, budget), eq_power(a, n), {}};
  GameExpr pseq = seq_power(a, n);
  GameExpr pten = tensor_power(a, n);
  std::vector<std::vector<int>> perms;
  permutations_of(n, perms);
  auto record = [&](bool pass, const std::string& what) {
    if (!pass) {
      out.report.ok = false;
      out.report.failures.push_back(what);
    }
  };
  for (const auto& perm : perms) {
    std::string tag = "pi=";
    for (int j : perm) tag += std::to_string(j);
    Strategy sp = tensor_permutation(a, perm);
    Strategy round =
        compose(compose(out.eq_n, sp, budget), out.wk_n, budget);
    record(equiv_up_to(round, copycat(pseq), depth).equivalent,
           "eq;sym;wk != id at " + tag);
    Strategy eq_twisted = compose(out.eq_n, sp, budget);
    record(equiv_up_to(eq_twisted, out.eq_n, depth).equivalent,
           "eq;sym != eq at " + tag);
    // Preservation of the equaliser under B (x) -.
    Strategy lhs = map_tensor(copycat(a), eq_twisted);
    Strategy rhs = map_tensor(copycat(a), out.eq_n);
    record(equiv_up_to(lhs, rhs, depth).equivalent,
           "tensor-preserved equaliser fails at " + tag);
  }
  return out;
}

}  // namespace seqgames
