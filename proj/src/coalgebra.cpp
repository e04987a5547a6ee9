#include "seqgames/coalgebra.hpp"

#include "seqgames/comonoid.hpp"

namespace seqgames {

Strategy alpha(const GameExpr& a) {
  GameExpr bang = GameExpr::bang(a);
  GameExpr host = GameExpr::limp(bang, GameExpr::seq(a, bang));
  return translation_copycat(
      host, "alpha", [](const Move& m, const Position&) -> Move {
        Move inner = m.stripped();
        if (m.path.front().kind == Tag::Kind::R) {
          if (inner.path.front().kind == Tag::Kind::L)
            return inner.stripped().prefixed(Tag::copy(0)).prefixed(Tag::l());
          const int n = inner.path.at(1).n;
          return inner.stripped().stripped().prefixed(Tag::copy(n + 1)).prefixed(
              Tag::l());
        }
        const int n = inner.path.front().n;
        Move core = inner.stripped();
        if (n == 0) return core.prefixed(Tag::l()).prefixed(Tag::r());
        return core.prefixed(Tag::copy(n - 1)).prefixed(Tag::r()).prefixed(Tag::r());
      });
}

namespace {

// Shared engine for the anamorphism and catamorphism towers.  Stage i plays
// its own copy of the step strategy; hidden state moves bounce between
// neighbouring stages, and payload moves surface as moves of copy i.
struct Tower {
  Strategy step;
  bool unfolding;  // true: ana (state on the left), false: cata
  int budget;

  std::optional<Move> respond(const Position& visible) const {
    std::vector<Position> inst;
    std::optional<Move> last;
    std::size_t i = 0;
    while (i < visible.size()) {
      last = deliver(inst, visible, visible[i]);
      ++i;
      if (i < visible.size()) {
        if (!last || !(*last == visible[i])) return std::nullopt;
        ++i;
      }
    }
    return last;
  }

 private:
  static void ensure(std::vector<Position>& inst, std::size_t i) {
    if (inst.size() <= i) inst.resize(i + 1);
  }

  std::optional<Move> deliver(std::vector<Position>& inst, const Position& visible,
                              const Move& m) const {
    std::size_t stage;
    Move local;
    if (unfolding) {
      if (m.path.front().kind == Tag::Kind::L) {
        stage = 0;
        local = m;
      } else {
        stage = static_cast<std::size_t>(m.path.at(1).n);
        local = m.stripped().stripped().prefixed(Tag::l()).prefixed(Tag::r());
      }
    } else {
      if (m.path.front().kind == Tag::Kind::R) {
        stage = 0;
        local = m;
      } else {
        stage = static_cast<std::size_t>(m.path.at(1).n);
        local = m.stripped().stripped().prefixed(Tag::l()).prefixed(Tag::l());
      }
    }
    ensure(inst, stage);
    inst[stage].push_back(local);
    return pump(inst, visible, stage);
  }

  std::optional<Move> pump(std::vector<Position>& inst, const Position& visible,
                           std::size_t i) const {
    int msgs = 0;
    while (true) {
      std::optional<Move> r = step.respond(inst[i]);
      if (!r) return std::nullopt;
      if (!move_legal(step.host, inst[i], *r))
        throw HostMismatchError("stage strategy '" + step.name +
                                "' emitted illegal move " + to_string(*r));
      inst[i].push_back(*r);
      const Tag::Kind side = r->path.front().kind;
      if (unfolding) {
        if (side == Tag::Kind::L) {
          if (i == 0) return *r;  // visible state-side move
          Move msg = r->stripped().prefixed(Tag::r()).prefixed(Tag::r());
          if (++msgs > budget)
            throw LivelockError("tower budget exceeded", visible);
          --i;
          inst[i].push_back(msg);
          continue;
        }
        if (r->path.at(1).kind == Tag::Kind::L) {
          return r->stripped().stripped().prefixed(Tag::copy(static_cast<int>(i)))
              .prefixed(Tag::r());
        }
        Move msg = r->stripped().stripped().prefixed(Tag::l());
        if (++msgs > budget) throw LivelockError("tower budget exceeded", visible);
        ++i;
        ensure(inst, i);
        inst[i].push_back(msg);
        continue;
      }
      // folding (cata)
      if (side == Tag::Kind::R) {
        if (i == 0) return *r;  // visible output move
        Move msg = r->stripped().prefixed(Tag::r()).prefixed(Tag::l());
        if (++msgs > budget) throw LivelockError("tower budget exceeded", visible);
        --i;
        inst[i].push_back(msg);
        continue;
      }
      if (r->path.at(1).kind == Tag::Kind::L) {
        return r->stripped().stripped().prefixed(Tag::copy(static_cast<int>(i)))
            .prefixed(Tag::l());
      }
      Move msg = r->stripped().stripped().prefixed(Tag::r());
      if (++msgs > budget) throw LivelockError("tower budget exceeded", visible);
      ++i;
      ensure(inst, i);
      inst[i].push_back(msg);
    }
  }
};

}  // namespace

Strategy ana(const SequoidCoalgebra& c, int budget) {
  GameExpr expected = GameExpr::limp(
      c.state_game, GameExpr::seq(c.payload_game, c.state_game));
  if (!(c.step.host == expected))
    throw HostMismatchError("coalgebra step host should be " + expected.str() +
                            ", got " + c.step.host.str());
  GameExpr host = GameExpr::limp(c.state_game, GameExpr::bang(c.payload_game));
  Tower tower{c.step, true, budget};
  return Strategy{host, "ana(" + c.step.name + ")",
                  [tower](const Position& s) { return tower.respond(s); }};
}

Strategy lambek_inv(const GameExpr& a, int budget) {
  GameExpr state = GameExpr::seq(a, GameExpr::bang(a));
  SequoidCoalgebra c{state, a, map_seq(copycat(a), alpha(a))};
  Strategy s = ana(c, budget);
  s.name = "alpha_inv";
  return s;
}

Strategy cata(const SequoidAlgebra& a, int budget) {
  GameExpr expected =
      GameExpr::limp(GameExpr::seq(a.payload_game, a.carrier), a.carrier);
  if (!(a.step.host == expected))
    throw HostMismatchError("algebra step host should be " + expected.str() +
                            ", got " + a.step.host.str());
  GameExpr host = GameExpr::limp(GameExpr::bang(a.payload_game), a.carrier);
  Tower tower{a.step, false, budget};
  return Strategy{host, "cata(" + a.step.name + ")",
                  [tower](const Position& s) { return tower.respond(s); }};
}

Strategy eval_counit(const GameExpr& a) {
  GameExpr hom = GameExpr::limp(a, a);
  Strategy ev = uncurry(copycat(hom));
  Strategy s = restrict_host(std::move(ev), GameExpr::limp(GameExpr::seq(hom, a), a));
  s.name = "eval";
  return s;
}

Strategy fix(const Strategy& f, int budget) {
  const GameExpr& a = host_source(f);
  if (!(a == host_target(f)))
    throw HostMismatchError("fix needs an endo-strategy A -o A");
  // name(f) : I -o (A -o A)
  Strategy named = curry(compose(lunit_iso(a).fwd, f, budget));
  // !name(f) : I ~ !I -o !(A -o A)
  Strategy leg = compose(eps_strategy(), bang_map(named, budget), budget);
  GameExpr hom = GameExpr::limp(a, a);
  SequoidAlgebra alg{a, hom, eval_counit(a)};
  Strategy phi = cata(alg, budget);
  Strategy out = compose(leg, phi, budget);
  out.name = "fix(" + f.name + ")";
  return out;
}

}  // namespace seqgames
