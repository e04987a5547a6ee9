#include "seqgames/composition.hpp"

#include <algorithm>
#include <sstream>

namespace seqgames {

namespace {

// Interaction state for one composite respond() call.  The two inner
// strategies play their own hosts; moves in the shared middle game bounce
// between them until one emits a visible move.
struct Interaction {
  const Strategy& sigma;  // A -o B
  const Strategy& tau;    // B -o C
  int budget;
  Position visible;  // position of A -o C (for error reports)
  Position pos_sigma;
  Position pos_tau;

  enum class Side { kSigma, kTau };

  // Outcome of pumping the hidden exchange after delivering an O-move.
  struct Pumped {
    std::optional<Move> visible_move;  // response in A or C, if any
  };

  // Delivers one O-move to `side` and lets the strategies exchange middle
  // moves until a visible response, an absent response, or budget exhaustion.
  Pumped pump(Side side) {
    int middle_moves = 0;
    while (true) {
      const Strategy& active = side == Side::kSigma ? sigma : tau;
      Position& pos = side == Side::kSigma ? pos_sigma : pos_tau;
      std::optional<Move> r = active.respond(pos);
      if (!r) return Pumped{std::nullopt};
      if (!move_legal(active.host, pos, *r))
        throw HostMismatchError("strategy '" + active.name +
                                "' emitted illegal move " + to_string(*r) +
                                " during composition at [" +
                                to_string(PositionView(pos)) + "]");
      pos.push_back(*r);
      const bool left = r->path.front().kind == Tag::Kind::L;
      if (side == Side::kSigma) {
        if (left) return Pumped{*r};  // visible move in A
        // middle move: B-move, hand to tau's left
        if (++middle_moves > budget)
          throw LivelockError("internal-move budget exceeded at [" +
                                  to_string(PositionView(visible)) + "]",
                              visible);
        pos_tau.push_back(r->stripped().prefixed(Tag::l()));
        side = Side::kTau;
      } else {
        if (!left) return Pumped{*r};  // visible move in C
        if (++middle_moves > budget)
          throw LivelockError("internal-move budget exceeded at [" +
                                  to_string(PositionView(visible)) + "]",
                              visible);
        pos_sigma.push_back(r->stripped().prefixed(Tag::r()));
        side = Side::kSigma;
      }
    }
  }

  // Feeds a visible O-move and returns the composite's response.
  std::optional<Move> deliver(const Move& m) {
    visible.push_back(m);
    Side side;
    if (m.path.front().kind == Tag::Kind::L) {
      pos_sigma.push_back(m);
      side = Side::kSigma;
    } else {
      pos_tau.push_back(m);
      side = Side::kTau;
    }
    Pumped out = pump(side);
    if (out.visible_move) visible.push_back(*out.visible_move);
    return out.visible_move;
  }
};

}  // namespace

Strategy compose(const Strategy& sigma, const Strategy& tau, int budget) {
  if (sigma.host.kind() != GameExpr::Kind::Limp ||
      tau.host.kind() != GameExpr::Kind::Limp)
    throw HostMismatchError("compose needs linear-implication hosts");
  if (!(sigma.host.right() == tau.host.left()))
    throw HostMismatchError("compose: middle games differ: " +
                            sigma.host.right().str() + " vs " +
                            tau.host.left().str());
  GameExpr host = GameExpr::limp(sigma.host.left(), tau.host.right());
  std::string name = tau.name + ";" + sigma.name;
  return Strategy{
      host, name,
      [sigma, tau, budget](const Position& s) -> std::optional<Move> {
        Interaction it{sigma, tau, budget, {}, {}, {}};
        std::optional<Move> last;
        std::size_t i = 0;
        while (i < s.size()) {
          last = it.deliver(s[i]);
          ++i;
          // The replayed P-move, when present in s, must match our own.
          if (i < s.size()) {
            if (!last || !(*last == s[i])) return std::nullopt;  // unreachable s
            ++i;
          }
        }
        return last;
      }};
}

namespace {

struct Explorer {
  const Strategy& lhs;
  const Strategy& rhs;
  int depth;
  DivergencePolicy policy;
  std::optional<Counterexample> found;

  struct Response {
    std::optional<Move> move;
    bool diverged = false;
  };

  Response ask(const Strategy& s, const Position& p) {
    try {
      return Response{s.respond(p), false};
    } catch (const LivelockError&) {
      if (policy == DivergencePolicy::kError) throw;
      return Response{std::nullopt, true};
    }
  }

  // Explores from the P-position p (both strategies agree on p).
  // Returns false as soon as a counterexample is recorded.
  bool explore(const Position& p) {
    if (static_cast<int>(p.size()) >= depth) return true;
    for (const Move& m : next_moves(lhs.host, p)) {
      Position op = p;
      op.push_back(m);
      Response a = ask(lhs, op);
      Response b = ask(rhs, op);
      if (!(a.move == b.move)) {
        found = Counterexample{op, a.move, b.move, a.diverged, b.diverged};
        return false;
      }
      if (a.move && static_cast<int>(op.size()) < depth) {
        op.push_back(*a.move);
        if (!explore(op)) return false;
      }
    }
    return true;
  }
};

}  // namespace

EquivResult equiv_up_to(const Strategy& sigma, const Strategy& tau, int depth,
                        DivergencePolicy policy) {
  if (!(sigma.host == tau.host))
    throw HostMismatchError("equiv_up_to: hosts differ: " + sigma.host.str() +
                            " vs " + tau.host.str());
  Explorer ex{sigma, tau, depth, policy, std::nullopt};
  ex.explore({});
  if (ex.found) return EquivResult{false, ex.found};
  return EquivResult{};
}

std::string format_counterexample(const GameExpr& host, int depth,
                                  const Counterexample& cex) {
  std::ostringstream out;
  out << "game: " << host.str() << "\n";
  out << "depth: " << depth << "\n";
  out << "trace:\n" << format_trace(host, cex.position);
  auto show = [](const std::optional<Move>& m, bool diverged) {
    if (diverged) return std::string("<diverged: budget exceeded>");
    return m ? to_string(*m) : std::string("<none>");
  };
  out << "expected: " << show(cex.lhs, cex.lhs_diverged) << "\n";
  out << "actual: " << show(cex.rhs, cex.rhs_diverged) << "\n";
  return out.str();
}

namespace {

// Address bijection between (A (x) B) -o C and A -o (B -o C).
Move curry_move_out(const Move& m) {
  // from uncurried host to curried host
  const Tag t = m.path.front();
  Move rest = m.stripped();
  if (t.kind == Tag::Kind::L) {
    const Tag u = rest.path.front();
    Move core = rest.stripped();
    if (u.kind == Tag::Kind::L) return core.prefixed(Tag::l());  // A
    return core.prefixed(Tag::l()).prefixed(Tag::r());           // B
  }
  return rest.prefixed(Tag::r()).prefixed(Tag::r());  // C
}

Move curry_move_in(const Move& m) {
  // from curried host to uncurried host
  const Tag t = m.path.front();
  Move rest = m.stripped();
  if (t.kind == Tag::Kind::L)
    return rest.prefixed(Tag::l()).prefixed(Tag::l());  // A
  const Tag u = rest.path.front();
  Move core = rest.stripped();
  if (u.kind == Tag::Kind::L)
    return core.prefixed(Tag::r()).prefixed(Tag::l());  // B
  return core.prefixed(Tag::r());                       // C
}

}  // namespace

Strategy curry(const Strategy& s) {
  if (s.host.kind() != GameExpr::Kind::Limp ||
      s.host.left().kind() != GameExpr::Kind::Tensor)
    throw HostMismatchError("curry needs host (A (x) B) -o C, got " + s.host.str());
  const GameExpr& a = s.host.left().left();
  const GameExpr& b = s.host.left().right();
  const GameExpr& c = s.host.right();
  GameExpr host = GameExpr::limp(a, GameExpr::limp(b, c));
  return Strategy{host, "curry(" + s.name + ")",
                  [inner = s](const Position& p) -> std::optional<Move> {
                    Position q;
                    q.reserve(p.size());
                    for (const Move& m : p) q.push_back(curry_move_in(m));
                    std::optional<Move> r = inner.respond(q);
                    if (!r) return std::nullopt;
                    return curry_move_out(*r);
                  }};
}

Strategy uncurry(const Strategy& s) {
  if (s.host.kind() != GameExpr::Kind::Limp ||
      s.host.right().kind() != GameExpr::Kind::Limp)
    throw HostMismatchError("uncurry needs host A -o (B -o C), got " + s.host.str());
  const GameExpr& a = s.host.left();
  const GameExpr& b = s.host.right().left();
  const GameExpr& c = s.host.right().right();
  GameExpr host = GameExpr::limp(GameExpr::tensor(a, b), c);
  return Strategy{host, "uncurry(" + s.name + ")",
                  [inner = s](const Position& p) -> std::optional<Move> {
                    Position q;
                    q.reserve(p.size());
                    for (const Move& m : p) q.push_back(curry_move_out(m));
                    std::optional<Move> r = inner.respond(q);
                    if (!r) return std::nullopt;
                    return curry_move_in(*r);
                  }};
}

}  // namespace seqgames
