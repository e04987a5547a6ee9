#include "seqgames/wincond.hpp"

#include <algorithm>

namespace seqgames {

using ord::CnfOrdinal;
using ord::OrdinalError;

namespace {

bool is_omega(const CnfOrdinal& a) { return a == CnfOrdinal::omega(); }

bool has_length_two_play(const GameExpr& e) {
  for (const Position& p : positions_up_to(e, 2))
    if (p.size() == 2) return true;
  return false;
}

CnfOrdinal interleaving_sup(const CnfOrdinal& a, const CnfOrdinal& b,
                            const GameExpr& at) {
  if (a.is_finite() && b.is_finite())
    return CnfOrdinal::finite(a.finite_value() + b.finite_value());
  if (is_omega(a) && is_omega(b)) return CnfOrdinal::omega_times_plus(2, 0);
  if (is_omega(a) && b.is_finite()) return ord::ord_add(a, b);
  if (is_omega(b) && a.is_finite()) return ord::ord_add(b, a);
  throw OrdinalError("unsupported length combination " + ord::to_string(a) + ", " +
                     ord::to_string(b) + " in " + at.str());
}

}  // namespace

CnfOrdinal length_sup(const GameExpr& e) {
  switch (e.kind()) {
    case GameExpr::Kind::Unit:
      return CnfOrdinal::zero();
    case GameExpr::Kind::Flat:
      return CnfOrdinal::finite(2);
    case GameExpr::Kind::Prod: {
      CnfOrdinal best;
      for (const GameExpr& f : e.parts()) {
        CnfOrdinal len = length_sup(f);
        if (ord::ord_cmp(best, len) < 0) best = len;
      }
      return best;
    }
    case GameExpr::Kind::Tensor:
    case GameExpr::Kind::Seq:
    case GameExpr::Kind::Limp:
      return interleaving_sup(length_sup(e.left()), length_sup(e.right()), e);
    case GameExpr::Kind::Bang: {
      CnfOrdinal inner = length_sup(e.inner());
      if (inner.is_zero()) return inner;
      if (!inner.is_finite())
        throw OrdinalError("unsupported: bang of an unbounded game " + e.str());
      if (inner.finite_value() < 2 || !has_length_two_play(e.inner()))
        throw OrdinalError("bang needs a base game with a play of length 2: " +
                           e.str());
      return CnfOrdinal::omega();
    }
  }
  throw OrdinalError("unsupported expression");
}

SymbolicPosition SymbolicPosition::leaf(Position play) {
  SymbolicPosition p;
  p.kind = Kind::kLeaf;
  p.play = std::move(play);
  return p;
}

SymbolicPosition SymbolicPosition::pair(SymbolicPosition l, SymbolicPosition r) {
  SymbolicPosition p;
  p.kind = Kind::kPair;
  p.children.push_back(std::move(l));
  p.children.push_back(std::move(r));
  return p;
}

SymbolicPosition SymbolicPosition::chosen(int factor, SymbolicPosition inner) {
  SymbolicPosition p;
  p.kind = Kind::kChosen;
  p.chosen_factor = factor;
  p.children.push_back(std::move(inner));
  return p;
}

SymbolicPosition SymbolicPosition::bang(std::vector<SymbolicPosition> copies,
                                        bool infinitely_many_more) {
  SymbolicPosition p;
  p.kind = Kind::kBang;
  p.children = std::move(copies);
  p.infinitely_many_more = infinitely_many_more;
  return p;
}

namespace {

struct ZetaEval {
  const ZetaFormula& formula;
  int bang_counter = 0;

  [[noreturn]] static void mismatch(const GameExpr& e) {
    throw std::invalid_argument("restriction data missing or mismatched at " +
                                e.str());
  }

  // true = P wins
  bool eval(const GameExpr& e, const SymbolicPosition& pos) {
    switch (e.kind()) {
      case GameExpr::Kind::Unit:
      case GameExpr::Kind::Flat: {
        if (pos.kind != SymbolicPosition::Kind::kLeaf) mismatch(e);
        if (!is_position(e, pos.play))
          throw std::invalid_argument("leaf play is not a position of " + e.str());
        return pos.play.size() % 2 == 0;  // complete or untouched
      }
      case GameExpr::Kind::Prod: {
        if (pos.kind == SymbolicPosition::Kind::kLeaf && pos.play.empty())
          return true;  // untouched product: every factor untouched
        if (pos.kind != SymbolicPosition::Kind::kChosen) mismatch(e);
        if (pos.chosen_factor < 0 ||
            static_cast<std::size_t>(pos.chosen_factor) >= e.parts().size())
          mismatch(e);
        // all other factors are empty and thus P-wins
        return eval(e.parts()[static_cast<std::size_t>(pos.chosen_factor)],
                    pos.children.at(0));
      }
      case GameExpr::Kind::Tensor:
      case GameExpr::Kind::Seq: {
        if (pos.kind != SymbolicPosition::Kind::kPair) mismatch(e);
        bool l = eval(e.left(), pos.children.at(0));
        bool r = eval(e.right(), pos.children.at(1));
        return l && r;
      }
      case GameExpr::Kind::Limp: {
        if (pos.kind != SymbolicPosition::Kind::kPair) mismatch(e);
        bool l = eval(e.left(), pos.children.at(0));
        bool r = eval(e.right(), pos.children.at(1));
        return !l || r;
      }
      case GameExpr::Kind::Bang: {
        const int node = bang_counter++;
        if (pos.kind != SymbolicPosition::Kind::kBang) mismatch(e);
        auto it = formula.bang_modes.find(node);
        const ZetaFormula::BangMode mode = it == formula.bang_modes.end()
                                               ? ZetaFormula::BangMode::kPlain
                                               : it->second;
        if (pos.infinitely_many_more && mode == ZetaFormula::BangMode::kWaning)
          return true;
        const int saved = bang_counter;
        bool all = true;
        for (const SymbolicPosition& copy : pos.children) {
          bang_counter = saved;
          all = all && eval(e.inner(), copy);
        }
        if (pos.children.empty()) bang_counter = saved;
        return all;  // unopened copies contribute P
      }
    }
    mismatch(e);
  }
};

}  // namespace

Polarity zeta_eval(const ZetaFormula& f, const SymbolicPosition& pos) {
  ZetaEval ev{f, 0};
  return ev.eval(f.shape, pos) ? Polarity::P : Polarity::O;
}

}  // namespace seqgames
