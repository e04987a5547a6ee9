#include "seqgames/strategy.hpp"

#include <algorithm>

namespace seqgames {

Strategy empty_strategy(GameExpr host, std::string name) {
  return Strategy{std::move(host), std::move(name),
                  [](const Position&) -> std::optional<Move> { return std::nullopt; }};
}

Strategy translation_copycat(
    GameExpr host, std::string name,
    std::function<Move(const Move&, const Position&)> translate) {
  return Strategy{std::move(host), std::move(name),
                  [translate = std::move(translate)](const Position& s)
                      -> std::optional<Move> {
                    if (s.empty()) return std::nullopt;
                    return translate(s.back(), s);
                  }};
}

Strategy copycat(const GameExpr& a) {
  GameExpr host = GameExpr::limp(a, a);
  return translation_copycat(host, "id", [](const Move& m, const Position&) {
    Move out = m.stripped();
    return out.prefixed(m.path.front().kind == Tag::Kind::L ? Tag::r() : Tag::l());
  });
}

Strategy flat_value_strategy(const GameExpr& flat, const std::string& value) {
  if (flat.kind() != GameExpr::Kind::Flat)
    throw HostMismatchError("flat_value_strategy needs a flat game");
  if (std::find(flat.values().begin(), flat.values().end(), value) ==
      flat.values().end())
    throw std::invalid_argument("value '" + value + "' not in " + flat.str());
  GameExpr host = GameExpr::limp(GameExpr::unit(), flat);
  return Strategy{host, "<" + value + ">",
                  [value](const Position& s) -> std::optional<Move> {
                    if (s.size() == 1 && s[0].base == "q")
                      return Move{{Tag::r()}, value};
                    return std::nullopt;
                  }};
}

Strategy ok_strategy() { return flat_value_strategy(GameExpr::sigma(), "*"); }

Strategy terminal_strategy(const GameExpr& a) {
  return empty_strategy(GameExpr::limp(a, GameExpr::unit()), "weak");
}

Strategy restrict_host(Strategy s, GameExpr new_host) {
  s.host = std::move(new_host);
  return s;
}

ValidationReport validate_strategy(const Strategy& s, int depth) {
  // Depth-first over the positions reachable when P plays the strategy.
  std::vector<Position> stack{{}};
  while (!stack.empty()) {
    Position p = std::move(stack.back());
    stack.pop_back();
    if (static_cast<int>(p.size()) >= depth) continue;
    for (const Move& m : next_moves(s.host, p)) {
      Position op = p;
      op.push_back(m);
      std::optional<Move> r = s.respond(op);
      if (!r) continue;
      if (!move_legal(s.host, op, *r)) {
        return ValidationReport{
            false, op,
            "illegal response " + to_string(*r) + " at position [" +
                to_string(PositionView(op)) + "] in " + s.host.str()};
      }
      op.push_back(*r);
      if (static_cast<int>(op.size()) < depth) stack.push_back(std::move(op));
    }
  }
  return ValidationReport{};
}

bool is_strict(const Strategy& s) {
  if (s.host.kind() != GameExpr::Kind::Limp)
    throw HostMismatchError("is_strict needs a linear-implication host, got " +
                            s.host.str());
  for (const Move& b : next_moves(s.host, {})) {
    Position opening{b};
    std::optional<Move> r = s.respond(opening);
    if (r && (r->path.empty() || r->path.front().kind != Tag::Kind::L)) return false;
  }
  return true;
}

const GameExpr& host_source(const Strategy& s) {
  if (s.host.kind() != GameExpr::Kind::Limp)
    throw HostMismatchError("strategy host is not a linear implication: " +
                            s.host.str());
  return s.host.left();
}

const GameExpr& host_target(const Strategy& s) {
  if (s.host.kind() != GameExpr::Kind::Limp)
    throw HostMismatchError("strategy host is not a linear implication: " +
                            s.host.str());
  return s.host.right();
}

}  // namespace seqgames
