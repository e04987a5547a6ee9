#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqgames {

/// Syntactic description of a game.  Immutable tree with shared structure;
/// copies are cheap handle copies.
class GameExpr {
 public:
  enum class Kind { Unit, Flat, Prod, Tensor, Seq, Limp, Bang };

  /// The empty game I (also the terminal object 1).
  static GameExpr unit();
  /// <X>: one opening question q answered by an element of X.
  static GameExpr flat(std::vector<std::string> values);
  /// Sigma = <{*}>, the command type.
  static GameExpr sigma();
  static GameExpr prod(std::vector<GameExpr> factors);
  static GameExpr tensor(GameExpr l, GameExpr r);
  static GameExpr seq(GameExpr l, GameExpr r);
  static GameExpr limp(GameExpr l, GameExpr r);
  static GameExpr bang(GameExpr inner);

  Kind kind() const { return node_->kind; }
  const std::vector<std::string>& values() const { return node_->values; }
  const std::vector<GameExpr>& parts() const { return node_->parts; }
  const GameExpr& left() const { return node_->parts.at(0); }
  const GameExpr& right() const { return node_->parts.at(1); }
  const GameExpr& inner() const { return node_->parts.at(0); }

  bool is_empty_game() const;

  std::string str() const;
  friend bool operator==(const GameExpr& a, const GameExpr& b) {
    return a.node_ == b.node_ || a.equals(b);
  }

 private:
  struct Node {
    Kind kind;
    std::vector<std::string> values;
    std::vector<GameExpr> parts;
  };
  explicit GameExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  bool equals(const GameExpr& other) const;

  std::shared_ptr<const Node> node_;
};

struct ParseError : std::runtime_error {
  ParseError(std::string msg, int line, int column);
  int line;
  int column;
};

/// Parses the concrete game syntax:
///   expr := "I" | "sigma" | "flat{" name ("," name)* "}"
///         | "prod(" expr ("," expr)+ ")" | "tensor(" expr "," expr ")"
///         | "seq(" expr "," expr ")" | "limp(" expr "," expr ")"
///         | "bang(" expr ")"
/// Whitespace-insensitive; names are [a-zA-Z0-9_*]+.
GameExpr parse_game(const std::string& text);

}  // namespace seqgames
