#include "seqgames/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace seqgames {

namespace {
std::shared_ptr<const GameExpr::Node> make_node(GameExpr::Kind, std::vector<std::string>,
                                                std::vector<GameExpr>);
}

GameExpr GameExpr::unit() {
  static const GameExpr g{std::make_shared<const Node>(Node{Kind::Unit, {}, {}})};
  return g;
}

GameExpr GameExpr::flat(std::vector<std::string> values) {
  if (values.empty()) throw std::invalid_argument("flat game needs at least one value");
  std::set<std::string> seen(values.begin(), values.end());
  if (seen.size() != values.size())
    throw std::invalid_argument("flat game values must be distinct");
  return GameExpr{std::make_shared<const Node>(Node{Kind::Flat, std::move(values), {}})};
}

GameExpr GameExpr::sigma() {
  static const GameExpr g = flat({"*"});
  return g;
}

GameExpr GameExpr::prod(std::vector<GameExpr> factors) {
  if (factors.empty()) throw std::invalid_argument("product needs at least one factor");
  return GameExpr{std::make_shared<const Node>(Node{Kind::Prod, {}, std::move(factors)})};
}

GameExpr GameExpr::tensor(GameExpr l, GameExpr r) {
  return GameExpr{std::make_shared<const Node>(
      Node{Kind::Tensor, {}, {std::move(l), std::move(r)}})};
}

GameExpr GameExpr::seq(GameExpr l, GameExpr r) {
  return GameExpr{
      std::make_shared<const Node>(Node{Kind::Seq, {}, {std::move(l), std::move(r)}})};
}

GameExpr GameExpr::limp(GameExpr l, GameExpr r) {
  return GameExpr{
      std::make_shared<const Node>(Node{Kind::Limp, {}, {std::move(l), std::move(r)}})};
}

GameExpr GameExpr::bang(GameExpr inner) {
  return GameExpr{
      std::make_shared<const Node>(Node{Kind::Bang, {}, {std::move(inner)}})};
}

bool GameExpr::is_empty_game() const {
  switch (kind()) {
    case Kind::Unit:
      return true;
    case Kind::Flat:
      return false;
    case Kind::Prod:
    case Kind::Tensor:
      return std::all_of(parts().begin(), parts().end(),
                         [](const GameExpr& g) { return g.is_empty_game(); });
    case Kind::Seq:
    case Kind::Limp:
      // Seq has no positions when its head is empty; Limp none when its
      // target is empty (O cannot open).
      return kind() == Kind::Seq ? left().is_empty_game() : right().is_empty_game();
    case Kind::Bang:
      return inner().is_empty_game();
  }
  return false;
}

bool GameExpr::equals(const GameExpr& other) const {
  if (node_->kind != other.node_->kind) return false;
  if (node_->values != other.node_->values) return false;
  if (node_->parts.size() != other.node_->parts.size()) return false;
  for (std::size_t i = 0; i < node_->parts.size(); ++i)
    if (!(node_->parts[i] == other.node_->parts[i])) return false;
  return true;
}

std::string GameExpr::str() const {
  std::ostringstream out;
  switch (kind()) {
    case Kind::Unit:
      out << "I";
      break;
    case Kind::Flat:
      if (values().size() == 1 && values()[0] == "*") {
        out << "sigma";
      } else {
        out << "flat{";
        for (std::size_t i = 0; i < values().size(); ++i) {
          if (i) out << ",";
          out << values()[i];
        }
        out << "}";
      }
      break;
    case Kind::Prod: {
      out << "prod(";
      for (std::size_t i = 0; i < parts().size(); ++i) {
        if (i) out << ",";
        out << parts()[i].str();
      }
      out << ")";
      break;
    }
    case Kind::Tensor:
      out << "tensor(" << left().str() << "," << right().str() << ")";
      break;
    case Kind::Seq:
      out << "seq(" << left().str() << "," << right().str() << ")";
      break;
    case Kind::Limp:
      out << "limp(" << left().str() << "," << right().str() << ")";
      break;
    case Kind::Bang:
      out << "bang(" << inner().str() << ")";
      break;
  }
  return out.str();
}

ParseError::ParseError(std::string msg, int line_, int column_)
    : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                         std::to_string(column_) + ")"),
      line(line_),
      column(column_) {}

namespace {

class GameParser {
 public:
  explicit GameParser(const std::string& text) : text_(text) {}

  GameExpr parse() {
    GameExpr g = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("trailing input after expression");
    return g;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    // Column of the position just past the consumed input.
    if (pos_ >= text_.size()) col = static_cast<int>(text_.size() - line_start()) + 1;
    throw ParseError(msg, line, col);
  }

  std::size_t line_start() const {
    std::size_t s = 0;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i)
      if (text_[i] == '\n') s = i + 1;
    return s;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
  }

  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '*';
  }

  std::string name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }

  GameExpr expr() {
    std::string head = name();
    if (head == "I") return GameExpr::unit();
    if (head == "sigma") return GameExpr::sigma();
    if (head == "flat") {
      expect('{', "after 'flat'");
      std::vector<std::string> vals;
      do {
        vals.push_back(name());
      } while (eat(','));
      expect('}', "to close 'flat{'");
      return GameExpr::flat(std::move(vals));
    }
    if (head == "prod") {
      expect('(', "after 'prod'");
      std::vector<GameExpr> parts;
      do {
        parts.push_back(expr());
      } while (eat(','));
      expect(')', "to close 'prod('");
      if (parts.size() < 2) fail("prod needs at least two factors");
      return GameExpr::prod(std::move(parts));
    }
    if (head == "tensor" || head == "seq" || head == "limp") {
      expect('(', "after connective");
      GameExpr l = expr();
      expect(',', "between the two arguments");
      GameExpr r = expr();
      expect(')', "to close the connective");
      if (head == "tensor") return GameExpr::tensor(std::move(l), std::move(r));
      if (head == "seq") return GameExpr::seq(std::move(l), std::move(r));
      return GameExpr::limp(std::move(l), std::move(r));
    }
    if (head == "bang") {
      expect('(', "after 'bang'");
      GameExpr g = expr();
      expect(')', "to close 'bang('");
      return GameExpr::bang(std::move(g));
    }
    pos_ -= head.size();
    fail("unknown game constructor '" + head + "'");
  }
};

}  // namespace

GameExpr parse_game(const std::string& text) { return GameParser(text).parse(); }

}  // namespace seqgames
