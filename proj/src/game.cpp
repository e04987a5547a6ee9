#include "seqgames/game.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace seqgames {

std::string to_string(const Move& m) {
  std::ostringstream out;
  for (const auto& t : m.path) {
    switch (t.kind) {
      case Tag::Kind::L:
        out << "l";
        break;
      case Tag::Kind::R:
        out << "r";
        break;
      case Tag::Kind::Index:
        out << "i:" << t.n;
        break;
      case Tag::Kind::Copy:
        out << "c:" << t.n;
        break;
    }
    out << ".";
  }
  out << m.base;
  return out.str();
}

Move parse_move(const std::string& text) {
  Move m;
  std::size_t start = 0;
  std::vector<std::string> pieces;
  while (true) {
    std::size_t dot = text.find('.', start);
    if (dot == std::string::npos) {
      pieces.push_back(text.substr(start));
      break;
    }
    pieces.push_back(text.substr(start, dot - start));
    start = dot + 1;
  }
  if (pieces.empty() || pieces.back().empty())
    throw std::invalid_argument("empty move text: '" + text + "'");
  m.base = pieces.back();
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    const std::string& p = pieces[i];
    if (p == "l") {
      m.path.push_back(Tag::l());
    } else if (p == "r") {
      m.path.push_back(Tag::r());
    } else if (p.rfind("i:", 0) == 0) {
      m.path.push_back(Tag::index(std::stoi(p.substr(2))));
    } else if (p.rfind("c:", 0) == 0) {
      m.path.push_back(Tag::copy(std::stoi(p.substr(2))));
    } else {
      throw std::invalid_argument("bad address tag '" + p + "' in move '" + text + "'");
    }
  }
  return m;
}

std::string to_string(PositionView s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << " ";
    out << to_string(s[i]);
  }
  return out.str();
}

Polarity polarity_of(const GameExpr& game, const Move& m) {
  const GameExpr* e = &game;
  bool flipped = false;
  std::size_t depth = 0;
  while (true) {
    switch (e->kind()) {
      case GameExpr::Kind::Unit:
        throw std::invalid_argument("move '" + to_string(m) + "' not in game I");
      case GameExpr::Kind::Flat: {
        if (depth != m.path.size())
          throw std::invalid_argument("move '" + to_string(m) + "' over-addressed");
        Polarity p;
        if (m.base == "q") {
          p = Polarity::O;
        } else if (std::find(e->values().begin(), e->values().end(), m.base) !=
                   e->values().end()) {
          p = Polarity::P;
        } else {
          throw std::invalid_argument("move '" + to_string(m) + "' not a move of " +
                                      e->str());
        }
        return flipped ? flip(p) : p;
      }
      default:
        break;
    }
    if (depth >= m.path.size())
      throw std::invalid_argument("move '" + to_string(m) + "' under-addressed for " +
                                  e->str());
    const Tag t = m.path[depth++];
    switch (e->kind()) {
      case GameExpr::Kind::Prod:
        if (t.kind != Tag::Kind::Index || t.n < 0 ||
            static_cast<std::size_t>(t.n) >= e->parts().size())
          throw std::invalid_argument("bad product factor in '" + to_string(m) + "'");
        e = &e->parts()[static_cast<std::size_t>(t.n)];
        break;
      case GameExpr::Kind::Tensor:
      case GameExpr::Kind::Seq:
      case GameExpr::Kind::Limp:
        if (t.kind == Tag::Kind::L) {
          if (e->kind() == GameExpr::Kind::Limp) flipped = !flipped;
          e = &e->left();
        } else if (t.kind == Tag::Kind::R) {
          e = &e->right();
        } else {
          throw std::invalid_argument("expected l/r tag in '" + to_string(m) + "'");
        }
        break;
      case GameExpr::Kind::Bang:
        if (t.kind != Tag::Kind::Copy || t.n < 0)
          throw std::invalid_argument("expected copy tag in '" + to_string(m) + "'");
        e = &e->inner();
        break;
      default:
        throw std::invalid_argument("malformed move '" + to_string(m) + "'");
    }
  }
}

namespace {

Polarity parity_turn(std::size_t len) {
  return len % 2 == 0 ? Polarity::O : Polarity::P;
}

Position restrict_tag(PositionView s, Tag::Kind kind, int n) {
  Position out;
  for (const Move& m : s) {
    if (!m.path.empty() && m.path.front().kind == kind &&
        (kind == Tag::Kind::L || kind == Tag::Kind::R || m.path.front().n == n))
      out.push_back(m.stripped());
  }
  return out;
}

int opened_copies(PositionView s) {
  int hi = -1;
  for (const Move& m : s) {
    if (!m.path.empty() && m.path.front().kind == Tag::Kind::Copy)
      hi = std::max(hi, m.path.front().n);
  }
  return hi + 1;
}

// s is the restriction of the host position to e, with addresses already
// relative to e; depth indexes how much of m's address has been consumed.
bool legal_rec(const GameExpr& e, PositionView s, const Move& m, std::size_t depth,
               Polarity turn) {
  // The component restriction must keep alternating, starting with its own O.
  if (parity_turn(s.size()) != turn) return false;
  switch (e.kind()) {
    case GameExpr::Kind::Unit:
      return false;
    case GameExpr::Kind::Flat: {
      if (depth != m.path.size()) return false;
      if (s.empty()) return m.base == "q";
      if (s.size() == 1 && s[0].base == "q")
        return std::find(e.values().begin(), e.values().end(), m.base) !=
               e.values().end();
      return false;
    }
    case GameExpr::Kind::Prod: {
      if (depth >= m.path.size()) return false;
      const Tag t = m.path[depth];
      if (t.kind != Tag::Kind::Index || t.n < 0 ||
          static_cast<std::size_t>(t.n) >= e.parts().size())
        return false;
      if (!s.empty() && s.front().path.front() != t) return false;
      Position sub = restrict_tag(s, Tag::Kind::Index, t.n);
      return legal_rec(e.parts()[static_cast<std::size_t>(t.n)], sub, m, depth + 1,
                       turn);
    }
    case GameExpr::Kind::Tensor:
    case GameExpr::Kind::Seq:
    case GameExpr::Kind::Limp: {
      if (depth >= m.path.size()) return false;
      const Tag t = m.path[depth];
      if (t.kind == Tag::Kind::L) {
        Position sub = restrict_tag(s, Tag::Kind::L, 0);
        Polarity child = e.kind() == GameExpr::Kind::Limp ? flip(turn) : turn;
        return legal_rec(e.left(), sub, m, depth + 1, child);
      }
      if (t.kind == Tag::Kind::R) {
        if (e.kind() == GameExpr::Kind::Seq && s.empty()) return false;
        Position sub = restrict_tag(s, Tag::Kind::R, 0);
        return legal_rec(e.right(), sub, m, depth + 1, turn);
      }
      return false;
    }
    case GameExpr::Kind::Bang: {
      if (depth >= m.path.size()) return false;
      const Tag t = m.path[depth];
      if (t.kind != Tag::Kind::Copy || t.n < 0) return false;
      const int opened = opened_copies(s);
      if (t.n > opened) return false;
      Position sub = restrict_tag(s, Tag::Kind::Copy, t.n);
      return legal_rec(e.inner(), sub, m, depth + 1, turn);
    }
  }
  return false;
}

void enum_rec(const GameExpr& e, PositionView s, Polarity turn, std::vector<Tag>& prefix,
              std::vector<Move>& out) {
  if (parity_turn(s.size()) != turn) return;
  auto emit = [&](const std::string& base) {
    out.push_back(Move{prefix, base});
  };
  switch (e.kind()) {
    case GameExpr::Kind::Unit:
      return;
    case GameExpr::Kind::Flat: {
      if (s.empty()) {
        emit("q");
      } else if (s.size() == 1 && s[0].base == "q") {
        for (const auto& v : e.values()) emit(v);
      }
      return;
    }
    case GameExpr::Kind::Prod: {
      if (s.empty()) {
        for (std::size_t k = 0; k < e.parts().size(); ++k) {
          prefix.push_back(Tag::index(static_cast<int>(k)));
          enum_rec(e.parts()[k], {}, turn, prefix, out);
          prefix.pop_back();
        }
      } else {
        const Tag t = s.front().path.front();
        Position sub = restrict_tag(s, Tag::Kind::Index, t.n);
        prefix.push_back(t);
        enum_rec(e.parts()[static_cast<std::size_t>(t.n)], sub, turn, prefix, out);
        prefix.pop_back();
      }
      return;
    }
    case GameExpr::Kind::Tensor:
    case GameExpr::Kind::Seq:
    case GameExpr::Kind::Limp: {
      Position sl = restrict_tag(s, Tag::Kind::L, 0);
      prefix.push_back(Tag::l());
      enum_rec(e.left(), sl,
               e.kind() == GameExpr::Kind::Limp ? flip(turn) : turn, prefix, out);
      prefix.pop_back();
      if (!(e.kind() == GameExpr::Kind::Seq && s.empty())) {
        Position sr = restrict_tag(s, Tag::Kind::R, 0);
        prefix.push_back(Tag::r());
        enum_rec(e.right(), sr, turn, prefix, out);
        prefix.pop_back();
      }
      return;
    }
    case GameExpr::Kind::Bang: {
      const int opened = opened_copies(s);
      for (int n = 0; n <= opened; ++n) {
        Position sub = restrict_tag(s, Tag::Kind::Copy, n);
        prefix.push_back(Tag::copy(n));
        enum_rec(e.inner(), sub, turn, prefix, out);
        prefix.pop_back();
      }
      return;
    }
  }
}

}  // namespace

bool move_legal(const GameExpr& game, PositionView s, const Move& m) {
  return legal_rec(game, s, m, 0, parity_turn(s.size()));
}

bool is_position(const GameExpr& game, PositionView s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!move_legal(game, s.first(i), s[i])) return false;
  }
  return true;
}

std::vector<Move> next_moves(const GameExpr& game, PositionView s) {
  std::vector<Move> out;
  std::vector<Tag> prefix;
  enum_rec(game, s, parity_turn(s.size()), prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Position> positions_up_to(const GameExpr& game, int depth,
                                      std::size_t node_budget) {
  std::vector<Position> out;
  std::deque<Position> frontier;
  frontier.push_back({});
  out.push_back({});
  while (!frontier.empty()) {
    Position s = std::move(frontier.front());
    frontier.pop_front();
    if (static_cast<int>(s.size()) >= depth) continue;
    for (const Move& m : next_moves(game, s)) {
      Position next = s;
      next.push_back(m);
      out.push_back(next);
      if (out.size() > node_budget)
        throw ResourceError("positions_up_to exceeded node budget on " + game.str());
      frontier.push_back(std::move(next));
    }
  }
  return out;
}

GameExpr flat_game(std::vector<std::string> values) {
  return GameExpr::flat(std::move(values));
}

GameExpr unit_game() { return GameExpr::unit(); }

std::string format_trace(const GameExpr& game, PositionView s) {
  std::ostringstream out;
  for (const Move& m : s)
    out << to_char(polarity_of(game, m)) << " " << to_string(m) << "\n";
  return out.str();
}

Position parse_trace(const std::string& text) {
  Position out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t sp = line.find(' ');
    if (sp == std::string::npos || (line[0] != 'O' && line[0] != 'P'))
      throw std::invalid_argument("bad trace line: '" + line + "'");
    out.push_back(parse_move(line.substr(sp + 1)));
  }
  return out;
}

}  // namespace seqgames
