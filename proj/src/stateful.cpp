#include "seqgames/stateful.hpp"

#include <algorithm>

namespace seqgames {

namespace {

void check_spec(const VarSpec& v) {
  if (v.values.empty()) throw std::invalid_argument("variable needs values");
  if (std::find(v.values.begin(), v.values.end(), v.default_value) ==
      v.values.end())
    throw std::invalid_argument("default value '" + v.default_value +
                                "' not among the variable's values");
}

/// I -o !<X> playing a constant stream: every copy answers its question
/// with the same value.
Strategy constant_stream(const GameExpr& flat, const std::string& value,
                         int budget) {
  return compose(eps_strategy(),
                 bang_map(flat_value_strategy(flat, value), budget), budget);
}

}  // namespace

GameExpr var_game(const VarSpec& v) {
  check_spec(v);
  std::vector<GameExpr> factors(v.values.size(), GameExpr::sigma());
  factors.push_back(GameExpr::flat(v.values));
  return GameExpr::prod(std::move(factors));
}

SequoidCoalgebra cell_transformer(const VarSpec& v, int budget) {
  check_spec(v);
  GameExpr x_game = GameExpr::flat(v.values);
  GameExpr state = GameExpr::bang(x_game);
  std::vector<Strategy> methods;
  for (const std::string& val : v.values) {
    // write_x = weak; runit; OK (x) !<x>; wk : !<X> -o Sigma (/) !<X>
    Strategy weak = terminal_strategy(state);
    Strategy runit_rev = empty_strategy(
        GameExpr::limp(GameExpr::unit(),
                       GameExpr::tensor(GameExpr::unit(), GameExpr::unit())),
        "runit_rev");
    Strategy pay = map_tensor(ok_strategy(), constant_stream(x_game, val, budget));
    Strategy wk = wk_strategy(GameExpr::sigma(), state);
    Strategy write = compose(compose(compose(weak, runit_rev, budget), pay, budget),
                             wk, budget);
    write.name = "write_" + val;
    methods.push_back(std::move(write));
  }
  Strategy read = alpha(x_game);
  read.name = "read";
  methods.push_back(std::move(read));

  std::vector<GameExpr> factors(v.values.size(), GameExpr::sigma());
  factors.push_back(x_game);
  Strategy step = compose(map_product(methods), dec_iso_nary(factors, state).inv,
                          budget);
  step.name = "cell_step";
  return SequoidCoalgebra{state, var_game(v), step};
}

Strategy cell_init(const VarSpec& v, int budget) {
  Strategy s = ana(cell_transformer(v, budget), budget);
  s.name = "cell_init";
  return s;
}

Strategy cell(const VarSpec& v, int budget) {
  check_spec(v);
  GameExpr x_game = GameExpr::flat(v.values);
  Strategy s = compose(constant_stream(x_game, v.default_value, budget),
                       cell_init(v, budget), budget);
  s.name = "cell";
  return s;
}

Strategy combinatorial_cell(const VarSpec& v) {
  check_spec(v);
  GameExpr host = GameExpr::limp(GameExpr::unit(), GameExpr::bang(var_game(v)));
  const int read_factor = static_cast<int>(v.values.size());
  return Strategy{
      host, "cell_oracle",
      [v, read_factor](const Position& s) -> std::optional<Move> {
        if (s.empty()) return std::nullopt;
        const Move& m = s.back();
        // Moves are r.c:<n>.i:<k>.<base>.
        if (m.path.size() < 3 || m.base != "q") return std::nullopt;
        const int copy = m.path.at(1).n;
        const int factor = m.path.at(2).n;
        if (factor < read_factor) {
          // a write question q_x: forced acknowledgement *_x
          return Move{{Tag::r(), Tag::copy(copy), Tag::index(factor)}, "*"};
        }
        // the read question: most recently played q_x wins, default otherwise
        std::string value = v.default_value;
        for (const Move& prev : s) {
          if (prev.path.size() >= 3 && prev.path.at(2).kind == Tag::Kind::Index &&
              prev.path.at(2).n < read_factor && prev.base == "q")
            value = v.values[static_cast<std::size_t>(prev.path.at(2).n)];
        }
        return Move{{Tag::r(), Tag::copy(copy), Tag::index(factor)}, value};
      }};
}

namespace {

// Stack contents encode as "s" plus value indices joined by '_', top first.
std::string encode_stack(const std::vector<int>& stack) {
  std::string out = "s";
  for (std::size_t i = 0; i < stack.size(); ++i) {
    if (i) out += "_";
    out += std::to_string(stack[i]);
  }
  return out;
}

std::vector<int> decode_stack(const std::string& text) {
  std::vector<int> out;
  std::size_t at = 1;
  while (at < text.size()) {
    std::size_t us = text.find('_', at);
    if (us == std::string::npos) us = text.size();
    out.push_back(std::stoi(text.substr(at, us - at)));
    at = us + 1;
  }
  return out;
}

std::vector<std::string> all_stacks(std::size_t arity, int bound) {
  std::vector<std::string> out{"s"};
  std::vector<std::vector<int>> layer{{}};
  for (int d = 0; d < bound; ++d) {
    std::vector<std::vector<int>> next;
    for (const auto& st : layer) {
      for (std::size_t x = 0; x < arity; ++x) {
        std::vector<int> grown{static_cast<int>(x)};
        grown.insert(grown.end(), st.begin(), st.end());
        out.push_back(encode_stack(grown));
        next.push_back(std::move(grown));
      }
    }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A single method of a state object over a flat state game: answers its
/// question (possibly after consulting the incoming state) and produces the
/// outgoing state stream by reading the incoming one.  Host:
/// !<State> -o (<Ans> (/) !<State>).
Strategy state_method(const GameExpr& state_flat, const GameExpr& ans_flat,
                      std::string name, bool answer_reads_state,
                      std::function<std::string(const std::string&)> answer_fn,
                      std::function<std::string(const std::string&)> next_fn) {
  GameExpr bang_state = GameExpr::bang(state_flat);
  GameExpr host =
      GameExpr::limp(bang_state, GameExpr::seq(ans_flat, bang_state));
  const int shift = answer_reads_state ? 1 : 0;
  return Strategy{
      host, std::move(name),
      [answer_reads_state, answer_fn, next_fn, shift](
          const Position& s) -> std::optional<Move> {
        if (s.empty()) return std::nullopt;
        const Move& m = s.back();
        if (m.path.front().kind == Tag::Kind::R) {
          if (m.path.at(1).kind == Tag::Kind::L) {
            // the method's question
            if (!answer_reads_state) return Move{{Tag::r(), Tag::l()}, answer_fn("")};
            return Move{{Tag::l(), Tag::copy(0)}, "q"};
          }
          // outgoing-state question for copy n: consult incoming copy n+shift
          const int n = m.path.at(2).n;
          return Move{{Tag::l(), Tag::copy(n + shift)}, "q"};
        }
        // incoming state value for copy k
        const int k = m.path.at(1).n;
        const std::string& value = m.base;
        if (answer_reads_state && k == 0)
          return Move{{Tag::r(), Tag::l()}, answer_fn(value)};
        return Move{{Tag::r(), Tag::r(), Tag::copy(k - shift)}, next_fn(value)};
      }};
}

}  // namespace

GameExpr stack_game(const VarSpec& v) {
  check_spec(v);
  std::vector<GameExpr> factors(v.values.size(), GameExpr::sigma());
  std::vector<std::string> answers = v.values;
  answers.push_back("empty");
  factors.push_back(GameExpr::flat(answers));
  return GameExpr::prod(std::move(factors));
}

SequoidCoalgebra stack_transformer(const VarSpec& v, int bound, int budget) {
  check_spec(v);
  if (std::find(v.values.begin(), v.values.end(), "empty") != v.values.end())
    throw std::invalid_argument("'empty' is reserved for the pop result");
  GameExpr state_flat = GameExpr::flat(all_stacks(v.values.size(), bound));
  std::vector<Strategy> methods;
  for (std::size_t x = 0; x < v.values.size(); ++x) {
    auto push_fn = [x, bound](const std::string& enc) {
      std::vector<int> st = decode_stack(enc);
      if (static_cast<int>(st.size()) < bound)
        st.insert(st.begin(), static_cast<int>(x));
      return encode_stack(st);
    };
    methods.push_back(state_method(state_flat, GameExpr::sigma(),
                                   "push_" + v.values[x], false,
                                   [](const std::string&) { return "*"; },
                                   push_fn));
  }
  std::vector<std::string> answers = v.values;
  answers.push_back("empty");
  auto head_fn = [values = v.values](const std::string& enc) {
    std::vector<int> st = decode_stack(enc);
    if (st.empty()) return std::string("empty");
    return values[static_cast<std::size_t>(st.front())];
  };
  auto tail_fn = [](const std::string& enc) {
    std::vector<int> st = decode_stack(enc);
    if (!st.empty()) st.erase(st.begin());
    return encode_stack(st);
  };
  methods.push_back(state_method(state_flat, GameExpr::flat(answers), "pop", true,
                                 head_fn, tail_fn));

  std::vector<GameExpr> factors(v.values.size(), GameExpr::sigma());
  factors.push_back(GameExpr::flat(answers));
  GameExpr state = GameExpr::bang(state_flat);
  Strategy step = compose(map_product(methods), dec_iso_nary(factors, state).inv,
                          budget);
  step.name = "stack_step";
  return SequoidCoalgebra{state, stack_game(v), step};
}

Strategy stack(const VarSpec& v, int bound, int budget) {
  SequoidCoalgebra c = stack_transformer(v, bound, budget);
  Strategy start = compose(
      eps_strategy(),
      bang_map(flat_value_strategy(c.state_game.inner(), "s"), budget), budget);
  Strategy s = compose(start, ana(c, budget), budget);
  s.name = "stack";
  return s;
}

}  // namespace seqgames
