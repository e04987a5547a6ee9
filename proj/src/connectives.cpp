#include "seqgames/connectives.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace seqgames {

namespace {

using Path = std::vector<Tag>;

bool starts_with(const Path& path, const Path& prefix) {
  if (prefix.size() > path.size()) return false;
  return std::equal(prefix.begin(), prefix.end(), path.begin());
}

Path cat(Tag head, const Path& tail) {
  Path out{head};
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

/// A structural copycat whose translation is a fixed bijection between
/// address prefixes of the two host sides.  `pairs` lists (lhs, rhs) prefix
/// pairs relative to the respective side.
Strategy retag_copycat(const GameExpr& lhs, const GameExpr& rhs, std::string name,
                       std::vector<std::pair<Path, Path>> pairs) {
  GameExpr host = GameExpr::limp(lhs, rhs);
  auto translate = [pairs = std::move(pairs)](const Move& m, const Position&) -> Move {
    const bool from_left = m.path.front().kind == Tag::Kind::L;
    Move inner = m.stripped();
    // Longest matching prefix wins; the tables are unambiguous by design but
    // prefixes of different lengths can overlap (e.g. "r" vs "r.r").
    const std::pair<Path, Path>* best = nullptr;
    for (const auto& pr : pairs) {
      const Path& key = from_left ? pr.first : pr.second;
      if (!starts_with(inner.path, key)) continue;
      if (!best || key.size() > (from_left ? best->first : best->second).size())
        best = &pr;
    }
    if (!best)
      throw std::invalid_argument("structural map has no translation for " +
                                  to_string(m));
    const Path& from = from_left ? best->first : best->second;
    const Path& to = from_left ? best->second : best->first;
    Move out;
    out.base = inner.base;
    out.path = to;
    out.path.insert(out.path.end(), inner.path.begin() + static_cast<std::ptrdiff_t>(from.size()),
                    inner.path.end());
    return out.prefixed(from_left ? Tag::r() : Tag::l());
  };
  return translation_copycat(std::move(host), std::move(name), std::move(translate));
}

Iso retag_iso(const GameExpr& lhs, const GameExpr& rhs, const std::string& name,
              const std::vector<std::pair<Path, Path>>& pairs) {
  std::vector<std::pair<Path, Path>> flipped;
  flipped.reserve(pairs.size());
  for (const auto& pr : pairs) flipped.emplace_back(pr.second, pr.first);
  return Iso{retag_copycat(lhs, rhs, name, pairs),
             retag_copycat(rhs, lhs, name + "_inv", flipped)};
}

Strategy empty_iso_side(const GameExpr& lhs, const GameExpr& rhs, std::string name) {
  return empty_strategy(GameExpr::limp(lhs, rhs), std::move(name));
}

// Scans a position for the product factor already in play on the given host
// side (L or R), looking at the tag just below that side.
std::optional<int> active_factor(const Position& s, Tag::Kind side) {
  for (const Move& m : s) {
    if (m.path.size() >= 2 && m.path[0].kind == side &&
        m.path[1].kind == Tag::Kind::Index)
      return m.path[1].n;
  }
  return std::nullopt;
}

}  // namespace

Strategy wk_strategy(const GameExpr& a, const GameExpr& b) {
  return retag_copycat(GameExpr::tensor(a, b), GameExpr::seq(a, b), "wk",
                       {{{Tag::l()}, {Tag::l()}}, {{Tag::r()}, {Tag::r()}}});
}

Iso dist_iso(const GameExpr& a, const GameExpr& b) {
  GameExpr lhs = GameExpr::tensor(a, b);
  GameExpr rhs = GameExpr::prod({GameExpr::seq(a, b), GameExpr::seq(b, a)});

  // rhs factor 0 = A (/) B keeps the tensor's orientation, factor 1 swaps it.
  auto fwd_translate = [](const Move& m, const Position& s) -> Move {
    Move inner = m.stripped();
    if (m.path.front().kind == Tag::Kind::R) {
      const int k = inner.path.at(0).n;
      const bool head = inner.path.at(1).kind == Tag::Kind::L;
      Move core = inner.stripped().stripped();
      const bool into_a = (k == 0) == head;
      return core.prefixed(into_a ? Tag::l() : Tag::r()).prefixed(Tag::l());
    }
    std::optional<int> k = active_factor(s, Tag::Kind::R);
    if (!k) throw std::invalid_argument("dist: no product factor in play");
    const bool in_a = inner.path.at(0).kind == Tag::Kind::L;
    Move core = inner.stripped();
    const Tag slot = (in_a == (*k == 0)) ? Tag::l() : Tag::r();
    return core.prefixed(slot).prefixed(Tag::index(*k)).prefixed(Tag::r());
  };

  auto inv_translate = [](const Move& m, const Position& s) -> Move {
    Move inner = m.stripped();
    if (m.path.front().kind == Tag::Kind::L) {
      const int k = inner.path.at(0).n;
      const bool head = inner.path.at(1).kind == Tag::Kind::L;
      Move core = inner.stripped().stripped();
      const bool into_a = (k == 0) == head;
      return core.prefixed(into_a ? Tag::l() : Tag::r()).prefixed(Tag::r());
    }
    const bool in_a = inner.path.at(0).kind == Tag::Kind::L;
    Move core = inner.stripped();
    std::optional<int> k = active_factor(s, Tag::Kind::L);
    const int factor = k ? *k : (in_a ? 0 : 1);
    const Tag slot = (in_a == (factor == 0)) ? Tag::l() : Tag::r();
    return core.prefixed(slot).prefixed(Tag::index(factor)).prefixed(Tag::l());
  };

  return Iso{translation_copycat(GameExpr::limp(lhs, rhs), "dist", fwd_translate),
             translation_copycat(GameExpr::limp(rhs, lhs), "dist_inv", inv_translate)};
}

Iso dec_iso_nary(const std::vector<GameExpr>& factors, const GameExpr& c) {
  std::vector<GameExpr> seq_factors;
  seq_factors.reserve(factors.size());
  for (const auto& f : factors) seq_factors.push_back(GameExpr::seq(f, c));
  GameExpr lhs = GameExpr::seq(GameExpr::prod(factors), c);
  GameExpr rhs = GameExpr::prod(seq_factors);

  auto fwd_translate = [](const Move& m, const Position& s) -> Move {
    Move inner = m.stripped();
    if (m.path.front().kind == Tag::Kind::R) {
      const int k = inner.path.at(0).n;
      Move core = inner.stripped();
      if (core.path.at(0).kind == Tag::Kind::L)
        return core.stripped().prefixed(Tag::index(k)).prefixed(Tag::l()).prefixed(
            Tag::l());
      return core.stripped().prefixed(Tag::r()).prefixed(Tag::l());
    }
    if (inner.path.at(0).kind == Tag::Kind::L) {
      const int k = inner.path.at(1).n;
      Move core = inner.stripped().stripped();
      return core.prefixed(Tag::l()).prefixed(Tag::index(k)).prefixed(Tag::r());
    }
    std::optional<int> k = active_factor(s, Tag::Kind::R);
    if (!k) throw std::invalid_argument("dec: no product factor in play");
    Move core = inner.stripped();
    return core.prefixed(Tag::r()).prefixed(Tag::index(*k)).prefixed(Tag::r());
  };

  auto inv_translate = [](const Move& m, const Position& s) -> Move {
    Move inner = m.stripped();
    if (m.path.front().kind == Tag::Kind::R) {
      if (inner.path.at(0).kind == Tag::Kind::L) {
        const int k = inner.path.at(1).n;
        Move core = inner.stripped().stripped();
        return core.prefixed(Tag::l()).prefixed(Tag::index(k)).prefixed(Tag::l());
      }
      std::optional<int> k = active_factor(s, Tag::Kind::L);
      if (!k) throw std::invalid_argument("dec_inv: no product factor in play");
      Move core = inner.stripped();
      return core.prefixed(Tag::r()).prefixed(Tag::index(*k)).prefixed(Tag::l());
    }
    const int k = inner.path.at(0).n;
    Move core = inner.stripped();
    if (core.path.at(0).kind == Tag::Kind::L)
      return core.stripped().prefixed(Tag::index(k)).prefixed(Tag::l()).prefixed(
          Tag::r());
    return core.stripped().prefixed(Tag::r()).prefixed(Tag::r());
  };

  return Iso{translation_copycat(GameExpr::limp(lhs, rhs), "dec", fwd_translate),
             translation_copycat(GameExpr::limp(rhs, lhs), "dec_inv", inv_translate)};
}

Iso dec_iso(const GameExpr& a, const GameExpr& b, const GameExpr& c) {
  return dec_iso_nary({a, b}, c);
}

Iso passoc_iso(const GameExpr& a, const GameExpr& b, const GameExpr& c) {
  GameExpr lhs = GameExpr::seq(GameExpr::seq(a, b), c);
  GameExpr rhs = GameExpr::seq(a, GameExpr::tensor(b, c));
  return retag_iso(lhs, rhs, "passoc",
                   {{{Tag::l(), Tag::l()}, {Tag::l()}},
                    {{Tag::l(), Tag::r()}, {Tag::r(), Tag::l()}},
                    {{Tag::r()}, {Tag::r(), Tag::r()}}});
}

Iso r_iso(const GameExpr& a) {
  GameExpr lhs = GameExpr::seq(a, GameExpr::unit());
  return retag_iso(lhs, a, "r", {{{Tag::l()}, {}}});
}

Iso sym_iso(const GameExpr& a, const GameExpr& b) {
  GameExpr lhs = GameExpr::tensor(a, b);
  GameExpr rhs = GameExpr::tensor(b, a);
  return retag_iso(lhs, rhs, "sym",
                   {{{Tag::l()}, {Tag::r()}}, {{Tag::r()}, {Tag::l()}}});
}

Iso assoc_iso(const GameExpr& a, const GameExpr& b, const GameExpr& c) {
  GameExpr lhs = GameExpr::tensor(GameExpr::tensor(a, b), c);
  GameExpr rhs = GameExpr::tensor(a, GameExpr::tensor(b, c));
  return retag_iso(lhs, rhs, "assoc",
                   {{{Tag::l(), Tag::l()}, {Tag::l()}},
                    {{Tag::l(), Tag::r()}, {Tag::r(), Tag::l()}},
                    {{Tag::r()}, {Tag::r(), Tag::r()}}});
}

Iso lunit_iso(const GameExpr& a) {
  GameExpr lhs = GameExpr::tensor(GameExpr::unit(), a);
  return retag_iso(lhs, a, "lunit", {{{Tag::r()}, {}}});
}

Iso runit_iso(const GameExpr& a) {
  GameExpr lhs = GameExpr::tensor(a, GameExpr::unit());
  return retag_iso(lhs, a, "runit", {{{Tag::l()}, {}}});
}

Iso prod_assoc_iso(const GameExpr& a, const GameExpr& b, const GameExpr& c) {
  GameExpr lhs = GameExpr::prod({GameExpr::prod({a, b}), c});
  GameExpr rhs = GameExpr::prod({a, GameExpr::prod({b, c})});
  return retag_iso(lhs, rhs, "passoc_x",
                   {{{Tag::index(0), Tag::index(0)}, {Tag::index(0)}},
                    {{Tag::index(0), Tag::index(1)}, {Tag::index(1), Tag::index(0)}},
                    {{Tag::index(1)}, {Tag::index(1), Tag::index(1)}}});
}

Iso prod_sym_iso(const GameExpr& a, const GameExpr& b) {
  GameExpr lhs = GameExpr::prod({a, b});
  GameExpr rhs = GameExpr::prod({b, a});
  return retag_iso(lhs, rhs, "sym_x",
                   {{{Tag::index(0)}, {Tag::index(1)}},
                    {{Tag::index(1)}, {Tag::index(0)}}});
}

Iso prod_lunit_iso(const GameExpr& a) {
  GameExpr lhs = GameExpr::prod({GameExpr::unit(), a});
  return retag_iso(lhs, a, "lunit_x", {{{Tag::index(1)}, {}}});
}

Iso prod_runit_iso(const GameExpr& a) {
  GameExpr lhs = GameExpr::prod({a, GameExpr::unit()});
  return retag_iso(lhs, a, "runit_x", {{{Tag::index(0)}, {}}});
}

IsoName iso_from_name(const std::string& name) {
  static const std::map<std::string, IsoName> table{
      {"dist", IsoName::kDist},     {"dec", IsoName::kDec},
      {"passoc", IsoName::kPassoc}, {"r", IsoName::kR},
      {"dist0", IsoName::kDist0},   {"dec0", IsoName::kDec0},
      {"sym", IsoName::kSym},       {"assoc", IsoName::kAssoc},
      {"lunit", IsoName::kLunit},   {"runit", IsoName::kRunit},
      {"wk", IsoName::kWk}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown structural map '" + name + "'");
  return it->second;
}

std::string iso_to_name(IsoName n) {
  switch (n) {
    case IsoName::kDist: return "dist";
    case IsoName::kDec: return "dec";
    case IsoName::kPassoc: return "passoc";
    case IsoName::kR: return "r";
    case IsoName::kDist0: return "dist0";
    case IsoName::kDec0: return "dec0";
    case IsoName::kSym: return "sym";
    case IsoName::kAssoc: return "assoc";
    case IsoName::kLunit: return "lunit";
    case IsoName::kRunit: return "runit";
    case IsoName::kWk: return "wk";
  }
  return "?";
}

Iso structural_iso(IsoName n, const std::vector<GameExpr>& args) {
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw std::invalid_argument("structural map '" + iso_to_name(n) + "' needs " +
                                  std::to_string(k) + " argument(s), got " +
                                  std::to_string(args.size()));
  };
  switch (n) {
    case IsoName::kDist:
      need(2);
      return dist_iso(args[0], args[1]);
    case IsoName::kDec:
      need(3);
      return dec_iso(args[0], args[1], args[2]);
    case IsoName::kPassoc:
      need(3);
      return passoc_iso(args[0], args[1], args[2]);
    case IsoName::kR:
      need(1);
      return r_iso(args[0]);
    case IsoName::kDist0: {
      need(1);
      GameExpr lhs = GameExpr::seq(GameExpr::unit(), args[0]);
      return Iso{empty_iso_side(lhs, GameExpr::unit(), "dist0"),
                 empty_iso_side(GameExpr::unit(), lhs, "dist0_inv")};
    }
    case IsoName::kDec0:
      need(0);
      return Iso{empty_iso_side(GameExpr::unit(), GameExpr::unit(), "dec0"),
                 empty_iso_side(GameExpr::unit(), GameExpr::unit(), "dec0_inv")};
    case IsoName::kSym:
      need(2);
      return sym_iso(args[0], args[1]);
    case IsoName::kAssoc:
      need(3);
      return assoc_iso(args[0], args[1], args[2]);
    case IsoName::kLunit:
      need(1);
      return lunit_iso(args[0]);
    case IsoName::kRunit:
      need(1);
      return runit_iso(args[0]);
    case IsoName::kWk: {
      need(2);
      Strategy fwd = wk_strategy(args[0], args[1]);
      // The formal reverse copycat; not a strategy of the reversed host in
      // general, which is what makes wk a one-sided projection.
      Strategy rev = retag_copycat(GameExpr::seq(args[0], args[1]),
                                   GameExpr::tensor(args[0], args[1]), "wk_rev",
                                   {{{Tag::l()}, {Tag::l()}}, {{Tag::r()}, {Tag::r()}}});
      return Iso{fwd, rev};
    }
  }
  throw std::invalid_argument("unhandled structural map");
}

namespace {

// Routes moves of a two-component host (tensor/seq on both sides of the
// implication) to the owning sub-strategy.
Position project_pair(const Position& s, Tag::Kind which) {
  Position out;
  for (const Move& m : s) {
    if (m.path.size() >= 2 && m.path[1].kind == which) {
      Move inner = m;
      inner.path.erase(inner.path.begin() + 1);
      out.push_back(inner);
    }
  }
  return out;
}

Strategy map_pair(const Strategy& sigma, const Strategy& tau, bool sequoid) {
  const GameExpr& a = host_source(sigma);
  const GameExpr& b = host_target(sigma);
  const GameExpr& c = host_source(tau);
  const GameExpr& d = host_target(tau);
  GameExpr host =
      sequoid ? GameExpr::limp(GameExpr::seq(a, c), GameExpr::seq(b, d))
              : GameExpr::limp(GameExpr::tensor(a, c), GameExpr::tensor(b, d));
  std::string op = sequoid ? "(/)" : "(x)";
  return Strategy{
      host, sigma.name + op + tau.name,
      [sigma, tau](const Position& s) -> std::optional<Move> {
        if (s.empty()) return std::nullopt;
        const bool left_component = s.back().path.at(1).kind == Tag::Kind::L;
        const Strategy& active = left_component ? sigma : tau;
        Position sub = project_pair(s, left_component ? Tag::Kind::L : Tag::Kind::R);
        std::optional<Move> r = active.respond(sub);
        if (!r) return std::nullopt;
        Move out = *r;
        out.path.insert(out.path.begin() + 1,
                        left_component ? Tag::l() : Tag::r());
        return out;
      }};
}

}  // namespace

Strategy map_tensor(const Strategy& sigma, const Strategy& tau) {
  return map_pair(sigma, tau, false);
}

Strategy map_seq(const Strategy& sigma, const Strategy& tau) {
  if (!is_strict(sigma))
    throw std::invalid_argument(
        "map_seq needs a strict left strategy, '" + sigma.name +
        "' answers an opening move inside its target");
  return map_pair(sigma, tau, true);
}

Strategy map_product(const std::vector<Strategy>& components) {
  if (components.empty())
    throw std::invalid_argument("map_product needs at least one component");
  const GameExpr& b = host_source(components[0]);
  std::vector<GameExpr> targets;
  targets.reserve(components.size());
  for (const auto& s : components) {
    if (!(host_source(s) == b))
      throw HostMismatchError("map_product components need a common source");
    targets.push_back(host_target(s));
  }
  GameExpr host = GameExpr::limp(b, GameExpr::prod(targets));
  return Strategy{
      host, "<pairing>",
      [components](const Position& s) -> std::optional<Move> {
        std::optional<int> k = active_factor(s, Tag::Kind::R);
        if (!k) return std::nullopt;
        const Strategy& active = components[static_cast<std::size_t>(*k)];
        Position sub;
        for (const Move& m : s) {
          if (m.path.front().kind == Tag::Kind::L) {
            sub.push_back(m);
          } else {
            Move inner = m;
            inner.path.erase(inner.path.begin() + 1);
            sub.push_back(inner);
          }
        }
        std::optional<Move> r = active.respond(sub);
        if (!r) return std::nullopt;
        Move out = *r;
        if (out.path.front().kind == Tag::Kind::R)
          out.path.insert(out.path.begin() + 1, Tag::index(*k));
        return out;
      }};
}

Strategy projection(const std::vector<GameExpr>& factors, std::size_t i) {
  if (i >= factors.size()) throw std::invalid_argument("projection index out of range");
  GameExpr host = GameExpr::limp(GameExpr::prod(factors), factors[i]);
  const Tag idx = Tag::index(static_cast<int>(i));
  return translation_copycat(
      host, "pr" + std::to_string(i),
      [idx](const Move& m, const Position&) -> Move {
        if (m.path.front().kind == Tag::Kind::R)
          return m.stripped().prefixed(idx).prefixed(Tag::l());
        return m.stripped().stripped().prefixed(Tag::r());
      });
}

Strategy product_of(const std::vector<Strategy>& components) {
  if (components.empty())
    throw std::invalid_argument("product_of needs at least one component");
  std::vector<GameExpr> sources, targets;
  for (const auto& s : components) {
    sources.push_back(host_source(s));
    targets.push_back(host_target(s));
  }
  GameExpr host = GameExpr::limp(GameExpr::prod(sources), GameExpr::prod(targets));
  return Strategy{
      host, "<product>",
      [components](const Position& s) -> std::optional<Move> {
        std::optional<int> k = active_factor(s, Tag::Kind::R);
        if (!k) k = active_factor(s, Tag::Kind::L);
        if (!k) return std::nullopt;
        const Strategy& active = components[static_cast<std::size_t>(*k)];
        Position sub;
        for (const Move& m : s) {
          Move inner = m;
          inner.path.erase(inner.path.begin() + 1);
          sub.push_back(inner);
        }
        std::optional<Move> r = active.respond(sub);
        if (!r) return std::nullopt;
        Move out = *r;
        out.path.insert(out.path.begin() + 1, Tag::index(*k));
        return out;
      }};
}

Strategy diagonal(const GameExpr& a) {
  Strategy s = map_product({copycat(a), copycat(a)});
  s.name = "diag";
  return s;
}

GameExpr tensor_power(const GameExpr& a, int n) {
  if (n < 0) throw std::invalid_argument("negative tensor power");
  if (n == 0) return GameExpr::unit();
  if (n == 1) return a;
  return GameExpr::tensor(a, tensor_power(a, n - 1));
}

GameExpr seq_power(const GameExpr& a, int n) {
  if (n < 0) throw std::invalid_argument("negative sequoid power");
  if (n == 0) return GameExpr::unit();
  if (n == 1) return a;
  return GameExpr::seq(a, seq_power(a, n - 1));
}

namespace {

// Address prefix of factor j inside the right-nested n-fold power.
Path power_factor_path(int n, int j) {
  Path p;
  for (int i = 0; i < j; ++i) p.push_back(Tag::r());
  if (j < n - 1) p.push_back(Tag::l());
  return p;
}

// Splits a path (relative to the power) into its factor index and remainder.
std::pair<int, Path> power_factor_of(int n, const Path& path) {
  int j = 0;
  std::size_t at = 0;
  while (j < n - 1) {
    if (at >= path.size()) throw std::invalid_argument("path too short for power");
    if (path[at].kind == Tag::Kind::L) {
      ++at;
      break;
    }
    if (path[at].kind != Tag::Kind::R)
      throw std::invalid_argument("bad tag inside power address");
    ++at;
    ++j;
  }
  return {j, Path(path.begin() + static_cast<std::ptrdiff_t>(at), path.end())};
}

}  // namespace

Strategy tensor_permutation(const GameExpr& a, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> inverse(perm.size());
  std::set<int> seen;
  for (int j = 0; j < n; ++j) {
    if (perm[static_cast<std::size_t>(j)] < 0 || perm[static_cast<std::size_t>(j)] >= n ||
        !seen.insert(perm[static_cast<std::size_t>(j)]).second)
      throw std::invalid_argument("tensor_permutation needs a permutation");
    inverse[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] = j;
  }
  GameExpr pow = tensor_power(a, n);
  return translation_copycat(
      GameExpr::limp(pow, pow), "sym_pi",
      [n, perm, inverse](const Move& m, const Position&) -> Move {
        const bool from_left = m.path.front().kind == Tag::Kind::L;
        auto [j, rest] = power_factor_of(n, m.stripped().path);
        const int k = from_left ? perm[static_cast<std::size_t>(j)]
                                : inverse[static_cast<std::size_t>(j)];
        Move out;
        out.base = m.base;
        out.path = power_factor_path(n, k);
        out.path.insert(out.path.end(), rest.begin(), rest.end());
        return out.prefixed(from_left ? Tag::r() : Tag::l());
      });
}

Strategy wk_power(const GameExpr& a, int n, int budget) {
  if (n < 1) throw std::invalid_argument("wk_power needs n >= 1");
  if (n == 1) return copycat(a);
  Strategy prev = wk_power(a, n - 1, budget);
  Strategy first = wk_strategy(a, tensor_power(a, n - 1));
  Strategy s = compose(first, map_seq(copycat(a), prev), budget);
  s.name = "wk^" + std::to_string(n);
  return s;
}

Strategy eq_power(const GameExpr& a, int n) {
  if (n < 1) throw std::invalid_argument("eq_power needs n >= 1");
  GameExpr host = GameExpr::limp(seq_power(a, n), tensor_power(a, n));
  return translation_copycat(
      host, "eq" + std::to_string(n),
      [n](const Move& m, const Position& s) -> Move {
        // Tensor factors in order of first opening on the right.
        std::vector<int> opening_order;
        for (const Move& mv : s) {
          if (mv.path.front().kind != Tag::Kind::R) continue;
          int j = power_factor_of(n, mv.stripped().path).first;
          if (std::find(opening_order.begin(), opening_order.end(), j) ==
              opening_order.end())
            opening_order.push_back(j);
        }
        const bool from_left = m.path.front().kind == Tag::Kind::L;
        auto [j, rest] = power_factor_of(n, m.stripped().path);
        int k;
        if (from_left) {
          // sequoid slot j plays against the j-th opened tensor factor
          if (j >= static_cast<int>(opening_order.size()))
            throw std::invalid_argument("eq: sequoid slot not yet bound");
          k = opening_order[static_cast<std::size_t>(j)];
        } else {
          auto it = std::find(opening_order.begin(), opening_order.end(), j);
          k = static_cast<int>(it - opening_order.begin());
        }
        Move out;
        out.base = m.base;
        out.path = power_factor_path(n, k);
        out.path.insert(out.path.end(), rest.begin(), rest.end());
        return out.prefixed(from_left ? Tag::r() : Tag::l());
      });
}

}  // namespace seqgames
