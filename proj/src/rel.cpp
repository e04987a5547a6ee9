#include "seqgames/rel.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace seqgames::rel {

FinSet FinSet::make(std::vector<std::string> atoms) {
  std::sort(atoms.begin(), atoms.end());
  if (std::adjacent_find(atoms.begin(), atoms.end()) != atoms.end())
    throw RelError("finite set atoms must be distinct");
  return FinSet{std::move(atoms)};
}

bool FinSet::contains(const std::string& a) const {
  return std::binary_search(atoms.begin(), atoms.end(), a);
}

std::string pair_atom(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

std::string word_atom(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ".";
    out += w[i];
  }
  return out;
}

Word word_of_atom(const std::string& a) {
  Word out;
  if (a.empty()) return out;
  std::size_t at = 0;
  while (true) {
    std::size_t dot = a.find('.', at);
    if (dot == std::string::npos) {
      out.push_back(a.substr(at));
      break;
    }
    out.push_back(a.substr(at, dot - at));
    at = dot + 1;
  }
  return out;
}

FinSet tensor_set(const FinSet& a, const FinSet& b) {
  std::vector<std::string> atoms;
  for (const auto& x : a.atoms)
    for (const auto& y : b.atoms) atoms.push_back(pair_atom(x, y));
  return FinSet::make(std::move(atoms));
}

FinSet unit_set() { return FinSet::make({"*"}); }

FinSet words_up_to(const FinSet& a, int bound) {
  std::vector<Word> layer{{}};
  std::vector<std::string> atoms{word_atom({})};
  for (int d = 0; d < bound; ++d) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (const auto& x : a.atoms) {
        Word grown = w;
        grown.push_back(x);
        atoms.push_back(word_atom(grown));
        next.push_back(std::move(grown));
      }
    }
    layer = std::move(next);
  }
  return FinSet::make(std::move(atoms));
}

Relation rel_identity(const FinSet& a) {
  Relation r{a, a, {}};
  for (const auto& x : a.atoms) r.pairs.emplace(x, x);
  return r;
}

Relation rel_compose(const Relation& r, const Relation& s) {
  if (!(r.target == s.source))
    throw RelError("relation composition: middle sets differ");
  Relation out{r.source, s.target, {}};
  std::multimap<std::string, std::string> by_src;
  for (const auto& p : s.pairs) by_src.emplace(p.first, p.second);
  for (const auto& p : r.pairs) {
    auto [lo, hi] = by_src.equal_range(p.second);
    for (auto it = lo; it != hi; ++it) out.pairs.emplace(p.first, it->second);
  }
  return out;
}

Relation rel_tensor(const Relation& r, const Relation& s) {
  Relation out{tensor_set(r.source, s.source), tensor_set(r.target, s.target), {}};
  for (const auto& p : r.pairs)
    for (const auto& q : s.pairs)
      out.pairs.emplace(pair_atom(p.first, q.first), pair_atom(p.second, q.second));
  return out;
}

Relation rel_sym(const FinSet& a, const FinSet& b) {
  Relation out{tensor_set(a, b), tensor_set(b, a), {}};
  for (const auto& x : a.atoms)
    for (const auto& y : b.atoms)
      out.pairs.emplace(pair_atom(x, y), pair_atom(y, x));
  return out;
}

Relation rel_assoc(const FinSet& a, const FinSet& b, const FinSet& c) {
  Relation out{tensor_set(tensor_set(a, b), c), tensor_set(a, tensor_set(b, c)), {}};
  for (const auto& x : a.atoms)
    for (const auto& y : b.atoms)
      for (const auto& z : c.atoms)
        out.pairs.emplace(pair_atom(pair_atom(x, y), z),
                          pair_atom(x, pair_atom(y, z)));
  return out;
}

Relation rel_lunit(const FinSet& a) {
  Relation out{tensor_set(unit_set(), a), a, {}};
  for (const auto& x : a.atoms) out.pairs.emplace(pair_atom("*", x), x);
  return out;
}

FinSet f_on_object(const FinSet& a, const FinSet& s) {
  std::vector<std::string> atoms{"inr(*)"};
  for (const auto& x : a.atoms)
    for (const auto& y : s.atoms) atoms.push_back("inl(" + x + "," + y + ")");
  return FinSet::make(std::move(atoms));
}

namespace {

// Decodes "inl(a,s)" into its components; nullopt for "inr(*)".
std::optional<std::pair<std::string, std::string>> decode_inl(
    const std::string& atom) {
  if (atom == "inr(*)") return std::nullopt;
  if (atom.rfind("inl(", 0) != 0 || atom.back() != ')')
    throw RelError("not an F-atom: '" + atom + "'");
  std::string body = atom.substr(4, atom.size() - 5);
  std::size_t comma = body.find(',');
  if (comma == std::string::npos) throw RelError("malformed F-atom: '" + atom + "'");
  return std::make_pair(body.substr(0, comma), body.substr(comma + 1));
}

}  // namespace

Relation f_on_rel(const FinSet& a, const Relation& g) {
  Relation out{f_on_object(a, g.source), f_on_object(a, g.target), {}};
  out.pairs.emplace("inr(*)", "inr(*)");
  for (const auto& x : a.atoms)
    for (const auto& p : g.pairs)
      out.pairs.emplace("inl(" + x + "," + p.first + ")",
                        "inl(" + x + "," + p.second + ")");
  return out;
}

Relation alpha_star(const FinSet& a, int bound) {
  if (bound < 1) throw RelError("alpha needs bound >= 1");
  FinSet src = words_up_to(a, bound);
  FinSet dst = f_on_object(a, words_up_to(a, bound - 1));
  Relation out{src, dst, {}};
  out.pairs.emplace(word_atom({}), "inr(*)");
  for (const auto& atom : src.atoms) {
    Word w = word_of_atom(atom);
    if (w.empty()) continue;
    Word tail(w.begin() + 1, w.end());
    out.pairs.emplace(atom, "inl(" + w.front() + "," + word_atom(tail) + ")");
  }
  return out;
}

Relation ana_rel(const Relation& f, const FinSet& a, int bound) {
  if (!(f.target == f_on_object(a, f.source)))
    throw RelError("coalgebra target must be F(A, source)");
  FinSet words = words_up_to(a, bound);
  Relation out{f.source, words, {}};
  // Breadth-first unfolding of traces (state, word-so-far).
  for (const auto& s0 : f.source.atoms) {
    std::vector<std::pair<std::string, Word>> layer{{s0, {}}};
    for (int len = 0; len <= bound; ++len) {
      std::vector<std::pair<std::string, Word>> next;
      for (const auto& [s, w] : layer) {
        if (len == bound) {
          out.pairs.emplace(s0, word_atom(w));  // truncation cut
          continue;
        }
        for (const auto& p : f.pairs) {
          if (p.first != s) continue;
          auto step = decode_inl(p.second);
          if (!step) {
            out.pairs.emplace(s0, word_atom(w));
          } else {
            Word grown = w;
            grown.push_back(step->first);
            next.emplace_back(step->second, std::move(grown));
          }
        }
      }
      layer = std::move(next);
    }
  }
  return out;
}

namespace {

bool is_word_atom_of(const FinSet& words, const std::string& atom) {
  return words.contains(atom);
}

int word_len(const std::string& atom) {
  return static_cast<int>(word_of_atom(atom).size());
}

// Length of the longest word mentioned anywhere inside an atom encoding.
// Recognises word atoms, pair atoms and F-atoms over word atoms.
int max_word_len(const std::string& atom);

int max_word_len_body(const std::string& body) {
  int depth = 0;
  std::size_t start = 0;
  int best = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || (body[i] == ',' && depth == 0)) {
      best = std::max(best, max_word_len(body.substr(start, i - start)));
      start = i + 1;
    } else if (body[i] == '(') {
      ++depth;
    } else if (body[i] == ')') {
      --depth;
    }
  }
  return best;
}

int max_word_len(const std::string& atom) {
  if (atom.size() >= 2 && atom.front() == '(' && atom.back() == ')')
    return max_word_len_body(atom.substr(1, atom.size() - 2));
  if (atom.rfind("inl(", 0) == 0 && atom.back() == ')')
    return max_word_len_body(atom.substr(4, atom.size() - 5));
  if (atom == "inr(*)" || atom == "*") return 0;
  return word_len(atom);
}

}  // namespace

Relation restrict_words(const Relation& r, int bound) {
  Relation out{r.source, r.target, {}};
  for (const auto& p : r.pairs) {
    if (max_word_len(p.first) <= bound && max_word_len(p.second) <= bound)
      out.pairs.insert(p);
  }
  return out;
}

ComonoidParts comonoid_parts(const FinSet& a, int bound) {
  FinSet words = words_up_to(a, bound);
  ComonoidParts out{{words, tensor_set(words, words), {}},
                    {words, unit_set(), {}},
                    {words, a, {}}};
  for (const auto& atom : words.atoms) {
    Word w = word_of_atom(atom);
    for (std::size_t cut = 0; cut <= w.size(); ++cut) {
      Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
      Word v(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
      out.delta.pairs.emplace(atom, pair_atom(word_atom(u), word_atom(v)));
    }
    if (w.empty()) out.eps.pairs.emplace(atom, "*");
    if (w.size() == 1) out.eta.pairs.emplace(atom, w.front());
  }
  return out;
}

Relation cell_rel(const FinSet& values) {
  if (values.atoms.empty()) throw RelError("cell needs a nonempty value set");
  std::vector<std::string> method_atoms;
  for (const auto& v : values.atoms) {
    method_atoms.push_back("read(" + v + ")");
    method_atoms.push_back("write(" + v + ")");
  }
  FinSet methods = FinSet::make(std::move(method_atoms));
  Relation out{values, tensor_set(methods, values), {}};
  for (const auto& i : values.atoms) {
    out.pairs.emplace(i, pair_atom("read(" + i + ")", i));
    for (const auto& j : values.atoms)
      out.pairs.emplace(i, pair_atom("write(" + j + ")", j));
  }
  return out;
}

Relation cell_coalgebra(const FinSet& values) {
  Relation base = cell_rel(values);
  // Retag method atoms as the letters of the trace alphabet and add the
  // terminator pairs (s, inr(*)) for every state.
  std::vector<std::string> letters;
  for (const auto& v : values.atoms) {
    letters.push_back("read(" + v + ")");
    letters.push_back("write(" + v + ")");
  }
  FinSet alphabet = FinSet::make(std::move(letters));
  Relation out{values, f_on_object(alphabet, values), {}};
  for (const auto& p : base.pairs) {
    // p.second = (method, state)
    std::string body = p.second.substr(1, p.second.size() - 2);
    std::size_t comma = body.rfind(',');
    out.pairs.emplace(p.first, "inl(" + body.substr(0, comma) + "," +
                                   body.substr(comma + 1) + ")");
  }
  for (const auto& s : values.atoms) out.pairs.emplace(s, "inr(*)");
  return out;
}

bool comonoid_laws_hold(const RelComonoid& cm, std::string* why) {
  const FinSet& b = cm.carrier;
  auto fail = [&](const char* what) {
    if (why) *why = what;
    return false;
  };
  if (!(cm.delta.source == b) || !(cm.delta.target == tensor_set(b, b)))
    return fail("comultiplication has the wrong shape");
  if (!(cm.eps.source == b) || !(cm.eps.target == unit_set()))
    return fail("counit has the wrong shape");
  Relation idb = rel_identity(b);
  Relation coassoc_l = rel_compose(rel_compose(cm.delta, rel_tensor(cm.delta, idb)),
                                   rel_assoc(b, b, b));
  Relation coassoc_r = rel_compose(cm.delta, rel_tensor(idb, cm.delta));
  if (!(coassoc_l.pairs == coassoc_r.pairs)) return fail("coassociativity fails");
  Relation lcounit =
      rel_compose(rel_compose(cm.delta, rel_tensor(cm.eps, idb)), rel_lunit(b));
  if (!(lcounit.pairs == idb.pairs)) return fail("left counit fails");
  Relation rcounit = rel_compose(
      rel_compose(rel_compose(cm.delta, rel_tensor(idb, cm.eps)), rel_sym(b, unit_set())),
      rel_lunit(b));
  if (!(rcounit.pairs == idb.pairs)) return fail("right counit fails");
  return true;
}

namespace {

// The cofree lifting of f : B -> A along a comonoid on B: relates b to
// a1..ak whenever iterated comultiplication splits b into b1..bk with
// (bi, ai) in f; epsilon comes from the counit.
Relation cofree_lifting(const FinSet& a, const RelComonoid& b, const Relation& f,
                        int bound) {
  FinSet words = words_up_to(a, bound);
  Relation out{b.carrier, words, {}};
  for (const auto& p : b.eps.pairs) out.pairs.emplace(p.first, word_atom({}));
  // layer k: (origin, current-state) pairs able to still emit letters
  std::set<std::pair<std::string, std::pair<std::string, Word>>> layer;
  for (const auto& atom : b.carrier.atoms) layer.insert({atom, {atom, {}}});
  for (int k = 0; k < bound; ++k) {
    std::set<std::pair<std::string, std::pair<std::string, Word>>> next;
    for (const auto& [origin, sw] : layer) {
      const auto& [state, w] = sw;
      for (const auto& d : b.delta.pairs) {
        if (d.first != state) continue;
        std::string body = d.second.substr(1, d.second.size() - 2);
        // split the pair atom at the top-level comma
        int depth = 0;
        std::size_t comma = std::string::npos;
        for (std::size_t i = 0; i < body.size(); ++i) {
          if (body[i] == '(') ++depth;
          if (body[i] == ')') --depth;
          if (body[i] == ',' && depth == 0) {
            comma = i;
            break;
          }
        }
        std::string b1 = body.substr(0, comma), b2 = body.substr(comma + 1);
        for (const auto& fp : f.pairs) {
          if (fp.first != b1) continue;
          Word grown = w;
          grown.push_back(fp.second);
          // terminate via the counit on the remaining state
          for (const auto& ep : b.eps.pairs)
            if (ep.first == b2) out.pairs.emplace(origin, word_atom(grown));
          next.insert({origin, {b2, grown}});
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

bool graded_comonoid_morphism(const FinSet& a, const RelComonoid& b,
                              const Relation& g, int bound) {
  ComonoidParts parts = comonoid_parts(a, bound);
  // delta_A . g == (g (x) g) . delta_B on the fragment of total length <= bound
  Relation lhs = rel_compose(g, parts.delta);
  Relation rhs = rel_compose(b.delta, rel_tensor(g, g));
  auto trim = [&](const Relation& r) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& p : r.pairs) {
      Word u, v;
      std::string body = p.second.substr(1, p.second.size() - 2);
      int depth = 0;
      std::size_t comma = 0;
      for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '(') ++depth;
        if (body[i] == ')') --depth;
        if (body[i] == ',' && depth == 0) {
          comma = i;
          break;
        }
      }
      u = word_of_atom(body.substr(0, comma));
      v = word_of_atom(body.substr(comma + 1));
      if (static_cast<int>(u.size() + v.size()) <= bound) out.insert(p);
    }
    return out;
  };
  if (!(trim(lhs) == trim(rhs))) return false;
  // eps_A . g == eps_B
  Relation eps_of_g = rel_compose(g, parts.eps);
  return eps_of_g.pairs == b.eps.pairs;
}

}  // namespace

UniversalPropertyReport check_universal_property(const FinSet& a,
                                                 const RelComonoid& b,
                                                 const Relation& f, int bound) {
  UniversalPropertyReport report;
  std::string why;
  if (!comonoid_laws_hold(b, &why)) {
    report.precondition_ok = false;
    report.message = "comonoid laws fail: " + why;
    return report;
  }
  report.lifting = cofree_lifting(a, b, f, bound);
  report.lifting_is_morphism = graded_comonoid_morphism(a, b, report.lifting, bound);
  ComonoidParts parts = comonoid_parts(a, bound);
  Relation back = rel_compose(report.lifting, parts.eta);
  report.counit_matches = back.pairs == f.pairs;

  FinSet words = words_up_to(a, bound);
  const std::size_t cells = b.carrier.atoms.size() * words.atoms.size();
  if (b.carrier.atoms.size() <= 2 && a.atoms.size() <= 2 && bound <= 2 &&
      cells <= 12) {
    report.exhaustive = true;
    const std::size_t total = std::size_t{1} << cells;
    for (std::size_t mask = 0; mask < total; ++mask) {
      Relation g{b.carrier, words, {}};
      std::size_t bit = 0;
      for (const auto& x : b.carrier.atoms)
        for (const auto& w : words.atoms) {
          if (mask & (std::size_t{1} << bit)) g.pairs.emplace(x, w);
          ++bit;
        }
      if (!graded_comonoid_morphism(a, b, g, bound)) continue;
      if (!(rel_compose(g, parts.eta).pairs == f.pairs)) continue;
      if (!(g.pairs == report.lifting.pairs)) {
        report.unique = false;
        report.message = "a second graded comonoid morphism lifts f";
      }
    }
  }
  return report;
}

bool coalgebra_square_holds(const FinSet& a, const Relation& f, const Relation& g,
                            int bound) {
  Relation lhs = rel_compose(g, alpha_star(a, bound));
  Relation rhs = rel_compose(f, f_on_rel(a, g));
  return restrict_words(lhs, bound - 1).pairs == restrict_words(rhs, bound - 1).pairs;
}

std::string to_text(const FinSet& s) {
  std::ostringstream out;
  for (const auto& atom : s.atoms) out << atom << "\n";
  return out.str();
}

std::string to_text(const Relation& r) {
  std::ostringstream out;
  for (const auto& p : r.pairs) out << p.first << " -> " << p.second << "\n";
  return out.str();
}

}  // namespace seqgames::rel
