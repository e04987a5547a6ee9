#include "seqgames/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace seqgames::ord {

CnfOrdinal::CnfOrdinal(std::vector<Term> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff == 0) throw OrdinalError("zero coefficient in CNF term");
    if (i + 1 < terms_.size() && terms_[i].exp <= terms_[i + 1].exp)
      throw OrdinalError("CNF exponents must be strictly decreasing");
  }
}

CnfOrdinal CnfOrdinal::finite(std::uint64_t n) {
  if (n == 0) return CnfOrdinal{};
  return CnfOrdinal({{0, n}});
}

CnfOrdinal CnfOrdinal::omega_times_plus(std::uint64_t m, std::uint64_t n) {
  std::vector<Term> ts;
  if (m > 0) ts.push_back({1, m});
  if (n > 0) ts.push_back({0, n});
  return CnfOrdinal(std::move(ts));
}

bool CnfOrdinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0);
}

std::uint64_t CnfOrdinal::finite_value() const {
  if (terms_.empty()) return 0;
  if (!is_finite()) throw OrdinalError("ordinal is not finite");
  return terms_[0].coeff;
}

bool CnfOrdinal::is_limit() const {
  return !terms_.empty() && terms_.back().exp > 0;
}

bool CnfOrdinal::is_successor() const {
  return !terms_.empty() && terms_.back().exp == 0;
}

CnfOrdinal CnfOrdinal::predecessor() const {
  if (!is_successor()) throw OrdinalError("predecessor of a non-successor");
  auto ts = terms_;
  if (ts.back().coeff == 1)
    ts.pop_back();
  else
    ts.back().coeff -= 1;
  return CnfOrdinal(std::move(ts));
}

CnfOrdinal ord_add(const CnfOrdinal& a, const CnfOrdinal& b) {
  if (b.is_zero()) return a;
  const std::uint32_t lead = b.terms().front().exp;
  std::vector<CnfOrdinal::Term> ts;
  for (const auto& t : a.terms()) {
    if (t.exp > lead) ts.push_back(t);
  }
  ts.insert(ts.end(), b.terms().begin(), b.terms().end());
  // Merge a's term of equal leading exponent, absorbed into b's first term.
  for (const auto& t : a.terms()) {
    if (t.exp == lead) {
      ts[ts.size() - b.terms().size()].coeff += t.coeff;
      break;
    }
  }
  return CnfOrdinal(std::move(ts));
}

std::strong_ordering ord_cmp(const CnfOrdinal& a, const CnfOrdinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    if (ta[i].exp != tb[i].exp)
      return ta[i].exp < tb[i].exp ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
    if (ta[i].coeff != tb[i].coeff)
      return ta[i].coeff < tb[i].coeff ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
  }
  if (ta.size() != tb.size())
    return ta.size() < tb.size() ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool ord_is_indecomposable(const CnfOrdinal& a) {
  return a.terms().size() == 1 && a.terms()[0].coeff == 1;
}

std::string to_string(const CnfOrdinal& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out << "+";
    first = false;
    if (t.exp == 0) {
      out << t.coeff;
    } else {
      out << "w";
      if (t.exp > 1) out << "^" << t.exp;
      if (t.coeff > 1) out << "*" << t.coeff;
    }
  }
  return out.str();
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  std::uint64_t nat() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw OrdinalError("expected a natural number at position " + std::to_string(pos));
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      ++pos;
    }
    return v;
  }
};

CnfOrdinal parse_term(Cursor& c) {
  c.skip_ws();
  if (c.pos < c.text.size() && (c.text[c.pos] == 'w' || c.text[c.pos] == 'W')) {
    ++c.pos;
    std::uint64_t exp = 1;
    if (c.eat('^')) exp = c.nat();
    std::uint64_t coeff = 1;
    if (c.eat('*')) coeff = c.nat();
    if (coeff == 0) return CnfOrdinal::zero();
    if (exp > 0xffffffffull) throw OrdinalError("exponent too large");
    return CnfOrdinal({{static_cast<std::uint32_t>(exp), coeff}});
  }
  return CnfOrdinal::finite(c.nat());
}

}  // namespace

CnfOrdinal parse_ordinal(const std::string& text) {
  Cursor c{text};
  CnfOrdinal acc = parse_term(c);
  while (c.eat('+')) acc = ord_add(acc, parse_term(c));
  if (!c.done())
    throw OrdinalError("trailing input in ordinal at position " + std::to_string(c.pos));
  return acc;
}

// ---------------------------------------------------------------------------

SymbolicSeq normalize(const SymbolicSeq& s) {
  SymbolicSeq out;
  for (const auto& b : s) {
    if (!b.asc && b.fin.empty()) continue;
    if (!b.asc && !out.empty() && !out.back().asc) {
      out.back().fin.insert(out.back().fin.end(), b.fin.begin(), b.fin.end());
    } else {
      out.push_back(b);
    }
  }
  return out;
}

bool seq_is_empty(const SymbolicSeq& s) { return normalize(s).empty(); }

CnfOrdinal seq_length(const SymbolicSeq& s) {
  CnfOrdinal len;
  for (const auto& b : normalize(s)) {
    len = ord_add(len, b.asc ? CnfOrdinal::omega()
                             : CnfOrdinal::finite(b.fin.size()));
  }
  return len;
}

SymbolicSeq delta(const SymbolicSeq& s) {
  SymbolicSeq out;
  for (const auto& b : s) {
    if (b.asc) {
      out.push_back(SeqBlock::ascending());
      continue;
    }
    std::vector<std::uint32_t> fin;
    for (auto x : b.fin)
      if (x > 0) fin.push_back(x - 1);
    out.push_back(SeqBlock::finite(std::move(fin)));
  }
  return normalize(out);
}

bool rank_leq(const SymbolicSeq& s_in, const CnfOrdinal& gamma) {
  if (ord_cmp(gamma, CnfOrdinal({{2, 1}})) >= 0)
    throw OrdinalError("rank_leq supports ordinals below w^2 only, got " +
                       to_string(gamma));
  SymbolicSeq s = normalize(s_in);
  CnfOrdinal g = gamma;
  // Successor steps take one derivative each.
  while (true) {
    if (s.empty()) return true;
    if (g.is_zero()) return false;
    if (g.is_successor()) {
      s = delta(s);
      g = g.predecessor();
      continue;
    }
    break;
  }
  // Limit case, g = w*m.  A successor-length prefix t of s consists of some
  // whole blocks followed by a nonempty finite cut (a prefix of a Fin block
  // or Fin(0..k) carved from an Asc block).  Its least rank is
  // w*(asc blocks before the cut) + (finite derivative count), so all
  // prefixes sit below w*m exactly when the ascending blocks of s, plus one
  // for a trailing finite part, number at most m.
  const std::uint64_t m = g.terms().front().coeff;
  std::uint64_t asc_blocks = 0;
  for (const auto& b : s)
    if (b.asc) ++asc_blocks;
  const bool trailing_fin = !s.back().asc;
  return asc_blocks + (trailing_fin ? 1 : 0) <= m;
}

SymbolicSeq take_prefix(const SymbolicSeq& s_in, std::size_t full_blocks,
                        std::size_t cut) {
  SymbolicSeq s = normalize(s_in);
  full_blocks = std::min(full_blocks, s.size());
  SymbolicSeq out(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(full_blocks));
  if (full_blocks < s.size() && cut > 0) {
    const auto& b = s[full_blocks];
    std::vector<std::uint32_t> fin;
    if (b.asc) {
      for (std::size_t i = 0; i < cut; ++i) fin.push_back(static_cast<std::uint32_t>(i));
    } else {
      for (std::size_t i = 0; i < std::min(cut, b.fin.size()); ++i) fin.push_back(b.fin[i]);
    }
    out.push_back(SeqBlock::finite(std::move(fin)));
  }
  return normalize(out);
}

std::string to_string(const SymbolicSeq& s) {
  const SymbolicSeq n = normalize(s);
  if (n.empty()) return "[]";
  std::ostringstream out;
  bool first = true;
  for (const auto& b : n) {
    if (!first) out << ";";
    first = false;
    if (b.asc) {
      out << "asc";
    } else {
      out << "[";
      for (std::size_t i = 0; i < b.fin.size(); ++i) {
        if (i) out << ",";
        out << b.fin[i];
      }
      out << "]";
    }
  }
  return out.str();
}

SymbolicSeq parse_seq(const std::string& text) {
  Cursor c{text};
  SymbolicSeq out;
  do {
    c.skip_ws();
    if (c.pos + 3 <= c.text.size() && c.text.compare(c.pos, 3, "asc") == 0) {
      c.pos += 3;
      out.push_back(SeqBlock::ascending());
    } else if (c.eat('[')) {
      std::vector<std::uint32_t> fin;
      if (!c.eat(']')) {
        do {
          fin.push_back(static_cast<std::uint32_t>(c.nat()));
        } while (c.eat(','));
        if (!c.eat(']')) throw OrdinalError("expected ']' in sequence literal");
      }
      out.push_back(SeqBlock::finite(std::move(fin)));
    } else {
      throw OrdinalError("expected 'asc' or '[' at position " + std::to_string(c.pos));
    }
  } while (c.eat(';'));
  if (!c.done())
    throw OrdinalError("trailing input in sequence at position " + std::to_string(c.pos));
  return normalize(out);
}

}  // namespace seqgames::ord
