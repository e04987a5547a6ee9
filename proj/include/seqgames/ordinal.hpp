#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace seqgames::ord {

struct OrdinalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ordinal below omega^omega in Cantor normal form: a strictly decreasing
/// sum of terms w^exp * coeff with natural exponents and coefficients >= 1.
/// The empty sum is 0.
class CnfOrdinal {
 public:
  struct Term {
    std::uint32_t exp = 0;
    std::uint64_t coeff = 0;
    friend bool operator==(const Term&, const Term&) = default;
  };

  CnfOrdinal() = default;
  explicit CnfOrdinal(std::vector<Term> terms);

  static CnfOrdinal zero() { return CnfOrdinal{}; }
  static CnfOrdinal finite(std::uint64_t n);
  static CnfOrdinal omega() { return CnfOrdinal({{1, 1}}); }
  /// w*m + n
  static CnfOrdinal omega_times_plus(std::uint64_t m, std::uint64_t n);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  /// Finite value; throws for infinite ordinals.
  std::uint64_t finite_value() const;
  /// Limit ordinal: nonzero with no w^0 term.
  bool is_limit() const;
  bool is_successor() const;
  /// Predecessor of a successor ordinal.
  CnfOrdinal predecessor() const;

  friend bool operator==(const CnfOrdinal&, const CnfOrdinal&) = default;

 private:
  std::vector<Term> terms_;
};

/// Left-absorbing CNF ordinal addition.
CnfOrdinal ord_add(const CnfOrdinal& a, const CnfOrdinal& b);
std::strong_ordering ord_cmp(const CnfOrdinal& a, const CnfOrdinal& b);
inline bool ord_leq(const CnfOrdinal& a, const CnfOrdinal& b) {
  return ord_cmp(a, b) <= 0;
}
/// True for the additively indecomposable ordinals w^k (k >= 0, so 1 counts).
bool ord_is_indecomposable(const CnfOrdinal& a);

std::string to_string(const CnfOrdinal& a);
/// Grammar: ord := nat | term ("+" term)* ; term := "w" ("^" nat)? ("*" nat)? | nat.
/// Non-canonical sums are normalised by ordinal addition, so "1+w" parses to w.
CnfOrdinal parse_ordinal(const std::string& text);

// ---------------------------------------------------------------------------
// Symbolic transfinite sequences of naturals: a finite concatenation of
// blocks, each either an explicit finite list or the ascending enumeration
// 0,1,2,... of order type omega.

struct SeqBlock {
  bool asc = false;
  std::vector<std::uint32_t> fin;  // used when !asc

  static SeqBlock ascending() { return SeqBlock{true, {}}; }
  static SeqBlock finite(std::vector<std::uint32_t> xs) {
    return SeqBlock{false, std::move(xs)};
  }
  friend bool operator==(const SeqBlock&, const SeqBlock&) = default;
};

using SymbolicSeq = std::vector<SeqBlock>;

/// Drops empty finite blocks and merges adjacent finite blocks.
SymbolicSeq normalize(const SymbolicSeq& s);
bool seq_is_empty(const SymbolicSeq& s);
/// Ordinal length of the sequence.
CnfOrdinal seq_length(const SymbolicSeq& s);

/// The derivative: remove all zeros, subtract one from every other entry.
/// Blockwise: Fin(xs) loses its zeros and decrements the rest; Asc maps to Asc.
SymbolicSeq delta(const SymbolicSeq& s);

/// Decides the rank predicate s <= gamma for gamma < w^2.
///   - epsilon <= 0
///   - s <= gamma+1 iff delta(s) <= gamma
///   - for limit mu, s <= mu iff every successor-length prefix t of s
///     satisfies t <= gamma for some gamma < mu (decided on the block
///     structure: prefixes of an Asc block are Fin(0..k) or the whole block).
/// Throws OrdinalError for gamma >= w^2.
bool rank_leq(const SymbolicSeq& s, const CnfOrdinal& gamma);

/// Subsequence selector used by the property suite: keep or drop whole
/// blocks, shorten finite blocks, or replace an Asc block by Fin(0..k).
/// Every result is a genuine subsequence of the input.
SymbolicSeq take_prefix(const SymbolicSeq& s, std::size_t full_blocks,
                        std::size_t cut);

std::string to_string(const SymbolicSeq& s);
/// Grammar: seq := block (";" block)* ; block := "asc" | "[" nat ("," nat)* "]" | "[]".
SymbolicSeq parse_seq(const std::string& text);

}  // namespace seqgames::ord
