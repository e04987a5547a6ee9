#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <stdexcept>

namespace seqgames::rel {

struct RelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite set of named atoms, kept sorted.
struct FinSet {
  std::vector<std::string> atoms;

  static FinSet make(std::vector<std::string> atoms);
  bool contains(const std::string& a) const;
  friend bool operator==(const FinSet&, const FinSet&) = default;
};

/// A relation between two finite sets.
struct Relation {
  FinSet source;
  FinSet target;
  std::set<std::pair<std::string, std::string>> pairs;

  friend bool operator==(const Relation&, const Relation&) = default;
};

using Word = std::vector<std::string>;

/// Atom encodings for compound objects.
std::string pair_atom(const std::string& a, const std::string& b);
std::string word_atom(const Word& w);  // atoms joined with '.', "" for epsilon
Word word_of_atom(const std::string& a);

FinSet tensor_set(const FinSet& a, const FinSet& b);
FinSet unit_set();  // {*}
/// All words over A of length <= bound, as a FinSet of word atoms.
FinSet words_up_to(const FinSet& a, int bound);

Relation rel_identity(const FinSet& a);
Relation rel_compose(const Relation& r, const Relation& s);
Relation rel_tensor(const Relation& r, const Relation& s);
/// Symmetry (x,y) -> (y,x) on a tensor set.
Relation rel_sym(const FinSet& a, const FinSet& b);
/// Associator ((x,y),z) -> (x,(y,z)).
Relation rel_assoc(const FinSet& a, const FinSet& b, const FinSet& c);
/// Left unitor (*,x) -> x.
Relation rel_lunit(const FinSet& a);

/// F(A,S) = (A (x) S) (+) I with atoms "inl(a,s)" and "inr(*)".
FinSet f_on_object(const FinSet& a, const FinSet& s);
/// F(A,g) for g : S -> T.
Relation f_on_rel(const FinSet& a, const Relation& g);

/// alpha : words(<=L) -> F(A, words(<=L-1)), the final-coalgebra structure
/// map on the truncated fragment: epsilon maps to inr(*), a.w to inl(a,w).
Relation alpha_star(const FinSet& a, int bound);

/// The anamorphism of f : S -> F(A,S), unfolded on words of length <= bound:
/// (s, a1..ak) is included when a trace of f emits a1..ak from s and then
/// terminates via inr(*), or when k = bound (the truncation cut).
Relation ana_rel(const Relation& f, const FinSet& a, int bound);

/// Restricts a relation to pairs whose word atoms (on either side) have
/// length <= bound; non-word atoms pass through.
Relation restrict_words(const Relation& r, int bound);

struct ComonoidParts {
  Relation delta;  // words -> words (x) words, all splittings
  Relation eps;    // words -> I, epsilon only
  Relation eta;    // words -> A, single letters
};
ComonoidParts comonoid_parts(const FinSet& a, int bound);

/// The integer-cell state transformer over a finite value set:
/// {(i,(read(i),i))} plus {(i,(write(j),j))}.
Relation cell_rel(const FinSet& values);
/// The same transformer extended to a coalgebra V -> F(V(+)V, V).
Relation cell_coalgebra(const FinSet& values);

struct RelComonoid {
  FinSet carrier;
  Relation delta;
  Relation eps;
};

/// Exact comonoid-law check for a finite comonoid.
bool comonoid_laws_hold(const RelComonoid& cm, std::string* why = nullptr);

struct UniversalPropertyReport {
  bool precondition_ok = true;
  bool lifting_is_morphism = false;
  bool counit_matches = false;
  bool unique = true;  // exhaustive only for tiny instances
  bool exhaustive = false;
  Relation lifting;
  std::string message;
};

/// Checks that f : B -> A lifts uniquely to a comonoid morphism
/// B -> (words(<=L), delta, eps) on the length-graded fragment.  The
/// uniqueness search is exhaustive for |B|, |A| <= 2 and L <= 2.
UniversalPropertyReport check_universal_property(const FinSet& a,
                                                 const RelComonoid& b,
                                                 const Relation& f, int bound);

/// The coalgebra-morphism square for g against alpha, compared on the
/// fragment of words of length <= bound-1.
bool coalgebra_square_holds(const FinSet& a, const Relation& f, const Relation& g,
                            int bound);

std::string to_text(const FinSet& s);
std::string to_text(const Relation& r);

}  // namespace seqgames::rel
