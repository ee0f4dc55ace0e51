#pragma once

// Type-A Kazhdan-Lusztig varieties in Bott-Samelson coordinates c_1..c_N
// attached to a reduced word Q = (a_1, ..., a_N) of simple reflections.

#include <random>
#include <vector>

#include "frobsplit/schubert.hpp"

namespace frobsplit {

/// Left fold w <- w * s_a when that is longer, else w. Indices are 1..n-1.
Permutation demazure_product(const std::vector<std::size_t>& word, std::size_t n);

class ReducedWord {
 public:
  /// Throws PreconditionError when an index is out of range or the word is
  /// not reduced.
  ReducedWord(std::size_t n, std::vector<std::size_t> entries);
  /// Digits, e.g. "1232".
  static ReducedWord parse(std::size_t n, std::string_view digits);

  std::size_t n() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<std::size_t>& entries() const { return entries_; }
  /// The product of the word.
  const Permutation& target() const { return v_; }

 private:
  std::size_t n_;
  std::vector<std::size_t> entries_;
  Permutation v_;
};

/// All reduced words of v, in lexicographic order.
std::vector<ReducedWord> reduced_words(const Permutation& v);

/// (r_n ... r_1)(r_{n+1} ... r_2) ... (r_{2n-1} ... r_n) in S_{2n}. Position
/// t = (k-1) n + s (s = 0..n-1) carries the variable c_{n-s, k}.
ReducedWord square_word(std::size_t n);

using PolyMatrix = std::vector<std::vector<IntPoly>>;

/// prod_i e_{a_i}(c_i) r_{a_i}, each factor [[c, -1], [1, 0]] on rows and
/// columns a_i, a_i + 1. Entries are integer polynomials in c_1..c_N.
PolyMatrix bott_samelson_matrix(const ReducedWord& Q);

/// Determinant of the upper-left i x i submatrix, 1 <= i <= size.
IntPoly upper_left_minor(const PolyMatrix& M, std::size_t i);
IntPoly determinant(const PolyMatrix& M);

/// prod_{i=1}^{n-1} of the upper-left minors of the Bott-Samelson matrix.
/// Throws InvariantViolation unless its lex leading term is +-prod c_i.
IntPoly kl_splitting_poly(const ReducedWord& Q);

/// Fulton's generators for w, pulled back along the Bott-Samelson matrix and
/// reduced mod p. Requires w <= v.
PolyIdeal kl_ideal(const ReducedWord& Q, const Permutation& w, std::uint32_t p);

/// Stanley-Reisner ideal of the subword complex: faces are position sets F
/// whose complement has Demazure product >= w. Requires w <= v.
MonomialIdeal subword_complex(const ReducedWord& Q, const Permutation& w);

/// Members I_w^Q for every w <= v, degenerated under lex c_1 > ... > c_N;
/// `perms[i]` is the w of member `member_of[i]`.
struct KlPoset {
  SplitPoset poset;
  std::vector<Permutation> perms;
  std::vector<std::size_t> member_of;
};
KlPoset kl_poset(const ReducedWord& Q, std::uint32_t p, const CompatOptions& options = {});

struct MomegaReport {
  std::size_t orthogonal_checks = 0, pairing_checks = 0, failures = 0;
  bool ok() const { return failures == 0; }
};

/// Checks m_i(e_j(c) r_j g) = m_i(g) for i != j and
/// m_i(e_i(c) r_i g) = c m_i(g) + m_i(r_i g) on random g in M_n(F_p).
MomegaReport momega_identity_check(std::size_t n, std::uint32_t p, std::size_t trials, std::uint64_t seed);

}  // namespace frobsplit
