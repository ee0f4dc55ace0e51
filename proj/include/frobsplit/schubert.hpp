#pragma once

// Permutations, Bruhat order, Fulton's rank conditions and matrix Schubert
// varieties in the space of n x n matrices (variables m_ij, row-major).

#include <string>
#include <vector>

#include "frobsplit/splitposet.hpp"

namespace frobsplit {

class Permutation {
 public:
  /// One-line notation with values 1..n; throws PreconditionError otherwise.
  explicit Permutation(std::vector<unsigned> one_line);
  /// Digits, e.g. "2143" (n <= 9).
  static Permutation parse(std::string_view digits);
  static Permutation identity(std::size_t n);
  static Permutation longest(std::size_t n);
  /// The simple reflection swapping i and i+1 (1-based).
  static Permutation simple(std::size_t n, std::size_t i);

  std::size_t size() const { return w_.size(); }
  /// pi(i), 1-based.
  unsigned operator()(std::size_t i) const { return w_[i - 1]; }
  const std::vector<unsigned>& one_line() const { return w_; }

  Permutation inverse() const;
  /// (this * o)(i) = this(o(i)).
  Permutation operator*(const Permutation& o) const;
  /// Number of inversions.
  std::size_t length() const;
  /// Positions i with pi(i) > pi(i+1).
  std::vector<std::size_t> descents() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<unsigned> w_;
};

/// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(std::size_t n);

/// r[i][j] = #{k <= i : pi(k) <= j} for 1 <= i, j <= n (index 0 unused).
std::vector<std::vector<unsigned>> rank_matrix(const Permutation& pi);

struct EssentialBox {
  std::size_t row, col;  // 1-based
  unsigned rank;         // r(pi)[row][col]
  friend bool operator==(const EssentialBox&, const EssentialBox&) = default;
};

struct RankConditions {
  std::vector<std::vector<unsigned>> rank;
  std::vector<EssentialBox> essential;  // sorted by (row, col)
};

/// Boxes (i, j) with pi(i) > j and pi^{-1}(j) > i.
std::vector<std::pair<std::size_t, std::size_t>> diagram(const Permutation& pi);
/// Rank matrix and the south-east corners of the diagram.
RankConditions rank_conditions(const Permutation& pi);

/// pi <= sigma in Bruhat order (rank matrices entrywise >=).
bool bruhat_leq(const Permutation& pi, const Permutation& sigma);
/// Elements covered by pi.
std::vector<Permutation> lower_covers(const Permutation& pi);
/// Elements covering pi.
std::vector<Permutation> upper_covers(const Permutation& pi);

/// pi and pi^{-1} each have at most one descent.
bool bigrassmannian(const Permutation& pi);

/// S_n ordered by containment of matrix Schubert varieties, i.e. reverse
/// Bruhat order; labels are one-line strings in all_permutations order.
FinitePoset schubert_containment_poset(std::size_t n);

/// Determinant of the submatrix with the given 1-based rows and columns of a
/// matrix of variables with `cols` columns (row-major).
template <class D>
Polynomial<D> minor(const D& domain, std::size_t rows, std::size_t cols, const std::vector<std::size_t>& row_set,
                    const std::vector<std::size_t>& col_set);

/// Every minor has its antidiagonal product as leading term under `order`.
bool is_antidiagonal_order(const WeightOrder& order, std::size_t rows, std::size_t cols);

/// For each essential box (b, c): all (rank + 1)-minors of the upper-left b x c
/// submatrix. `arity` must be n^2.
PolyIdeal fulton_generators(const Permutation& pi, const PrimeField& field, std::size_t arity);

/// Product of the antidiagonal entries of the given minors of the generators,
/// i.e. the monomials the initial ideal should be generated by.
MonomialIdeal fulton_antidiagonal_ideal(const Permutation& pi);

/// prod_{i<n} d_[1,i] * prod_{j<=n} d_[j,n]; degree n^2.
IntPoly schubert_splitting_poly(std::size_t n);
/// The k x n version; degree kn. Requires 1 <= k <= n.
IntPoly rect_splitting_poly(std::size_t k, std::size_t n);

struct SchubertPoset {
  SplitPoset poset;
  std::vector<Permutation> perms;          // all_permutations(n)
  std::vector<std::size_t> member_of;      // permutation -> member index
};

/// Closure seeded with <d_[1,i]>, decomposing through the catalog of Fulton
/// ideals; members are degenerated under the antidiagonal order.
SchubertPoset generate_matrix_schuberts(std::size_t n, std::uint32_t p, const CompatOptions& options = {});

}  // namespace frobsplit
