#include "frobsplit/schubert.hpp"

#include <algorithm>
#include <numeric>

namespace frobsplit {

Permutation::Permutation(std::vector<unsigned> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (unsigned v : w_) {
    if (v < 1 || v > w_.size() || seen[v]) throw PreconditionError("not a permutation of 1..n");
    seen[v] = true;
  }
}

Permutation Permutation::parse(std::string_view digits) {
  std::vector<unsigned> w;
  for (char c : digits) {
    if (c < '1' || c > '9') throw ParseError("permutation digits must be 1-9");
    w.push_back(static_cast<unsigned>(c - '0'));
  }
  return Permutation(std::move(w));
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<unsigned> w(n);
  std::iota(w.begin(), w.end(), 1U);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(std::size_t n) {
  std::vector<unsigned> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<unsigned>(n - i);
  return Permutation(std::move(w));
}

Permutation Permutation::simple(std::size_t n, std::size_t i) {
  if (i < 1 || i >= n) throw PreconditionError("simple reflection index out of range");
  auto w = identity(n).w_;
  std::swap(w[i - 1], w[i]);
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> v(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) v[w_[i] - 1] = static_cast<unsigned>(i + 1);
  return Permutation(std::move(v));
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (o.size() != size()) throw ArityMismatch("permutations of different sizes");
  std::vector<unsigned> v(size());
  for (std::size_t i = 0; i < size(); ++i) v[i] = w_[o.w_[i] - 1];
  return Permutation(std::move(v));
}

std::size_t Permutation::length() const {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    for (std::size_t j = i + 1; j < w_.size(); ++j) inv += w_[i] > w_[j];
  return inv;
}

std::vector<std::size_t> Permutation::descents() const {
  std::vector<std::size_t> d;
  for (std::size_t i = 0; i + 1 < w_.size(); ++i)
    if (w_[i] > w_[i + 1]) d.push_back(i + 1);
  return d;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (size() > 9 && i) s += ',';
    s += std::to_string(w_[i]);
  }
  return s;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  auto w = Permutation::identity(n).one_line();
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<std::vector<unsigned>> rank_matrix(const Permutation& pi) {
  const std::size_t n = pi.size();
  std::vector<std::vector<unsigned>> r(n + 1, std::vector<unsigned>(n + 1, 0));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) r[i][j] = r[i - 1][j] + (pi(i) <= j ? 1U : 0U);
  return r;
}

std::vector<std::pair<std::size_t, std::size_t>> diagram(const Permutation& pi) {
  auto inv = pi.inverse();
  std::vector<std::pair<std::size_t, std::size_t>> d;
  for (std::size_t i = 1; i <= pi.size(); ++i)
    for (std::size_t j = 1; j <= pi.size(); ++j)
      if (pi(i) > j && inv(j) > i) d.emplace_back(i, j);
  return d;
}

RankConditions rank_conditions(const Permutation& pi) {
  RankConditions rc{rank_matrix(pi), {}};
  auto d = diagram(pi);
  auto in = [&](std::size_t i, std::size_t j) { return std::find(d.begin(), d.end(), std::pair{i, j}) != d.end(); };
  for (auto [i, j] : d)
    if (!in(i + 1, j) && !in(i, j + 1)) rc.essential.push_back({i, j, rc.rank[i][j]});
  return rc;
}

bool bruhat_leq(const Permutation& pi, const Permutation& sigma) {
  if (pi.size() != sigma.size()) throw ArityMismatch("permutations of different sizes");
  auto a = rank_matrix(pi), b = rank_matrix(sigma);
  for (std::size_t i = 1; i <= pi.size(); ++i)
    for (std::size_t j = 1; j <= pi.size(); ++j)
      if (a[i][j] < b[i][j]) return false;
  return true;
}

namespace {

std::vector<Permutation> covers(const Permutation& pi, bool down) {
  std::vector<Permutation> out;
  const std::size_t n = pi.size(), len = pi.length();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto w = pi.one_line();
      if ((w[i] > w[j]) != down) continue;
      std::swap(w[i], w[j]);
      Permutation s(w);
      if (s.length() + (down ? 1 : 0) == len + (down ? 0 : 1)) out.push_back(s);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Permutation> lower_covers(const Permutation& pi) { return covers(pi, true); }
std::vector<Permutation> upper_covers(const Permutation& pi) { return covers(pi, false); }

bool bigrassmannian(const Permutation& pi) {
  return pi.descents().size() <= 1 && pi.inverse().descents().size() <= 1;
}

FinitePoset schubert_containment_poset(std::size_t n) {
  auto perms = all_permutations(n);
  const std::size_t m = perms.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(perms[a].to_string());
    for (std::size_t b = 0; b < m; ++b) leq[a][b] = bruhat_leq(perms[b], perms[a]);
  }
  return FinitePoset(std::move(leq), std::move(labels));
}

template <class D>
Polynomial<D> minor(const D& domain, std::size_t rows, std::size_t cols, const std::vector<std::size_t>& row_set,
                    const std::vector<std::size_t>& col_set) {
  if (row_set.size() != col_set.size()) throw PreconditionError("minor needs as many rows as columns");
  for (auto r : row_set)
    if (r < 1 || r > rows) throw ArityMismatch("row out of range");
  for (auto c : col_set)
    if (c < 1 || c > cols) throw ArityMismatch("column out of range");
  const std::size_t k = row_set.size(), arity = rows * cols;
  using Poly = Polynomial<D>;
  Poly det(domain, arity);
  std::vector<std::size_t> sigma(k);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  do {
    Monomial m(arity);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t v = (row_set[i] - 1) * cols + (col_set[sigma[i]] - 1);
      m.set(v, m[v] + 1);
    }
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) inversions += sigma[i] > sigma[j];
    auto t = Poly::term(domain, m, typename Poly::Scalar(1));
    det = inversions % 2 ? det - t : det + t;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return det;
}

template PrimePoly minor(const PrimeField&, std::size_t, std::size_t, const std::vector<std::size_t>&,
                         const std::vector<std::size_t>&);
template IntPoly minor(const IntegerRing&, std::size_t, std::size_t, const std::vector<std::size_t>&,
                       const std::vector<std::size_t>&);

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i + 1);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::vector<std::size_t> range(std::size_t a, std::size_t b) {
  std::vector<std::size_t> v;
  for (std::size_t i = a; i <= b; ++i) v.push_back(i);
  return v;
}

Monomial antidiagonal(std::size_t cols, std::size_t arity, const std::vector<std::size_t>& rs,
                      const std::vector<std::size_t>& cs) {
  Monomial m(arity);
  const std::size_t k = rs.size();
  for (std::size_t i = 0; i < k; ++i) m.set((rs[i] - 1) * cols + (cs[k - 1 - i] - 1), 1);
  return m;
}

}  // namespace

bool is_antidiagonal_order(const WeightOrder& order, std::size_t rows, std::size_t cols) {
  if (order.arity() != rows * cols) throw ArityMismatch("order arity differs from the matrix size");
  IntegerRing Z;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k)
    for (const auto& rs : subsets(rows, k))
      for (const auto& cs : subsets(cols, k)) {
        auto d = minor(Z, rows, cols, rs, cs);
        if (!(leading_term(order, d).terms().front().monomial == antidiagonal(cols, rows * cols, rs, cs)))
          return false;
      }
  return true;
}

PolyIdeal fulton_generators(const Permutation& pi, const PrimeField& field, std::size_t arity) {
  const std::size_t n = pi.size();
  if (arity != n * n) throw ArityMismatch("matrix Schubert ideals live in n^2 variables");
  std::vector<PrimePoly> gens;
  for (const auto& box : rank_conditions(pi).essential)
    for (const auto& rs : subsets(box.row, box.rank + 1))
      for (const auto& cs : subsets(box.col, box.rank + 1)) gens.push_back(minor(field, n, n, rs, cs));
  return PolyIdeal(field, arity, std::move(gens));
}

MonomialIdeal fulton_antidiagonal_ideal(const Permutation& pi) {
  const std::size_t n = pi.size();
  std::vector<Monomial> gens;
  for (const auto& box : rank_conditions(pi).essential)
    for (const auto& rs : subsets(box.row, box.rank + 1))
      for (const auto& cs : subsets(box.col, box.rank + 1)) gens.push_back(antidiagonal(n, n * n, rs, cs));
  return MonomialIdeal(n * n, std::move(gens));
}

IntPoly schubert_splitting_poly(std::size_t n) {
  if (n < 1) throw PreconditionError("n must be positive");
  return rect_splitting_poly(n, n);
}

IntPoly rect_splitting_poly(std::size_t k, std::size_t n) {
  if (k < 1 || k > n) throw PreconditionError("need 1 <= k <= n");
  IntegerRing Z;
  IntPoly f = IntPoly::constant(Z, k * n, 1);
  for (std::size_t i = 1; i < k; ++i) f *= minor(Z, k, n, range(1, i), range(1, i));
  for (std::size_t i = 1; i <= n - k; ++i) f *= minor(Z, k, n, range(1, k), range(i, i + k - 1));
  // lower-right squares: rows j..k against the last k-j+1 columns
  for (std::size_t j = 1; j <= k; ++j) f *= minor(Z, k, n, range(j, k), range(n - k + j, n));
  return f;
}

SchubertPoset generate_matrix_schuberts(std::size_t n, std::uint32_t p, const CompatOptions& options) {
  if (n < 1) throw PreconditionError("n must be positive");
  PrimeField F(p);
  const std::size_t arity = n * n;
  auto order = antidiagonal_weight(n, n);
  if (!is_antidiagonal_order(order, n, n)) throw InvariantViolation("antidiagonal weight fails on some minor");
  auto f = reduce_mod_p(schubert_splitting_poly(n), F);

  auto perms = all_permutations(n);
  std::vector<PolyIdeal> catalog;
  for (const auto& w : perms) catalog.push_back(fulton_generators(w, F, arity));

  std::vector<PolyIdeal> seeds;
  for (std::size_t i = 1; i < n; ++i)
    seeds.emplace_back(F, arity, std::vector<PrimePoly>{minor(F, n, n, range(1, i), range(1, i))});

  ClosureOptions opts;
  opts.compat = options;
  opts.order = order;
  opts.max_members = 2 * perms.size() + 8;
  SchubertPoset out{closure_algorithm(seeds, f, catalog_hook(catalog), opts), perms, {}};
  for (const auto& I : catalog) {
    auto idx = out.poset.find(I);
    if (!idx) throw InvariantViolation("a matrix Schubert variety was not produced");
    out.member_of.push_back(*idx);
  }
  if (out.poset.size() != perms.size()) throw InvariantViolation("closure produced members outside the catalog");
  return out;
}

}  // namespace frobsplit
