#include "frobsplit/splitposet.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "frobsplit/counting.hpp"
#include "frobsplit/gvd.hpp"

namespace frobsplit {

// ---------------------------------------------------------------------------
// FinitePoset

FinitePoset::FinitePoset(std::vector<std::vector<bool>> leq, std::vector<std::string> labels)
    : leq_(std::move(leq)), labels_(std::move(labels)) {
  const std::size_t n = leq_.size();
  for (const auto& row : leq_)
    if (row.size() != n) throw InvariantViolation("order relation is not square");
  if (labels_.empty())
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  if (labels_.size() != n) throw InvariantViolation("one label per element");
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) throw InvariantViolation("order relation is not reflexive");
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a]) throw InvariantViolation("order relation has a cycle");
      if (!leq_[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (leq_[b][c] && !leq_[a][c]) throw InvariantViolation("order relation is not transitive");
    }
  }
}

FinitePoset FinitePoset::from_covers(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                                     std::vector<std::string> labels) {
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
  for (std::size_t i = 0; i < size; ++i) leq[i][i] = true;
  for (auto [a, b] : covers) {
    if (a >= size || b >= size) throw InvariantViolation("cover pair out of range");
    leq[a][b] = true;
  }
  // Warshall
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      if (leq[i][k])
        for (std::size_t j = 0; j < size; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return FinitePoset(std::move(leq), std::move(labels));
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c) cover = !(less(a, c) && less(c, b));
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

std::optional<std::size_t> FinitePoset::glb(const std::vector<std::size_t>& elements) const {
  std::vector<std::size_t> lower;
  for (std::size_t r = 0; r < size(); ++r) {
    bool below = true;
    for (std::size_t e : elements) below = below && leq(r, e);
    if (below) lower.push_back(r);
  }
  for (std::size_t g : lower) {
    bool greatest = true;
    for (std::size_t r : lower) greatest = greatest && leq(r, g);
    if (greatest) return g;
  }
  return std::nullopt;
}

std::vector<std::size_t> basic_elements(const FinitePoset& Q) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < Q.size(); ++p) {
    std::vector<std::size_t> up;
    for (std::size_t q = 0; q < Q.size(); ++q)
      if (Q.less(p, q)) up.push_back(q);
    if (up.empty()) {
      out.push_back(p);
      continue;
    }
    auto g = Q.glb(up);
    if (!(g && *g == p)) out.push_back(p);
  }
  return out;
}

std::string to_dot(const FinitePoset& Q, std::string_view name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < Q.size(); ++i) out << "  n" << i << " [label=\"" << Q.label(i) << "\"];\n";
  for (auto [a, b] : Q.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Hooks

namespace {

MonomialIdeal monomial_radical(const MonomialIdeal& M) {
  std::vector<Monomial> gens;
  for (const auto& g : M.generators()) {
    Monomial r(M.arity());
    for (std::size_t v : g.support()) r.set(v, 1);
    gens.push_back(r);
  }
  return MonomialIdeal(M.arity(), std::move(gens));
}

PrimePoly monic(const PrimePoly& g) {
  const auto& F = g.domain();
  return g.scaled(F.inv(g.terms().front().coeff));
}

}  // namespace

ComponentHook monomial_hook() {
  return [](const PolyIdeal& I) -> std::optional<std::vector<PolyIdeal>> {
    for (const auto& g : I.groebner_basis())
      if (g.size() != 1) return std::nullopt;
    std::vector<PolyIdeal> comps;
    if (I.is_unit()) return comps;
    auto M = monomial_radical(MonomialIdeal::from_ideal(PolyIdeal(I.field(), I.arity(), I.groebner_basis())));
    for (const auto& prime : monomial_minimal_primes(M)) comps.push_back(coordinate_ideal(I.field(), I.arity(), prime));
    return comps;
  };
}

ComponentHook factor_hook(std::vector<PrimePoly> factors) {
  return [factors = std::move(factors)](const PolyIdeal& I) -> std::optional<std::vector<PolyIdeal>> {
    const auto& gb = I.groebner_basis();
    if (gb.size() != 1 || gb.front().is_constant()) return std::nullopt;
    const auto& g = gb.front();
    PrimePoly product = PrimePoly::constant(I.field(), I.arity(), 1);
    std::vector<PolyIdeal> comps;
    for (const auto& h : factors) {
      if (h.arity() != I.arity() || h.is_constant()) continue;
      try {
        exact_divide(g, h);
      } catch (const PreconditionError&) {
        continue;
      }
      PolyIdeal c(I.field(), I.arity(), {h});
      if (std::find(comps.begin(), comps.end(), c) != comps.end()) continue;
      product *= h;
      comps.push_back(std::move(c));
    }
    if (comps.empty() || !(monic(product) == monic(g))) return std::nullopt;
    return comps;
  };
}

ComponentHook catalog_hook(std::vector<PolyIdeal> primes) {
  return [primes = std::move(primes)](const PolyIdeal& I) -> std::optional<std::vector<PolyIdeal>> {
    if (I.is_unit()) return std::vector<PolyIdeal>{};
    std::vector<const PolyIdeal*> over;
    for (const auto& C : primes)
      if (C.arity() == I.arity() && !C.is_unit() && C.contains(I)) over.push_back(&C);
    std::vector<PolyIdeal> comps;
    for (const auto* C : over) {
      bool maximal = true;
      for (const auto* D : over)
        if (D != C && C->contains(*D) && !(*C == *D)) maximal = false;
      if (maximal && std::find(comps.begin(), comps.end(), *C) == comps.end()) comps.push_back(*C);
    }
    if (comps.empty()) return std::nullopt;
    PolyIdeal meet = comps.front();
    for (std::size_t i = 1; i < comps.size(); ++i) meet = ideal_intersect(meet, comps[i]);
    if (!(meet == I)) return std::nullopt;
    return comps;
  };
}

ComponentHook combine_hooks(std::vector<ComponentHook> hooks) {
  return [hooks = std::move(hooks)](const PolyIdeal& I) -> std::optional<std::vector<PolyIdeal>> {
    for (const auto& h : hooks)
      if (auto comps = h(I)) return comps;
    return std::nullopt;
  };
}

// ---------------------------------------------------------------------------
// SplitPoset

SplitPoset::SplitPoset(PrimePoly f, WeightOrder order) : f_(f), spec_(f), order_(std::move(order)) {
  if (!order_.is_total()) throw PreconditionError("split posets need a total order");
  if (order_.arity() != f_.arity()) throw ArityMismatch("order arity differs from the ring");
  if (!spec_.is_splitting()) throw PreconditionError("Tr(f^{p-1} .) is not a splitting");
}

std::optional<std::size_t> SplitPoset::find(const PolyIdeal& I) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i].ideal == I) return i;
  return std::nullopt;
}

std::size_t SplitPoset::add(const PolyIdeal& I, bool composite, const CompatOptions& options) {
  I.check_same_ring(PolyIdeal(f_.domain(), f_.arity()));
  if (auto i = find(I)) {
    // a decomposition found later resolves an earlier composite
    if (!composite) members_[*i].composite = false;
    return *i;
  }
  if (!is_compatibly_split(I, spec_, options))
    throw InvariantViolation("ideal produced in the closure is not compatibly split");
  auto degen = MonomialIdeal::initial(I, order_);
  auto dd = monomial_dim_degree(monomial_radical(degen));
  members_.push_back(SplitMember{I, composite, true, degen, dd});
  const std::size_t k = members_.size() - 1;
  for (auto& row : leq_) row.push_back(false);
  leq_.emplace_back(k + 1, false);
  for (std::size_t a = 0; a <= k; ++a) {
    leq_[k][a] = members_[k].ideal.contains(members_[a].ideal);
    leq_[a][k] = members_[a].ideal.contains(members_[k].ideal);
  }
  return k;
}

SplitPoset SplitPoset::from_members(const PrimePoly& f, const std::vector<PolyIdeal>& members,
                                    std::optional<WeightOrder> order, const CompatOptions& options) {
  SplitPoset P(f, order ? *order : WeightOrder::lex(f.arity()));
  P.add(PolyIdeal(f.domain(), f.arity()), false, options);
  for (const auto& I : members) {
    try {
      P.add(I, false, options);
    } catch (const InvariantViolation&) {
      throw PreconditionError("registered member is not compatibly split: " +
                              to_string(I, VariableNames::indexed("x", f.arity())));
    }
  }
  return P;
}

std::vector<std::size_t> SplitPoset::resolved() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (!members_[i].composite) out.push_back(i);
  return out;
}

FinitePoset SplitPoset::resolved_poset() const {
  auto idx = resolved();
  std::vector<std::vector<bool>> leq(idx.size(), std::vector<bool>(idx.size()));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    labels.push_back(std::to_string(idx[a]));
    for (std::size_t b = 0; b < idx.size(); ++b) leq[a][b] = leq_[idx[a]][idx[b]];
  }
  return FinitePoset(std::move(leq), std::move(labels));
}

bool SplitPoset::degenerations_squarefree() const {
  return std::all_of(members_.begin(), members_.end(), [](const SplitMember& m) { return m.degen.is_squarefree(); });
}

// ---------------------------------------------------------------------------
// Closure

SplitPoset closure_algorithm(const std::vector<PolyIdeal>& seeds, const PrimePoly& f, const ComponentHook& hook,
                             const ClosureOptions& options) {
  auto P = SplitPoset::from_members(f, {}, options.order, options.compat);
  SplittingSpec spec(f);
  for (const auto& s : seeds)
    if (!is_compatibly_split(s, spec, options.compat)) throw PreconditionError("seed is not compatibly split");

  auto guard = [&] {
    if (P.size() > options.max_members) throw BudgetExceeded("closure exceeded the member budget");
  };
  auto process = [&](const PolyIdeal& I) {
    if (I.is_unit()) return;
    if (auto comps = hook(I)) {
      for (const auto& c : *comps) P.add(c, false, options.compat), guard();
      // the ideal itself, when prime, was added above; otherwise it is a union
    } else {
      P.add(I, true, options.compat);
      guard();
    }
  };
  for (const auto& s : seeds) process(s);

  std::set<std::pair<std::size_t, std::size_t>> pairs_done;
  std::set<std::pair<std::size_t, std::size_t>> colons_done;
  for (bool changed = true; changed;) {
    changed = false;
    const std::size_t before = P.size();
    for (std::size_t i = 0; i < P.size(); ++i) {
      for (std::size_t j = i + 1; j < P.size(); ++j) {
        if (!pairs_done.insert({i, j}).second) continue;
        const auto& a = P.members()[i];
        const auto& b = P.members()[j];
        if (P.variety_leq(i, j) || P.variety_leq(j, i)) continue;
        auto A = a.ideal, B = b.ideal;
        bool composite = a.composite || b.composite;
        process(ideal_sum(A, B));
        if (composite) process(ideal_intersect(A, B));
      }
      for (std::size_t k = 0; k < options.colon_by.size(); ++k) {
        if (!colons_done.insert({i, k}).second) continue;
        auto A = P.members()[i].ideal;
        if (options.colon_by[k].is_zero()) continue;
        process(ideal_colon(A, options.colon_by[k]));
      }
    }
    // retry composites with the hook after the catalog grew
    for (std::size_t i = 0; i < P.size(); ++i) {
      if (!P.members()[i].composite) continue;
      auto A = P.members()[i].ideal;
      if (auto comps = hook(A))
        for (const auto& c : *comps) P.add(c, false, options.compat), guard();
    }
    changed = P.size() != before;
  }
  return P;
}

// ---------------------------------------------------------------------------
// The degeneration map

std::vector<std::size_t> init_support(const SplitPoset& P) {
  auto lead = leading_term(P.order(), P.f()).terms().front().monomial;
  if (!lead.is_squarefree()) throw PreconditionError("leading term of f is not a product of distinct variables");
  return lead.support();
}

namespace {

using Mask = std::uint32_t;

std::vector<std::size_t> bits(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i)
    if (m >> i & 1U) out.push_back(i);
  return out;
}

// Degen of member within <x_S>: every generator involves a variable of S.
bool degen_in_coordinate(const MonomialIdeal& degen, Mask S) {
  for (const auto& g : degen.generators()) {
    bool hit = false;
    for (std::size_t v : g.support()) hit = hit || (S >> v & 1U);
    if (!hit) return false;
  }
  return true;
}

std::size_t pi_mask(const SplitPoset& P, Mask S) {
  std::vector<std::size_t> cands;
  for (std::size_t i : P.resolved())
    if (degen_in_coordinate(P.members()[i].degen, S)) cands.push_back(i);
  std::vector<std::size_t> minimal;
  for (std::size_t c : cands) {
    bool is_min = true;
    for (std::size_t d : cands)
      if (d != c && P.variety_leq(d, c)) is_min = false;
    if (is_min) minimal.push_back(c);
  }
  if (minimal.empty()) throw PreconditionError("no member degenerates onto the coordinate subspace");
  if (minimal.size() > 1) throw InvariantViolation("minimal member over a coordinate subspace is not unique");
  return minimal.front();
}

Mask support_mask(const SplitPoset& P) {
  Mask T = 0;
  for (std::size_t v : init_support(P)) T |= Mask{1} << v;
  return T;
}

}  // namespace

std::size_t pi_f_init(const SplitPoset& P, const std::vector<std::size_t>& zero_vars) {
  Mask T = support_mask(P), S = 0;
  for (std::size_t v : zero_vars) {
    if (v >= P.arity()) throw ArityMismatch("variable out of range");
    S |= Mask{1} << v;
  }
  if ((S & ~T) != 0) throw PreconditionError("coordinate subspace is not split by the initial splitting");
  return pi_mask(P, S);
}

PosetMapReport check_poset_map(const SplitPoset& P) {
  const Mask T = support_mask(P);
  const std::size_t n = P.arity();
  if (std::popcount(T) > 20) throw BudgetExceeded("too many coordinate subspaces");
  std::vector<Mask> subsets;
  for (Mask S = T;; S = (S - 1) & T) {
    subsets.push_back(S);
    if (S == 0) break;
  }
  std::sort(subsets.begin(), subsets.end());
  std::map<Mask, std::size_t> pi;
  for (Mask S : subsets) pi[S] = pi_mask(P, S);

  PosetMapReport r;
  for (Mask S : subsets) r.pi.emplace_back(bits(S), pi[S]);
  for (Mask S1 : subsets)
    for (Mask S2 : subsets)
      if ((S1 & S2) == S1 && !P.variety_leq(pi[S2], pi[S1])) r.order_preserving = false;
  std::set<std::size_t> image;
  for (auto& [S, m] : pi) image.insert(m);
  for (std::size_t i : P.resolved())
    if (!image.count(i)) r.surjective = false;
  for (Mask S1 : subsets)
    for (std::size_t Y2 : P.resolved()) {
      bool lhs = P.variety_leq(pi[S1], Y2);
      bool rhs = false;
      for (Mask S2 : subsets)
        if ((S2 & S1) == S2 && pi[S2] == Y2) rhs = true;
      if (lhs != rhs) r.two_sided = false;
    }
  for (Mask S : subsets)
    if (P.members()[pi[S]].dim_degree.dimension < static_cast<long>(n) - std::popcount(S)) r.dimension_bound = false;
  if (static_cast<std::size_t>(std::popcount(T)) == n) {
    std::vector<std::size_t> per_dim(n + 1, 0);
    for (std::size_t i : P.resolved()) {
      long d = P.members()[i].dim_degree.dimension;
      if (d >= 0) ++per_dim[static_cast<std::size_t>(d)];
    }
    for (std::size_t k = 0; k <= n; ++k) {
      std::size_t binom = 1;
      for (std::size_t i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
      if (per_dim[k] > binom) r.count_bound = false;
    }
  }
  return r;
}

DegreeReport degree_identity_check(const SplitPoset& P) {
  const auto& f = P.f();
  for (const auto& t : f.terms())
    if (static_cast<long>(t.monomial.degree()) != f.degree()) throw PreconditionError("f is not homogeneous");
  const Mask T = support_mask(P);
  const long n = static_cast<long>(P.arity());
  DegreeReport r;
  std::map<std::size_t, std::size_t> fiber;
  for (Mask S = T;; S = (S - 1) & T) {
    std::size_t m = pi_mask(P, S);
    if (P.members()[m].dim_degree.dimension == n - std::popcount(S)) ++fiber[m];
    if (S == 0) break;
  }
  for (std::size_t i : P.resolved()) {
    DegreeReport::Row row{i, fiber[i], P.members()[i].dim_degree.degree};
    r.ok = r.ok && row.fiber_degree == row.degree;
    r.rows.push_back(row);
  }
  return r;
}

ConcatReport concat_groebner_check(const std::vector<PolyIdeal>& ideals, const WeightOrder& order) {
  if (ideals.empty()) throw PreconditionError("no ideals given");
  if (ideals.size() > 12) throw BudgetExceeded("too many ideals for the subset certificate");
  for (const auto& I : ideals) I.check_same_ring(ideals.front());
  ConcatReport r;
  const std::size_t k = ideals.size();
  for (Mask S = 1; S < (Mask{1} << k); ++S) {
    std::optional<PolyIdeal> meet;
    for (std::size_t i : bits(S)) meet = meet ? ideal_intersect(*meet, ideals[i]) : ideals[i];
    if (!MonomialIdeal::initial(*meet, order).is_squarefree()) return r;
  }
  r.certified = true;
  PolyIdeal sum = ideals.front();
  MonomialIdeal inits = MonomialIdeal::initial(ideals.front(), order);
  for (std::size_t i = 1; i < k; ++i) {
    sum = ideal_sum(sum, ideals[i]);
    inits = inits + MonomialIdeal::initial(ideals[i], order);
  }
  r.holds = MonomialIdeal::initial(sum, order) == inits;
  return r;
}

// ---------------------------------------------------------------------------
// Shifts along coordinate lines

namespace {

struct ShiftContext {
  std::vector<std::vector<PrimePoly>> systems;  // generators of each member
  std::vector<std::vector<bool>> leq;          // variety containment
  std::uint32_t p;
};

ShiftContext context_of(const std::vector<PolyIdeal>& ideals) {
  ShiftContext c;
  c.p = ideals.front().field().characteristic();
  for (const auto& I : ideals) c.systems.push_back(I.generators());
  const std::size_t m = ideals.size();
  c.leq.assign(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) c.leq[a][b] = ideals[a].contains(ideals[b]);
  return c;
}

std::vector<std::uint32_t> shift(const ShiftContext& c, std::size_t j, std::vector<std::uint32_t> point) {
  const std::size_t m = c.systems.size();
  std::vector<std::vector<std::uint32_t>> hits(m);
  auto pt = point;
  for (std::uint32_t l = 0; l < c.p; ++l) {
    pt[j] = l;
    for (std::size_t a = 0; a < m; ++a) {
      bool on = true;
      for (const auto& g : c.systems[a]) on = on && eval_at(g, std::span<const std::uint32_t>(pt)) == 0;
      if (on) hits[a].push_back(l);
    }
  }
  std::optional<std::uint32_t> value;
  for (std::size_t a = 0; a < m; ++a) {
    if (hits[a].empty()) continue;
    bool minimal = true;
    for (std::size_t b = 0; b < m; ++b)
      if (b != a && !hits[b].empty() && c.leq[b][a] && !c.leq[a][b]) minimal = false;
    if (!minimal || hits[a].size() != 1) continue;
    if (value && *value != hits[a].front()) throw InvariantViolation("minimal members meet a line at different points");
    value = hits[a].front();
  }
  if (value) point[j] = (point[j] + c.p - *value) % c.p;
  return point;
}

std::vector<PolyIdeal> member_ideals(const SplitPoset& P) {
  std::vector<PolyIdeal> out;
  for (const auto& m : P.members()) out.push_back(m.ideal);
  return out;
}

void check_point(const SplitPoset& P, std::size_t j, const std::vector<std::uint32_t>& point) {
  if (j >= P.arity()) throw ArityMismatch("shift coordinate out of range");
  if (point.size() != P.arity()) throw ArityMismatch("point of the wrong length");
  for (auto v : point)
    if (v >= P.f().domain().characteristic()) throw DomainMismatch("coordinate outside F_p");
}

std::vector<std::vector<std::uint32_t>> all_points(std::uint32_t p, std::size_t n, std::uint64_t budget) {
  return enumerate_points({}, PrimeField(p), n, budget).points();
}

}  // namespace

std::vector<std::uint32_t> iota_shift(const SplitPoset& P, std::size_t j, const std::vector<std::uint32_t>& point,
                                      std::uint64_t) {
  check_point(P, j, point);
  return shift(context_of(member_ideals(P)), j, point);
}

IotaChainReport check_iota_chain(const SplitPoset& P, std::uint64_t budget) {
  const auto& order = P.order();
  if (!order.tiers().empty()) throw PreconditionError("the shift chain needs a pure lex order");
  const std::size_t n = P.arity();
  const std::uint32_t p = P.f().domain().characteristic();
  auto points = all_points(p, n, budget);

  auto images = points;
  auto ideals = member_ideals(P);
  for (std::size_t j : *order.lex_tiebreak()) {
    auto ctx = context_of(ideals);
    for (auto& pt : images) pt = shift(ctx, j, pt);
    for (auto& I : ideals) I = initial_ideal(I, line_weight(n, j));
  }
  IotaChainReport r;
  std::set<std::vector<std::uint32_t>> distinct(images.begin(), images.end());
  r.bijective = distinct.size() == images.size();
  for (std::size_t a = 0; a < P.size(); ++a) {
    const auto& member = P.members()[a];
    for (std::size_t k = 0; k < points.size(); ++k) {
      bool on = true;
      for (const auto& g : member.ideal.generators())
        on = on && eval_at(g, std::span<const std::uint32_t>(points[k])) == 0;
      if (!on) continue;
      if (!member.degen.is_unit()) {
        bool in = true;
        for (const auto& mono : member.degen.generators()) {
          bool zero = false;
          for (std::size_t v : mono.support()) zero = zero || images[k][v] == 0;
          in = in && zero;
        }
        if (!in) r.into_initial = false;
      }
    }
  }
  return r;
}

bool projection_injectivity_check(const SplitPoset& P, std::size_t ell) {
  if (ell >= P.arity()) throw ArityMismatch("line variable out of range");
  std::vector<std::vector<std::vector<std::uint32_t>>> shadows;
  for (std::size_t i : P.resolved()) {
    const auto& I = P.members()[i].ideal;
    if (eliminate_in_place(I, {ell}) == I) continue;
    auto pi = eliminate(I, {ell});
    shadows.push_back(enumerate_points(pi.generators(), pi.field(), pi.arity()).points());
  }
  std::sort(shadows.begin(), shadows.end());
  return std::adjacent_find(shadows.begin(), shadows.end()) == shadows.end();
}

}  // namespace frobsplit
