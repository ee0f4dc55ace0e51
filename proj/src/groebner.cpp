#include "frobsplit/groebner.hpp"

#include <algorithm>
#include <numeric>

namespace frobsplit {

namespace {

// ---------------------------------------------------------------------------
// Engine-internal representation: terms sorted by decreasing order.

struct Term {
  Monomial m;
  std::uint32_t c;
  std::uint32_t mask;  // bit i set when variable i (mod 32) occurs
};

using Poly = std::vector<Term>;

std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < m.arity(); ++i)
    if (m[i]) mask |= 1u << (i % 32);
  return mask;
}

class Order {
 public:
  explicit Order(const WeightOrder& o) : n_(o.arity()), tiers_(o.tiers()), lex_(*o.lex_tiebreak()) {}

  int compare(const Monomial& a, const Monomial& b) const {
    for (const auto& w : tiers_) {
      long long wa = 0, wb = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        wa += w[i] * static_cast<long long>(a[i]);
        wb += w[i] * static_cast<long long>(b[i]);
      }
      if (wa != wb) return wa > wb ? 1 : -1;
    }
    for (std::size_t v : lex_)
      if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    return 0;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<long long>> tiers_;
  std::vector<std::size_t> lex_;
};

class Engine {
 public:
  Engine(const PrimeField& F, const WeightOrder& order) : F_(F), order_(checked(order)) {}

  static const WeightOrder& checked(const WeightOrder& order) {
    if (!order.is_total()) throw PreconditionError("Buchberger needs a total order");
    if (!order.is_well_order()) throw PreconditionError("Buchberger needs a well-order (nonnegative weights)");
    return order;
  }

  Poly to_internal(const PrimePoly& f) const {
    Poly out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) out.push_back({t.monomial, t.coeff, support_mask(t.monomial)});
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return order_.compare(a.m, b.m) > 0; });
    return out;
  }

  PrimePoly to_external(const Poly& f, std::size_t arity) const {
    std::vector<PrimePoly::Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f) terms.push_back({t.m, t.c});
    return PrimePoly::from_terms(F_, arity, std::move(terms));
  }

  void make_monic(Poly& f) const {
    if (f.empty() || f[0].c == 1) return;
    auto inv = F_.inv(f[0].c);
    for (auto& t : f) t.c = F_.mul(t.c, inv);
  }

  // a[from..] - c * mono * b[b_from..]
  Poly sub_mul(const Poly& a, std::size_t from, std::uint32_t c, const Monomial& mono, const Poly& b,
               std::size_t b_from = 0) const {
    Poly r;
    r.reserve(a.size() - from + b.size());
    std::size_t i = from, j = b_from;
    const std::uint32_t mono_mask = support_mask(mono);
    auto scaled = [&](const Term& t) {
      return Term{t.m * mono, F_.neg(F_.mul(t.c, c)), t.mask | mono_mask};
    };
    while (i < a.size() && j < b.size()) {
      Term tb = scaled(b[j]);
      int cmp = order_.compare(a[i].m, tb.m);
      if (cmp > 0) {
        r.push_back(a[i++]);
      } else if (cmp < 0) {
        r.push_back(tb);
        ++j;
      } else {
        auto s = F_.add(a[i].c, tb.c);
        if (s) r.push_back({a[i].m, s, a[i].mask});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back(scaled(b[j]));
    return r;
  }

  // Index of a basis element whose (monic) head divides m, or npos.
  std::size_t find_divisor(const Term& t, const std::vector<const Poly*>& basis) const {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Term& h = (*basis[k])[0];
      if ((h.mask & ~t.mask) == 0 && h.m.divides(t.m)) return k;
    }
    return static_cast<std::size_t>(-1);
  }

  // Full reduction; basis elements must be monic.
  Poly reduce(Poly f, const std::vector<const Poly*>& basis) const {
    Poly rem;
    std::size_t start = 0;
    while (start < f.size()) {
      const Term& t = f[start];
      std::size_t k = find_divisor(t, basis);
      if (k == static_cast<std::size_t>(-1)) {
        rem.push_back(t);
        ++start;
        continue;
      }
      const Poly& g = *basis[k];
      Monomial q = t.m.quotient(g[0].m);
      // The head cancels; merge the remaining tails.
      f = sub_mul(f, start + 1, t.c, q, g, 1);
      start = 0;
    }
    return rem;
  }

  Poly spoly(const Poly& a, const Poly& b) const {
    Monomial l = a[0].m.lcm(b[0].m);
    Monomial qa = l.quotient(a[0].m), qb = l.quotient(b[0].m);
    Poly left;
    left.reserve(a.size());
    const std::uint32_t ma = support_mask(qa);
    for (std::size_t k = 1; k < a.size(); ++k) left.push_back({a[k].m * qa, a[k].c, a[k].mask | ma});
    return sub_mul(left, 0, 1, qb, b, 1);
  }

  std::vector<Poly> groebner(std::vector<Poly> input) const {
    struct Pair {
      std::size_t i, j;
      Monomial lcm;
    };
    std::vector<Poly> polys;
    std::vector<std::size_t> basis;  // indices into polys of the current basis
    std::vector<Pair> pairs;

    auto active = [&] {
      std::vector<const Poly*> out;
      out.reserve(basis.size());
      for (std::size_t k : basis) out.push_back(&polys[k]);
      return out;
    };

    // Gebauer-Moeller update with the new element h.
    auto update = [&](std::size_t h) {
      const Monomial& lh = polys[h][0].m;
      std::vector<Pair> C;
      for (std::size_t g : basis) C.push_back({g, h, polys[g][0].m.lcm(lh)});
      std::vector<Pair> D;
      for (std::size_t a = 0; a < C.size(); ++a) {
        const Pair& c = C[a];
        bool coprime = polys[c.i][0].m.coprime(lh);
        bool dominated = false;
        if (!coprime) {
          for (std::size_t b = a + 1; b < C.size() && !dominated; ++b)
            dominated = C[b].lcm.divides(c.lcm);
          for (std::size_t b = 0; b < D.size() && !dominated; ++b) dominated = D[b].lcm.divides(c.lcm);
        }
        if (coprime || !dominated) D.push_back(c);
      }
      std::vector<Pair> E;
      for (const auto& d : D)
        if (!polys[d.i][0].m.coprime(lh)) E.push_back(d);
      std::vector<Pair> kept;
      for (const auto& pr : pairs) {
        bool drop = lh.divides(pr.lcm) && polys[pr.i][0].m.lcm(lh) != pr.lcm &&
                    polys[pr.j][0].m.lcm(lh) != pr.lcm;
        if (!drop) kept.push_back(pr);
      }
      kept.insert(kept.end(), E.begin(), E.end());
      pairs = std::move(kept);
      std::vector<std::size_t> next;
      for (std::size_t g : basis)
        if (!lh.divides(polys[g][0].m)) next.push_back(g);
      next.push_back(h);
      basis = std::move(next);
    };

    auto add = [&](Poly p) {
      make_monic(p);
      polys.push_back(std::move(p));
      update(polys.size() - 1);
    };

    for (auto& f : input) {
      Poly r = reduce(std::move(f), active());
      if (!r.empty()) {
        if (r[0].m.is_one()) return {Poly{Term{r[0].m, 1, 0}}};
        add(std::move(r));
      }
    }

    while (!pairs.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs.size(); ++k) {
        unsigned dk = pairs[k].lcm.degree(), db = pairs[best].lcm.degree();
        if (dk < db || (dk == db && order_.compare(pairs[k].lcm, pairs[best].lcm) < 0)) best = k;
      }
      Pair pr = pairs[best];
      pairs.erase(pairs.begin() + static_cast<long>(best));
      Poly r = reduce(spoly(polys[pr.i], polys[pr.j]), active());
      if (r.empty()) continue;
      if (r[0].m.is_one()) return {Poly{Term{r[0].m, 1, 0}}};
      add(std::move(r));
    }

    // Interreduce the minimal basis.
    std::vector<Poly> minimal;
    for (std::size_t k : basis) minimal.push_back(polys[k]);
    std::vector<Poly> result;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<const Poly*> others;
      for (std::size_t b = 0; b < minimal.size(); ++b)
        if (b != a) others.push_back(&minimal[b]);
      Poly head{minimal[a][0]};
      Poly tail(minimal[a].begin() + 1, minimal[a].end());
      Poly red = reduce(std::move(tail), others);
      head.insert(head.end(), red.begin(), red.end());
      result.push_back(std::move(head));
    }
    std::sort(result.begin(), result.end(),
              [&](const Poly& a, const Poly& b) { return order_.compare(a[0].m, b[0].m) > 0; });
    return result;
  }

 private:
  const PrimeField& F_;
  Order order_;
};

void check_gens(const std::vector<PrimePoly>& gens, const WeightOrder& order) {
  for (const auto& g : gens) {
    if (g.arity() != order.arity()) throw ArityMismatch("generator arity differs from order arity");
    if (!(g.domain() == gens.front().domain())) throw DomainMismatch("generators over different fields");
  }
}

}  // namespace

std::vector<PrimePoly> buchberger(const std::vector<PrimePoly>& gens, const WeightOrder& order) {
  if (gens.empty()) return {};
  check_gens(gens, order);
  const PrimeField F = gens.front().domain();
  Engine engine(F, order);
  std::vector<Poly> input;
  for (const auto& g : gens)
    if (!g.is_zero()) input.push_back(engine.to_internal(g));
  if (input.empty()) return {};
  auto basis = engine.groebner(std::move(input));
  std::vector<PrimePoly> out;
  for (const auto& b : basis) out.push_back(engine.to_external(b, order.arity()));
  return out;
}

PrimePoly normal_form(const PrimePoly& f, const std::vector<PrimePoly>& basis, const WeightOrder& order) {
  if (f.arity() != order.arity()) throw ArityMismatch("polynomial arity differs from order arity");
  Engine engine(f.domain(), order);
  std::vector<Poly> internal;
  for (const auto& b : basis) {
    if (b.arity() != f.arity()) throw ArityMismatch("basis arity differs from polynomial arity");
    if (!(b.domain() == f.domain())) throw DomainMismatch("basis over a different field");
    if (b.is_zero()) continue;
    internal.push_back(engine.to_internal(b));
    engine.make_monic(internal.back());
  }
  std::vector<const Poly*> ptrs;
  for (const auto& p : internal) ptrs.push_back(&p);
  return engine.to_external(engine.reduce(engine.to_internal(f), ptrs), f.arity());
}

// ---------------------------------------------------------------------------
// PolyIdeal

PolyIdeal::PolyIdeal(PrimeField field, std::size_t arity, std::vector<PrimePoly> generators)
    : field_(field), arity_(arity), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.arity() != arity) throw ArityMismatch("generator arity differs from ideal arity");
    if (!(g.domain() == field)) throw DomainMismatch("generator over a different field");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

PolyIdeal PolyIdeal::unit(PrimeField field, std::size_t arity) {
  return PolyIdeal(field, arity, {PrimePoly::constant(field, arity, 1)});
}

PolyIdeal PolyIdeal::from_monomials(PrimeField field, const MonomialIdeal& m) {
  std::vector<PrimePoly> gens;
  for (const auto& g : m.generators()) gens.push_back(PrimePoly::term(field, g, 1));
  return PolyIdeal(field, m.arity(), std::move(gens));
}

const std::vector<PrimePoly>& PolyIdeal::groebner_basis(const WeightOrder& order) const {
  if (order.arity() != arity_) throw ArityMismatch("order arity differs from ideal arity");
  WeightOrder total = order.refined();
  std::string key = total.key();
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return it->second;
  }
  auto basis = buchberger(generators_, total);
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->bases.emplace(key, std::move(basis)).first->second;
}

const std::vector<PrimePoly>& PolyIdeal::groebner_basis() const { return groebner_basis(WeightOrder::grlex(arity_)); }

bool PolyIdeal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb[0].is_constant();
}

bool PolyIdeal::contains(const PrimePoly& f) const {
  if (f.arity() != arity_) throw ArityMismatch("polynomial arity differs from ideal arity");
  if (!(f.domain() == field_)) throw DomainMismatch("polynomial over a different field");
  if (f.is_zero()) return true;
  return normal_form(f, groebner_basis(), WeightOrder::grlex(arity_)).is_zero();
}

bool PolyIdeal::contains(const PolyIdeal& J) const {
  check_same_ring(J);
  for (const auto& g : J.generators())
    if (!contains(g)) return false;
  return true;
}

void PolyIdeal::check_same_ring(const PolyIdeal& other) const {
  if (arity_ != other.arity_) throw ArityMismatch("ideals in rings of different arity");
  if (!(field_ == other.field_)) throw DomainMismatch("ideals over different fields");
}

bool operator==(const PolyIdeal& a, const PolyIdeal& b) {
  a.check_same_ring(b);
  return a.groebner_basis() == b.groebner_basis();
}

bool ideal_member(const PrimePoly& f, const PolyIdeal& I) { return I.contains(f); }

PolyIdeal ideal_sum(const PolyIdeal& I, const PolyIdeal& J) {
  I.check_same_ring(J);
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return PolyIdeal(I.field(), I.arity(), std::move(gens));
}

PolyIdeal ideal_product(const PolyIdeal& I, const PolyIdeal& J) {
  I.check_same_ring(J);
  std::vector<PrimePoly> gens;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) gens.push_back(a * b);
  return PolyIdeal(I.field(), I.arity(), std::move(gens));
}

namespace {

// Embed generators into a ring with one extra variable (index n).
PrimePoly lift(const PrimePoly& f, std::size_t n) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), 0);
  return remap_variables(f, n + 1, std::span<const std::size_t>(map));
}

}  // namespace

PolyIdeal ideal_intersect(const PolyIdeal& I, const PolyIdeal& J) {
  I.check_same_ring(J);
  const std::size_t n = I.arity();
  const PrimeField& F = I.field();
  if (I.generators().empty() || J.generators().empty()) return PolyIdeal(F, n);
  auto t = PrimePoly::variable(F, n + 1, n);
  auto one_minus_t = PrimePoly::constant(F, n + 1, 1) - t;
  std::vector<PrimePoly> gens;
  for (const auto& g : I.generators()) gens.push_back(t * lift(g, n));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * lift(g, n));
  return eliminate(PolyIdeal(F, n + 1, std::move(gens)), {n});
}

PolyIdeal ideal_colon(const PolyIdeal& I, const PrimePoly& g) {
  if (g.is_zero()) throw PreconditionError("colon by the zero ideal");
  auto meet = ideal_intersect(I, PolyIdeal(I.field(), I.arity(), {g}));
  std::vector<PrimePoly> gens;
  for (const auto& h : meet.groebner_basis()) gens.push_back(exact_divide(h, g));
  return PolyIdeal(I.field(), I.arity(), std::move(gens));
}

PolyIdeal ideal_colon(const PolyIdeal& I, const PolyIdeal& J) {
  I.check_same_ring(J);
  if (J.generators().empty()) throw PreconditionError("colon by the zero ideal");
  std::optional<PolyIdeal> result;
  for (const auto& g : J.generators()) {
    auto part = ideal_colon(I, g);
    result = result ? ideal_intersect(*result, part) : part;
  }
  return *result;
}

PolyIdeal saturate(const PolyIdeal& I, const PrimePoly& f) {
  if (f.is_zero()) throw PreconditionError("saturation by the zero polynomial");
  if (f.arity() != I.arity()) throw ArityMismatch("polynomial arity differs from ideal arity");
  const std::size_t n = I.arity();
  const PrimeField& F = I.field();
  std::vector<PrimePoly> gens;
  for (const auto& g : I.generators()) gens.push_back(lift(g, n));
  gens.push_back(PrimePoly::constant(F, n + 1, 1) - PrimePoly::variable(F, n + 1, n) * lift(f, n));
  return eliminate(PolyIdeal(F, n + 1, std::move(gens)), {n});
}

namespace {

std::vector<PrimePoly> elimination_basis(const PolyIdeal& I, const std::vector<std::size_t>& vars) {
  std::vector<long long> w(I.arity(), 0);
  for (std::size_t v : vars) {
    if (v >= I.arity()) throw ArityMismatch("eliminated variable out of range");
    w[v] = 1;
  }
  WeightOrder order(I.arity(), std::vector<std::vector<long long>>{w});
  std::vector<PrimePoly> kept;
  for (const auto& g : I.groebner_basis(order)) {
    bool free = true;
    for (std::size_t v : vars) free = free && g.degree_in(v) == 0;
    if (free) kept.push_back(g);
  }
  return kept;
}

}  // namespace

PolyIdeal eliminate(const PolyIdeal& I, const std::vector<std::size_t>& vars) {
  auto kept = elimination_basis(I, vars);
  std::vector<bool> gone(I.arity(), false);
  for (std::size_t v : vars) gone[v] = true;
  std::vector<std::size_t> map(I.arity(), 0);
  std::size_t next = 0;
  for (std::size_t i = 0; i < I.arity(); ++i)
    if (!gone[i]) map[i] = next++;
  std::vector<PrimePoly> gens;
  for (const auto& g : kept) gens.push_back(remap_variables(g, next, std::span<const std::size_t>(map)));
  return PolyIdeal(I.field(), next, std::move(gens));
}

PolyIdeal eliminate_in_place(const PolyIdeal& I, const std::vector<std::size_t>& vars) {
  return PolyIdeal(I.field(), I.arity(), elimination_basis(I, vars));
}

PolyIdeal initial_ideal(const PolyIdeal& I, const WeightOrder& order) {
  const auto& gb = I.groebner_basis(order);
  std::vector<PrimePoly> forms;
  for (const auto& g : gb) forms.push_back(order.is_total() ? leading_term(order, g) : initial_form(order, g));
  return PolyIdeal(I.field(), I.arity(), std::move(forms));
}

PolyIdeal substitute_ideal(const PolyIdeal& I, const std::vector<PrimePoly>& images) {
  if (images.size() != I.arity()) throw ArityMismatch("substitution needs one image per variable");
  if (images.empty()) return I;
  std::vector<PrimePoly> gens;
  for (const auto& g : I.generators()) gens.push_back(substitute(g, std::span<const PrimePoly>(images)));
  return PolyIdeal(I.field(), images.front().arity(), std::move(gens));
}

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal::MonomialIdeal(std::size_t arity, std::vector<Monomial> generators) : arity_(arity) {
  for (const auto& g : generators)
    if (g.arity() != arity) throw ArityMismatch("monomial arity differs from ideal arity");
  std::sort(generators.begin(), generators.end(), GrlexGreater{});
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (std::size_t a = 0; a < generators.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < generators.size() && !redundant; ++b)
      redundant = b != a && generators[b].divides(generators[a]);
    if (!redundant) gens_.push_back(generators[a]);
  }
}

MonomialIdeal MonomialIdeal::initial(const PolyIdeal& I, const WeightOrder& order) {
  if (!order.is_total()) throw PreconditionError("monomial initial ideal needs a total order");
  std::vector<Monomial> heads;
  for (const auto& g : I.groebner_basis(order)) heads.push_back(leading_term(order, g).terms().front().monomial);
  return MonomialIdeal(I.arity(), std::move(heads));
}

MonomialIdeal MonomialIdeal::from_ideal(const PolyIdeal& I) {
  std::vector<Monomial> gens;
  for (const auto& g : I.generators()) {
    if (g.size() != 1) throw PreconditionError("generator is not a monomial");
    gens.push_back(g.terms().front().monomial);
  }
  return MonomialIdeal(I.arity(), std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& J) const {
  for (const auto& g : J.gens_)
    if (!contains(g)) return false;
  return true;
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& o) const {
  if (arity_ != o.arity_) throw ArityMismatch("monomial ideals of different arity");
  auto all = gens_;
  all.insert(all.end(), o.gens_.begin(), o.gens_.end());
  return MonomialIdeal(arity_, std::move(all));
}

namespace {

void vertex_covers(const std::vector<std::uint32_t>& edges, std::uint32_t chosen, std::vector<std::uint32_t>& out) {
  for (std::uint32_t e : edges) {
    if (e & chosen) continue;
    for (std::uint32_t rest = e; rest; rest &= rest - 1) vertex_covers(edges, chosen | (rest & -rest), out);
    return;
  }
  out.push_back(chosen);
}

}  // namespace

std::vector<std::vector<std::size_t>> monomial_minimal_primes(const MonomialIdeal& M) {
  if (!M.is_squarefree()) throw PreconditionError("minimal primes need a squarefree monomial ideal");
  if (M.is_unit()) return {};
  std::vector<std::uint32_t> edges;
  for (const auto& g : M.generators()) edges.push_back(support_mask(g));
  std::vector<std::uint32_t> covers;
  vertex_covers(edges, 0, covers);
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t c : covers) {
    bool has_smaller = false;
    for (std::uint32_t d : covers) has_smaller = has_smaller || (d != c && (d & c) == d);
    if (!has_smaller) minimal.push_back(c);
  }
  std::vector<std::vector<std::size_t>> primes;
  for (std::uint32_t c : minimal) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < M.arity(); ++i)
      if (c >> i & 1) vars.push_back(i);
    primes.push_back(std::move(vars));
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

DimDegree monomial_dim_degree(const MonomialIdeal& M) {
  auto primes = monomial_minimal_primes(M);
  if (primes.empty()) return {-1, 0};
  std::size_t smallest = M.arity();
  for (const auto& P : primes) smallest = std::min(smallest, P.size());
  std::size_t count = 0;
  for (const auto& P : primes) count += P.size() == smallest;
  return {static_cast<long>(M.arity() - smallest), count};
}

PolyIdeal coordinate_ideal(PrimeField field, std::size_t arity, const std::vector<std::size_t>& vars) {
  std::vector<PrimePoly> gens;
  for (std::size_t v : vars) gens.push_back(PrimePoly::variable(field, arity, v));
  return PolyIdeal(field, arity, std::move(gens));
}

std::string to_string(const PolyIdeal& I, const VariableNames& names) {
  std::string out = "<";
  bool first = true;
  for (const auto& g : I.generators()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(g, names);
  }
  return out + ">";
}

std::string to_string(const MonomialIdeal& M, const VariableNames& names) {
  std::string out = "<";
  bool first = true;
  for (const auto& g : M.generators()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(PrimePoly::term(PrimeField(2), g, 1), names);
  }
  return out + ">";
}

}  // namespace frobsplit
