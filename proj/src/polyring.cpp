#include "frobsplit/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_map>

namespace frobsplit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::size_t arity) {
  if (arity > kMaxArity)
    throw PreconditionError("arity " + std::to_string(arity) + " exceeds the supported maximum " +
                            std::to_string(kMaxArity));
  arity_ = static_cast<std::uint8_t>(arity);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents) : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (unsigned e : exponents) set(i++, e);
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(i, exponents[i]);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= arity_) throw ArityMismatch("variable index out of range");
  if (e > std::numeric_limits<Exponent>::max()) throw PreconditionError("exponent overflow");
  exps_[i] = static_cast<Exponent>(e);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (std::size_t i = 0; i < arity_; ++i) d += exps_[i];
  return d;
}

bool Monomial::is_one() const {
  for (std::size_t i = 0; i < arity_; ++i)
    if (exps_[i] != 0) return false;
  return true;
}

bool Monomial::is_squarefree() const {
  for (std::size_t i = 0; i < arity_; ++i)
    if (exps_[i] > 1) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < arity_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < arity_; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (arity_ != other.arity_) throw ArityMismatch("monomial arity mismatch");
  Monomial r = *this;
  for (std::size_t i = 0; i < arity_; ++i) {
    unsigned e = unsigned(exps_[i]) + other.exps_[i];
    if (e > std::numeric_limits<Exponent>::max()) throw PreconditionError("exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < arity_; ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < arity_; ++i) r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < arity_; ++i) {
    if (divisor.exps_[i] > exps_[i]) throw PreconditionError("monomial does not divide");
    r.exps_[i] = static_cast<Exponent>(exps_[i] - divisor.exps_[i]);
  }
  return r;
}

Monomial Monomial::pow(unsigned k) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < arity_; ++i) {
    unsigned long e = static_cast<unsigned long>(exps_[i]) * k;
    if (e > std::numeric_limits<Exponent>::max()) throw PreconditionError("exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  return r;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < arity_; ++i)
    if (exps_[i] != 0) s.push_back(i);
  return s;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    h ^= m[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Domains

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw PreconditionError("modulus " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw PreconditionError("modulus too large");
}

PrimeField::value_type PrimeField::from_integer(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::from_big(const BigInt& v) const {
  BigInt r = v % p_;
  if (r < 0) r += p_;
  return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t k) const {
  value_type result = 1 % p_;
  value_type base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw PreconditionError("inverse of zero in " + name());
  return pow(a, p_ - 2);
}

IntegerRing::value_type IntegerRing::pow(const value_type& a, std::uint64_t k) const {
  value_type result = 1, base = a;
  while (k) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

FieldElem::FieldElem(std::uint32_t value, std::uint32_t modulus) : value_(value), modulus_(modulus) {
  if (!is_prime(modulus)) throw PreconditionError("modulus " + std::to_string(modulus) + " is not prime");
  value_ %= modulus;
}

void FieldElem::check_same(const FieldElem& o) const {
  if (modulus_ != o.modulus_) throw DomainMismatch("field elements over different primes");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(o);
  return FieldElem(PrimeField::value_type((value_ + o.value_) % modulus_), modulus_);
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same(o);
  return FieldElem((value_ + modulus_ - o.value_) % modulus_, modulus_);
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(o);
  return FieldElem(std::uint32_t((std::uint64_t(value_) * o.value_) % modulus_), modulus_);
}
FieldElem FieldElem::operator-() const { return FieldElem((modulus_ - value_) % modulus_, modulus_); }
FieldElem FieldElem::inverse() const {
  PrimeField f(modulus_);
  return FieldElem(f.inv(value_), modulus_);
}

// ---------------------------------------------------------------------------
// Polynomial

template <class D>
Polynomial<D>::Polynomial(D domain, std::size_t arity) : domain_(std::move(domain)), arity_(arity) {
  if (arity > kMaxArity) throw PreconditionError("arity exceeds the supported maximum");
}

template <class D>
Polynomial<D> Polynomial<D>::constant(D domain, std::size_t arity, const Scalar& c) {
  Polynomial p(domain, arity);
  if (!p.domain_.is_zero(c)) p.terms_.push_back({Monomial(arity), c});
  return p;
}

template <class D>
Polynomial<D> Polynomial<D>::variable(D domain, std::size_t arity, std::size_t index) {
  if (index >= arity) throw ArityMismatch("variable index out of range");
  Monomial m(arity);
  m.set(index, 1);
  Polynomial p(domain, arity);
  p.terms_.push_back({m, p.domain_.one()});
  return p;
}

template <class D>
Polynomial<D> Polynomial<D>::term(D domain, const Monomial& m, const Scalar& c) {
  Polynomial p(domain, m.arity());
  if (!p.domain_.is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

template <class D>
Polynomial<D> Polynomial<D>::from_terms(D domain, std::size_t arity, std::vector<Term> terms) {
  Polynomial p(domain, arity);
  for (const auto& t : terms)
    if (t.monomial.arity() != arity) throw ArityMismatch("term arity differs from polynomial arity");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_compare(a.monomial, b.monomial) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff = p.domain_.add(p.terms_.back().coeff, t.coeff);
      if (p.domain_.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!p.domain_.is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  // A cancelled pair can expose a zero that was pushed before its partner.
  std::erase_if(p.terms_, [&](const Term& t) { return p.domain_.is_zero(t.coeff); });
  return p;
}

template <class D>
bool Polynomial<D>::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

template <class D>
long Polynomial<D>::degree() const {
  return terms_.empty() ? kZeroPolyDegree : static_cast<long>(terms_.front().monomial.degree());
}

template <class D>
unsigned Polynomial<D>::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

template <class D>
bool Polynomial<D>::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

template <class D>
typename Polynomial<D>::Scalar Polynomial<D>::coeff(const Monomial& m) const {
  if (m.arity() != arity_) throw ArityMismatch("monomial arity differs from polynomial arity");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return grlex_compare(t.monomial, key) > 0;
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return domain_.zero();
}

template <class D>
typename Polynomial<D>::Scalar Polynomial<D>::constant_coeff() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return domain_.zero();
}

template <class D>
void Polynomial<D>::check_compatible(const Polynomial& o) const {
  if (arity_ != o.arity_) throw ArityMismatch("polynomial arity mismatch");
  if (!(domain_ == o.domain_)) throw DomainMismatch("polynomials over different coefficient domains");
}

template <class D>
Polynomial<D> Polynomial<D>::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(domain_, arity_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = grlex_compare(terms_[i].monomial, o.terms_[j].monomial);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = domain_.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!domain_.is_zero(s)) r.terms_.push_back({terms_[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

template <class D>
Polynomial<D> Polynomial<D>::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = domain_.neg(t.coeff);
  return r;
}

template <class D>
Polynomial<D> Polynomial<D>::operator-(const Polynomial& o) const {
  return *this + (-o);
}

template <class D>
Polynomial<D> Polynomial<D>::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(domain_, arity_);
  if (terms_.empty() || o.terms_.empty()) return r;
  if (o.terms_.size() == 1) return times_monomial(o.terms_[0].monomial).scaled(o.terms_[0].coeff);
  if (terms_.size() == 1) return o.times_monomial(terms_[0].monomial).scaled(terms_[0].coeff);
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Monomial m = a.monomial * b.monomial;
      Scalar c = domain_.mul(a.coeff, b.coeff);
      auto [it, inserted] = acc.try_emplace(m, c);
      if (!inserted) it->second = domain_.add(it->second, c);
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!domain_.is_zero(c)) r.terms_.push_back({m, std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& a, const Term& b) { return grlex_compare(a.monomial, b.monomial) > 0; });
  return r;
}

template <class D>
Polynomial<D> Polynomial<D>::scaled(const Scalar& c) const {
  Polynomial r(domain_, arity_);
  if (domain_.is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar s = domain_.mul(t.coeff, c);
    if (!domain_.is_zero(s)) r.terms_.push_back({t.monomial, std::move(s)});
  }
  return r;
}

template <class D>
Polynomial<D> Polynomial<D>::times_monomial(const Monomial& m) const {
  if (m.arity() != arity_) throw ArityMismatch("monomial arity differs from polynomial arity");
  Polynomial r = *this;
  // Multiplying by a monomial preserves grlex order.
  for (auto& t : r.terms_) t.monomial = t.monomial * m;
  return r;
}

template class Polynomial<PrimeField>;
template class Polynomial<IntegerRing>;

template <class D>
Polynomial<D> pow(const Polynomial<D>& f, std::uint64_t k) {
  auto result = Polynomial<D>::constant(f.domain(), f.arity(), f.domain().one());
  Polynomial<D> base = f;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

template PrimePoly pow(const PrimePoly&, std::uint64_t);
template IntPoly pow(const IntPoly&, std::uint64_t);

FieldElem coeff_of(const PrimePoly& f, const Monomial& m) { return FieldElem(f.coeff(m), f.domain()); }

PrimePoly::Scalar eval_at(const PrimePoly& f, std::span<const std::uint32_t> point) {
  if (point.size() != f.arity()) throw ArityMismatch("point length differs from polynomial arity");
  const PrimeField& F = f.domain();
  PrimePoly::Scalar sum = 0;
  for (const auto& t : f.terms()) {
    PrimePoly::Scalar v = t.coeff;
    for (std::size_t i = 0; i < f.arity() && v != 0; ++i)
      if (t.monomial[i]) v = F.mul(v, F.pow(point[i] % F.characteristic(), t.monomial[i]));
    sum = F.add(sum, v);
  }
  return sum;
}

FieldElem eval_at(const PrimePoly& f, std::span<const FieldElem> point) {
  std::vector<std::uint32_t> raw(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (point[i].modulus() != f.domain().characteristic())
      throw DomainMismatch("point coordinate over a different prime");
    raw[i] = point[i].value();
  }
  return FieldElem(eval_at(f, std::span<const std::uint32_t>(raw)), f.domain());
}

PrimePoly reduce_mod_p(const IntPoly& f, const PrimeField& field) {
  std::vector<PrimePoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.monomial, field.from_big(t.coeff)});
  return PrimePoly::from_terms(field, f.arity(), std::move(terms));
}

PrimePoly reduce_mod_p(const IntPoly& f, std::uint32_t p) { return reduce_mod_p(f, PrimeField(p)); }

template <class D>
Polynomial<D> substitute(const Polynomial<D>& f, std::span<const Polynomial<D>> images) {
  if (images.size() != f.arity()) throw ArityMismatch("substitution needs one image per variable");
  if (images.empty()) return f;
  const std::size_t target = images[0].arity();
  for (const auto& g : images) {
    if (g.arity() != target) throw ArityMismatch("substitution images live in different rings");
    if (!(g.domain() == f.domain())) throw DomainMismatch("substitution images over another domain");
  }
  // Cache powers of each image as they are needed.
  std::vector<std::vector<Polynomial<D>>> powers(f.arity());
  auto power = [&](std::size_t var, unsigned e) -> const Polynomial<D>& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial<D>::constant(f.domain(), target, f.domain().one()));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  Polynomial<D> result(f.domain(), target);
  for (const auto& t : f.terms()) {
    auto term = Polynomial<D>::constant(f.domain(), target, t.coeff);
    for (std::size_t i = 0; i < f.arity() && !term.is_zero(); ++i)
      if (t.monomial[i]) term = term * power(i, t.monomial[i]);
    result += term;
  }
  return result;
}

template PrimePoly substitute(const PrimePoly&, std::span<const PrimePoly>);
template IntPoly substitute(const IntPoly&, std::span<const IntPoly>);

template <class D>
Polynomial<D> remap_variables(const Polynomial<D>& f, std::size_t new_arity, std::span<const std::size_t> map) {
  if (map.size() != f.arity()) throw ArityMismatch("variable map must cover every variable");
  std::vector<typename Polynomial<D>::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(new_arity);
    for (std::size_t i = 0; i < f.arity(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (map[i] >= new_arity) throw ArityMismatch("variable mapped outside the target ring");
      m.set(map[i], m[map[i]] + t.monomial[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial<D>::from_terms(f.domain(), new_arity, std::move(terms));
}

template PrimePoly remap_variables(const PrimePoly&, std::size_t, std::span<const std::size_t>);
template IntPoly remap_variables(const IntPoly&, std::size_t, std::span<const std::size_t>);

PrimePoly exact_divide(const PrimePoly& h, const PrimePoly& g) {
  if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (h.arity() != g.arity()) throw ArityMismatch("polynomial arity mismatch");
  const PrimeField& F = g.domain();
  const auto& lead = g.terms().front();
  const auto lead_inv = F.inv(lead.coeff);
  PrimePoly rest = h;
  PrimePoly quotient(F, h.arity());
  // Division with respect to grlex; every step cancels the grlex-leading term.
  while (!rest.is_zero()) {
    const auto& top = rest.terms().front();
    if (!lead.monomial.divides(top.monomial))
      throw PreconditionError("exact division failed: divisor does not divide dividend");
    auto q = PrimePoly::term(F, top.monomial.quotient(lead.monomial), F.mul(top.coeff, lead_inv));
    quotient += q;
    rest -= q * g;
  }
  return quotient;
}

// ---------------------------------------------------------------------------
// Text form

VariableNames::VariableNames(std::vector<std::string> names) : names_(std::move(names)) {}

VariableNames VariableNames::indexed(std::string_view prefix, std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(std::string(prefix) + std::to_string(i));
  return VariableNames(std::move(v));
}

VariableNames VariableNames::gvd(std::size_t n) {
  if (n == 0) throw PreconditionError("a GVD ring needs at least the line coordinate");
  auto v = indexed("h", n - 1);
  auto names = v.names();
  names.push_back("l");
  return VariableNames(std::move(names));
}

VariableNames VariableNames::matrix(std::string_view prefix, std::size_t rows, std::size_t cols) {
  std::vector<std::string> v;
  const bool compact = rows <= 9 && cols <= 9;
  for (std::size_t i = 1; i <= rows; ++i)
    for (std::size_t j = 1; j <= cols; ++j)
      v.push_back(std::string(prefix) + std::to_string(i) + (compact ? "" : "_") + std::to_string(j));
  return VariableNames(std::move(v));
}

std::size_t VariableNames::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return names_.size();
}

namespace {

template <class D>
bool is_negative(const D&, const typename D::value_type&) {
  return false;
}
template <>
bool is_negative(const IntegerRing&, const BigInt& v) {
  return v < 0;
}

}  // namespace

template <class D>
std::string to_string(const Polynomial<D>& f, const VariableNames& names) {
  if (names.size() != f.arity()) throw ArityMismatch("variable name count differs from arity");
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    auto c = t.coeff;
    bool neg = is_negative(f.domain(), c);
    if (neg) c = f.domain().neg(c);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    bool unit = f.domain().is_one(c);
    bool constant = t.monomial.is_one();
    if (!unit || constant) {
      out += f.domain().format(c);
      if (!constant) out += "*";
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < f.arity(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!first_factor) out += "*";
      first_factor = false;
      out += names[i];
      if (t.monomial[i] > 1) out += "^" + std::to_string(t.monomial[i]);
    }
  }
  return out;
}

template <class D>
std::string to_string(const Polynomial<D>& f) {
  return to_string(f, VariableNames::indexed("x", f.arity()));
}

template std::string to_string(const PrimePoly&, const VariableNames&);
template std::string to_string(const IntPoly&, const VariableNames&);
template std::string to_string(const PrimePoly&);
template std::string to_string(const IntPoly&);

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  BigInt integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }
  std::string_view identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    }
    if (start == pos_) fail("expected a variable name");
    return s_.substr(start, pos_ - start);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class D>
Polynomial<D> parse_polynomial(std::string_view text, const D& domain, const VariableNames& names) {
  const std::size_t n = names.size();
  Lexer lex(text);
  std::vector<typename Polynomial<D>::Term> terms;
  if (lex.at_end()) lex.fail("empty polynomial");
  bool first = true;
  while (!lex.at_end()) {
    bool negative = false;
    if (lex.accept('+')) {
    } else if (lex.accept('-')) {
      negative = true;
    } else if (!first) {
      lex.fail("expected '+' or '-'");
    }
    first = false;
    BigInt coeff = 1;
    Monomial m(n);
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      coeff = lex.integer();
      have_factor = true;
      if (!lex.accept('*')) goto done_term;
    }
    do {
      auto name = lex.identifier();
      std::size_t idx = names.find(name);
      if (idx == names.size()) lex.fail("unknown variable '" + std::string(name) + "'");
      unsigned e = 1;
      if (lex.accept('^')) {
        BigInt be = lex.integer();
        if (be > 65535) lex.fail("exponent too large");
        e = static_cast<unsigned>(be);
      }
      m.set(idx, m[idx] + e);
      have_factor = true;
    } while (lex.accept('*'));
  done_term:
    if (!have_factor) lex.fail("empty term");
    if (negative) coeff = -coeff;
    terms.push_back({m, domain.from_big(coeff)});
  }
  return Polynomial<D>::from_terms(domain, n, std::move(terms));
}

template PrimePoly parse_polynomial(std::string_view, const PrimeField&, const VariableNames&);
template IntPoly parse_polynomial(std::string_view, const IntegerRing&, const VariableNames&);

std::size_t infer_arity(std::string_view text, std::string_view prefix) {
  std::size_t best = 0;
  for (std::size_t pos = text.find(prefix); pos != std::string_view::npos; pos = text.find(prefix, pos + 1)) {
    if (pos > 0 && (std::isalnum(static_cast<unsigned char>(text[pos - 1])) || text[pos - 1] == '_')) continue;
    std::size_t i = pos + prefix.size(), start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) continue;
    std::size_t value = 0;
    std::from_chars(text.data() + start, text.data() + i, value);
    best = std::max(best, value);
  }
  return best;
}

}  // namespace frobsplit
