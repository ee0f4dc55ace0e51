#pragma once

// Exact sparse multivariate polynomials over F_p and over the integers.
//
// A Polynomial is a value: a coefficient domain, an arity n, and a table of
// (monomial, nonzero coefficient) pairs kept sorted in descending graded-lex
// order (x1 > x2 > ... > xn). The storage order is fixed and independent of
// any user-chosen monomial order, so equality is plain table equality.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "frobsplit/errors.hpp"

namespace frobsplit {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kMaxArity = 32;

/// Degree reported for the zero polynomial (stands in for -infinity).
inline constexpr long kZeroPolyDegree = std::numeric_limits<long>::min();

bool is_prime(std::uint64_t n);

// ---------------------------------------------------------------------------
// Monomial

class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t arity);
  Monomial(std::initializer_list<unsigned> exponents);
  static Monomial from_exponents(std::span<const unsigned> exponents);

  std::size_t arity() const { return arity_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const;

  bool is_one() const;
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  Monomial pow(unsigned k) const;

  /// Variables with nonzero exponent, ascending.
  std::vector<std::size_t> support() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<Exponent, kMaxArity> exps_{};
  std::uint8_t arity_ = 0;
};

/// Graded lex with x1 > x2 > ... ; negative, zero or positive.
int grlex_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Total (descending) storage order used inside every Polynomial.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

// ---------------------------------------------------------------------------
// Coefficient domains

/// F_p for a prime p < 2^31, elements stored as canonical residues.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  /// Throws PreconditionError when p is not prime.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_field() const { return true; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(long long v) const;
  value_type from_big(const BigInt& v) const;
  long long to_signed(value_type v) const { return static_cast<long long>(v); }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  value_type pow(value_type a, std::uint64_t k) const;
  /// Throws PreconditionError for zero.
  value_type inv(value_type a) const;
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }

  std::string format(value_type v) const { return std::to_string(v); }
  std::string name() const { return "F_" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// The integers, with arbitrary precision.
class IntegerRing {
 public:
  using value_type = BigInt;

  std::uint32_t characteristic() const { return 0; }
  bool is_field() const { return false; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(long long v) const { return v; }
  value_type from_big(const BigInt& v) const { return v; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type pow(const value_type& a, std::uint64_t k) const;
  bool is_zero(const value_type& a) const { return a == 0; }
  bool is_one(const value_type& a) const { return a == 1; }

  std::string format(const value_type& v) const { return v.str(); }
  std::string name() const { return "Z"; }

  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

/// An element of F_p that carries its modulus.
class FieldElem {
 public:
  FieldElem(std::uint32_t value, std::uint32_t modulus);
  FieldElem(PrimeField::value_type value, const PrimeField& field)
      : value_(value), modulus_(field.characteristic()) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  PrimeField field() const { return PrimeField(modulus_); }
  bool is_zero() const { return value_ == 0; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const;
  /// Throws PreconditionError for zero.
  FieldElem inverse() const;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;

 private:
  void check_same(const FieldElem& o) const;

  std::uint32_t value_;
  std::uint32_t modulus_;
};

// ---------------------------------------------------------------------------
// Polynomial

template <class Domain>
class Polynomial {
 public:
  using domain_type = Domain;
  using Scalar = typename Domain::value_type;

  struct Term {
    Monomial monomial;
    Scalar coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  /// The zero polynomial.
  Polynomial(Domain domain, std::size_t arity);

  static Polynomial constant(Domain domain, std::size_t arity, const Scalar& c);
  static Polynomial variable(Domain domain, std::size_t arity, std::size_t index);
  static Polynomial term(Domain domain, const Monomial& m, const Scalar& c);
  /// Combines like terms, drops zeros and sorts.
  static Polynomial from_terms(Domain domain, std::size_t arity, std::vector<Term> terms);

  const Domain& domain() const { return domain_; }
  std::size_t arity() const { return arity_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; kZeroPolyDegree for the zero polynomial.
  long degree() const;
  /// Largest exponent of variable `var` among the terms (0 for zero).
  unsigned degree_in(std::size_t var) const;
  bool is_homogeneous() const;

  Scalar coeff(const Monomial& m) const;
  Scalar constant_coeff() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Scalar& c) const;
  Polynomial times_monomial(const Monomial& m) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.arity_ == b.arity_ && a.domain_ == b.domain_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Polynomial& o) const;

  Domain domain_;
  std::size_t arity_;
  std::vector<Term> terms_;  // descending grlex, no zero coefficients
};

extern template class Polynomial<PrimeField>;
extern template class Polynomial<IntegerRing>;

using PrimePoly = Polynomial<PrimeField>;
using IntPoly = Polynomial<IntegerRing>;

/// f^k by binary exponentiation; f^0 = 1.
template <class D>
Polynomial<D> pow(const Polynomial<D>& f, std::uint64_t k);

FieldElem coeff_of(const PrimePoly& f, const Monomial& m);
FieldElem eval_at(const PrimePoly& f, std::span<const FieldElem> point);
PrimePoly::Scalar eval_at(const PrimePoly& f, std::span<const std::uint32_t> point);

/// Coefficientwise reduction; p must be prime.
PrimePoly reduce_mod_p(const IntPoly& f, std::uint32_t p);
PrimePoly reduce_mod_p(const IntPoly& f, const PrimeField& field);

/// Replace variable i of f by images[i]; all images share one target ring.
template <class D>
Polynomial<D> substitute(const Polynomial<D>& f, std::span<const Polynomial<D>> images);

/// Re-embed f into a ring of `new_arity` variables; variable i goes to slot map[i].
template <class D>
Polynomial<D> remap_variables(const Polynomial<D>& f, std::size_t new_arity,
                              std::span<const std::size_t> map);

/// Exact quotient h / g; throws PreconditionError when g does not divide h.
PrimePoly exact_divide(const PrimePoly& h, const PrimePoly& g);

// ---------------------------------------------------------------------------
// Text form

/// Names of the ring variables, used by the parser and printer.
class VariableNames {
 public:
  VariableNames() = default;
  explicit VariableNames(std::vector<std::string> names);

  /// prefix1 .. prefixN, e.g. x1..xn or c1..cN.
  static VariableNames indexed(std::string_view prefix, std::size_t n);
  /// h1 .. h(n-1), l  (hyperplane coordinates followed by the line coordinate).
  static VariableNames gvd(std::size_t n);
  /// Row-major matrix entries m11, m12, ... (m1_10 style once an index exceeds 9).
  static VariableNames matrix(std::string_view prefix, std::size_t rows, std::size_t cols);

  std::size_t size() const { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  /// Index of `name`, or size() when absent.
  std::size_t find(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

template <class D>
std::string to_string(const Polynomial<D>& f, const VariableNames& names);
template <class D>
std::string to_string(const Polynomial<D>& f);  // x1..xn

/// Parses the polynomial grammar: terms joined by + / -, each an optional
/// integer coefficient and '*'-separated powers `name^e`.
template <class D>
Polynomial<D> parse_polynomial(std::string_view text, const D& domain, const VariableNames& names);

/// Number of variables implied by the largest x<k> index mentioned in `text`.
std::size_t infer_arity(std::string_view text, std::string_view prefix = "x");

}  // namespace frobsplit
