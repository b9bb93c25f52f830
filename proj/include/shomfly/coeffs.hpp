#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace shomfly {

// Fixed, process-wide variable registry.  Relations between the variables
// (q = s^2, v^2 = y, t = s*v, x = s - 1/s) are never implicit: they enter a
// computation only through explicit substitution.
enum class Var : int { q = 0, z, s, v, t, x, BigX, BigY };

inline constexpr int kVarCount = 8;

const char* var_name(Var v);
std::optional<Var> var_by_name(const std::string& name);

// Exponent vector, one slot per registry variable, negative exponents allowed.
using ExpoVec = std::array<int32_t, kVarCount>;

inline ExpoVec zero_expo() { return ExpoVec{}; }

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero") {}
};

struct PoleAtPoint : std::runtime_error {
  explicit PoleAtPoint(const std::string& what) : std::runtime_error(what) {}
};

// Sparse multivariate Laurent polynomial with arbitrary-precision integer
// coefficients.  Invariant: no zero coefficients are stored; iteration order
// of the term map is lexicographic on exponent vectors.
class LaurentPoly {
 public:
  using TermMap = std::map<ExpoVec, mpz_class>;

  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return constant(1); }
  static LaurentPoly constant(long c);
  static LaurentPoly constant(const mpz_class& c);
  static LaurentPoly variable(Var v, int exp = 1);
  static LaurentPoly monomial(const ExpoVec& e, const mpz_class& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Coefficient of an exponent vector (zero if absent).
  mpz_class coeff(const ExpoVec& e) const;

  // True if every term has exponent zero in every variable outside `vars`
  // and non-negative exponents inside.
  bool supported_on(std::initializer_list<Var> vars, bool allow_negative) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

  // Largest term in exponent-lex order; polynomial must be nonzero.
  const std::pair<const ExpoVec, mpz_class>& leading_term() const;

  // Per-variable minimum exponent over all terms (zero polynomial -> zeros).
  ExpoVec min_exponents() const;

  // gcd of all coefficients, positive; zero polynomial -> 0.
  mpz_class integer_content() const;

  // Multiplies by a bare monomial / integer in place.
  void shift(const ExpoVec& e);
  void scale(const mpz_class& c);

  void add_term(const ExpoVec& e, const mpz_class& c);

 private:
  TermMap terms_;
};

// Exact quotient a / b when b divides a in the Laurent polynomial ring over
// the integers; nullopt otherwise.
std::optional<LaurentPoly> try_divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// Quotient of Laurent polynomials.  Normal form: monomial and integer content
// extracted from both parts, the leading coefficient of the denominator is
// positive, and a denominator that divides the numerator exactly is cleared.
// Full multivariate gcd is intentionally not performed; equality is decided
// by cross-multiplication.
class RationalFn {
 public:
  RationalFn() : num_(), den_(LaurentPoly::one()) {}
  RationalFn(long c) : num_(LaurentPoly::constant(c)), den_(LaurentPoly::one()) {}
  RationalFn(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {}
  RationalFn(LaurentPoly num, LaurentPoly den);

  static RationalFn variable(Var v, int exp = 1);
  static RationalFn fraction(long num, long den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFn inv() const;
  RationalFn pow(long e) const;

  RationalFn& operator+=(const RationalFn& rhs);
  RationalFn& operator-=(const RationalFn& rhs);
  RationalFn& operator*=(const RationalFn& rhs);
  RationalFn& operator/=(const RationalFn& rhs);
  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  RationalFn operator-() const;

  // Congruence: a/b == c/d iff a*d == c*b as polynomials.
  bool operator==(const RationalFn& rhs) const;
  bool operator!=(const RationalFn& rhs) const { return !(*this == rhs); }

  // Simultaneous exact substitution; unbound variables are kept.
  RationalFn substitute(const std::map<Var, RationalFn>& bindings) const;

  // Specialization at a single point; throws PoleAtPoint if the denominator
  // vanishes at the point.
  RationalFn eval_at(Var v, const RationalFn& value) const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

mpz_class factorial(int n);

// Canonical text rendering.  Terms sorted descending by exponent vector in
// registry order; each term `<int-coeff>*<var>^<exp>*...`; terms joined by
// ` + `; negative coefficients carry a leading `-`.  Fractions render as
// `(<num>) / (<den>)`, with the parentheses dropped when the denominator is 1.
// This format is the bit-exact contract for CLI output and cache files.
std::string to_text(const LaurentPoly& p);
std::string to_text(const RationalFn& r);

// Inverse of to_text, used to reload cache files.  Throws std::runtime_error
// on malformed input.
RationalFn parse_rational_text(const std::string& text);

}  // namespace shomfly
