#pragma once

#include <climits>
#include <string>
#include <vector>

#include "rational.hpp"

namespace satrop {

struct DegreeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Degree cap for rational-function arithmetic. Ops whose result would
// exceed it throw DegreeCapError instead of thrashing.
long long ratfun_degree_cap();
void set_ratfun_degree_cap(long long cap);

// Dense polynomial over BigInt, coefficients from degree 0 up, trimmed
// (empty vector is the zero polynomial).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(BigInt c0) { set(std::move(c0)); }
  static IntPoly monomial(BigInt c, long long exp);
  static IntPoly one() { return IntPoly(BigInt(1)); }

  bool is_zero() const { return c_.empty(); }
  long long degree() const { return static_cast<long long>(c_.size()) - 1; }
  // Order of vanishing at t=0; LLONG_MAX for the zero polynomial.
  long long ord() const;
  const BigInt& coeff(size_t i) const;
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt& at(size_t i);
  void resize_degree(long long deg) { c_.resize(static_cast<size_t>(deg) + 1); }
  void trim();

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  IntPoly scaled(const BigInt& s) const;
  IntPoly shifted(long long k) const;  // multiply by t^k, k >= 0

  // Content (nonnegative gcd of coefficients; 0 for the zero polynomial).
  BigInt content() const;
  // Primitive part with positive leading coefficient.
  IntPoly primitive() const;
  // Exact division; requires b | a in Z[t].
  static IntPoly divexact(const IntPoly& a, const IntPoly& b);
  // Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
  static IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);
  // Primitive gcd with positive leading coefficient.
  static IntPoly gcd(IntPoly a, IntPoly b);

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  std::string to_string(const std::string& var = "t") const;

 private:
  std::vector<BigInt> c_;
  void set(BigInt c0) {
    if (!c0.is_zero()) c_.push_back(std::move(c0));
  }
};

// Exact univariate rational function over the rationals, with a valuation
// at t=0. Stored as scale * num/den with num, den primitive integer
// polynomials, positive leading coefficients, gcd(num, den) = 1. The zero
// function is scale 0, num = den = 1.
class RatFun {
 public:
  static constexpr long long kValInf = LLONG_MAX;

  RatFun() : scale_(0), num_(IntPoly::one()), den_(IntPoly::one()) {}
  RatFun(long long v) : RatFun(Rational(v)) {}
  explicit RatFun(Rational c) : scale_(std::move(c)), num_(IntPoly::one()), den_(IntPoly::one()) {}
  RatFun(IntPoly num, IntPoly den, Rational scale = Rational(1));
  // c * t^exp, exp may be negative.
  static RatFun monomial(Rational c, long long exp);
  static RatFun t() { return monomial(Rational(1), 1); }

  bool is_zero() const { return scale_.is_zero(); }
  bool is_one() const { return scale_.is_one() && num_.is_zero() == false && num_.degree() == 0 && den_.degree() == 0; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }
  Rational constant_value() const;  // requires is_constant()

  // ord_{t=0}(num) - ord_{t=0}(den); kValInf iff zero.
  long long valuation() const;

  RatFun operator-() const;
  RatFun inverse() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  bool operator==(const RatFun& o) const {
    return scale_ == o.scale_ && num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  const Rational& scale() const { return scale_; }
  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  std::string to_string() const;

 private:
  Rational scale_;
  IntPoly num_, den_;
  void normalize();
};

enum class SolveStatus { ok, singular, inconsistent };

// Exact linear solve M x = b over the rational-function field, Gaussian
// elimination with first-nonzero pivoting. M is row-major n x n.
SolveStatus solve_linear(std::vector<std::vector<RatFun>> M, std::vector<RatFun> b,
                         std::vector<RatFun>& x);

}  // namespace satrop
