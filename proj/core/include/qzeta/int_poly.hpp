#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qzeta/number.hpp"

namespace qzeta {

// Dense polynomial over Z in one variable q.  Invariant: the coefficient
// vector is empty (zero polynomial) or has a nonzero top coefficient.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(BigInt c);
  explicit IntPoly(long c) : IntPoly(BigInt(c)) {}
  static IntPoly monomial(BigInt c, int e);
  static IntPoly variable() { return monomial(BigInt(1), 1); }
  static IntPoly from_coeffs(std::vector<BigInt> c);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Lowest exponent with nonzero coefficient; 0 for the zero polynomial.
  int order() const;
  const BigInt& coeff(int i) const;
  const BigInt& leading() const;
  const std::vector<BigInt>& coeffs() const { return c_; }

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const BigInt& s) const;
  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  IntPoly shifted(int k) const;  // multiply by q^k, k >= 0
  IntPoly pow(unsigned e) const;
  // q^degree * p(1/q); trailing zero coefficients of p become leading and
  // are stripped, so reversed() has the same support reflected.
  IntPoly reversed() const;
  IntPoly derivative() const;

  BigInt content() const;  // gcd of coefficients, >= 0; 0 for zero
  IntPoly primitive_part() const;

  BigInt eval(const BigInt& x) const;
  BigRat eval(const BigRat& x) const;

  // Exact division; throws std::domain_error if the division has a
  // remainder or the divisor is zero.
  IntPoly divexact(const IntPoly& d) const;
  // Quotient if *this == d * quotient over Z, otherwise nullopt.
  std::optional<IntPoly> try_divide(const IntPoly& d) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

inline IntPoly operator*(const BigInt& s, const IntPoly& p) { return p * s; }

// Full gcd over Z[q] (content included), normalized to a non-negative
// leading coefficient.  Uses a modular algorithm with certification.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

}  // namespace qzeta
