#pragma once

#include <map>
#include <string>

#include "qzeta/int_poly.hpp"
#include "qzeta/number.hpp"

namespace qzeta {

// Laurent polynomial over Z: finitely many terms c_e * q^e with e in Z.
// Only nonzero coefficients are stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(BigInt c);
  static LaurentPoly monomial(BigInt c, int e);
  static LaurentPoly from_poly(const IntPoly& p, int shift = 0);

  bool is_zero() const { return c_.empty(); }
  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero
  const BigInt& coeff(int e) const;
  const std::map<int, BigInt>& terms() const { return c_; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const BigInt& s) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

  LaurentPoly pow(unsigned e) const;
  LaurentPoly shifted(int k) const;       // multiply by q^k, any sign
  LaurentPoly subst_inverse() const;      // q -> 1/q
  LaurentPoly divexact(const LaurentPoly& d) const;

  // numerator polynomial after factoring q^{min_exp}; zero maps to zero
  IntPoly poly_part() const;

  BigRat eval(const BigRat& x) const;  // x must be nonzero if min_exp < 0
  BigInt eval_at_one() const;

  std::string to_string() const;

 private:
  std::map<int, BigInt> c_;
};

}  // namespace qzeta
