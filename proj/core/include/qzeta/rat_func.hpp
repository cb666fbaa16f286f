#pragma once

#include <string>

#include "qzeta/int_poly.hpp"
#include "qzeta/laurent_poly.hpp"
#include "qzeta/number.hpp"

namespace qzeta {

// Rational function in q over Q, kept in a canonical form:
//   value = scale * num / den
// with num, den primitive integer polynomials with positive leading
// coefficients, gcd(num, den) = 1, and den != 0.  The zero function is
// stored as {num = 0, den = 1, scale = 0}.  Canonical form makes
// structural equality semantic equality.
class RatFunc {
 public:
  RatFunc() : den_(IntPoly(1L)) {}
  explicit RatFunc(BigRat c);
  explicit RatFunc(long c) : RatFunc(BigRat(c)) {}
  explicit RatFunc(const IntPoly& p);
  explicit RatFunc(const LaurentPoly& p);
  RatFunc(IntPoly num, IntPoly den, BigRat scale = BigRat(1));

  static RatFunc variable() { return q_power(1); }
  static RatFunc q_power(int e);

  bool is_zero() const { return scale_ == 0; }
  bool is_one() const;
  bool is_rational() const { return num_.degree() <= 0 && den_.degree() <= 0; }
  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  const BigRat& scale() const { return scale_; }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator*(const BigRat& s) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc inverse() const;
  RatFunc pow(int e) const;
  RatFunc subst_inverse() const;  // q -> 1/q
  RatFunc derivative() const;

  BigRat eval(const BigRat& x) const;

  std::string to_string() const;

 private:
  void normalize();
  IntPoly num_;
  IntPoly den_;
  BigRat scale_{0};
};

inline RatFunc operator*(const BigRat& s, const RatFunc& f) { return f * s; }

// Target subrings of Q(q) for exact membership tests.
enum class LaurentRing {
  kLaurent,  // Z[q, 1/q]
  kPolyQ,    // Z[q]
  kPolyInvQ  // Z[1/q]
};

struct MembershipResult {
  bool member = false;
  // Witness expansion when member == true (coefficients in Z).
  LaurentPoly witness;
};

// Decides whether f lies in the requested subring; exact, via the
// canonical form (denominator must reduce to a power of q and the scale
// to an integer).
MembershipResult laurent_membership(const RatFunc& f, LaurentRing ring);

}  // namespace qzeta
