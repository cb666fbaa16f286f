#pragma once

#include <mpfr.h>

#include <string>

#include "qzeta/number.hpp"

namespace qzeta {

// Midpoint-radius enclosure of a real number.  Every operation rounds
// outward, so the returned interval always contains the exact result;
// division by an interval containing zero throws.
class Interval {
 public:
  explicit Interval(long prec = 128);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  static Interval exact(long value, long prec);
  static Interval from_rat(const BigRat& value, long prec);
  static Interval two_pow(long e, long prec);
  static Interval pi(long prec);

  long precision() const { return prec_; }

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;
  Interval operator-() const;
  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }

  Interval pow(long e) const;
  Interval abs() const;
  // Enclosure of sqrt(x); requires the lower endpoint to be >= 0.
  Interval sqrt() const;
  // Enclosure of log|x|; requires an interval not containing zero.
  Interval log_abs() const;
  // Same interval with the radius enlarged by sup|bound|.
  Interval add_error(const Interval& bound) const;

  bool contains_zero() const;
  // Exact endpoint and radius values (dyadic rationals).
  BigRat inf_rat() const;
  BigRat sup_rat() const;
  BigRat rad_rat() const;
  double approx() const;
  double rad_approx() const;
  std::string to_string(int digits = 30) const;

 private:
  static void bump_ulp(mpfr_t rad, const mpfr_t mid, int ternary);

  long prec_;
  mpfr_t mid_;
  mpfr_t rad_;
};

// sup(a) < inf(b), certified.
bool strictly_less(const Interval& a, const Interval& b);
// lo < inf(v) and sup(v) < hi, certified.
bool inside(const Interval& v, const BigRat& lo, const BigRat& hi);

}  // namespace qzeta
