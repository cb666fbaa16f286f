#pragma once

#include <vector>

#include "qzeta/rat_func.hpp"

namespace qzeta {

// Truncated power series ("jet") in a local parameter eps with RatFunc
// coefficients: sum_{k=0}^{K} c_k eps^k, K fixed at construction.  All
// binary operations require operands of equal order.
class Jet {
 public:
  explicit Jet(int order);
  static Jet constant(RatFunc c, int order);
  // c + eps
  static Jet variable(RatFunc c, int order);
  // (c0 + c1*eps)^power; power < 0 requires c0 != 0.
  static Jet linear_factor(const RatFunc& c0, const RatFunc& c1, int power, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const RatFunc& coeff(int k) const { return c_.at(k); }
  RatFunc& coeff(int k) { return c_.at(k); }
  bool is_zero() const;

  Jet operator-() const;
  Jet operator+(const Jet& o) const;
  Jet operator-(const Jet& o) const;
  Jet operator*(const Jet& o) const;
  Jet operator/(const Jet& o) const;
  Jet operator*(const RatFunc& s) const;
  Jet operator*(const BigRat& s) const;
  Jet& operator+=(const Jet& o) { return *this = *this + o; }
  Jet& operator-=(const Jet& o) { return *this = *this - o; }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  bool operator==(const Jet& o) const { return c_ == o.c_; }
  bool operator!=(const Jet& o) const { return c_ != o.c_; }

  // Multiplicative inverse as a truncated series; requires a unit
  // constant term, otherwise throws "pole at expansion point".
  Jet inverse() const;
  Jet pow(int e) const;
  Jet truncated(int order) const;  // order <= this->order()

 private:
  void check_order(const Jet& o) const;
  std::vector<RatFunc> c_;
};

inline Jet operator*(const RatFunc& s, const Jet& j) { return j * s; }

}  // namespace qzeta
