#include "qzeta/jet.hpp"

#include <stdexcept>

namespace qzeta {

Jet::Jet(int order) {
  if (order < 0) throw std::invalid_argument("jet order must be >= 0");
  c_.assign(order + 1, RatFunc());
}

Jet Jet::constant(RatFunc c, int order) {
  Jet j(order);
  j.c_[0] = std::move(c);
  return j;
}

Jet Jet::variable(RatFunc c, int order) {
  Jet j(order);
  j.c_[0] = std::move(c);
  if (order >= 1) j.c_[1] = RatFunc(1L);
  return j;
}

Jet Jet::linear_factor(const RatFunc& c0, const RatFunc& c1, int power, int order) {
  Jet j(order);
  if (c0.is_zero()) {
    if (power < 0) throw std::domain_error("pole at expansion point");
    if (power <= order) j.c_[power] = c1.pow(power);
    return j;
  }
  int mmax = order;
  if (power >= 0 && power < mmax) mmax = power;
  BigRat binom(1);
  RatFunc c0pow = c0.pow(power);
  RatFunc c0inv = c0.inverse();
  RatFunc c1pow(1L);
  for (int m = 0; m <= mmax; ++m) {
    j.c_[m] = c0pow * c1pow * binom;
    if (m == mmax) break;
    c0pow *= c0inv;
    c1pow *= c1;
    binom *= BigRat(power - m);
    binom /= BigRat(m + 1);
  }
  return j;
}

bool Jet::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

void Jet::check_order(const Jet& o) const {
  if (c_.size() != o.c_.size()) throw std::invalid_argument("jet order mismatch");
}

Jet Jet::operator-() const {
  Jet r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Jet Jet::operator+(const Jet& o) const {
  check_order(o);
  Jet r(*this);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Jet Jet::operator-(const Jet& o) const {
  check_order(o);
  Jet r(*this);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Jet Jet::operator*(const Jet& o) const {
  check_order(o);
  Jet r(order());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; i + j < c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

Jet Jet::operator*(const RatFunc& s) const {
  Jet r(*this);
  for (auto& c : r.c_) c *= s;
  return r;
}

Jet Jet::operator*(const BigRat& s) const {
  Jet r(*this);
  for (auto& c : r.c_) c = c * s;
  return r;
}

Jet Jet::inverse() const {
  if (c_[0].is_zero()) throw std::domain_error("pole at expansion point");
  Jet r(order());
  RatFunc inv0 = c_[0].inverse();
  r.c_[0] = inv0;
  for (int m = 1; m <= order(); ++m) {
    RatFunc acc;
    for (int i = 1; i <= m; ++i) {
      if (c_[i].is_zero() || r.c_[m - i].is_zero()) continue;
      acc += c_[i] * r.c_[m - i];
    }
    r.c_[m] = -(inv0 * acc);
  }
  return r;
}

Jet Jet::operator/(const Jet& o) const { return *this * o.inverse(); }

Jet Jet::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Jet r = Jet::constant(RatFunc(1L), order());
  Jet b(*this);
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Jet Jet::truncated(int new_order) const {
  if (new_order < 0 || new_order > order())
    throw std::invalid_argument("jet truncation order out of range");
  Jet r(new_order);
  for (int i = 0; i <= new_order; ++i) r.c_[i] = c_[i];
  return r;
}

}  // namespace qzeta
