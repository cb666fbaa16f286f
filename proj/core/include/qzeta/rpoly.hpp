#pragma once

#include <utility>
#include <vector>

#include "qzeta/rat_func.hpp"

namespace qzeta {

// Dense polynomial with rational-function coefficients.  Used for the
// auxiliary weight polynomials in the bookkeeping variable z and for
// reassembling a kernel from its partial fractions.
class RPoly {
 public:
  RPoly() = default;
  explicit RPoly(RatFunc c) {
    c_.push_back(std::move(c));
    trim();
  }

  static RPoly from_coeffs(std::vector<RatFunc> c) {
    RPoly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
  }

  static RPoly variable() {
    return from_coeffs({RatFunc(0L), RatFunc(1L)});
  }

  bool is_zero() const { return c_.empty(); }

  // Degree, -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const RatFunc& coeff(int i) const {
    static const RatFunc kZero;
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
  }

  RPoly operator+(const RPoly& o) const {
    std::vector<RatFunc> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i < c_.size()) c[i] = c[i] + c_[i];
      if (i < o.c_.size()) c[i] = c[i] + o.c_[i];
    }
    return from_coeffs(std::move(c));
  }

  RPoly operator-() const {
    RPoly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
  }

  RPoly operator-(const RPoly& o) const { return *this + (-o); }

  RPoly operator*(const RPoly& o) const {
    if (is_zero() || o.is_zero()) return RPoly();
    std::vector<RatFunc> c(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        c[i + j] = c[i + j] + c_[i] * o.c_[j];
    return from_coeffs(std::move(c));
  }

  RPoly operator*(const RatFunc& s) const {
    RPoly p;
    p.c_.reserve(c_.size());
    for (const auto& c : c_) p.c_.push_back(c * s);
    p.trim();
    return p;
  }

  bool operator==(const RPoly& o) const { return c_ == o.c_; }
  bool operator!=(const RPoly& o) const { return !(*this == o); }

  RatFunc eval(const RatFunc& z) const {
    RatFunc v;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * z + *it;
    return v;
  }

  RPoly derivative() const {
    if (c_.size() <= 1) return RPoly();
    std::vector<RatFunc> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      c[i - 1] = c_[i] * RatFunc(static_cast<long>(i));
    return from_coeffs(std::move(c));
  }

  RPoly pow(unsigned e) const {
    RPoly result{RatFunc(1L)};
    RPoly base = *this;
    while (e != 0) {
      if (e & 1u) result = result * base;
      base = base * base;
      e >>= 1u;
    }
    return result;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<RatFunc> c_;
};

}  // namespace qzeta
