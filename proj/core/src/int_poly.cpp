#include "qzeta/int_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace qzeta {

IntPoly::IntPoly(BigInt c) {
  if (c != 0) c_.push_back(std::move(c));
}

IntPoly IntPoly::monomial(BigInt c, int e) {
  if (e < 0) throw std::invalid_argument("monomial exponent must be >= 0");
  IntPoly p;
  if (c != 0) {
    p.c_.assign(e + 1, BigInt(0));
    p.c_[e] = std::move(c);
  }
  return p;
}

IntPoly IntPoly::from_coeffs(std::vector<BigInt> c) {
  IntPoly p;
  p.c_ = std::move(c);
  p.trim();
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int IntPoly::order() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

const BigInt& IntPoly::coeff(int i) const {
  static const BigInt zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

const BigInt& IntPoly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size()) r.c_[i] += c_[i];
    if (i < o.c_.size()) r.c_[i] += o.c_[i];
  }
  r.trim();
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  IntPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size()) r.c_[i] += c_[i];
    if (i < o.c_.size()) r.c_[i] -= o.c_[i];
  }
  r.trim();
  return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  IntPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
  BigInt t;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      mpz_addmul(r.c_[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

IntPoly IntPoly::operator*(const BigInt& s) const {
  if (s == 0) return IntPoly();
  IntPoly r(*this);
  for (auto& x : r.c_) x *= s;
  return r;
}

IntPoly IntPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("shift must be >= 0");
  if (is_zero() || k == 0) return *this;
  IntPoly r;
  r.c_.assign(c_.size() + k, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly r(BigInt(1));
  IntPoly b(*this);
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

IntPoly IntPoly::reversed() const {
  IntPoly r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.trim();
  return r;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  IntPoly r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * BigInt(static_cast<long>(i));
  r.trim();
  return r;
}

BigInt IntPoly::content() const {
  BigInt g(0);
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  BigInt g = content();
  if (g == 0 || g == 1) return *this;
  IntPoly r(*this);
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return r;
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRat IntPoly::eval(const BigRat& x) const {
  BigRat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
  return acc;
}

std::optional<IntPoly> IntPoly::try_divide(const IntPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return IntPoly();
  if (degree() < d.degree()) return std::nullopt;
  std::vector<BigInt> rem = c_;
  std::vector<BigInt> quot(degree() - d.degree() + 1, BigInt(0));
  const BigInt& lc = d.leading();
  BigInt qc, r;
  for (int i = degree(); i >= d.degree(); --i) {
    BigInt& top = rem[i];
    if (top == 0) continue;
    mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    if (r != 0) return std::nullopt;
    int off = i - d.degree();
    quot[off] = qc;
    for (int j = 0; j <= d.degree(); ++j)
      mpz_submul(rem[off + j].get_mpz_t(), qc.get_mpz_t(), d.c_[j].get_mpz_t());
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return IntPoly::from_coeffs(std::move(quot));
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
  auto q = try_divide(d);
  if (!q) throw std::domain_error("inexact polynomial division");
  return *q;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& a = c_[i];
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    BigInt m = abs(a);
    if (m != 1 || i == 0) os << m.get_str();
    if (i > 0) {
      if (m != 1) os << "*";
      os << "q";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace qzeta
