#include "qzeta/laurent_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace qzeta {

LaurentPoly::LaurentPoly(BigInt c) {
  if (c != 0) c_[0] = std::move(c);
}

LaurentPoly LaurentPoly::monomial(BigInt c, int e) {
  LaurentPoly p;
  if (c != 0) p.c_[e] = std::move(c);
  return p;
}

LaurentPoly LaurentPoly::from_poly(const IntPoly& p, int shift) {
  LaurentPoly r;
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) r.c_[i + shift] = p.coeff(i);
  return r;
}

int LaurentPoly::min_exp() const {
  if (c_.empty()) throw std::domain_error("exponent range of zero Laurent polynomial");
  return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (c_.empty()) throw std::domain_error("exponent range of zero Laurent polynomial");
  return c_.rbegin()->first;
}

const BigInt& LaurentPoly::coeff(int e) const {
  static const BigInt zero(0);
  auto it = c_.find(e);
  return it == c_.end() ? zero : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& [e, v] : r.c_) v = -v;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r(*this);
  for (const auto& [e, v] : o.c_) {
    auto it = r.c_.find(e);
    if (it == r.c_.end()) {
      r.c_[e] = v;
    } else {
      it->second += v;
      if (it->second == 0) r.c_.erase(it);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  if (c_.empty() || o.c_.empty()) return r;
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_) {
      BigInt& slot = r.c_[e1 + e2];
      mpz_addmul(slot.get_mpz_t(), v1.get_mpz_t(), v2.get_mpz_t());
    }
  for (auto it = r.c_.begin(); it != r.c_.end();)
    it = (it->second == 0) ? r.c_.erase(it) : std::next(it);
  return r;
}

LaurentPoly LaurentPoly::operator*(const BigInt& s) const {
  LaurentPoly r;
  if (s == 0) return r;
  r.c_ = c_;
  for (auto& [e, v] : r.c_) v *= s;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly r(BigInt(1));
  LaurentPoly b(*this);
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_[e + k] = v;
  return r;
}

LaurentPoly LaurentPoly::subst_inverse() const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_[-e] = v;
  return r;
}

IntPoly LaurentPoly::poly_part() const {
  if (c_.empty()) return IntPoly();
  std::vector<BigInt> v(max_exp() - min_exp() + 1, BigInt(0));
  for (const auto& [e, c] : c_) v[e - min_exp()] = c;
  return IntPoly::from_coeffs(std::move(v));
}

LaurentPoly LaurentPoly::divexact(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("zero divisor");
  if (is_zero()) return LaurentPoly();
  IntPoly q = poly_part().divexact(d.poly_part());
  return from_poly(q, min_exp() - d.min_exp());
}

BigRat LaurentPoly::eval(const BigRat& x) const {
  if (c_.empty()) return BigRat(0);
  if (x == 0 && min_exp() < 0) throw std::domain_error("zero divisor");
  BigRat acc(0);
  // Horner over the dense range from the top exponent down to min_exp.
  int prev_e = max_exp();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * qzeta::pow(x, prev_e - it->first) + BigRat(it->second);
    prev_e = it->first;
  }
  return acc * qzeta::pow(x, min_exp());
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt s(0);
  for (const auto& [e, v] : c_) s += v;
  return s;
}

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const BigInt& a = it->second;
    int e = it->first;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    BigInt m = abs(a);
    if (m != 1 || e == 0) os << m.get_str();
    if (e != 0) {
      if (m != 1) os << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace qzeta
