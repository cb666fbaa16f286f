#include "qzeta/rat_func.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qzeta {

RatFunc::RatFunc(BigRat c) : num_(IntPoly(1L)), den_(IntPoly(1L)), scale_(std::move(c)) {
  if (scale_ == 0) num_ = IntPoly();
}

RatFunc::RatFunc(const IntPoly& p) : num_(p), den_(IntPoly(1L)), scale_(1) { normalize(); }

RatFunc::RatFunc(const LaurentPoly& p) : den_(IntPoly(1L)), scale_(1) {
  if (p.is_zero()) {
    scale_ = 0;
    return;
  }
  num_ = p.poly_part();
  int m = p.min_exp();
  if (m > 0) num_ = num_.shifted(m);
  if (m < 0) den_ = IntPoly::monomial(BigInt(1), -m);
  normalize();
}

RatFunc::RatFunc(IntPoly num, IntPoly den, BigRat scale)
    : num_(std::move(num)), den_(std::move(den)), scale_(std::move(scale)) {
  normalize();
}

RatFunc RatFunc::q_power(int e) {
  RatFunc r;
  r.scale_ = 1;
  if (e >= 0) {
    r.num_ = IntPoly::monomial(BigInt(1), e);
    r.den_ = IntPoly(1L);
  } else {
    r.num_ = IntPoly(1L);
    r.den_ = IntPoly::monomial(BigInt(1), -e);
  }
  return r;
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw std::domain_error("zero divisor");
  if (num_.is_zero() || scale_ == 0) {
    num_ = IntPoly();
    den_ = IntPoly(1L);
    scale_ = 0;
    return;
  }
  int on = num_.order(), od = den_.order();
  int m = std::min(on, od);
  if (m > 0) {
    IntPoly qm = IntPoly::monomial(BigInt(1), m);
    num_ = num_.divexact(qm);
    den_ = den_.divexact(qm);
  }
  BigInt cn = num_.content(), cd = den_.content();
  if (cn != 1) num_ = num_.primitive_part();
  if (cd != 1) den_ = den_.primitive_part();
  scale_ *= BigRat(cn) / BigRat(cd);
  if (den_.leading() < 0) {
    den_ = -den_;
    scale_ = -scale_;
  }
  if (num_.leading() < 0) {
    num_ = -num_;
    scale_ = -scale_;
  }
  if (num_.degree() > 0 && den_.degree() > 0) {
    IntPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
}

bool RatFunc::is_one() const {
  return scale_ == 1 && num_.is_one() && den_.is_one();
}

bool RatFunc::operator==(const RatFunc& o) const {
  return scale_ == o.scale_ && num_ == o.num_ && den_ == o.den_;
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.scale_ = -r.scale_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  IntPoly g = poly_gcd(den_, o.den_);
  IntPoly da = den_.divexact(g);
  IntPoly db = o.den_.divexact(g);
  // scale = pa/qa and pb/qb; collect integer parts over the common
  // denominator, leaving 1/(qa*qb) in the scale.
  const BigInt &pa = scale_.get_num(), &qa = scale_.get_den();
  const BigInt &pb = o.scale_.get_num(), &qb = o.scale_.get_den();
  IntPoly raw = (num_ * db) * (pa * qb) + (o.num_ * da) * (pb * qa);
  return RatFunc(std::move(raw), den_ * db, BigRat(1) / BigRat(qa * qb));
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  // Cross-cancel so the product of canonical forms is canonical without
  // a full renormalization.
  IntPoly g1 = poly_gcd(num_, o.den_);
  IntPoly g2 = poly_gcd(o.num_, den_);
  RatFunc r;
  r.num_ = num_.divexact(g1) * o.num_.divexact(g2);
  r.den_ = den_.divexact(g2) * o.den_.divexact(g1);
  r.scale_ = scale_ * o.scale_;
  return r;
}

RatFunc RatFunc::operator*(const BigRat& s) const {
  if (is_zero() || s == 0) return RatFunc();
  RatFunc r(*this);
  r.scale_ *= s;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("zero divisor");
  RatFunc r;
  r.num_ = den_;
  r.den_ = num_;
  r.scale_ = BigRat(1) / scale_;
  return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::pow(int e) const {
  if (e == 0) return RatFunc(BigRat(1));
  const RatFunc& b = *this;
  if (e < 0) return b.inverse().pow(-e);
  if (is_zero()) return RatFunc();
  RatFunc r;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  r.scale_ = qzeta::pow(scale_, e);
  return r;
}

RatFunc RatFunc::subst_inverse() const {
  if (is_zero()) return RatFunc();
  int dn = num_.degree(), dd = den_.degree();
  IntPoly n = num_.reversed();
  IntPoly d = den_.reversed();
  if (dd >= dn) n = n.shifted(dd - dn);
  else d = d.shifted(dn - dd);
  return RatFunc(std::move(n), std::move(d), scale_);
}

RatFunc RatFunc::derivative() const {
  if (is_zero()) return RatFunc();
  IntPoly n = num_.derivative() * den_ - num_ * den_.derivative();
  return RatFunc(std::move(n), den_ * den_, scale_);
}

BigRat RatFunc::eval(const BigRat& x) const {
  if (is_zero()) return BigRat(0);
  BigRat d = den_.eval(x);
  if (d == 0) throw std::domain_error("pole at evaluation point");
  return scale_ * num_.eval(x) / d;
}

std::string RatFunc::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << "(" << scale_.get_str() << ")*(" << num_.to_string() << ")";
  if (!den_.is_one()) os << "/(" << den_.to_string() << ")";
  return os.str();
}

MembershipResult laurent_membership(const RatFunc& f, LaurentRing ring) {
  MembershipResult res;
  if (f.is_zero()) {
    res.member = true;
    return res;
  }
  const IntPoly& den = f.den();
  // Canonical denominators are primitive with positive leading
  // coefficient, so "power of q" means exactly the monomial q^m.
  if (den.order() != den.degree() || den.leading() != 1) return res;
  if (f.scale().get_den() != 1) return res;
  int m = den.degree();
  const BigInt& s = f.scale().get_num();
  LaurentPoly w = LaurentPoly::from_poly(f.num(), -m) * s;
  if (ring == LaurentRing::kPolyQ && w.min_exp() < 0) return res;
  if (ring == LaurentRing::kPolyInvQ && w.max_exp() > 0) return res;
  res.member = true;
  res.witness = std::move(w);
  return res;
}

}  // namespace qzeta
