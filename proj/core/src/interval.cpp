#include "qzeta/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qzeta {

namespace {

// Guard object for a temporary mpfr value.
class Tmp {
 public:
  explicit Tmp(long prec) { mpfr_init2(v, static_cast<mpfr_prec_t>(prec)); }
  ~Tmp() { mpfr_clear(v); }
  Tmp(const Tmp&) = delete;
  Tmp& operator=(const Tmp&) = delete;
  mpfr_t v;
};

// Exact dyadic value of a nonnegative or arbitrary mpfr number.
BigRat to_rat(const mpfr_t x) {
  if (mpfr_zero_p(x)) return BigRat(0);
  if (!mpfr_number_p(x)) throw std::domain_error("non-finite interval bound");
  BigInt m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
  BigRat r(m);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

}  // namespace

Interval::Interval(long prec) : prec_(prec) {
  if (prec < 16) throw std::invalid_argument("precision below 16 bits");
  mpfr_init2(mid_, static_cast<mpfr_prec_t>(prec));
  mpfr_init2(rad_, static_cast<mpfr_prec_t>(prec));
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(mid_, static_cast<mpfr_prec_t>(prec_));
  mpfr_init2(rad_, static_cast<mpfr_prec_t>(prec_));
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
  mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(mid_, static_cast<mpfr_prec_t>(prec_));
  mpfr_init2(rad_, static_cast<mpfr_prec_t>(prec_));
  mpfr_swap(mid_, o.mid_);
  mpfr_swap(rad_, o.rad_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this == &o) return *this;
  if (prec_ != o.prec_) {
    mpfr_set_prec(mid_, static_cast<mpfr_prec_t>(o.prec_));
    mpfr_set_prec(rad_, static_cast<mpfr_prec_t>(o.prec_));
    prec_ = o.prec_;
  }
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
  mpfr_set(rad_, o.rad_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  if (this == &o) return *this;
  std::swap(prec_, o.prec_);
  mpfr_swap(mid_, o.mid_);
  mpfr_swap(rad_, o.rad_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

void Interval::bump_ulp(mpfr_t rad, const mpfr_t mid, int ternary) {
  if (ternary == 0) return;
  mpfr_exp_t e;
  if (mpfr_zero_p(mid) || !mpfr_number_p(mid)) {
    e = mpfr_get_emin();
  } else {
    e = mpfr_get_exp(mid) - mpfr_get_prec(mid) + 1;
  }
  Tmp t(64);
  mpfr_set_ui_2exp(t.v, 1, e, MPFR_RNDU);
  mpfr_add(rad, rad, t.v, MPFR_RNDU);
}

Interval Interval::exact(long value, long prec) {
  Interval r(prec);
  int t = mpfr_set_si(r.mid_, value, MPFR_RNDN);
  bump_ulp(r.rad_, r.mid_, t);
  return r;
}

Interval Interval::from_rat(const BigRat& value, long prec) {
  Interval r(prec);
  int t = mpfr_set_q(r.mid_, value.get_mpq_t(), MPFR_RNDN);
  bump_ulp(r.rad_, r.mid_, t);
  return r;
}

Interval Interval::two_pow(long e, long prec) {
  Interval r(prec);
  mpfr_set_ui_2exp(r.mid_, 1, static_cast<mpfr_exp_t>(e), MPFR_RNDN);
  return r;
}

Interval Interval::pi(long prec) {
  Interval r(prec);
  int t = mpfr_const_pi(r.mid_, MPFR_RNDN);
  bump_ulp(r.rad_, r.mid_, t);
  return r;
}

Interval Interval::operator+(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  int t = mpfr_add(r.mid_, mid_, o.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
  bump_ulp(r.rad_, r.mid_, t);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  int t = mpfr_sub(r.mid_, mid_, o.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
  bump_ulp(r.rad_, r.mid_, t);
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  int t = mpfr_mul(r.mid_, mid_, o.mid_, MPFR_RNDN);
  // |a||rb| + |b||ra| + ra rb
  Tmp am(prec_), bm(o.prec_), acc(r.prec_);
  mpfr_abs(am.v, mid_, MPFR_RNDU);
  mpfr_abs(bm.v, o.mid_, MPFR_RNDU);
  mpfr_mul(acc.v, am.v, o.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, acc.v, MPFR_RNDU);
  mpfr_mul(acc.v, bm.v, rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, acc.v, MPFR_RNDU);
  mpfr_mul(acc.v, rad_, o.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, acc.v, MPFR_RNDU);
  bump_ulp(r.rad_, r.mid_, t);
  return r;
}

Interval Interval::operator/(const Interval& o) const {
  if (o.contains_zero())
    throw std::domain_error("division by interval containing zero");
  Interval r(std::max(prec_, o.prec_));
  int t = mpfr_div(r.mid_, mid_, o.mid_, MPFR_RNDN);
  // |a/b - am/bm| <= (|am| rb + |bm| ra) / (|bm| (|bm| - rb))
  Tmp am(prec_), bm(o.prec_), num(r.prec_), den(r.prec_), acc(r.prec_);
  mpfr_abs(am.v, mid_, MPFR_RNDU);
  mpfr_abs(bm.v, o.mid_, MPFR_RNDU);
  mpfr_mul(num.v, am.v, o.rad_, MPFR_RNDU);
  mpfr_mul(acc.v, bm.v, rad_, MPFR_RNDU);
  mpfr_add(num.v, num.v, acc.v, MPFR_RNDU);
  mpfr_abs(bm.v, o.mid_, MPFR_RNDD);
  mpfr_sub(den.v, bm.v, o.rad_, MPFR_RNDD);
  mpfr_mul(den.v, den.v, bm.v, MPFR_RNDD);
  mpfr_div(acc.v, num.v, den.v, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, acc.v, MPFR_RNDU);
  bump_ulp(r.rad_, r.mid_, t);
  return r;
}

Interval Interval::operator-() const {
  Interval r(*this);
  mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

Interval Interval::pow(long e) const {
  if (e == 0) return exact(1, prec_);
  if (e < 0) return exact(1, prec_) / pow(-e);
  Interval result = exact(1, prec_);
  Interval base = *this;
  unsigned long u = static_cast<unsigned long>(e);
  while (u != 0) {
    if (u & 1ul) result = result * base;
    base = base * base;
    u >>= 1ul;
  }
  return result;
}

Interval Interval::abs() const {
  Interval r(*this);
  mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

Interval Interval::sqrt() const {
  BigRat lo = inf_rat();
  if (lo < 0) throw std::domain_error("sqrt of interval extending below zero");
  Interval r(prec_);
  Tmp a(prec_ + 8), b(prec_ + 8);
  mpfr_set_q(a.v, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_sqrt(a.v, a.v, MPFR_RNDD);
  BigRat hi = sup_rat();
  mpfr_set_q(b.v, hi.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(b.v, b.v, MPFR_RNDU);
  int t = mpfr_add(r.mid_, a.v, b.v, MPFR_RNDN);
  mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN);
  mpfr_sub(r.rad_, b.v, a.v, MPFR_RNDU);
  mpfr_div_2ui(r.rad_, r.rad_, 1, MPFR_RNDU);
  bump_ulp(r.rad_, r.mid_, 1);
  bump_ulp(r.rad_, r.mid_, t);
  return r;
}

Interval Interval::log_abs() const {
  if (contains_zero())
    throw std::domain_error("log of interval containing zero");
  BigRat a = inf_rat();
  BigRat b = sup_rat();
  BigRat lo_abs, hi_abs;
  if (a > 0) {
    lo_abs = a;
    hi_abs = b;
  } else {
    lo_abs = -b;
    hi_abs = -a;
  }
  Interval r(prec_);
  Tmp x(prec_ + 8), y(prec_ + 8);
  mpfr_set_q(x.v, lo_abs.get_mpq_t(), MPFR_RNDD);
  mpfr_log(x.v, x.v, MPFR_RNDD);
  mpfr_set_q(y.v, hi_abs.get_mpq_t(), MPFR_RNDU);
  mpfr_log(y.v, y.v, MPFR_RNDU);
  int t = mpfr_add(r.mid_, x.v, y.v, MPFR_RNDN);
  mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN);
  mpfr_sub(r.rad_, y.v, x.v, MPFR_RNDU);
  mpfr_div_2ui(r.rad_, r.rad_, 1, MPFR_RNDU);
  bump_ulp(r.rad_, r.mid_, 1);
  bump_ulp(r.rad_, r.mid_, t);
  return r;
}

Interval Interval::add_error(const Interval& bound) const {
  Interval r(*this);
  Tmp m(bound.prec_);
  mpfr_abs(m.v, bound.mid_, MPFR_RNDU);
  mpfr_add(m.v, m.v, bound.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, m.v, MPFR_RNDU);
  return r;
}

bool Interval::contains_zero() const {
  // Both fields are exact dyadics, so the comparison is exact.
  return mpfr_cmpabs(mid_, rad_) <= 0;
}

BigRat Interval::inf_rat() const { return to_rat(mid_) - to_rat(rad_); }

BigRat Interval::sup_rat() const { return to_rat(mid_) + to_rat(rad_); }

BigRat Interval::rad_rat() const { return to_rat(rad_); }

double Interval::approx() const { return mpfr_get_d(mid_, MPFR_RNDN); }

double Interval::rad_approx() const { return mpfr_get_d(rad_, MPFR_RNDU); }

std::string Interval::to_string(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re +/- %.3Re", digits, mid_, rad_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

bool strictly_less(const Interval& a, const Interval& b) {
  return a.sup_rat() < b.inf_rat();
}

bool inside(const Interval& v, const BigRat& lo, const BigRat& hi) {
  return lo < v.inf_rat() && v.sup_rat() < hi;
}

}  // namespace qzeta
