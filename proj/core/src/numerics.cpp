#include "qzeta/numerics.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "qzeta/q_toolkit.hpp"

namespace qzeta {

namespace {

BigRat rat_2exp_neg(long e) {
  // 2^{-e} for e >= 0
  BigRat r(1);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  return r;
}

void check_point(const QPoint& qp) {
  if (qp.q == 0) throw std::domain_error("evaluation point must be nonzero");
}

void check_inside_disk(const QPoint& qp) {
  check_point(qp);
  if (abs(qp.q) >= 1)
    throw std::domain_error("evaluation point must satisfy |q| < 1");
}

// Sums term(k0) + term(k0+1) + ... where ratio(k) bounds |t_{j+1}/t_j| for
// every j >= k; stops once the certified geometric tail drops below
// 2^{-(prec+8)} and widens the enclosure by it.
Interval sum_with_ratio_tail(long wp, long prec, int k0,
                             const std::function<BigRat(int)>& term,
                             const std::function<Interval(int)>& ratio) {
  const BigRat thr = rat_2exp_neg(prec + 8);
  Interval sum(wp);
  const Interval one = Interval::exact(1, wp);
  for (int k = k0;; ++k) {
    BigRat t = term(k);
    sum += Interval::from_rat(t, wp);
    Interval bound = ratio(k);
    if (bound.sup_rat() < 1) {
      Interval tail = Interval::from_rat(abs(t), wp) * bound / (one - bound);
      if (tail.sup_rat() < thr) return sum.add_error(tail);
    }
    if (k - k0 > 200000)
      throw std::runtime_error("series tail bound not reached");
  }
}

}  // namespace

Interval zeta_q(int s, const QPoint& qp, long precision_bits) {
  if (s < 1) throw std::invalid_argument("zeta index must be >= 1");
  check_inside_disk(qp);
  const BigRat q = qp.q;
  const BigRat aq = abs(q);
  const long wp = precision_bits + 64;
  const Interval one = Interval::exact(1, wp);
  // explicit return type: a deduced gmp expression template would dangle
  auto term = [&](int k) -> BigRat {
    BigRat qk = pow(q, k);
    return BigRat(pow(BigInt(k), static_cast<unsigned long>(s - 1))) * qk /
           (1 - qk);
  };
  auto ratio = [&](int k) {
    BigRat step(k + 1, k);
    step.canonicalize();
    BigRat ak = pow(aq, k);
    return Interval::from_rat(aq, wp) *
           Interval::from_rat(step, wp).pow(s - 1) *
           (one + Interval::from_rat(ak, wp)) /
           (one - Interval::from_rat(ak * aq, wp));
  };
  return sum_with_ratio_tail(wp, precision_bits, 1, term, ratio);
}

BigRat series_term(const FormParams& p, const QPoint& qp, int k) {
  validate_form_params(p);
  check_point(qp);
  if (k < 1) throw std::invalid_argument("series index must be >= 1");
  const int rn = p.r * p.n;
  if (k <= rn) return BigRat(0);
  const BigRat& q = qp.q;
  const long m_exp = (p.A - 2 * p.r) * p.n / 2 + p.A / 2 - 1;
  BigRat t = 1 - pow(q, 2 * k + p.n);
  for (int i = 0; i < rn; ++i)
    t *= (1 - pow(q, k - rn + i)) * (1 - pow(q, k + p.n + 1 + i));
  for (int i = 0; i <= p.n; ++i)
    t /= pow(1 - pow(q, k + i), static_cast<long>(p.A));
  t *= pow(q, static_cast<long>(k) * m_exp);
  BigRat base(1);
  for (int i = 1; i <= p.n; ++i) base *= 1 - pow(q, i);
  t *= pow(base, static_cast<long>(p.A - 2 * p.r));
  return t;
}

Interval eval_series(const FormParams& p, const QPoint& qp,
                     long precision_bits) {
  validate_form_params(p);
  check_point(qp);
  const BigRat aq = abs(qp.q);
  if (aq == 1)
    throw std::domain_error("evaluation point must satisfy |q| != 1");
  const bool inner = aq < 1;
  const int rn = p.r * p.n;
  const long m_exp = (p.A - 2 * p.r) * p.n / 2 + p.A / 2 - 1;
  const long wp = precision_bits + 64;
  const Interval one = Interval::exact(1, wp);
  // w < 1 drives the correction factors; the geometric decay per step is
  // |q|^{m_exp} inside the disk and |q|^{outer_exp} (negative exponent)
  // outside.
  const BigRat w = inner ? aq : 1 / aq;
  const long outer_exp =
      m_exp + 3 + p.n + 2 * rn - static_cast<long>(p.n + 1) * (p.A + 1);
  auto term = [&](int k) { return series_term(p, qp, k); };
  auto ratio = [&](int k) {
    auto wpow = [&](long e) {
      return Interval::from_rat(pow(w, e), wp);
    };
    Interval corr = (one + wpow(2 * k + p.n + 2)) / (one - wpow(2 * k + p.n)) *
                    (one + wpow(1 + k + p.n + rn)) / (one - wpow(k - rn)) *
                    ((one + wpow(k)) / (one - wpow(k + p.n + 1))).pow(p.A + 1);
    Interval decay = Interval::from_rat(aq, wp).pow(inner ? m_exp : outer_exp);
    return decay * corr;
  };
  return sum_with_ratio_tail(wp, precision_bits, rn + 1, term, ratio);
}

Interval linear_form_residual(const LinearForm& form, const QPoint& qp,
                              long precision_bits) {
  check_inside_disk(qp);
  const long wp = precision_bits + 64;
  Interval value = eval_series(form.params, qp, precision_bits);
  Interval contracted =
      Interval::from_rat(form.constant_coeff.eval(qp.q), wp);
  for (const auto& [j, coef] : form.zeta_coeff)
    contracted += Interval::from_rat(coef.eval(qp.q), wp) *
                  zeta_q(j, qp, precision_bits);
  return value - contracted;
}

Interval lambert_kernel_gap(int s, const QPoint& qp, long precision_bits) {
  if (s < 2) throw std::invalid_argument("kernel index must be >= 2");
  check_inside_disk(qp);
  const BigRat q = qp.q;
  const BigRat aq = abs(q);
  const long wp = precision_bits + 64;
  const Interval one = Interval::exact(1, wp);

  auto corr = [&](int k) {
    BigRat ak = pow(aq, k);
    return ((one + Interval::from_rat(ak, wp)) /
            (one - Interval::from_rat(ak * aq, wp)))
        .pow(s);
  };
  auto direct_term = [&](int k) -> BigRat {
    BigRat qk = pow(q, k);
    return qk / pow(1 - qk, static_cast<long>(s));
  };
  auto direct_ratio = [&](int k) {
    return Interval::from_rat(aq, wp) * corr(k);
  };
  Interval direct =
      sum_with_ratio_tail(wp, precision_bits, 1, direct_term, direct_ratio);

  auto mirror_term = [&](int k) -> BigRat {
    BigRat qk = pow(q, k);
    return pow(q, static_cast<long>(k) * (s - 1)) /
           pow(1 - qk, static_cast<long>(s));
  };
  auto mirror_ratio = [&](int k) {
    return Interval::from_rat(pow(aq, s - 1), wp) * corr(k);
  };
  Interval mirror =
      sum_with_ratio_tail(wp, precision_bits, 1, mirror_term, mirror_ratio);
  if (s % 2 != 0) mirror = -mirror;

  Interval rhs(wp);
  for (int j = 3; j <= s; j += 2) {
    BigRat coef(BigInt(2) * stirling_unsigned(s - 1, j - 1),
                factorial(static_cast<unsigned long>(s - 1)));
    coef.canonicalize();
    rhs += Interval::from_rat(coef, wp) * zeta_q(j, qp, precision_bits);
  }
  return direct - mirror - rhs;
}

Interval eisenstein(int m, const QPoint& qp, long precision_bits) {
  if (m < 1) throw std::invalid_argument("Eisenstein index must be >= 1");
  check_inside_disk(qp);
  const long wp = precision_bits + 64;
  BigRat coef = BigRat(4 * m) / bernoulli(2 * m);
  return Interval::exact(1, wp) -
         Interval::from_rat(coef, wp) * zeta_q(2 * m, qp, precision_bits);
}

std::vector<SlopeRow> slope_estimate(SlopeQuantity quantity,
                                     const FormParams& p, const QPoint& qp,
                                     const std::vector<int>& n_values,
                                     long precision_bits) {
  check_point(qp);
  const long wp = precision_bits + 64;
  std::vector<SlopeRow> rows;
  rows.reserve(n_values.size());
  for (int n : n_values) {
    SlopeRow row;
    row.n = n;
    if (n >= 1) {
      switch (quantity) {
        case SlopeQuantity::kSeries: {
          FormParams pn{p.A, p.r, n};
          Interval v = eval_series(pn, qp, precision_bits);
          if (!v.contains_zero()) {
            row.defined = true;
            row.slope = v.log_abs().approx() / (static_cast<double>(n) * n);
          }
          break;
        }
        case SlopeQuantity::kLcmGrowth: {
          BigRat v = d_n(n).eval(1 / qp.q);
          if (v != 0) {
            row.defined = true;
            row.slope = Interval::from_rat(v, wp).log_abs().approx() /
                        (static_cast<double>(n) * n);
          }
          break;
        }
        case SlopeQuantity::kCoeffMax: {
          FormParams pn{p.A, p.r, n};
          LinearForm form = build_linear_form(pn);
          BigRat best = abs(form.constant_coeff.eval(qp.q));
          for (const auto& [j, coef] : form.zeta_coeff) {
            BigRat v = abs(coef.eval(qp.q));
            if (v > best) best = v;
          }
          if (best != 0) {
            row.defined = true;
            row.slope = Interval::from_rat(best, wp).log_abs().approx() /
                        (static_cast<double>(n) * n);
          }
          break;
        }
      }
    }
    rows.push_back(row);
  }
  return rows;
}

double slope_target(SlopeQuantity quantity, const FormParams& p,
                    const QPoint& qp) {
  check_point(qp);
  const double lg = -std::log(std::fabs(qp.q.get_d()));
  switch (quantity) {
    case SlopeQuantity::kSeries:
      return -0.5 * p.r * (p.A - 2 * p.r) * lg;
    case SlopeQuantity::kLcmGrowth:
      return 3.0 / (M_PI * M_PI) * lg;
    case SlopeQuantity::kCoeffMax:
      return 0.125 * (p.A + 4.0 * p.r * p.r) * lg;
  }
  return 0.0;
}

}  // namespace qzeta
