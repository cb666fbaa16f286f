#include "qzeta/criterion.hpp"

#include <algorithm>
#include <stdexcept>

namespace qzeta {

namespace {

void check_pair(int r, int A) {
  if (A < 4 || A % 2 != 0)
    throw std::invalid_argument("pole order A must be even and >= 4");
  if (r < 1 || 2 * r > A)
    throw std::invalid_argument("shift count r out of range 1..A/2");
}

BigRat rat(long num, long den) {
  BigRat v(num, den);
  v.canonicalize();
  return v;
}

Interval inv_pi_sq(long prec) {
  Interval pi = Interval::pi(prec);
  return Interval::exact(1, prec) / (pi * pi);
}

}  // namespace

Interval bound_value(BoundKind kind, int r, int A, long precision_bits) {
  check_pair(r, A);
  const long rl = r, al = A;
  const Interval t24 = Interval::exact(24, precision_bits) *
                       inv_pi_sq(precision_bits);
  Interval num = Interval::exact(4 * rl * al + al - 4 * rl * rl,
                                 precision_bits);
  Interval den = (t24 + Interval::exact(2, precision_bits)) *
                     Interval::exact(al, precision_bits) +
                 Interval::exact(8 * rl * rl, precision_bits);
  if (kind == BoundKind::kRefined) den -= t24;
  return num / den;
}

Interval f_bound(int r, int A, long precision_bits) {
  return bound_value(BoundKind::kPlain, r, A, precision_bits);
}

Interval g_bound(int r, int A, long precision_bits) {
  return bound_value(BoundKind::kRefined, r, A, precision_bits);
}

MaxBound bound_max(BoundKind kind, int A, long precision_bits) {
  check_pair(1, A);
  const int rmax = A / 2;
  const int stride = std::max(1, rmax / 1024);
  int best_r = 1;
  double best = bound_value(kind, 1, A, precision_bits).approx();
  for (int r = 1 + stride; r <= rmax; r += stride) {
    double v = bound_value(kind, r, A, precision_bits).approx();
    if (v > best) {
      best = v;
      best_r = r;
    }
  }
  int lo = std::max(1, best_r - stride), hi = std::min(rmax, best_r + stride);
  for (int r = lo; r <= hi; ++r) {
    double v = bound_value(kind, r, A, precision_bits).approx();
    if (v > best) {
      best = v;
      best_r = r;
    }
  }
  return MaxBound{best_r, bound_value(kind, best_r, A, precision_bits)};
}

bool certified_below(BoundKind kind, int A, const BigRat& x,
                     long precision_bits) {
  for (int r = 1; 2 * r <= A; ++r)
    if (!(bound_value(kind, r, A, precision_bits).sup_rat() < x)) return false;
  return true;
}

bool certified_above(BoundKind kind, int A, const BigRat& x,
                     long precision_bits) {
  for (int r = 1; 2 * r <= A; ++r)
    if (bound_value(kind, r, A, precision_bits).inf_rat() > x) return true;
  return false;
}

int threshold_A(BoundKind kind, long precision_bits) {
  const BigRat one(1);
  for (int A = 4; A <= 64; A += 2) {
    if (certified_above(kind, A, one, precision_bits)) return A;
    if (!certified_below(kind, A, one, precision_bits))
      throw std::runtime_error("threshold scan not certifiable");
  }
  throw std::runtime_error("threshold not found below A = 64");
}

CriterionRates growth_rates(int r, int A, long precision_bits) {
  check_pair(r, A);
  const long rl = r, al = A;
  const Interval ips = inv_pi_sq(precision_bits);
  // Exact rational parts first, pi^2 corrections after.
  BigRat a1 = rat(-al, 8) + rat(-rl * rl, 2) + rat(rl * (al - 2 * rl), 2);
  BigRat a2 = rat(al, 4) + rat(rl * rl, 1);
  CriterionRates rates{
      Interval::from_rat(a1, precision_bits) -
          Interval::exact(3 * al, precision_bits) * ips,
      Interval::from_rat(a2, precision_bits) +
          Interval::exact(3 * al, precision_bits) * ips,
      Interval::exact(3, precision_bits) * ips};
  return rates;
}

Interval dimension_bound(const CriterionRates& rates, bool use_delta) {
  Interval d = use_delta
                   ? rates.delta
                   : Interval::exact(0, rates.delta.precision());
  Interval den = rates.alpha2 - d;
  if (!(den.inf_rat() > 0))
    throw std::domain_error("nonpositive growth denominator");
  return Interval::exact(1, den.precision()) + (rates.alpha1 + d) / den;
}

Interval asymptotic_constant(long precision_bits) {
  Interval pi = Interval::pi(precision_bits);
  Interval root = (pi * pi + Interval::exact(12, precision_bits)).sqrt();
  return pi / (Interval::exact(2, precision_bits) * root);
}

InequalityReport inequality_suite(long precision_bits) {
  const long prec = precision_bits;
  InequalityReport report;
  auto add = [&](std::string name, bool pass) {
    report.entries.push_back({std::move(name), pass});
  };

  add("plain bound maximum at A=10 below 1",
      certified_below(BoundKind::kPlain, 10, BigRat(1), prec));
  add("refined bound maximum at A=10 above 1",
      certified_above(BoundKind::kRefined, 10, BigRat(1), prec));
  {
    BigRat lo(1001, 1000), hi(1002, 1000);
    lo.canonicalize();
    hi.canonicalize();
    add("refined bound at r=2, A=10 inside (1.0010, 1.0020)",
        inside(g_bound(2, 10, prec), lo, hi));
  }
  {
    // max_r sup f(r; 38) < max_r inf g(r; 38)
    BigRat fs = f_bound(1, 38, prec).sup_rat();
    BigRat gi = g_bound(1, 38, prec).inf_rat();
    for (int r = 2; 2 * r <= 38; ++r) {
      fs = std::max(fs, f_bound(r, 38, prec).sup_rat());
      gi = std::max(gi, g_bound(r, 38, prec).inf_rat());
    }
    add("plain maximum below refined maximum at A=38", fs < gi);
  }
  add("refined bound maximum at A=38 below 2",
      certified_below(BoundKind::kRefined, 38, BigRat(2), prec));
  add("plain bound maximum at A=40 above 2",
      certified_above(BoundKind::kPlain, 40, BigRat(2), prec));
  {
    BigRat fs = f_bound(1, 40, prec).sup_rat();
    BigRat gi = g_bound(1, 40, prec).inf_rat();
    for (int r = 2; 2 * r <= 40; ++r) {
      fs = std::max(fs, f_bound(r, 40, prec).sup_rat());
      gi = std::max(gi, g_bound(r, 40, prec).inf_rat());
    }
    add("plain maximum below refined maximum at A=40", fs < gi);
  }
  add("plain bound maximum at A=86 below 3",
      certified_below(BoundKind::kPlain, 86, BigRat(3), prec));
  add("refined bound maximum at A=86 above 3",
      certified_above(BoundKind::kRefined, 86, BigRat(3), prec));

  report.pass = true;
  for (const auto& e : report.entries) report.pass = report.pass && e.pass;
  return report;
}

}  // namespace qzeta
