// Acceptance gate: one timed check per shipped claim, each printed as a
// single pass/fail line.  Exit status is nonzero if any check fails or
// overruns its time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qzeta/andrews.hpp"
#include "qzeta/criterion.hpp"
#include "qzeta/denominator.hpp"
#include "qzeta/interval.hpp"
#include "qzeta/linear_form.hpp"
#include "qzeta/number.hpp"
#include "qzeta/numerics.hpp"
#include "qzeta/q_toolkit.hpp"
#include "qzeta/rat_func.hpp"

using namespace qzeta;

namespace {

constexpr unsigned long long kSeed = 20260823ull;

const std::vector<std::pair<int, int>> kPairs = {{4, 1}, {6, 1}, {6, 2}};

int max_n(int A) { return A == 4 ? 4 : 3; }

// ---- criterion 1: certified inequality chain ----

bool chain_of_inequalities() { return inequality_suite(192).pass; }

// ---- criterion 2: asymptotic scale of the refined maximum ----

bool asymptotic_scale() {
  MaxBound mb = bound_max(BoundKind::kRefined, 1000000, 192);
  double scaled = mb.value.approx() / 1000.0;
  double limit = asymptotic_constant(192).approx();
  return std::fabs(scaled - limit) / limit < 0.01;
}

// ---- criterion 3: residual enclosures of the decomposition ----

bool residual_enclosures() {
  const BigRat radius_bound = pow(BigRat(1, 2), 64);
  for (auto [A, r] : kPairs)
    for (int n = 0; n <= 4; ++n) {
      LinearForm form = build_linear_form({A, r, n});
      for (const char* qs : {"1/2", "1/3", "-1/2"}) {
        Interval res = linear_form_residual(form, {parse_rational(qs)}, 256);
        if (!res.contains_zero()) return false;
        if (!(res.rad_rat() < radius_bound)) return false;
      }
    }
  return true;
}

// ---- criterion 4: smallest instance ----

bool smallest_instance() {
  LinearForm form = build_linear_form({4, 1, 0});
  return form.constant_coeff.is_zero() && form.zeta_coeff.size() == 1 &&
         form.zeta_coeff.count(3) == 1 &&
         form.zeta_coeff.at(3) == RatFunc(1L);
}

// ---- criterion 5: denominator scaling of every coefficient ----

bool denominator_scaling() {
  for (auto [A, r] : kPairs)
    for (int n = 1; n <= max_n(A); ++n) {
      LinearFormParts parts = build_linear_form_parts({A, r, n});
      DenominatorReport report =
          verify_denominator(parts, DenominatorSpec::reduced({A, r, n}));
      if (!report.pass) return false;
    }
  return true;
}

// ---- criterion 6: window-sum integrality ----

bool window_integrality() {
  for (int A : {0, 2, 4})
    for (int r : {0, 1})
      for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k)
          for (int l = 0; l <= 2; ++l)
            if (!window_membership({A, r, n}, l, k).member) return false;
  return true;
}

// ---- criterion 7: closed-form window identities ----

bool closed_form_windows() {
  for (WindowCase c : {WindowCase::kA0R0, WindowCase::kA2R0,
                       WindowCase::kA0R1, WindowCase::kA2R1})
    for (int n = 1; n <= 6; ++n)
      for (int k = 1; k <= n; ++k) {
        WindowIdentityResult res = closed_form_identity(c, n, k);
        if (!res.q_identity || !res.limit_identity) return false;
        if (res.lhs_limit != res.closed_limit) return false;
      }
  return true;
}

// ---- criterion 8: seeded hypergeometric transformation instances ----

bool seeded_transformations() {
  const std::vector<BigRat> bases = {
      BigRat(1, 2), BigRat(1, 3), BigRat(2, 3), BigRat(3, 2),
      BigRat(2),    BigRat(3),    BigRat(5, 2), BigRat(1, 5)};
  const std::vector<BigRat> pool = {
      BigRat(2),    BigRat(3),    BigRat(5),    BigRat(7),
      BigRat(1, 2), BigRat(1, 3), BigRat(2, 3), BigRat(3, 2),
      BigRat(4),    BigRat(9),    BigRat(1, 5), BigRat(5, 3),
      BigRat(7, 2), BigRat(1, 7)};
  std::mt19937_64 rng(kSeed);
  auto pick = [&](const std::vector<BigRat>& v) {
    return v[static_cast<std::size_t>(rng() % v.size())];
  };

  int verified = 0;
  for (int attempts = 0; verified < 50 && attempts < 4000; ++attempts) {
    AndrewsInstance inst;
    inst.m = 1 + static_cast<int>(rng() % 3);
    inst.N = static_cast<int>(rng() % 5);
    inst.base = pick(bases);
    inst.a = pick(pool);
    inst.b.assign(1, BigRat(0));
    inst.c.assign(1, BigRat(0));
    for (int i = 1; i <= inst.m + 1; ++i) {
      inst.b.push_back(pick(pool));
      inst.c.push_back(pick(pool));
    }
    try {
      AndrewsSides sides = andrews_transform(inst);
      if (!sides.equal) return false;
      ++verified;
    } catch (const std::domain_error&) {
      // degenerate draw; resample
    }
  }
  if (verified < 50) return false;

  // empty-sum edge: both sides reduce to 1
  AndrewsInstance empty{2, 0, BigRat(1, 3), BigRat(7),
                        {BigRat(0), BigRat(2), BigRat(3), BigRat(4)},
                        {BigRat(0), BigRat(5), BigRat(6), BigRat(8)}};
  AndrewsSides trivial = andrews_transform(empty);
  if (!trivial.equal || trivial.lhs != BigRat(1)) return false;

  // single-fold case (the classical two-line transformation)
  AndrewsInstance watson{1, 2, BigRat(2, 3), BigRat(1, 5),
                         {BigRat(0), BigRat(3), BigRat(7)},
                         {BigRat(0), BigRat(1, 2), BigRat(4)}};
  return andrews_transform(watson).equal;
}

// ---- criterion 9: building-block integrality ----

bool block_integrality() {
  std::vector<BlockSpec> specs;
  for (int alpha = -2; alpha <= 1; ++alpha)
    for (int gamma = alpha; gamma <= alpha + 2; ++gamma)
      for (int beta = gamma + 1; beta <= gamma + 3; ++beta)
        if (beta - alpha - 1 <= 4) specs.push_back(BlockR0{alpha, beta, gamma});
  std::vector<BlockR1> r1_specs;
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 4; ++n)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i) r1_specs.push_back(BlockR1{r, n, i, j});
  for (const BlockR1& s : r1_specs) specs.push_back(s);
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k)
      for (int m1 = 0; m1 <= n - k; ++m1)
        for (int m2 = 0; m2 <= m1; ++m2)
          specs.push_back(BlockR2{n, k, m1, m2});

  for (const BlockSpec& spec : specs)
    for (int l = 0; l <= 3; ++l)
      for (int e : {-2, -1, 1, 2})
        if (!block_membership(spec, l, e).member) return false;

  // independent certificate route for the Pochhammer-run block
  for (const BlockR1& s : r1_specs)
    for (int l = 0; l <= 3; ++l) {
      ValuationCertificate cert = r1_valuation_certificate(s, l);
      if (!cert.per_term_nonnegative || !cert.sum_matches_jet) return false;
    }
  return true;
}

// ---- criterion 10: growth slopes ----

bool growth_slopes() {
  QPoint qp{BigRat(1, 2)};

  FormParams p{4, 1, 0};
  std::vector<SlopeRow> rows =
      slope_estimate(SlopeQuantity::kSeries, p, qp, {20}, 256);
  double target = slope_target(SlopeQuantity::kSeries, p, qp);
  if (!rows[0].defined) return false;
  if (std::fabs(rows[0].slope - target) / std::fabs(target) > 0.15)
    return false;

  rows = slope_estimate(SlopeQuantity::kLcmGrowth, p, qp, {50}, 256);
  target = slope_target(SlopeQuantity::kLcmGrowth, p, qp);
  if (!rows[0].defined) return false;
  if (std::fabs(rows[0].slope - target) / std::fabs(target) > 0.20)
    return false;

  rows = slope_estimate(SlopeQuantity::kCoeffMax, p, qp, {12}, 256);
  target = slope_target(SlopeQuantity::kCoeffMax, p, qp);
  if (!rows[0].defined) return false;
  return rows[0].slope <= 1.2 * target;
}

// ---- criterion 11: exact structural identities ----

RatFunc kernel_value_at(const FormParams& p, const RatFunc& t) {
  int top = (p.A - 2 * p.r) * p.n / 2 + p.A / 2 - 2;
  RatFunc v = t.pow(top) * RatFunc::q_power(-p.A * p.n * (p.n + 1) / 2) *
              RatFunc(q_factorial(p.n)).pow(p.A - 2 * p.r);
  for (int i = 0; i < p.r * p.n; ++i) {
    v = v * (RatFunc(1L) - RatFunc::q_power(-p.r * p.n + i) * t);
    v = v * (RatFunc(1L) - RatFunc::q_power(p.n + 1 + i) * t);
  }
  for (int i = 0; i <= p.n; ++i)
    v = v / (t - RatFunc::q_power(-i)).pow(p.A);
  return v;
}

bool structural_identities() {
  for (auto [A, r] : kPairs)
    for (int n = 1; n <= max_n(A); ++n) {
      FormParams p{A, r, n};
      LinearFormParts parts = build_linear_form_parts(p);
      const CoefficientTable& table = parts.table;

      RatFunc residue_sum;
      for (int j = 0; j <= n; ++j) residue_sum += table.coeff(1, j);
      if (!residue_sum.is_zero()) return false;

      for (int s = 1; s <= A; ++s)
        for (int j = 0; j <= n; ++j)
          if (table.coeff(s, n - j).subst_inverse() !=
              RatFunc::q_power(n * (s + r - 2)) * table.coeff(s, j))
            return false;

      for (int s = 1; s <= A; ++s) {
        RPoly w = weight_poly(table, s);
        for (int j = 0; j <= n; ++j)
          if (w.coeff(j).subst_inverse() !=
              RatFunc::q_power(n * (r - 1)) * w.coeff(n - j))
            return false;
      }

      for (long tv : {2L, 3L}) {
        RatFunc t(tv);
        RatFunc acc;
        for (int s = 1; s <= A; ++s)
          for (int j = 0; j <= n; ++j)
            acc += table.coeff(s, j) * (t - RatFunc::q_power(-j)).pow(-s);
        if (acc != kernel_value_at(p, t)) return false;
      }

      RatFunc lhs = parts.rational_part_q -
                    RatFunc::q_power(-n * (r - 1)) * parts.rational_part_inv_q;
      RatFunc assembled;
      for (int s = 1; s <= A; ++s)
        for (int k = 1; k <= n; ++k)
          assembled += residue_combination(p, s, k) *
                       (RatFunc(1L) - RatFunc::q_power(-k)).pow(-s);
      if (lhs != -assembled) return false;
    }
  return true;
}

struct Criterion {
  int id;
  const char* description;
  double budget_seconds;
  std::function<bool()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "certified dimension-bound inequality chain", 1.0,
       chain_of_inequalities},
      {2, "refined maximum approaches its asymptotic scale", 1.0,
       asymptotic_scale},
      {3, "residual enclosures contain zero within 2^-64", 120.0,
       residual_enclosures},
      {4, "smallest instance reduces to a single zeta value", 1.0,
       smallest_instance},
      {5, "denominator scaling clears every coefficient", 600.0,
       denominator_scaling},
      {6, "window sums stay integral after scaling", 300.0,
       window_integrality},
      {7, "closed-form window identities and their limits", 60.0,
       closed_form_windows},
      {8, "seeded hypergeometric transformation instances", 120.0,
       seeded_transformations},
      {9, "building-block jets stay integral after scaling", 300.0,
       block_integrality},
      {10, "quadratic growth slopes near their targets", 300.0, growth_slopes},
      {11, "exact structural identities of the linear forms", 300.0,
       structural_identities},
  };

  bool all_ok = true;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      ok = false;
      note = std::string(" [exception: ") + e.what() + "]";
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > c.budget_seconds) {
      ok = false;
      note += " [over budget]";
    }
    std::printf("[%s] criterion %d: %s (%.2fs)%s\n", ok ? "PASS" : "FAIL",
                c.id, c.description, elapsed, note.c_str());
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
