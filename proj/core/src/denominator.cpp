#include "qzeta/denominator.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "qzeta/andrews.hpp"
#include "qzeta/json_io.hpp"
#include "qzeta/q_toolkit.hpp"

namespace qzeta {

namespace {

BigRat rat(long num, long den) {
  BigRat v(num, den);
  v.canonicalize();
  return v;
}

RatFunc one_minus_q_pow(int e) { return RatFunc(1L) - RatFunc::q_power(e); }

// prod_{i=0}^{len-1} (1 - q^{start+i} v) over jets.
Jet poch_jet(int start, int len, const Jet& v) {
  Jet r = Jet::constant(RatFunc(1L), v.order());
  for (int i = 0; i < len; ++i)
    r *= Jet::constant(RatFunc(1L), v.order()) -
         v * RatFunc::q_power(start + i);
  return r;
}

IntPoly dn_or_one(int n) { return n >= 1 ? d_n(n) : IntPoly(1L); }

long to_long(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("exponent overflow");
  return v.get_si();
}

}  // namespace

DenominatorSpec DenominatorSpec::reduced(const FormParams& p) {
  DenominatorSpec spec = full(p);
  spec.d_power = p.A - 1;
  return spec;
}

DenominatorSpec DenominatorSpec::full(const FormParams& p) {
  validate_form_params(p);
  DenominatorSpec spec;
  spec.A = p.A;
  spec.r = p.r;
  spec.alpha = rat(-p.A, 8) + rat(-static_cast<long>(p.r) * p.r, 2);
  // beta = (r-1)/2 - A + 1, gamma = -1/(2A) + A - 2
  spec.beta = rat(p.r - 1, 2) + rat(1 - p.A, 1);
  spec.gamma = rat(-1, 2L * p.A) + rat(p.A - 2, 1);
  spec.d_power = p.A;
  spec.factorial_factor = true;
  return spec;
}

BigInt DenominatorSpec::floor_exponent(int n) const {
  BigRat v = alpha * n * n + beta * n + gamma;
  return floor(v);
}

RatFunc DenominatorSpec::value(int n) const {
  if (n < 1) throw std::invalid_argument("denominator instance needs n >= 1");
  RatFunc v = RatFunc::q_power(static_cast<int>(to_long(floor_exponent(n)))) *
              RatFunc(d_n(n)).subst_inverse().pow(d_power);
  if (factorial_factor)
    v = v * RatFunc(BigRat(factorial(static_cast<unsigned long>(A - 1))));
  return v;
}

std::pair<DenominatorSpec, RatFunc> build_denominator(const FormParams& p,
                                                      bool reduced) {
  DenominatorSpec spec =
      reduced ? DenominatorSpec::reduced(p) : DenominatorSpec::full(p);
  return {spec, spec.value(p.n)};
}

DenominatorReport verify_denominator(const LinearFormParts& parts,
                                     const DenominatorSpec& spec) {
  const FormParams& p = parts.form.params;
  if (p.A != spec.A || p.r != spec.r)
    throw std::invalid_argument("denominator spec does not match the form");
  if (p.n < 1)
    throw std::invalid_argument("denominator verification needs n >= 1");

  DenominatorReport report;
  report.params = p;
  const RatFunc q_floor = RatFunc::q_power(
      static_cast<int>(to_long(spec.floor_exponent(p.n))));
  const RatFunc dn_inv = RatFunc(d_n(p.n)).subst_inverse();
  const RatFunc fact(BigRat(factorial(static_cast<unsigned long>(p.A - 1))));

  auto add = [&](std::string claim, int zeta_index, const RatFunc& value) {
    MembershipResult mr = laurent_membership(value, LaurentRing::kPolyInvQ);
    MembershipCheck check;
    check.claim = std::move(claim);
    check.zeta_index = zeta_index;
    check.pass = mr.member;
    if (mr.member) check.witness_digest = fnv1a64_hex(mr.witness.to_string());
    report.checks.push_back(std::move(check));
  };

  RatFunc scaled0 = q_floor * dn_inv.pow(spec.d_power) *
                    parts.form.constant_coeff;
  add("constant", 0, spec.factorial_factor ? fact * scaled0 : scaled0);
  if (spec.factorial_factor) add("constant_no_factorial", 0, scaled0);
  for (const auto& [j, coef] : parts.form.zeta_coeff)
    add("zeta_" + std::to_string(j), j,
        fact * q_floor * dn_inv.pow(p.A - j) * coef);

  report.pass = true;
  for (const auto& c : report.checks) report.pass = report.pass && c.pass;
  return report;
}

Jet pole_unit(const FormParams& p, int j, const Jet& u) {
  validate_pole_unit_params(p);
  if (j < 0 || j > p.n) throw std::invalid_argument("pole index out of range");
  const int rn = p.r * p.n;
  const int u_exp = p.A / 2 - 2 + (p.n - 2 * j) * p.A / 2;
  const long q_exp = -static_cast<long>(rn) * (rn + 1) / 2 -
                     static_cast<long>(j) * (p.n - j) * p.A / 2 + j;

  const Jet u_inv = u.inverse();
  RatFunc scalar = RatFunc::q_power(static_cast<int>(q_exp)) *
                   (RatFunc(q_factorial(rn)) *
                    RatFunc(q_factorial(p.n)).pow(-p.r))
                       .pow(2) *
                   RatFunc(q_factorial(rn)).pow(-2);
  Jet jet = u.pow(u_exp) * scalar;
  if (p.A > 0) {
    Jet window = poch_jet(1, j, u_inv) * poch_jet(1, p.n - j, u);
    jet *= (window.inverse() * RatFunc(q_factorial(p.n))).pow(p.A);
  }
  jet *= poch_jet(j + 1, rn, u_inv);
  jet *= poch_jet(p.n + 1 - j, rn, u);
  if (rn % 2 != 0) jet = -jet;
  return jet;
}

Jet pole_unit_jet(const FormParams& p, int j, int order) {
  return pole_unit(p, j, Jet::variable(RatFunc(1L), order));
}

RatFunc residue_combination(const FormParams& p, int s, int k) {
  validate_form_params(p);
  if (s < 1 || s > p.A)
    throw std::invalid_argument("pole order index out of range");
  if (k < 1 || k > p.n) throw std::invalid_argument("window index out of range");
  const int order = p.A - s;
  const RatFunc head = RatFunc::q_power(-k * (s - 1));
  const RatFunc mirror = RatFunc::q_power(-k);
  Jet acc(order);
  for (int j = k; j <= p.n; ++j) {
    acc += pole_unit_jet(p, j, order) * head;
    Jet m = pole_unit_jet(p, p.n - j, order) * mirror;
    if (s % 2 != 0)
      acc += m;
    else
      acc -= m;
  }
  return acc.coeff(order);
}

Jet window_sum_jet(const FormParams& p, int k, int order) {
  validate_pole_unit_params(p);
  if (k < 1 || k > p.n) throw std::invalid_argument("window index out of range");
  const Jet u = Jet::variable(RatFunc(1L), order);
  const Jet one = Jet::constant(RatFunc(1L), order);
  Jet acc(order);
  for (int j = k; j <= p.n; ++j)
    acc += (one - u * u * RatFunc::q_power(p.n - 2 * j)) * pole_unit(p, j, u);
  return acc;
}

RatFunc window_sum_coeff(const FormParams& p, int l, int k) {
  if (l < 0) throw std::invalid_argument("jet order must be >= 0");
  return window_sum_jet(p, k, l).coeff(l);
}

MembershipResult window_membership(const FormParams& p, int l, int k) {
  RatFunc value = window_sum_coeff(p, l, k);
  RatFunc scaled = RatFunc(d_n(p.n)).subst_inverse().pow(l) * value /
                   one_minus_q_pow(-k);
  return laurent_membership(scaled, LaurentRing::kLaurent);
}

namespace {

HypergeometricData<Jet> window_data(const FormParams& p, int k, int order) {
  const int rn = p.r * p.n;
  const int m = p.A / 2 + 1;
  const Jet u = Jet::variable(RatFunc(1L), order);
  auto P = [&](int e) {
    return Jet::constant(RatFunc::q_power(-e), order);
  };
  HypergeometricData<Jet> d{
      m,
      p.n - k,
      P(1),
      u * u * RatFunc::q_power(-(2 * k - p.n)),
      std::vector<Jet>(static_cast<std::size_t>(m) + 2, P(0)),
      std::vector<Jet>(static_cast<std::size_t>(m) + 2, P(0)),
      P(0)};
  d.b[1] = u * RatFunc::q_power(-(rn + k + 1));
  for (int i = 2; i <= m; ++i)
    d.b[static_cast<std::size_t>(i)] = u * RatFunc::q_power(-(k - p.n));
  d.b[static_cast<std::size_t>(m) + 1] = P(1);
  for (int i = 1; i < m; ++i)
    d.c[static_cast<std::size_t>(i)] = u * RatFunc::q_power(-(k - p.n));
  d.c[static_cast<std::size_t>(m)] = u * u * RatFunc::q_power(-(k + 1));
  d.c[static_cast<std::size_t>(m) + 1] = u * RatFunc::q_power(-(k - p.n));
  return d;
}

}  // namespace

Jet window_sum_via_andrews(const FormParams& p, int k, int order) {
  validate_pole_unit_params(p);
  if (k < 1 || k > p.n) throw std::invalid_argument("window index out of range");
  HypergeometricData<Jet> d = window_data(p, k, order);
  const Jet u = Jet::variable(RatFunc(1L), order);
  const Jet one = Jet::constant(RatFunc(1L), order);
  // Telescoped prefactor with the vanishing factor (1 - q^{n-2k} u^2)
  // already cancelled against the window head.
  Jet pref = (one - u * u * RatFunc::q_power(-k)) *
             (one - u * RatFunc::q_power(-k)) /
             (one - u * RatFunc::q_power(-p.n));
  return pole_unit(p, k, u) * pref * andrews_rhs_multisum(d);
}

Jet window_sum_via_andrews_generic(const FormParams& p, int k, int order) {
  validate_pole_unit_params(p);
  if (k < 1 || k > p.n) throw std::invalid_argument("window index out of range");
  if (2 * k <= p.n)
    throw std::domain_error(
        "generic prefactor undefined at or below the vanishing point");
  HypergeometricData<Jet> d = window_data(p, k, order);
  const Jet u = Jet::variable(RatFunc(1L), order);
  const Jet one = Jet::constant(RatFunc(1L), order);
  Jet head = one - u * u * RatFunc::q_power(p.n - 2 * k);
  return pole_unit(p, k, u) * head * andrews_rhs_prefactor(d) *
         andrews_rhs_multisum(d);
}

namespace {

LaurentPoly lp_one() { return LaurentPoly(BigInt(1)); }

// p^e with p = 1/q
LaurentPoly pp(long e) { return LaurentPoly::monomial(BigInt(1), -static_cast<int>(e)); }

LaurentPoly qq(long e) { return LaurentPoly::monomial(BigInt(1), static_cast<int>(e)); }

LaurentPoly binom_p(int n, int k) {
  return LaurentPoly::from_poly(q_binomial(n, k), 0).subst_inverse();
}

BigInt limit_of(const LaurentPoly& v) {
  // value of v / -(1-q) at q = 1
  LaurentPoly quotient = v.divexact(lp_one() - qq(1));
  return -quotient.eval_at_one();
}

BigInt choose(long n, long k) {
  if (k < 0 || k > n) return BigInt(0);
  return binomial(BigInt(n), static_cast<unsigned long>(k));
}

}  // namespace

WindowIdentityResult closed_form_identity(WindowCase c, int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("window identity needs 1 <= k <= n");
  WindowIdentityResult out;
  LaurentPoly lhs, rhs;
  BigInt closed;
  switch (c) {
    case WindowCase::kA0R0: {
      for (int j = k; j <= n; ++j)
        lhs += (lp_one() - qq(n - 2 * j)) * qq(j);
      LaurentPoly geo;
      for (int i = 0; i <= n - k; ++i) geo += pp(i);
      rhs = (lp_one() - pp(k)) * pp(-n) * geo;
      closed = BigInt(k) * (n - k + 1);
      break;
    }
    case WindowCase::kA2R0: {
      for (int j = k; j <= n; ++j) {
        LaurentPoly b = LaurentPoly::from_poly(q_binomial(n, j), 0);
        lhs += (lp_one() - qq(n - 2 * j)) *
               qq(static_cast<long>(j) * (j - n + 1)) * b * b;
      }
      rhs = (lp_one() - pp(k)) * pp(-static_cast<long>(k) * (n - k + 1)) *
            binom_p(n, k) * binom_p(n - 1, k - 1);
      closed = BigInt(k) * choose(n, k) * choose(n - 1, k - 1);
      break;
    }
    case WindowCase::kA0R1: {
      const long tri = static_cast<long>(n) * (n + 1) / 2;
      for (int j = k; j <= n; ++j)
        lhs += (lp_one() - qq(n - 2 * j)) * qq(j - tri) *
               LaurentPoly::from_poly(q_binomial(n + j, n), 0) *
               LaurentPoly::from_poly(q_binomial(2 * n - j, n), 0);
      rhs = (lp_one() - pp(k)) * pp(-tri) * binom_p(n + k, n) *
            binom_p(2 * n + 1 - k, n + 1);
      closed = BigInt(k) * choose(n + k, k) * choose(2 * n + 1 - k, n + 1);
      break;
    }
    case WindowCase::kA2R1: {
      const long tri = static_cast<long>(n) * (n + 1) / 2;
      for (int j = k; j <= n; ++j) {
        LaurentPoly b = LaurentPoly::from_poly(q_binomial(n, j), 0);
        lhs += (lp_one() - qq(n - 2 * j)) *
               qq(static_cast<long>(j) * j + j - static_cast<long>(n) * j -
                  tri) *
               LaurentPoly::from_poly(q_binomial(n + j, n), 0) *
               LaurentPoly::from_poly(q_binomial(2 * n - j, n), 0) * b * b;
      }
      LaurentPoly series;
      closed = BigInt(0);
      for (int l = 0; l <= n - k; ++l) {
        LaurentPoly t =
            pp(static_cast<long>(l) * (2 * k + l - 1) / 2) *
            binom_p(n + k, k + l) * binom_p(n - l - 1, k - 1) *
            LaurentPoly::from_poly(
                q_multinomial(2 * n - k - l, {k, n - k}), 0)
                .subst_inverse();
        BigInt ct = choose(n + k, k + l) * choose(n - l - 1, k - 1) *
                    (factorial(static_cast<unsigned long>(2 * n - k - l)) /
                     (factorial(static_cast<unsigned long>(k)) *
                      factorial(static_cast<unsigned long>(n - k)) *
                      factorial(static_cast<unsigned long>(n - k - l))));
        if (l % 2 != 0) {
          t = -t;
          ct = -ct;
        }
        series += t;
        closed += ct;
      }
      rhs = (lp_one() - pp(k)) *
            pp(static_cast<long>(k) * k - static_cast<long>(k) * n - k -
               static_cast<long>(n) * (n - 1) / 2) *
            series;
      closed *= BigInt(k);
      break;
    }
  }
  out.lhs = lhs;
  out.rhs = rhs;
  out.q_identity = lhs == rhs;
  out.lhs_limit = limit_of(lhs);
  out.rhs_limit = limit_of(rhs);
  out.closed_limit = closed;
  out.limit_identity =
      out.lhs_limit == out.rhs_limit && out.rhs_limit == out.closed_limit;
  return out;
}

namespace {

void validate_block(const BlockR0& b) {
  if (!(b.alpha <= b.gamma && b.gamma < b.beta))
    throw std::invalid_argument("block needs alpha <= gamma < beta");
}

void validate_block(const BlockR1& b) {
  if (b.r < 1 || !(0 <= b.i && b.i <= b.j && b.j <= b.n))
    throw std::invalid_argument("block needs r >= 1, 0 <= i <= j <= n");
}

void validate_block(const BlockR2& b) {
  if (b.k < 1 || !(0 <= b.m2 && b.m2 <= b.m1 && b.m1 <= b.n - b.k))
    throw std::invalid_argument("block needs k >= 1, 0 <= m2 <= m1 <= n-k");
}

}  // namespace

Jet block_jet(const BlockSpec& spec, int order, int u_exponent) {
  if (u_exponent == 0 || u_exponent < -2 || u_exponent > 2)
    throw std::invalid_argument("u exponent must be in {-2, -1, 1, 2}");
  const Jet w = Jet::variable(RatFunc(1L), order).pow(u_exponent);
  const Jet w_inv = w.inverse();
  const Jet w2 = w * w;
  return std::visit(
      [&](const auto& b) -> Jet {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, BlockR0>) {
          validate_block(b);
          Jet den = poch_jet(b.alpha - b.gamma, b.gamma - b.alpha, w) *
                    poch_jet(1, b.beta - b.gamma - 1, w);
          return den.inverse() *
                 RatFunc(q_factorial(b.beta - b.alpha - 1));
        } else if constexpr (std::is_same_v<T, BlockR1>) {
          validate_block(b);
          const int rn = b.r * b.n;
          const int len = rn - b.n + b.j;
          RatFunc scale = RatFunc(q_factorial(rn)) *
                          RatFunc(q_factorial(b.n)).pow(-b.r) *
                          RatFunc(q_factorial(len)).pow(-1);
          return poch_jet(b.n + b.i - b.j + 1, len, w) * scale;
        } else {
          validate_block(b);
          Jet num = poch_jet(0, b.m1 - b.m2, w_inv) *
                    poch_jet(1, b.k + b.m2, w2) *
                    poch_jet(1, b.n - b.m1 - 1, w);
          Jet den = poch_jet(1, b.n, w) * poch_jet(1, b.k - 1, w2) *
                    poch_jet(1, b.k + b.m1, w) *
                    poch_jet(1, b.n - b.k - b.m1, w_inv);
          return num * den.inverse() * RatFunc(q_factorial(b.n));
        }
      },
      spec);
}

IntPoly block_scale(const BlockSpec& spec) {
  return std::visit(
      [&](const auto& b) -> IntPoly {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, BlockR0>) {
          validate_block(b);
          return dn_or_one(b.beta - b.alpha - 1);
        } else {
          validate_block(b);
          return dn_or_one(b.n);
        }
      },
      spec);
}

MembershipResult block_membership(const BlockSpec& spec, int l,
                                  int u_exponent) {
  if (l < 0) throw std::invalid_argument("jet order must be >= 0");
  RatFunc value = block_jet(spec, l, u_exponent).coeff(l);
  RatFunc scaled = RatFunc(block_scale(spec)).pow(l) * value;
  return laurent_membership(scaled, LaurentRing::kLaurent);
}

ValuationCertificate r1_valuation_certificate(const BlockR1& spec, int l) {
  validate_block(spec);
  if (l < 0) throw std::invalid_argument("jet order must be >= 0");
  const int rn = spec.r * spec.n;
  const int h = spec.n + spec.i - spec.j;
  const int window = rn - spec.n + spec.j;

  const RatFunc jet_value = block_jet(BlockSpec(spec), l, 1).coeff(l);
  ValuationCertificate cert;
  cert.per_term_nonnegative = true;

  RatFunc constant = RatFunc(q_factorial(rn)) *
                     RatFunc(q_factorial(spec.n)).pow(-spec.r) *
                     RatFunc(pochhammer_poly(h + 1, window)) *
                     RatFunc(q_factorial(window)).pow(-1);
  RatFunc sum;

  // Fixed factor list shared by all terms.
  std::vector<std::pair<int, int>> base_factors;
  for (int m = 1; m <= rn; ++m) base_factors.push_back({m, 1});
  for (int m = 1; m <= spec.n; ++m) base_factors.push_back({m, -spec.r});
  for (int m = h + 1; m <= h + window; ++m) base_factors.push_back({m, 1});
  for (int m = 1; m <= window; ++m) base_factors.push_back({m, -1});

  std::vector<int> subset(static_cast<std::size_t>(l));
  auto rec = [&](auto&& self, int idx, int next) -> void {
    if (idx == l) {
      long exp_sum = 0;
      RatFunc term = constant;
      std::vector<std::pair<int, int>> factors = base_factors;
      for (int f : subset) {
        exp_sum += f;
        term = term / RatFunc(one_minus_q_pow(f));
        factors.push_back({f, -1});
      }
      term = term * RatFunc::q_power(static_cast<int>(exp_sum));
      if (l % 2 != 0) term = -term;
      sum += term;
      for (int t = 1; t <= h + window; ++t) {
        long ord = cyclotomic_valuation(factors, t);
        if (t <= spec.n) ord += l;  // d_n^l carries each phi_t once per power
        if (ord < 0) cert.per_term_nonnegative = false;
      }
      return;
    }
    for (int f = next; f <= h + window; ++f) {
      subset[static_cast<std::size_t>(idx)] = f;
      self(self, idx + 1, f + 1);
    }
  };
  rec(rec, 0, h + 1);

  cert.sum_matches_jet = sum == jet_value;
  return cert;
}

}  // namespace qzeta
