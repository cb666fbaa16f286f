#include "qzeta/linear_form.hpp"

#include <stdexcept>
#include <utility>

#include "qzeta/q_toolkit.hpp"

namespace qzeta {

void validate_form_params(const FormParams& p) {
  if (p.A < 4 || p.A % 2 != 0)
    throw std::invalid_argument("pole order A must be even and >= 4");
  if (p.r < 1) throw std::invalid_argument("shift count r must be >= 1");
  if (p.A - 2 * p.r <= 0)
    throw std::invalid_argument("A - 2r must be positive");
  if (p.n < 0) throw std::invalid_argument("instance index n must be >= 0");
}

void validate_pole_unit_params(const FormParams& p) {
  if (p.A < 0 || p.A % 2 != 0)
    throw std::invalid_argument("pole order A must be even and >= 0");
  if (p.r < 0) throw std::invalid_argument("shift count r must be >= 0");
  if (p.n < 0) throw std::invalid_argument("instance index n must be >= 0");
}

namespace {

RatFunc one_minus_q_pow(int e) { return RatFunc(1L) - RatFunc::q_power(e); }

}  // namespace

Jet kernel_local_jet(const FormParams& p, int j, int order) {
  validate_form_params(p);
  if (j < 0 || j > p.n) throw std::invalid_argument("pole index out of range");
  if (order < p.A - 1)
    throw std::invalid_argument("jet order below coefficient depth");
  const int rn = p.r * p.n;
  // (A - 2r) n is even because A is, so the T-exponent is an integer.
  const int t_exp = (p.A - 2 * p.r) * p.n / 2 + p.A / 2 - 2;

  Jet jet = Jet::linear_factor(RatFunc::q_power(-j), RatFunc(1L), t_exp, order);
  RatFunc scalar = RatFunc::q_power(-p.A * p.n * (p.n + 1) / 2) *
                   RatFunc(q_factorial(p.n)).pow(p.A - 2 * p.r);
  jet = jet * scalar;
  for (int i = 0; i < rn; ++i) {
    jet = jet * Jet::linear_factor(one_minus_q_pow(-rn + i - j),
                                   -RatFunc::q_power(-rn + i), 1, order);
    jet = jet * Jet::linear_factor(one_minus_q_pow(p.n + 1 + i - j),
                                   -RatFunc::q_power(p.n + 1 + i), 1, order);
  }
  for (int i = 0; i <= p.n; ++i) {
    if (i == j) continue;
    jet = jet * Jet::linear_factor(
                    RatFunc::q_power(-j) - RatFunc::q_power(-i), RatFunc(1L),
                    -p.A, order);
  }
  return jet;
}

CoefficientTable::CoefficientTable(FormParams params,
                                   std::vector<std::vector<RatFunc>> entries)
    : params_(params), entries_(std::move(entries)) {}

const RatFunc& CoefficientTable::coeff(int s, int j) const {
  if (s < 1 || s > params_.A)
    throw std::invalid_argument("pole order index out of range");
  if (j < 0 || j > params_.n)
    throw std::invalid_argument("pole index out of range");
  return entries_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(j)];
}

RatFunc CoefficientTable::coeff_alt_basis(int s, int j) const {
  RatFunc v = coeff(s, j) * RatFunc::q_power(j * s);
  return (s % 2 != 0) ? -v : v;
}

CoefficientTable partial_fraction_table(const FormParams& p) {
  validate_form_params(p);
  std::vector<std::vector<RatFunc>> entries(
      static_cast<std::size_t>(p.A),
      std::vector<RatFunc>(static_cast<std::size_t>(p.n + 1)));
  for (int j = 0; j <= p.n; ++j) {
    Jet jet = kernel_local_jet(p, j, p.A - 1);
    for (int s = 1; s <= p.A; ++s)
      entries[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(j)] =
          jet.coeff(p.A - s);
  }
  return CoefficientTable(p, std::move(entries));
}

RPoly weight_poly(const CoefficientTable& table, int s) {
  const FormParams& p = table.params();
  std::vector<RatFunc> c(static_cast<std::size_t>(p.n + 1));
  for (int j = 0; j <= p.n; ++j) {
    RatFunc v = RatFunc::q_power(j * (s - 1)) * table.coeff(s, j);
    c[static_cast<std::size_t>(j)] = (s % 2 != 0) ? -v : v;
  }
  return RPoly::from_coeffs(std::move(c));
}

RatFunc weight_poly_at_one(const CoefficientTable& table, int s) {
  const FormParams& p = table.params();
  RatFunc v;
  for (int j = 0; j <= p.n; ++j)
    v += RatFunc::q_power(j * (s - 1)) * table.coeff(s, j);
  return (s % 2 != 0) ? -v : v;
}

RatFunc rational_part_at_one(const CoefficientTable& table, Base base) {
  const FormParams& p = table.params();
  const int dir = base == Base::kQ ? 1 : -1;
  RatFunc total;
  for (int s = 1; s <= p.A; ++s) {
    RatFunc prefix;  // sum_{k<=j} x^k / (1-x^k)^s with x = q^dir
    RatFunc sum_s;
    for (int j = 1; j <= p.n; ++j) {
      prefix += RatFunc::q_power(dir * j) * one_minus_q_pow(dir * j).pow(-s);
      RatFunc c = table.coeff(s, j);
      if (dir < 0) c = c.subst_inverse();
      sum_s += RatFunc::q_power(dir * j * (s - 1)) * c * prefix;
    }
    // Shifting the series index k -> k+j pulls the truncated head out of
    // Z_s with sign (-1)^{s+1}.
    total += (s % 2 != 0) ? sum_s : -sum_s;
  }
  return total;
}

RatFunc weight1_derivative_at_one(const CoefficientTable& table) {
  const FormParams& p = table.params();
  RatFunc v;
  for (int j = 1; j <= p.n; ++j)
    v += RatFunc(static_cast<long>(j)) * table.coeff(1, j);
  return -v;
}

LinearFormParts build_linear_form_parts(const FormParams& p) {
  validate_form_params(p);
  CoefficientTable table = partial_fraction_table(p);
  RatFunc rq = rational_part_at_one(table, Base::kQ);
  RatFunc rinv = rational_part_at_one(table, Base::kInvQ);
  RatFunc w1 = weight1_derivative_at_one(table);

  LinearForm form;
  form.params = p;
  form.constant_coeff =
      rq - RatFunc::q_power(-p.n * (p.r - 1)) * rinv - w1;

  std::vector<RatFunc> at_one(static_cast<std::size_t>(p.A + 1));
  for (int s = 1; s <= p.A; ++s)
    at_one[static_cast<std::size_t>(s)] = weight_poly_at_one(table, s);
  for (int jj = 3; jj < p.A; jj += 2) {
    RatFunc v;
    for (int s = jj; s <= p.A; ++s) {
      BigRat coef(BigInt(2) * stirling_unsigned(s - 1, jj - 1),
                  factorial(static_cast<unsigned long>(s - 1)));
      coef.canonicalize();
      v += RatFunc(coef) * at_one[static_cast<std::size_t>(s)];
    }
    form.zeta_coeff[jj] = v;
  }

  return LinearFormParts{std::move(form), std::move(table), std::move(rq),
                         std::move(rinv), std::move(w1)};
}

LinearForm build_linear_form(const FormParams& p) {
  return build_linear_form_parts(p).form;
}

}  // namespace qzeta
