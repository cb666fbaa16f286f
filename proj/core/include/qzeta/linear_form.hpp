#pragma once

#include <map>
#include <vector>

#include "qzeta/jet.hpp"
#include "qzeta/rat_func.hpp"
#include "qzeta/rpoly.hpp"

namespace qzeta {

// Shape of one series instance.  A is the (even) pole order carried by each
// of the points q^0, q^-1, ..., q^-n of the rational kernel, r fixes the
// length r*n of the two numerator Pochhammer runs, and n is the instance
// index.
struct FormParams {
  int A = 0;
  int r = 0;
  int n = 0;
};

// Constraints required to build linear forms: A even and >= 4, r >= 1,
// A - 2r > 0, n >= 0.  Throws std::invalid_argument on violation.
void validate_form_params(const FormParams& p);

// Relaxed constraints under which the single-pole units and window sums are
// still defined: A even and >= 0, r >= 0, n >= 0.
void validate_pole_unit_params(const FormParams& p);

// Jet at T = q^{-j} of the kernel with its pole at that point cleared, i.e.
// of R(T) (T - q^{-j})^A where
//   R(T) = T^{(A-2r)n/2 + A/2 - 2} q^{-A n(n+1)/2} (q;q)_n^{A-2r}
//          (q^{-rn} T; q)_{rn} (q^{n+1} T; q)_{rn} / prod_i (T - q^{-i})^A.
// Requires 0 <= j <= n and order >= A - 1.
Jet kernel_local_jet(const FormParams& p, int j, int order);

// Coefficients c(s, j) of the partial-fraction expansion
//   R(T) = sum_{s=1}^{A} sum_{j=0}^{n} c(s, j) / (T - q^{-j})^s.
class CoefficientTable {
 public:
  CoefficientTable(FormParams params,
                   std::vector<std::vector<RatFunc>> entries);

  const FormParams& params() const { return params_; }

  // Requires 1 <= s <= A, 0 <= j <= n.
  const RatFunc& coeff(int s, int j) const;

  // Coefficient with respect to the basis 1/(1 - q^j T)^s instead of
  // 1/(T - q^{-j})^s: equals (-1)^s q^{js} coeff(s, j).
  RatFunc coeff_alt_basis(int s, int j) const;

 private:
  FormParams params_;
  std::vector<std::vector<RatFunc>> entries_;  // [s-1][j]
};

CoefficientTable partial_fraction_table(const FormParams& p);

// Weight polynomial in z attached to pole order s:
//   (-1)^s sum_{j=0}^{n} q^{j(s-1)} c(s, j) z^j.  Requires 1 <= s <= A.
RPoly weight_poly(const CoefficientTable& table, int s);

// Value of weight_poly(table, s) at z = 1.
RatFunc weight_poly_at_one(const CoefficientTable& table, int s);

enum class Base { kQ, kInvQ };

// Value at z = 1 of the rational correction term
//   sum_{s=1}^{A} sum_{j=1}^{n} sum_{k=1}^{j}
//     (-1)^{s+1} x^{k + j(s-1)} / (1 - x^k)^s * c(s, j)(x) * z^{j-k}
// with x = q (kQ) or x = 1/q (kInvQ).  The sign (-1)^{s+1} is forced by
// the index shift that splits the geometric tail off the Lambert series.
RatFunc rational_part_at_one(const CoefficientTable& table, Base base);

// Derivative at z = 1 of the s = 1 weight polynomial, equal to
// -sum_j j * c(1, j).
RatFunc weight1_derivative_at_one(const CoefficientTable& table);

// Linear form over the rational-function field:
//   series value = constant_coeff + sum_{j odd} zeta_coeff[j] * zeta_q(j),
// with j running over the odd integers in [3, A-1].
struct LinearForm {
  FormParams params;
  RatFunc constant_coeff;
  std::map<int, RatFunc> zeta_coeff;
};

// build_linear_form plus the retained intermediates the arithmetic
// verifications re-use.
struct LinearFormParts {
  LinearForm form;
  CoefficientTable table;
  RatFunc rational_part_q;
  RatFunc rational_part_inv_q;
  RatFunc weight1_deriv;
};

LinearFormParts build_linear_form_parts(const FormParams& p);
LinearForm build_linear_form(const FormParams& p);

}  // namespace qzeta
