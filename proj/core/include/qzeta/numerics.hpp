#pragma once

#include <vector>

#include "qzeta/interval.hpp"
#include "qzeta/linear_form.hpp"
#include "qzeta/number.hpp"

namespace qzeta {

// Rational evaluation point; requires q != 0, with the magnitude
// constraint (|q| < 1, or just |q| != 1) checked per operation.
struct QPoint {
  BigRat q;
};

// zeta_q(s) = sum_{k>=1} k^{s-1} q^k / (1 - q^k).
// Requires s >= 1 and 0 < |q| < 1.
Interval zeta_q(int s, const QPoint& q, long precision_bits);

// Value of the series instance
//   sum_{k>=1} (1 - q^{2k+n}) (q^{k-rn};q)_{rn} (q^{k+n+1};q)_{rn}
//              / (q^k;q)_{n+1}^A * q^{k((A-2r)n/2 + A/2 - 1)} (q;q)_n^{A-2r}.
// Requires strict params and 0 < |q| != 1.
Interval eval_series(const FormParams& p, const QPoint& q,
                     long precision_bits);

// Exact value of the k-th summand of eval_series (zero for k <= rn).
BigRat series_term(const FormParams& p, const QPoint& q, int k);

// eval_series minus the linear form contracted with zeta_q enclosures;
// encloses zero when the decomposition is exact.
Interval linear_form_residual(const LinearForm& form, const QPoint& q,
                              long precision_bits);

// Gap of the two-sided Lambert kernel identity:
//   Z_s(q) - Z_s(1/q) - (2/(s-1)!) sum_{odd j, 3 <= j <= s}
//                                  stirling_unsigned(s-1, j-1) zeta_q(j)
// where Z_s(q) = sum_{k>=1} q^k / (1-q^k)^s and Z_s(1/q) is summed through
// its |q| < 1 rewriting (-1)^s sum_{k>=1} q^{k(s-1)} / (1-q^k)^s.
// Requires s >= 2 and 0 < |q| < 1; encloses zero when the identity holds.
Interval lambert_kernel_gap(int s, const QPoint& q, long precision_bits);

// Normalized Eisenstein series E_{2m}(q) = 1 - (4m / B_{2m}) zeta_q(2m);
// requires m >= 1.
Interval eisenstein(int m, const QPoint& q, long precision_bits);

enum class SlopeQuantity { kSeries, kLcmGrowth, kCoeffMax };

struct SlopeRow {
  int n = 0;
  bool defined = false;
  double slope = 0.0;  // log|value| / n^2
};

// Quadratic-growth exponent rows log|value(n)| / n^2 for the chosen
// quantity.  kSeries uses eval_series at (A, r, n); kLcmGrowth uses the
// cyclotomic lcm evaluated at 1/q (A, r ignored); kCoeffMax uses the
// largest coefficient magnitude of the linear form at (A, r, n).
// The n field of p is ignored.  Zero values are flagged undefined.
std::vector<SlopeRow> slope_estimate(SlopeQuantity quantity,
                                     const FormParams& p, const QPoint& q,
                                     const std::vector<int>& n_values,
                                     long precision_bits);

// Expected limit of the corresponding slope sequence.
double slope_target(SlopeQuantity quantity, const FormParams& p,
                    const QPoint& q);

}  // namespace qzeta
