#pragma once

#include <utility>
#include <vector>

#include "qzeta/int_poly.hpp"
#include "qzeta/laurent_poly.hpp"
#include "qzeta/number.hpp"

namespace qzeta {

// (q^a; q)_k = prod_{i=0}^{k-1} (1 - q^{a+i}); Laurent when a < 0.
LaurentPoly pochhammer_poly(int a, int k);

// (q; q)_n as an ordinary polynomial.
IntPoly q_factorial(int n);

// Gaussian binomial [n, k]_q; requires 0 <= k <= n.
IntPoly q_binomial(int n, int k);

// q-multinomial [n; parts..., n - sum(parts)]_q.  The final part is
// implicit; a negative implicit part is an error.
IntPoly q_multinomial(int n, const std::vector<int>& parts);

// t-th cyclotomic polynomial, t >= 1 (cached).
const IntPoly& cyclotomic(int t);

// d_n = prod_{t=1}^{n} cyclotomic(t), the polynomial lcm of q-1,...,q^n-1.
// Requires n >= 1.
IntPoly d_n(int n);

// phi_t-adic valuation of prod (1 - q^{m_i})^{e_i} given as (m_i, e_i)
// pairs with m_i >= 1.  For t = 1 every factor contributes its
// multiplicity; for t >= 2 only factors with t | m_i do.
long cyclotomic_valuation(const std::vector<std::pair<int, int>>& factors, int t);

// Unsigned Stirling numbers of the first kind via
// x(x+1)...(x+s-1) = sum_j stirling_unsigned(s, j) x^j; requires 1 <= j <= s.
BigInt stirling_unsigned(int s, int j);

// Bernoulli numbers, B_1 = -1/2 convention.
BigRat bernoulli(int m);

}  // namespace qzeta
