#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qzeta/jet.hpp"
#include "qzeta/laurent_poly.hpp"
#include "qzeta/linear_form.hpp"
#include "qzeta/number.hpp"
#include "qzeta/rat_func.hpp"

namespace qzeta {

// Exponent data of the denominator family attached to a parameter pair
// (A, r).  The scaling factor for instance n is
//   (A-1)!^{factorial_factor} * q^{floor(alpha n^2 + beta n + gamma)}
//     * d_n(1/q)^{d_power}.
struct DenominatorSpec {
  int A = 0;
  int r = 0;
  BigRat alpha;
  BigRat beta;
  BigRat gamma;
  int d_power = 0;
  bool factorial_factor = true;

  // d_power = A - 1, the reduced power the constant coefficient admits.
  static DenominatorSpec reduced(const FormParams& p);
  // d_power = A, enough to clear every coefficient of the linear form.
  static DenominatorSpec full(const FormParams& p);

  BigInt floor_exponent(int n) const;
  // The scaling factor itself; requires n >= 1.
  RatFunc value(int n) const;
};

// Spec plus its value at the given instance, per the reduced/full choice.
std::pair<DenominatorSpec, RatFunc> build_denominator(const FormParams& p,
                                                      bool reduced);

struct MembershipCheck {
  std::string claim;
  int zeta_index = 0;  // 0 for the constant coefficient
  bool pass = false;
  std::string witness_digest;  // empty when the check fails
};

struct DenominatorReport {
  FormParams params;
  std::vector<MembershipCheck> checks;
  bool pass = false;
};

// Checks that the scaled coefficients of the linear form are Laurent
// polynomials in 1/q: spec.value(n) * constant_coeff, the same product
// without the factorial factor, and for each odd zeta index j the product
// (A-1)! q^{floor} d_n(1/q)^{A-j} * zeta_coeff[j].
DenominatorReport verify_denominator(const LinearFormParts& parts,
                                     const DenominatorSpec& spec);

// Single-pole unit: the kernel summand attached to the point q^{-j} after
// the substitution T = q^{-j} u, given by the closed product
//   (-1)^{rn} u^{A/2 - 2 + (n-2j)A/2} q^{-rn(rn+1)/2 - j(n-j)A/2 + j}
//   ((q;q)_{rn} / (q;q)_n^r)^2 ((q;q)_n / ((q/u;q)_j (qu;q)_{n-j}))^A
//   (q^{j+1}/u;q)_{rn} (q^{n+1-j} u;q)_{rn} / (q;q)_{rn}^2.
// Requires relaxed params, 0 <= j <= n, and an invertible argument jet.
Jet pole_unit(const FormParams& p, int j, const Jet& u);

// pole_unit evaluated on the jet u = 1 + eps.
Jet pole_unit_jet(const FormParams& p, int j, int order);

// Residue combination entering the two-sided comparison of the rational
// parts: the coefficient of eps^{A-s} in
//   sum_{j=k}^{n} [ q^{-k(s-1)} e_j(1+eps) - (-1)^s q^{-k} e_{n-j}(1+eps) ]
// where e_j is the single-pole unit.  Requires strict params,
// 1 <= s <= A and 1 <= k <= n.
RatFunc residue_combination(const FormParams& p, int s, int k);

// Jet at u = 1 of the window sum sum_{j=k}^{n} (1 - q^{n-2j} u^2) e_j(u).
// Requires relaxed params and 1 <= k <= n.
Jet window_sum_jet(const FormParams& p, int k, int order);

// l-th jet coefficient of the window sum.
RatFunc window_sum_coeff(const FormParams& p, int l, int k);

// Integrality of the scaled window coefficient:
//   d_n(1/q)^l * window_sum_coeff(p, l, k) / (1 - q^{-k})
// as a Laurent polynomial in q.  Returns the membership result.
MembershipResult window_membership(const FormParams& p, int l, int k);

// The same window sum computed through the hypergeometric transformation
// route: pole_unit(p, k, u) times the telescoped prefactor
// (1 - q^{-k}u^2)(1 - q^{-k}u)/(1 - q^{-n}u) times the transformed
// multiple sum.  Requires relaxed params, n >= 1 and 1 <= k <= n.
Jet window_sum_via_andrews(const FormParams& p, int k, int order);

// Transformation route with the prefactor left in quotient-of-Pochhammer
// form; only defined away from the vanishing point, i.e. for 2k > n.
Jet window_sum_via_andrews_generic(const FormParams& p, int k, int order);

// The four closed-form window identities at jet order (0 for weight 0,
// the degenerate cases of the window sum family).
enum class WindowCase { kA0R0, kA2R0, kA0R1, kA2R1 };

struct WindowIdentityResult {
  LaurentPoly lhs;
  LaurentPoly rhs;
  bool q_identity = false;
  BigInt lhs_limit;     // value of lhs / -(1-q) at q = 1
  BigInt rhs_limit;     // value of rhs / -(1-q) at q = 1
  BigInt closed_limit;  // binomial closed form of the same limit
  bool limit_identity = false;
};

// Requires n >= 1 and 1 <= k <= n.
WindowIdentityResult closed_form_identity(WindowCase c, int n, int k);

// Ratio building blocks whose scaled jets at u = 1 are Laurent polynomials
// in q.  Each block is a quotient of Pochhammer products in an auxiliary
// variable u.
struct BlockR0 {
  int alpha = 0, beta = 0, gamma = 0;  // alpha <= gamma < beta
};
struct BlockR1 {
  int r = 0, n = 0, i = 0, j = 0;  // r >= 1, n >= j >= i >= 0
};
struct BlockR2 {
  int n = 0, k = 0, m1 = 0, m2 = 0;  // k >= 1, 0 <= m2 <= m1 <= n - k
};
using BlockSpec = std::variant<BlockR0, BlockR1, BlockR2>;

// Jet at u = 1 of the block with u replaced by u^{u_exponent},
// u_exponent in {-2, -1, 1, 2}.
Jet block_jet(const BlockSpec& spec, int order, int u_exponent);

// Scale power of the block: d_{beta-alpha-1}(q) for BlockR0, d_n(q) for
// the others (d_0 taken as 1).
IntPoly block_scale(const BlockSpec& spec);

// Membership of block_scale^l * (l-th jet coefficient) in Z[q, 1/q].
MembershipResult block_membership(const BlockSpec& spec, int l,
                                  int u_exponent);

// Term-by-term certificate for the BlockR1 membership at u_exponent = 1:
// expands the l-th jet coefficient over l-subsets of the Pochhammer window
// and certifies each term by cyclotomic valuations.
struct ValuationCertificate {
  bool per_term_nonnegative = false;
  bool sum_matches_jet = false;
};
ValuationCertificate r1_valuation_certificate(const BlockR1& spec, int l);

}  // namespace qzeta
