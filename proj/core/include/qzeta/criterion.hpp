#pragma once

#include <string>
#include <vector>

#include "qzeta/interval.hpp"
#include "qzeta/number.hpp"

namespace qzeta {

// Which of the two dimension bounds: the plain one (f) or the one refined
// by the lcm-growth saving (g).
enum class BoundKind { kPlain, kRefined };

// f(r; A) = (4rA + A - 4r^2) / ((24/pi^2 + 2) A + 8 r^2)
// g(r; A) = (4rA + A - 4r^2) / ((24/pi^2 + 2) A - 24/pi^2 + 8 r^2)
// Requires A even >= 4 and 1 <= r <= A/2.
Interval bound_value(BoundKind kind, int r, int A, long precision_bits = 192);
Interval f_bound(int r, int A, long precision_bits = 192);
Interval g_bound(int r, int A, long precision_bits = 192);

struct MaxBound {
  int arg_r = 0;
  Interval value;
};

// Maximum of the bound over r = 1..A/2 (midpoint comparison; the scan is
// exhaustive up to a coarse stride plus local refinement).
MaxBound bound_max(BoundKind kind, int A, long precision_bits = 192);

// Certified comparisons of max_r bound(r; A) against x: below means every
// r satisfies sup < x, above means some r satisfies inf > x.
bool certified_below(BoundKind kind, int A, const BigRat& x,
                     long precision_bits = 192);
bool certified_above(BoundKind kind, int A, const BigRat& x,
                     long precision_bits = 192);

// Smallest even A >= 4 whose maximal bound certifiably exceeds 1, with all
// smaller A certifiably below 1.
int threshold_A(BoundKind kind, long precision_bits = 192);

// Growth rates per unit log|1/q| feeding the bounds:
//   alpha1 = -(A/8 + r^2/2 + 3A/pi^2 - r(A-2r)/2)
//   alpha2 = A/4 + r^2 + 3A/pi^2
//   delta  = 3/pi^2
struct CriterionRates {
  Interval alpha1;
  Interval alpha2;
  Interval delta;
};
CriterionRates growth_rates(int r, int A, long precision_bits = 192);

// 1 + (alpha1 + d)/(alpha2 - d) with d = delta (refined) or 0 (plain);
// equals g_bound resp. f_bound.  Requires alpha2 - d certifiably positive.
Interval dimension_bound(const CriterionRates& rates, bool use_delta);

// Limit constant of g_max(A)/sqrt(A): pi / (2 sqrt(pi^2 + 12)).
Interval asymptotic_constant(long precision_bits = 192);

struct InequalityEntry {
  std::string name;
  bool pass = false;
};

struct InequalityReport {
  std::vector<InequalityEntry> entries;
  bool pass = false;
};

// The certified inequality chain of the headline dimension-bound facts.
InequalityReport inequality_suite(long precision_bits = 192);

}  // namespace qzeta
