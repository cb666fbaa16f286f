#pragma once

#include <stdexcept>
#include <type_traits>
#include <vector>

#include "qzeta/jet.hpp"
#include "qzeta/number.hpp"
#include "qzeta/rat_func.hpp"

namespace qzeta {

// Terminating very-well-poised basic hypergeometric sum and its expansion
// as an m-fold multiple sum (Andrews' transformation).  The evaluator is
// generic over the coefficient field so the same code drives exact
// rational instances, rational-function instances and jet instances.
//
// Left side:
//   sum_{k=0}^{N} (1 - a q^{2k}) / (1 - a)
//     * prod [ (a)_k (b_i)_k (c_i)_k (q^{-N})_k ]
//       / [ (q)_k (aq/b_i)_k (aq/c_i)_k (a q^{N+1})_k ]
//     * (a^{m+1} q^{m+1+N} / (b_1 c_1 ... b_{m+1} c_{m+1}))^k
// Right side:
//   (aq)_N (aq/(b_{m+1} c_{m+1}))_N / ((aq/b_{m+1})_N (aq/c_{m+1})_N)
//   * sum_{0 <= l_1 <= ... <= l_m <= N}
//       a^{l_1+...+l_{m-1}} q^{l_1+...+l_m}
//       / ((b_2 c_2)^{l_1} ... (b_m c_m)^{l_{m-1}})
//       * (q^{-N})_{l_m} / (b_{m+1} c_{m+1} q^{-N} / a)_{l_m}
//       * prod_{i=1}^{m} (b_{i+1})_{l_i} (c_{i+1})_{l_i}
//                        / ((aq/b_i)_{l_i} (aq/c_i)_{l_i})
//                        * (aq/(b_i c_i))_{l_i - l_{i-1}} / (q)_{l_i - l_{i-1}}
// with l_0 = 0 and (x)_k the q-shifted factorial prod_{i<k} (1 - x q^i).

template <typename V>
struct HypergeometricData {
  int m = 1;
  int N = 0;
  V base;
  V a;
  std::vector<V> b;  // index 0 unused; entries 1..m+1
  std::vector<V> c;
  V unit;            // multiplicative identity of V
};

inline bool hy_is_zero(const BigRat& v) { return v == 0; }
inline bool hy_is_zero(const RatFunc& v) { return v.is_zero(); }
inline bool hy_is_zero(const Jet& v) { return v.coeff(0).is_zero(); }

// V is deduced from the data struct only; value arguments are non-deduced
// so expression-template temporaries (gmpxx) convert to V at the call.
template <typename V>
V hy_div(const HypergeometricData<V>&, const std::type_identity_t<V>& a,
         const std::type_identity_t<V>& b) {
  if (hy_is_zero(b))
    throw std::domain_error("degenerate parameterization");
  return a / b;
}

template <typename V>
V hy_pow(const HypergeometricData<V>& d, const std::type_identity_t<V>& x,
         int e) {
  if (e < 0) return hy_div(d, d.unit, hy_pow(d, x, -e));
  V r = d.unit;
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

template <typename V>
V hy_poch(const HypergeometricData<V>& d, const std::type_identity_t<V>& x,
          int k) {
  V r = d.unit;
  V p = d.unit;
  for (int i = 0; i < k; ++i) {
    r = r * (d.unit - x * p);
    p = p * d.base;
  }
  return r;
}

template <typename V>
void hy_validate(const HypergeometricData<V>& d) {
  if (d.m < 0 || d.N < 0)
    throw std::invalid_argument("hypergeometric sizes must be nonnegative");
  if (static_cast<int>(d.b.size()) < d.m + 2 ||
      static_cast<int>(d.c.size()) < d.m + 2)
    throw std::invalid_argument("hypergeometric parameter lists too short");
  if (hy_is_zero(d.base) || hy_is_zero(d.a))
    throw std::domain_error("degenerate parameterization");
}

template <typename V>
V andrews_lhs(const HypergeometricData<V>& d) {
  hy_validate(d);
  const V aq = d.a * d.base;
  std::vector<V> num{d.a};
  std::vector<V> den{d.base, d.a * hy_pow(d, d.base, d.N + 1)};
  for (int i = 1; i <= d.m + 1; ++i) {
    num.push_back(d.b[static_cast<std::size_t>(i)]);
    num.push_back(d.c[static_cast<std::size_t>(i)]);
    den.push_back(hy_div(d, aq, d.b[static_cast<std::size_t>(i)]));
    den.push_back(hy_div(d, aq, d.c[static_cast<std::size_t>(i)]));
  }
  num.push_back(hy_pow(d, d.base, -d.N));
  V z = hy_pow(d, d.a, d.m + 1) * hy_pow(d, d.base, d.m + 1 + d.N);
  for (int i = 1; i <= d.m + 1; ++i)
    z = hy_div(d, z, d.b[static_cast<std::size_t>(i)] *
                         d.c[static_cast<std::size_t>(i)]);
  const V one_minus_a = d.unit - d.a;
  V sum = d.unit - d.unit;
  V zk = d.unit;
  for (int k = 0; k <= d.N; ++k) {
    V t = hy_div(d, d.unit - d.a * hy_pow(d, d.base, 2 * k), one_minus_a) * zk;
    for (const V& x : num) t = t * hy_poch(d, x, k);
    for (const V& x : den) t = hy_div(d, t, hy_poch(d, x, k));
    sum = sum + t;
    zk = zk * z;
  }
  return sum;
}

template <typename V>
V andrews_rhs_prefactor(const HypergeometricData<V>& d) {
  hy_validate(d);
  const V aq = d.a * d.base;
  const V& bm = d.b[static_cast<std::size_t>(d.m + 1)];
  const V& cm = d.c[static_cast<std::size_t>(d.m + 1)];
  V num = hy_poch(d, aq, d.N) * hy_poch(d, hy_div(d, aq, bm * cm), d.N);
  V den =
      hy_poch(d, hy_div(d, aq, bm), d.N) * hy_poch(d, hy_div(d, aq, cm), d.N);
  return hy_div(d, num, den);
}

template <typename V>
V andrews_multisum_term(const HypergeometricData<V>& d,
                        const std::vector<int>& l) {
  const V aq = d.a * d.base;
  int sum_all = 0, sum_head = 0;
  for (int i = 1; i <= d.m; ++i) {
    sum_all += l[static_cast<std::size_t>(i)];
    if (i < d.m) sum_head += l[static_cast<std::size_t>(i)];
  }
  V t = hy_pow(d, d.a, sum_head) * hy_pow(d, d.base, sum_all);
  for (int i = 2; i <= d.m; ++i)
    t = hy_div(d, t,
               hy_pow(d,
                      d.b[static_cast<std::size_t>(i)] *
                          d.c[static_cast<std::size_t>(i)],
                      l[static_cast<std::size_t>(i - 1)]));
  const V q_mN = hy_pow(d, d.base, -d.N);
  const int lm = l[static_cast<std::size_t>(d.m)];
  t = t * hy_poch(d, q_mN, lm);
  t = hy_div(d, t,
             hy_poch(d,
                     hy_div(d,
                            d.b[static_cast<std::size_t>(d.m + 1)] *
                                d.c[static_cast<std::size_t>(d.m + 1)] * q_mN,
                            d.a),
                     lm));
  for (int i = 1; i <= d.m; ++i) {
    const int li = l[static_cast<std::size_t>(i)];
    const int gap = li - l[static_cast<std::size_t>(i - 1)];
    t = t * hy_poch(d, d.b[static_cast<std::size_t>(i + 1)], li) *
        hy_poch(d, d.c[static_cast<std::size_t>(i + 1)], li);
    t = hy_div(d, t,
               hy_poch(d, hy_div(d, aq, d.b[static_cast<std::size_t>(i)]), li) *
                   hy_poch(d, hy_div(d, aq, d.c[static_cast<std::size_t>(i)]),
                           li));
    t = t * hy_poch(d,
                    hy_div(d, aq,
                           d.b[static_cast<std::size_t>(i)] *
                               d.c[static_cast<std::size_t>(i)]),
                    gap);
    t = hy_div(d, t, hy_poch(d, d.base, gap));
  }
  return t;
}

template <typename V>
V andrews_rhs_multisum(const HypergeometricData<V>& d) {
  hy_validate(d);
  if (d.m == 0) return d.unit;
  std::vector<int> l(static_cast<std::size_t>(d.m) + 1, 0);
  V sum = d.unit - d.unit;
  // Depth-first enumeration of 0 <= l_1 <= ... <= l_m <= N.
  auto rec = [&](auto&& self, int i) -> void {
    if (i > d.m) {
      sum = sum + andrews_multisum_term(d, l);
      return;
    }
    for (int v = l[static_cast<std::size_t>(i - 1)]; v <= d.N; ++v) {
      l[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return sum;
}

// Exact rational instance of the transformation.
struct AndrewsInstance {
  int m = 1;
  int N = 0;
  BigRat base;
  BigRat a;
  std::vector<BigRat> b;  // index 0 unused; entries 1..m+1
  std::vector<BigRat> c;
};

struct AndrewsSides {
  BigRat lhs;
  BigRat rhs;
  bool equal = false;
};

inline AndrewsSides andrews_transform(const AndrewsInstance& inst) {
  HypergeometricData<BigRat> d{inst.m,     inst.N, inst.base,
                               inst.a,     inst.b, inst.c,
                               BigRat(1)};
  AndrewsSides out;
  out.lhs = andrews_lhs(d);
  out.rhs = andrews_rhs_prefactor(d) * andrews_rhs_multisum(d);
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace qzeta
