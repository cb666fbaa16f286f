#include "qzeta/q_toolkit.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qzeta {

LaurentPoly pochhammer_poly(int a, int k) {
  if (k < 0) throw std::invalid_argument("pochhammer length must be >= 0");
  LaurentPoly r{BigInt(1)};
  for (int i = 0; i < k; ++i)
    r = r * (LaurentPoly(BigInt(1)) - LaurentPoly::monomial(BigInt(1), a + i));
  return r;
}

IntPoly q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial argument must be >= 0");
  IntPoly r(1L);
  for (int i = 1; i <= n; ++i)
    r *= IntPoly(1L) - IntPoly::monomial(BigInt(1), i);
  return r;
}

IntPoly q_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("q_binomial index out of range");
  if (k > n - k) k = n - k;
  static std::map<std::pair<int, int>, IntPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  // Pascal recurrence [n,k] = [n-1,k] + q^{n-k} [n-1,k-1].
  std::vector<IntPoly> row(1, IntPoly(1L));
  for (int m = 1; m <= n; ++m) {
    int top = std::min(m, k);
    std::vector<IntPoly> next(top + 1);
    next[0] = IntPoly(1L);
    for (int j = 1; j <= top; ++j) {
      IntPoly up = (j < static_cast<int>(row.size())) ? row[j] : IntPoly();
      next[j] = up + row[j - 1].shifted(m - j);
    }
    row = std::move(next);
  }
  cache[key] = row[k];
  return row[k];
}

IntPoly q_multinomial(int n, const std::vector<int>& parts) {
  if (n < 0) throw std::invalid_argument("q_multinomial argument must be >= 0");
  int sum = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("q_multinomial parts must be >= 0");
    sum += p;
  }
  if (sum > n) throw std::invalid_argument("negative implicit part in q_multinomial");
  IntPoly r = q_factorial(n);
  for (int p : parts) r = r.divexact(q_factorial(p));
  return r.divexact(q_factorial(n - sum));
}

const IntPoly& cyclotomic(int t) {
  if (t < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
  static std::map<int, IntPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto compute = [](int m, const auto& self) -> const IntPoly& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    IntPoly r = IntPoly::monomial(BigInt(1), m) - IntPoly(1L);
    for (int d = 1; d < m; ++d)
      if (m % d == 0) r = r.divexact(self(d, self));
    return cache.emplace(m, std::move(r)).first->second;
  };
  return compute(t, compute);
}

IntPoly d_n(int n) {
  if (n < 1) throw std::invalid_argument("d_n argument must be >= 1");
  IntPoly r(1L);
  for (int t = 1; t <= n; ++t) r *= cyclotomic(t);
  return r;
}

long cyclotomic_valuation(const std::vector<std::pair<int, int>>& factors, int t) {
  if (t < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
  long v = 0;
  for (const auto& [m, mult] : factors) {
    if (m < 1) throw std::invalid_argument("factor exponent must be >= 1");
    if (t == 1 || m % t == 0) v += mult;
  }
  return v;
}

BigInt stirling_unsigned(int s, int j) {
  if (s < 1 || j < 1 || j > s) throw std::invalid_argument("stirling index out of range");
  static std::vector<std::vector<BigInt>> tri = {{BigInt(1)}};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(tri.size()) <= s) {
    int m = static_cast<int>(tri.size());
    std::vector<BigInt> row(m + 1, BigInt(0));
    // c(m, j) = c(m-1, j-1) + (m-1) c(m-1, j)
    for (int i = 1; i <= m; ++i) row[i] = tri[m - 1][i - 1];
    for (int i = 0; i < m; ++i) row[i] += BigInt(m - 1) * tri[m - 1][i];
    tri.push_back(std::move(row));
  }
  return tri[s][j];
}

BigRat bernoulli(int m) {
  if (m < 0) throw std::invalid_argument("bernoulli index must be >= 0");
  static std::vector<BigRat> cache = {BigRat(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= m) {
    int n = static_cast<int>(cache.size());
    // sum_{k=0}^{n} C(n+1, k) B_k = 0  =>  solve for B_n.
    BigRat s(0);
    for (int k = 0; k < n; ++k)
      s += BigRat(binomial(BigInt(n + 1), k)) * cache[k];
    cache.push_back(-s / BigRat(n + 1));
  }
  return cache[m];
}

}  // namespace qzeta
