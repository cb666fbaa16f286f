#include <cstdint>
#include <mutex>
#include <vector>

#include "qzeta/int_poly.hpp"

// Modular gcd over Z[q]: compute monic gcds mod word-size primes, lift the
// lc-scaled image by CRT with symmetric residues, and certify the stabilized
// candidate by exact trial division.  A single prime with constant gcd image
// already certifies coprimality, which is the common case when normalizing
// rational functions.

namespace qzeta {
namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

struct ModPoly {
  std::vector<u64> c;  // c.back() != 0 unless empty
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
};

ModPoly reduce_mod(const IntPoly& a, u64 p) {
  ModPoly r;
  r.c.resize(a.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i)
    r.c[i] = mpz_fdiv_ui(a.coeff(i).get_mpz_t(), p);
  r.trim();
  return r;
}

// In-place a mod b over Z_p (b nonzero).
void rem_mod(ModPoly& a, const ModPoly& b, u64 p) {
  u64 binv = invmod(b.c.back(), p);
  while (a.degree() >= b.degree()) {
    u64 t = mulmod(a.c.back(), binv, p);
    int off = a.degree() - b.degree();
    for (int i = 0; i <= b.degree(); ++i) {
      u64 s = mulmod(t, b.c[i], p);
      u64& x = a.c[off + i];
      x = (x >= s) ? x - s : x + p - s;
    }
    a.trim();
    if (a.c.empty()) return;
  }
}

ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p) {
  while (!b.c.empty()) {
    rem_mod(a, b, p);
    std::swap(a, b);
  }
  u64 inv = invmod(a.c.back(), p);
  for (auto& x : a.c) x = mulmod(x, inv, p);
  return a;
}

u64 next_prime(size_t idx) {
  static std::vector<u64> primes;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  static mpz_class cursor = (mpz_class(1) << 62) - 1;
  while (primes.size() <= idx) {
    mpz_nextprime(cursor.get_mpz_t(), cursor.get_mpz_t());
    primes.push_back(cursor.get_ui());
  }
  return primes[idx];
}

IntPoly make_positive(IntPoly p) {
  if (!p.is_zero() && p.leading() < 0) return -p;
  return p;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return make_positive(b);
  if (b.is_zero()) return make_positive(a);

  BigInt cg;
  mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  IntPoly pa = a.primitive_part();
  IntPoly pb = b.primitive_part();

  int common = std::min(pa.order(), pb.order());
  if (pa.order() > 0) pa = pa.divexact(IntPoly::monomial(BigInt(1), pa.order()));
  if (pb.order() > 0) pb = pb.divexact(IntPoly::monomial(BigInt(1), pb.order()));
  IntPoly unit = IntPoly::monomial(cg, common);

  // A primitive monomial is +-q^e; its gcd contribution is the q-power
  // already captured by `common`.
  if (pa.degree() == 0 || pb.degree() == 0) return unit;
  if (pa == pb || pa == -pb) return unit * make_positive(pa);

  BigInt d;
  mpz_gcd(d.get_mpz_t(), pa.leading().get_mpz_t(), pb.leading().get_mpz_t());

  std::vector<BigInt> lifted;
  BigInt modulus(0);
  int best_deg = -1;
  std::vector<BigInt> prev;
  bool have_prev = false;

  for (size_t pi = 0;; ++pi) {
    u64 p = next_prime(pi);
    if (mpz_fdiv_ui(pa.leading().get_mpz_t(), p) == 0) continue;
    if (mpz_fdiv_ui(pb.leading().get_mpz_t(), p) == 0) continue;
    ModPoly g = gcd_mod(reduce_mod(pa, p), reduce_mod(pb, p), p);
    int e = g.degree();
    if (e == 0) return unit;
    if (best_deg == -1 || e < best_deg) {
      best_deg = e;
      modulus = BigInt(0);
      lifted.assign(e + 1, BigInt(0));
      have_prev = false;
    } else if (e > best_deg) {
      continue;
    }

    u64 dmodp = mpz_fdiv_ui(d.get_mpz_t(), p);
    BigInt bp(static_cast<unsigned long>(p));
    if (modulus == 0) {
      for (int i = 0; i <= e; ++i) {
        BigInt v(static_cast<unsigned long>(mulmod(g.c[i], dmodp, p)));
        if (v * 2 > bp) v -= bp;
        lifted[i] = v;
      }
      modulus = bp;
    } else {
      BigInt minv;
      // modulus^{-1} mod p
      mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), bp.get_mpz_t());
      BigInt newmod = modulus * bp;
      for (int i = 0; i <= e; ++i) {
        u64 target = mulmod(g.c[i], dmodp, p);
        BigInt cur = lifted[i] % bp;
        if (cur < 0) cur += bp;
        BigInt delta = (BigInt(static_cast<unsigned long>(target)) - cur) * minv % bp;
        if (delta < 0) delta += bp;
        lifted[i] += modulus * delta;
        BigInt m2 = lifted[i] * 2;
        if (m2 > newmod) lifted[i] -= newmod;
      }
      modulus = newmod;
    }

    if (have_prev && prev == lifted) {
      IntPoly cand = make_positive(IntPoly::from_coeffs(lifted).primitive_part());
      if (pa.try_divide(cand) && pb.try_divide(cand)) return unit * cand;
    }
    prev = lifted;
    have_prev = true;
  }
}

}  // namespace qzeta
