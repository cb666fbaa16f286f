#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qzeta {

// Arbitrary-precision integers and rationals.  mpq_class keeps values
// canonical (reduced, positive denominator) after every operation.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(const BigInt& n, unsigned long k) {
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline BigInt pow(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline BigRat pow(const BigRat& b, long e) {
  if (e == 0) return BigRat(1);
  if (b == 0 && e < 0) throw std::domain_error("zero divisor");
  BigRat r;
  unsigned long a = e < 0 ? -static_cast<unsigned long>(e) : e;
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num().get_mpz_t(), a);
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den().get_mpz_t(), a);
  if (e < 0) {
    mpq_inv(r.get_mpq_t(), r.get_mpq_t());
  }
  r.canonicalize();
  return r;
}

// Floor of a rational as an exact integer.
inline BigInt floor(const BigRat& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

// Parses "a", "a/b", or "-a/b" into an exact rational.
inline BigRat parse_rational(const std::string& s) {
  BigRat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const BigRat& x) { return x.get_str(); }
inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace qzeta
