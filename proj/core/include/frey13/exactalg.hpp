#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace frey13 {

// All arithmetic in this project is exact. BigInt is GMP's C++ integer;
// everything layered on top of it (polynomials, resultants, factorization)
// lives here.
using BigInt = mpz_class;

BigInt big_from_string(const std::string& s);

// Dense univariate integer polynomial, coefficients low to high.
// Invariant: no trailing zero coefficient (the zero polynomial has c empty).
struct IntPoly {
  std::vector<BigInt> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  static IntPoly from_ints(const std::vector<long long>& coeffs);

  bool is_zero() const { return c.empty(); }
  // degree of the zero polynomial is -1 by convention
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const BigInt& leading() const;

  bool operator==(const IntPoly& o) const { return c == o.c; }
};

IntPoly operator+(const IntPoly& p, const IntPoly& q);
IntPoly operator-(const IntPoly& p, const IntPoly& q);
IntPoly operator*(const IntPoly& p, const IntPoly& q);

// Horner evaluation.
BigInt poly_eval(const IntPoly& p, const BigInt& x);

// Resultant via fraction-free (Bareiss) elimination of the Sylvester matrix.
// resultant(p, q) = 0 iff p and q share a root over the algebraic closure.
// Throws std::invalid_argument if either polynomial is zero.
BigInt resultant(const IntPoly& p, const IntPoly& q);

struct PrimeFactorization {
  // sorted ascending by prime
  std::vector<std::pair<BigInt, unsigned>> factors;
  int sign = 1;

  BigInt value() const;
  BigInt max_prime() const;  // 1 if |n| == 1
};

// Factors |n| completely: trial division below 10^6, then Brent's cycle
// variant of Pollard rho on the remaining cofactors. n must be nonzero.
PrimeFactorization factorize(const BigInt& n);

// Miller-Rabin with the first 13 prime bases, which is a proven-deterministic
// witness set below 3.317e24. Inputs beyond that range (none arise in this
// pipeline) get the same test, then only probabilistically correct.
bool is_prime(const BigInt& n);

BigInt gcd(const BigInt& a, const BigInt& b);

// exponent of p in n (n != 0)
int valuation(const BigInt& n, const BigInt& p);

}  // namespace frey13
