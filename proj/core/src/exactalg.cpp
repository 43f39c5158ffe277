#include "frey13/exactalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace frey13 {

BigInt big_from_string(const std::string& s) { return BigInt(s); }

static void normalize(std::vector<BigInt>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) {
  normalize(c);
}

IntPoly IntPoly::from_ints(const std::vector<long long>& coeffs) {
  std::vector<BigInt> v;
  v.reserve(coeffs.size());
  for (long long x : coeffs) v.emplace_back(static_cast<long>(x));
  return IntPoly(std::move(v));
}

const BigInt& IntPoly::leading() const {
  if (c.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c.back();
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
  std::vector<BigInt> r(std::max(p.c.size(), q.c.size()), BigInt(0));
  for (size_t i = 0; i < p.c.size(); ++i) r[i] += p.c[i];
  for (size_t i = 0; i < q.c.size(); ++i) r[i] += q.c[i];
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) {
  std::vector<BigInt> r(std::max(p.c.size(), q.c.size()), BigInt(0));
  for (size_t i = 0; i < p.c.size(); ++i) r[i] += p.c[i];
  for (size_t i = 0; i < q.c.size(); ++i) r[i] -= q.c[i];
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return IntPoly();
  std::vector<BigInt> r(p.c.size() + q.c.size() - 1, BigInt(0));
  for (size_t i = 0; i < p.c.size(); ++i)
    for (size_t j = 0; j < q.c.size(); ++j) r[i + j] += p.c[i] * q.c[j];
  return IntPoly(std::move(r));
}

BigInt poly_eval(const IntPoly& p, const BigInt& x) {
  BigInt acc = 0;
  for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + p.c[i];
  return acc;
}

// Fraction-free Gaussian elimination (Bareiss). Divisions are exact; row
// swaps flip the sign. A pivotless column means a singular matrix.
static BigInt det_bareiss(std::vector<std::vector<BigInt>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

BigInt resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero())
    throw std::invalid_argument("resultant of the zero polynomial");
  const int dp = p.degree(), dq = q.degree();
  if (dp == 0 && dq == 0) return 1;
  const size_t n = static_cast<size_t>(dp + dq);
  std::vector<std::vector<BigInt>> syl(n, std::vector<BigInt>(n, BigInt(0)));
  // dq rows of p's coefficients, high to low, then dp rows of q's
  for (int i = 0; i < dq; ++i)
    for (int j = 0; j <= dp; ++j) syl[i][i + j] = p.c[dp - j];
  for (int i = 0; i < dp; ++i)
    for (int j = 0; j <= dq; ++j) syl[dq + i][i + j] = q.c[dq - j];
  return det_bareiss(std::move(syl));
}

BigInt PrimeFactorization::value() const {
  BigInt v = sign;
  for (const auto& [p, e] : factors)
    for (unsigned i = 0; i < e; ++i) v *= p;
  return v;
}

BigInt PrimeFactorization::max_prime() const {
  return factors.empty() ? BigInt(1) : factors.back().first;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  static const long kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (long b : kBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  BigInt d = n - 1;
  unsigned long r = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++r;
  }
  for (long b : kBases) {
    BigInt x;
    BigInt base(b);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned long i = 0; i + 1 < r; ++i) {
      x = (x * x) % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

static const std::vector<int>& small_primes() {
  static const std::vector<int> primes = [] {
    const int bound = 1000000;
    std::vector<bool> comp(bound, false);
    std::vector<int> out;
    for (int i = 2; i < bound; ++i) {
      if (comp[i]) continue;
      out.push_back(i);
      for (long long j = static_cast<long long>(i) * i; j < bound; j += i)
        comp[j] = true;
    }
    return out;
  }();
  return primes;
}

// Brent's cycle variant of Pollard rho; n odd composite, no factor < 10^6.
static BigInt rho_brent(const BigInt& n) {
  for (long c = 1;; ++c) {
    BigInt y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const long batch = 128;
    while (g == 1) {
      x = y;
      for (BigInt i = 0; i < r; ++i) y = (y * y + c) % n;
      BigInt k = 0;
      while (k < r && g == 1) {
        ys = y;
        BigInt rem = r - k;
        BigInt lim = rem < batch ? rem : BigInt(batch);
        for (BigInt i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          BigInt diff = x > y ? x - y : y - x;
          q = (q * diff) % n;
        }
        g = gcd(q, n);
        k += batch;
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack one step at a time
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        BigInt diff = x > ys ? x - ys : ys - x;
        g = gcd(diff, n);
      }
    }
    if (g != n) return g;
  }
}

static void factor_rec(const BigInt& n, std::vector<BigInt>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  BigInt d = rho_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

PrimeFactorization factorize(const BigInt& n) {
  if (n == 0) throw std::invalid_argument("factorize(0)");
  PrimeFactorization f;
  f.sign = n < 0 ? -1 : 1;
  BigInt m = abs(n);
  for (int p : small_primes()) {
    if (m == 1) break;
    if (BigInt(p) * p > m) break;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) f.factors.emplace_back(p, e);
  }
  if (m > 1) {
    std::vector<BigInt> rest;
    factor_rec(m, rest);
    std::sort(rest.begin(), rest.end());
    for (size_t i = 0; i < rest.size();) {
      size_t j = i;
      while (j < rest.size() && rest[j] == rest[i]) ++j;
      f.factors.emplace_back(rest[i], static_cast<unsigned>(j - i));
      i = j;
    }
  }
  std::sort(f.factors.begin(), f.factors.end());
  return f;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

int valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw std::invalid_argument("valuation of 0");
  BigInt m = abs(n);
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

}  // namespace frey13
