#include "frey13/cyclotomic.hpp"

#include <stdexcept>
#include <string>

namespace frey13 {

namespace {

// fold a 13-coordinate expansion onto the power basis 1..zeta^11 using
// zeta^12 = -(1 + zeta + ... + zeta^11)
CycElt fold(const std::array<BigInt, 13>& d) {
  CycElt r;
  for (int i = 0; i < 12; ++i) r.c[i] = d[i] - d[12];
  return r;
}

}  // namespace

CycElt CycElt::zero() { return CycElt(); }

CycElt CycElt::one() { return integer(1); }

CycElt CycElt::integer(const BigInt& n) {
  CycElt r;
  r.c[0] = n;
  return r;
}

CycElt CycElt::zeta_pow(int k) {
  k %= 13;
  if (k < 0) k += 13;
  std::array<BigInt, 13> d{};
  d[k] = 1;
  return fold(d);
}

bool CycElt::is_zero() const {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

CycElt operator+(const CycElt& a, const CycElt& b) {
  CycElt r;
  for (int i = 0; i < 12; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

CycElt operator-(const CycElt& a, const CycElt& b) {
  CycElt r;
  for (int i = 0; i < 12; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

CycElt operator-(const CycElt& a) {
  CycElt r;
  for (int i = 0; i < 12; ++i) r.c[i] = -a.c[i];
  return r;
}

CycElt operator*(const CycElt& a, const CycElt& b) {
  std::array<BigInt, 13> d{};
  for (int i = 0; i < 12; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < 12; ++j) {
      if (b.c[j] == 0) continue;
      d[(i + j) % 13] += a.c[i] * b.c[j];
    }
  }
  return fold(d);
}

CycElt operator*(const BigInt& n, const CycElt& a) {
  CycElt r;
  for (int i = 0; i < 12; ++i) r.c[i] = n * a.c[i];
  return r;
}

CycElt sigma_pow(const CycElt& a, int k) {
  k %= 12;
  if (k < 0) k += 12;
  long long g = 1;
  for (int i = 0; i < k; ++i) g = g * 2 % 13;
  std::array<BigInt, 13> d{};
  for (int i = 0; i < 12; ++i) d[static_cast<size_t>(i * g % 13)] += a.c[i];
  return fold(d);
}

BigInt norm(const CycElt& a) {
  CycElt prod = CycElt::one();
  for (int k = 0; k < 12; ++k) prod = prod * sigma_pow(a, k);
  for (int i = 1; i < 12; ++i)
    if (prod.c[i] != 0) throw std::logic_error("norm did not land in Z");
  return prod.c[0];
}

int val13(const CycElt& a) {
  if (a.is_zero()) throw std::invalid_argument("valuation of 0");
  // (13) is totally ramified, so the valuation at the prime above it reads
  // off the norm: v(a) = v_13(N(a))
  return valuation(norm(a), 13);
}

int val13_K(const CycElt& a) {
  if (!(sigma_pow(a, 6) == a))
    throw std::domain_error("element is not in the degree-6 subfield");
  int v = val13(a);
  if (v % 2 != 0) throw std::logic_error("degree-6 element with odd valuation");
  return v / 2;
}

QuadElt descend(const CycElt& a) {
  // sigma^2-fixed elements have support {1} + the nonresidue orbit: the
  // residue-orbit coordinates vanish and the nonresidue ones agree
  for (int i : {1, 3, 4, 9, 10}) {
    if (a.c[i] != 0)
      throw std::domain_error("not fixed by sigma^2: coordinate " + std::to_string(i));
  }
  for (int i : {5, 6, 7, 8, 11}) {
    if (a.c[i] != a.c[2])
      throw std::domain_error("not fixed by sigma^2: coordinate " + std::to_string(i));
  }
  return QuadElt(2 * a.c[0] - a.c[2], -a.c[2]);
}

CycElt CycPoly::eval(const BigInt& x, const BigInt& y) const {
  std::vector<BigInt> xp(static_cast<size_t>(degree) + 1), yp(xp.size());
  xp[0] = 1;
  yp[0] = 1;
  for (size_t i = 1; i < xp.size(); ++i) {
    xp[i] = xp[i - 1] * x;
    yp[i] = yp[i - 1] * y;
  }
  CycElt acc;
  for (int i = 0; i <= degree; ++i)
    acc = acc + (xp[static_cast<size_t>(degree - i)] * yp[static_cast<size_t>(i)]) * coeff[static_cast<size_t>(i)];
  return acc;
}

bool CycPoly::operator==(const CycPoly& o) const {
  return degree == o.degree && coeff == o.coeff;
}

CycPoly operator*(const CycPoly& p, const CycPoly& q) {
  CycPoly r;
  r.degree = p.degree + q.degree;
  r.coeff.assign(static_cast<size_t>(r.degree) + 1, CycElt());
  for (int i = 0; i <= p.degree; ++i)
    for (int j = 0; j <= q.degree; ++j)
      r.coeff[static_cast<size_t>(i + j)] =
          r.coeff[static_cast<size_t>(i + j)] +
          p.coeff[static_cast<size_t>(i)] * q.coeff[static_cast<size_t>(j)];
  return r;
}

CycPoly sigma_pow(const CycPoly& p, int k) {
  CycPoly r = p;
  for (auto& c : r.coeff) c = sigma_pow(c, k);
  return r;
}

static CycPoly linear_factor(int i) {
  CycPoly f;
  f.degree = 1;
  f.coeff = {CycElt::one(), CycElt::zeta_pow(i)};
  return f;
}

static CycPoly product_over(const std::vector<int>& exps) {
  CycPoly r;
  r.degree = 0;
  r.coeff = {CycElt::one()};
  for (int i : exps) r = r * linear_factor(i);
  return r;
}

CycPoly phi_full() {
  static const CycPoly p = product_over({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  return p;
}

CycPoly phi_qr() {
  static const CycPoly p = product_over({1, 3, 4, 9, 10, 12});
  return p;
}

CycPoly phi_nqr() {
  static const CycPoly p = product_over({2, 5, 6, 7, 8, 11});
  return p;
}

BigInt phi_int_eval(const BigInt& x, const BigInt& y) {
  // (x^13 + y^13)/(x + y) = sum_{k=0}^{12} (-1)^k x^(12-k) y^k
  BigInt acc = 0;
  std::vector<BigInt> yp(13);
  yp[0] = 1;
  for (int k = 1; k <= 12; ++k) yp[static_cast<size_t>(k)] = yp[static_cast<size_t>(k - 1)] * y;
  std::vector<BigInt> xs(13);
  xs[0] = 1;
  for (int k = 1; k <= 12; ++k) xs[static_cast<size_t>(k)] = xs[static_cast<size_t>(k - 1)] * x;
  for (int k = 0; k <= 12; ++k) {
    BigInt term = xs[static_cast<size_t>(12 - k)] * yp[static_cast<size_t>(k)];
    if (k % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

BigInt trace_to_q(const CycElt& a) {
  BigInt t = 12 * a.c[0];
  for (int i = 1; i < 12; ++i) t -= a.c[i];
  return t;
}

}  // namespace frey13
