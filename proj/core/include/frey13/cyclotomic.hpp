#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "frey13/exactalg.hpp"
#include "frey13/quadfield.hpp"

namespace frey13 {

// Z[zeta] for zeta a primitive 13th root of unity, in the power basis
// 1, zeta, ..., zeta^11. zeta^12 = -(1 + zeta + ... + zeta^11) is folded
// away, so coordinates are canonical: equality is coordinate equality.
struct CycElt {
  std::array<BigInt, 12> c{};

  CycElt() = default;

  static CycElt zero();
  static CycElt one();
  static CycElt integer(const BigInt& n);
  // zeta^k for any integer k (reduced mod 13)
  static CycElt zeta_pow(int k);

  bool is_zero() const;
  bool operator==(const CycElt& o) const { return c == o.c; }
};

CycElt operator+(const CycElt& a, const CycElt& b);
CycElt operator-(const CycElt& a, const CycElt& b);
CycElt operator-(const CycElt& a);
CycElt operator*(const CycElt& a, const CycElt& b);
CycElt operator*(const BigInt& n, const CycElt& a);

// Galois action: sigma_k(zeta) = zeta^(2^k), sigma_1 generating
// Gal(Q(zeta)/Q) = Z/12. sigma_pow(a, k) applies sigma_1 k times.
CycElt sigma_pow(const CycElt& a, int k);

// product of all 12 conjugates; lands in Z (asserted)
BigInt norm(const CycElt& a);

// Valuation at the unique prime above 13 in Q(zeta), where (13) ramifies
// totally: v(1 - zeta) = 1, v(13) = 12. Computed as v_13(|N(a)|), exact
// because 13 has a single prime above it. a must be nonzero.
int val13(const CycElt& a);

// Same prime seen from the degree-6 field fixed by sigma^6, where
// v(13) = 6. Input must be sigma^6-fixed; the Q(zeta) valuation is then
// even and this returns half of it.
int val13_K(const CycElt& a);

// An element fixed by sigma^2 lies in Q(sqrt(13)); write it on the basis
// {1, w} with w = sqrt(13). Throws std::domain_error, naming the first
// offending coordinate, if the element is not sigma^2-fixed.
QuadElt descend(const CycElt& a);

// Homogeneous bivariate form with cyclotomic coefficients:
// sum_i coeff[i] * x^(d-i) * y^i.
struct CycPoly {
  int degree = 0;
  std::vector<CycElt> coeff;  // size degree + 1

  CycElt eval(const BigInt& x, const BigInt& y) const;
  bool operator==(const CycPoly& o) const;
};

CycPoly operator*(const CycPoly& p, const CycPoly& q);

// coefficient-wise Galois action
CycPoly sigma_pow(const CycPoly& p, int k);

// x^13 + y^13 = (x + y) * phi(x, y) with phi = prod_{i=1}^{12} (x + zeta^i y).
// phi = phi1 * phi2 where phi1 collects the quadratic-residue exponents
// {1, 3, 4, 9, 10, 12} and phi2 the rest; each is a sextic form.
CycPoly phi_full();  // degree 12
CycPoly phi_qr();    // phi1, degree 6
CycPoly phi_nqr();   // phi2, degree 6

// phi(x, y) = (x^13 + y^13)/(x + y) evaluated over Z directly
BigInt phi_int_eval(const BigInt& x, const BigInt& y);

// trace to Q of a cyclotomic element (sum of all 12 conjugates)
BigInt trace_to_q(const CycElt& a);

}  // namespace frey13
