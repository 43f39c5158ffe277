#pragma once

#include <array>
#include <utility>
#include <vector>

#include "frey13/cyclotomic.hpp"
#include "frey13/quadfield.hpp"

namespace frey13 {

// Homogeneous bivariate form over Q(sqrt(13)): sum_i coeff[i] x^(d-i) y^i.
struct QuadPoly {
  int degree = 0;
  std::vector<QuadElt> coeff;

  QuadElt eval(const BigInt& x, const BigInt& y) const;
  bool operator==(const QuadPoly& o) const;
};

QuadPoly operator+(const QuadPoly& p, const QuadPoly& q);
QuadPoly operator-(const QuadPoly& p, const QuadPoly& q);
QuadPoly operator*(const QuadPoly& p, const QuadPoly& q);
QuadPoly operator*(const BigInt& n, const QuadPoly& p);

// conjugate every coefficient (w -> -w)
QuadPoly conj(const QuadPoly& p);

bool is_zero(const QuadPoly& p);

// discriminant -16 (4 a4^3 + 27 a6^2) of the descended short model
QuadPoly family_disc();
// the same form computed upstairs: 6^12 times the discriminant
// 16 (ABC)^2 of y^2 = x(x - A)(x + B), descended coefficient-wise
QuadPoly family_disc_from_cyc();

// the cyclotomic invariants before descent, already rescaled:
// (-27 c4, -54 c6)
std::pair<CycPoly, CycPoly> family_invariants_cyc();
// recomputes c4^3 - c6^2 - 1728 disc over Z[zeta] and tests it for zero
bool family_invariant_identity_holds();

// The two-parameter curve family y^2 = x(x - A)(x + B) built from the
// sextic phi1 = f1 f2 f3. A, B, C are scaled quadratic forms with
// A + B + C = 0 and sigma^4 cycling A -> B -> C -> A, so the standard
// invariants of the family descend to Q(sqrt(13)).
struct FreyFamily {
  CycPoly f1, f2, f3;
  CycElt alpha, beta, gamma;
  CycPoly A, B, C;
  // short model y^2 = x^3 + a4(a,b) x + a6(a,b), coefficients descended
  QuadPoly a4, a6;
};

// Built once and cached; construction validates every structural identity
// (f1 f2 f3 = phi1, norms, the sigma^4 cycle, A + B + C = 0) and throws on
// any mismatch.
const FreyFamily& frey_family();

// True if alpha f1 + beta f2 + gamma f3 = 0 as stated; it does not (a
// transcription slip), so this returns false and the builder pairs the
// scalars with the permutation of the forms that actually vanishes.
bool naive_pairing_vanishes();

// The permutation q of {0,1,2} with alpha*f_{q[0]} + beta*f_{q[1]} +
// gamma*f_{q[2]} = 0, found by exhausting all six. Exactly one works.
std::array<int, 3> vanishing_pairing();

// Reference polynomials the family is expected to reproduce term by term.
QuadPoly reference_a4();
// All seven slots of a6; the b^6 slot equals the a^6 slot (the polynomial
// is palindromic). The source listing carries one extra b^6 term beyond
// this; see reference_a6_extra_b6_term.
QuadPoly reference_a6();
// The stray second b^6 term in the source listing. It is not reproduced by
// the family (nor is its sum with the palindromic slot) and is flagged as
// an erratum, not an error.
QuadElt reference_a6_extra_b6_term();

struct FreyCoeffs {
  QuadElt a4, a6;
};
FreyCoeffs frey_at(const BigInt& a, const BigInt& b);

}  // namespace frey13
