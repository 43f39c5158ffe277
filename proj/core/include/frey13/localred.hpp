#pragma once

#include <string>

#include "frey13/quadfield.hpp"

namespace frey13 {

// Weierstrass model over Q(sqrt(13)) with integral coefficients.
struct QuadCurve {
  QuadElt a1, a2, a3, a4, a6;
};

QuadElt curve_b2(const QuadCurve& E);
QuadElt curve_b4(const QuadCurve& E);
QuadElt curve_b6(const QuadCurve& E);
QuadElt curve_b8(const QuadCurve& E);
QuadElt curve_c4(const QuadCurve& E);
QuadElt curve_c6(const QuadCurve& E);
QuadElt curve_disc(const QuadCurve& E);

// model change x = x' + r, y = y' + s x' + t
QuadCurve translate(const QuadCurve& E, const QuadElt& r, const QuadElt& s,
                    const QuadElt& t);
// model change (x, y) -> (u^2 x, u^3 y); all divisions must be exact
QuadCurve rescale(const QuadCurve& E, const QuadElt& u);

enum class KodairaType {
  I0,
  In,
  II,
  III,
  IV,
  I0star,
  Instar,
  IVstar,
  IIIstar,
  IIstar,
};

std::string kodaira_name(KodairaType t, int n);

struct LocalData {
  KodairaType type;
  int n = 0;           // component count for In / In*
  int f = 0;           // conductor exponent
  int v_disc = 0;      // valuation of the minimal discriminant
  int rescales = 0;    // non-minimality steps performed
  QuadCurve minimal;   // the model the classification happened on
};

// Tate's algorithm at the prime L, all residue characteristics. Works on
// any integral model; non-minimal input is rescaled internally (step 11).
LocalData tate_local(const QuadCurve& E, const QuadPrime& L);

// Reduction-type shortcut at primes of residue characteristic >= 5: strip
// twelfths off (v(disc), v(c4)) and read the type from what is left.
// Returns the conductor exponent only; used as a cross-check against
// tate_local, never instead of it.
int conductor_exponent_tame(const QuadCurve& E, const QuadPrime& L);

}  // namespace frey13
