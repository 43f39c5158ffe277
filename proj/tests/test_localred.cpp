#include <numeric>

#include "doctest.h"
#include "frey13/frey.hpp"
#include "frey13/localred.hpp"

using namespace frey13;

namespace {

QuadElt qi(long n) { return QuadElt::integer(BigInt(n)); }

QuadCurve short_model(long a2, long a4, long a6) {
  return QuadCurve{qi(0), qi(a2), qi(0), qi(a4), qi(a6)};
}

QuadCurve family_curve(long a, long b) {
  FreyCoeffs c = frey_at(BigInt(a), BigInt(b));
  return QuadCurve{QuadElt(), QuadElt(), QuadElt(), c.a4, c.a6};
}

QuadCurve inflate(const QuadCurve& E, const QuadElt& u) {
  QuadElt u2 = u * u, u3 = u2 * u;
  return QuadCurve{u * E.a1, u2 * E.a2, u3 * E.a3, u2 * u2 * E.a4,
                   u3 * u3 * E.a6};
}

}  // namespace

TEST_CASE("standard invariants satisfy c4^3 - c6^2 = 1728 disc") {
  QuadCurve E{QuadElt::from_w(BigInt(1), BigInt(1)), qi(-2),
              QuadElt::from_w(BigInt(0), BigInt(1)), qi(7), qi(-11)};
  QuadElt c4 = curve_c4(E), c6 = curve_c6(E), d = curve_disc(E);
  QuadElt b2 = curve_b2(E), b4 = curve_b4(E), b6 = curve_b6(E);
  CHECK(c4 * c4 * c4 - c6 * c6 == BigInt(1728) * d);
  CHECK(c4 == b2 * b2 - BigInt(24) * b4);
  CHECK(c6 == -(b2 * b2 * b2) + BigInt(36) * b2 * b4 - BigInt(216) * b6);
  // b8 is determined by the others
  CHECK(BigInt(4) * curve_b8(E) == b2 * b6 - b4 * b4);
}

TEST_CASE("translation leaves the invariants alone, rescaling divides them") {
  QuadCurve E = short_model(1, -3, 11);
  QuadElt r = qi(2), s = QuadElt::from_w(BigInt(1), BigInt(1)), t = qi(-1);
  QuadCurve T = translate(E, r, s, t);
  CHECK(curve_c4(T) == curve_c4(E));
  CHECK(curve_c6(T) == curve_c6(E));
  CHECK(curve_disc(T) == curve_disc(E));

  QuadElt u = qi(3);
  QuadCurve big = inflate(E, u);
  QuadElt u4 = u * u * u * u;
  CHECK(curve_c4(big) == u4 * curve_c4(E));
  CHECK(curve_disc(big) == u4 * u4 * u4 * curve_disc(E));
  QuadCurve back = rescale(big, u);
  CHECK(curve_c4(back) == curve_c4(E));
  CHECK(curve_disc(back) == curve_disc(E));
}

TEST_CASE("reduction types at an inert prime, one model per type") {
  const QuadPrime& L5 = prime_by_name("L5");

  // v(c4) = 0, v(disc) = 3: multiplicative
  LocalData i3 = tate_local(short_model(1, 0, 125), L5);
  CHECK(i3.type == KodairaType::In);
  CHECK(i3.n == 3);
  CHECK(i3.f == 1);
  CHECK(i3.v_disc == 3);
  CHECK(kodaira_name(i3.type, i3.n) == "I3");

  // quadratic twist of the previous model by 5
  LocalData i3s = tate_local(short_model(5, 0, 15625), L5);
  CHECK(i3s.type == KodairaType::Instar);
  CHECK(i3s.n == 3);
  CHECK(i3s.f == 2);
  CHECK(i3s.v_disc == 9);
  CHECK(kodaira_name(i3s.type, i3s.n) == "I3*");

  LocalData i0s = tate_local(short_model(0, 25, 125), L5);
  CHECK(i0s.type == KodairaType::I0star);
  CHECK(i0s.f == 2);
  CHECK(i0s.v_disc == 6);

  LocalData iv_s = tate_local(short_model(0, 0, 625), L5);
  CHECK(iv_s.type == KodairaType::IVstar);
  CHECK(iv_s.f == 2);
  CHECK(iv_s.v_disc == 8);

  LocalData iii_s = tate_local(short_model(0, 125, 0), L5);
  CHECK(iii_s.type == KodairaType::IIIstar);
  CHECK(iii_s.f == 2);
  CHECK(iii_s.v_disc == 9);

  LocalData ii_s = tate_local(short_model(0, 0, 3125), L5);
  CHECK(ii_s.type == KodairaType::IIstar);
  CHECK(ii_s.f == 2);
  CHECK(ii_s.v_disc == 10);

  // small types from the same shapes one twist down
  LocalData ii = tate_local(short_model(0, 0, 5), L5);
  CHECK(ii.type == KodairaType::II);
  CHECK(ii.f == 2);
  LocalData iii = tate_local(short_model(0, 5, 0), L5);
  CHECK(iii.type == KodairaType::III);
  CHECK(iii.f == 2);
  LocalData iv = tate_local(short_model(0, 0, 25), L5);
  CHECK(iv.type == KodairaType::IV);
  CHECK(iv.f == 2);

  LocalData good = tate_local(short_model(0, -1, 1), L5);
  CHECK(good.type == KodairaType::I0);
  CHECK(good.f == 0);
  CHECK(good.v_disc == 0);
}

TEST_CASE("non-minimal input is rescaled once, classification unchanged") {
  for (const char* name : {"L2", "L5", "L13"}) {
    const QuadPrime& L = prime_by_name(name);
    QuadCurve E = family_curve(2, 1);
    LocalData base = tate_local(E, L);
    LocalData big = tate_local(inflate(E, L.gen), L);
    CHECK(big.rescales == base.rescales + 1);
    CHECK(big.type == base.type);
    CHECK(big.n == base.n);
    CHECK(big.f == base.f);
    CHECK(big.v_disc == base.v_disc);
  }
}

TEST_CASE("family models at the even prime sort by the mod-4 sum rule") {
  const QuadPrime& L2 = prime_by_name("L2");
  LocalData e13 = tate_local(family_curve(1, 3), L2);
  CHECK(e13.type == KodairaType::III);
  CHECK(e13.f == 3);
  CHECK(e13.rescales == 1);
  LocalData e11 = tate_local(family_curve(1, 1), L2);
  CHECK(e11.type == KodairaType::II);
  CHECK(e11.f == 4);
  CHECK(e11.rescales == 1);
  LocalData e12 = tate_local(family_curve(1, 2), L2);
  CHECK(e12.f == 4);
}

TEST_CASE("family models at the ramified prime split on 13 | a+b") {
  const QuadPrime& L13 = prime_by_name("L13");
  LocalData generic = tate_local(family_curve(1, 1), L13);
  CHECK(generic.type == KodairaType::II);
  CHECK(generic.f == 2);
  CHECK(generic.v_disc == 2);
  LocalData special = tate_local(family_curve(1, 12), L13);
  CHECK(special.type == KodairaType::IV);
  CHECK(special.f == 2);
  CHECK(special.v_disc == 4);
}

TEST_CASE("tame shortcut agrees with the full algorithm away from 2 and 13") {
  for (const char* name : {"L5", "L7", "L11", "L17_1", "L29_0"}) {
    const QuadPrime& L = prime_by_name(name);
    for (long a = 1; a <= 4; ++a)
      for (long b = -3; b <= 3; ++b) {
        if (b == 0 || std::gcd(a, b) != 1) continue;
        QuadCurve E = family_curve(a, b);
        CHECK(conductor_exponent_tame(E, L) == tate_local(E, L).f);
      }
  }
}
