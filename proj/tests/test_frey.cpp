#include "doctest.h"
#include "frey13/frey.hpp"

using namespace frey13;

TEST_CASE("family construction validates and caches") {
  const FreyFamily& F = frey_family();
  CHECK(&F == &frey_family());
  CHECK(F.a4.degree == 4);
  CHECK(F.a6.degree == 6);
  CHECK(norm(F.alpha) == 169);
  CHECK(norm(F.alpha * F.beta * F.gamma) == 4826809);
}

TEST_CASE("the stated scalar-form pairing does not vanish but a unique one does") {
  CHECK_FALSE(naive_pairing_vanishes());
  std::array<int, 3> q = vanishing_pairing();
  CHECK(q == std::array<int, 3>{0, 2, 1});
}

TEST_CASE("descended coefficients match the reference listing") {
  const FreyFamily& F = frey_family();
  CHECK(F.a4 == reference_a4());
  CHECK(F.a6 == reference_a6());
  // palindromy pins the b^6 slot; the stray extra term stays unreproduced
  CHECK(F.a6.coeff[6] == F.a6.coeff[0]);
  CHECK_FALSE(F.a6.coeff[6] == reference_a6_extra_b6_term());
  CHECK_FALSE(F.a6.coeff[6] == F.a6.coeff[0] + reference_a6_extra_b6_term());
}

TEST_CASE("specializations match the worked values") {
  FreyCoeffs c = frey_at(BigInt(1), BigInt(1));
  CHECK(c.a4 == QuadElt::from_w(BigInt(-5616), BigInt(-1296)));
  CHECK(c.a6 == QuadElt::from_w(BigInt(-101088), BigInt(-25056)));
  FreyCoeffs d = frey_at(BigInt(1), BigInt(-1));
  CHECK(d.a4 == QuadElt::from_w(BigInt(-28080), BigInt(5616)));
  CHECK(d.a6 == QuadElt::from_w(BigInt(2167776), BigInt(-527904)));
}

TEST_CASE("form arithmetic over the quadratic field") {
  QuadPoly p;
  p.degree = 1;
  p.coeff = {QuadElt::integer(BigInt(1)), QuadElt::from_w(BigInt(0), BigInt(1))};
  QuadPoly sq = p * p;
  CHECK(sq.degree == 2);
  CHECK(sq.coeff[1] == QuadElt::from_w(BigInt(0), BigInt(2)));
  CHECK(sq.coeff[2] == QuadElt::integer(BigInt(13)));
  CHECK(is_zero(sq - sq));
  QuadPoly tripled = BigInt(3) * p;
  CHECK(tripled.coeff[0] == QuadElt::integer(BigInt(3)));
  // conjugation distributes over products
  CHECK(conj(sq) == conj(p) * conj(p));
  CHECK(sq.eval(BigInt(2), BigInt(3)) ==
        p.eval(BigInt(2), BigInt(3)) * p.eval(BigInt(2), BigInt(3)));
}

TEST_CASE("invariant identities descend with the right scaling") {
  CHECK(family_invariant_identity_holds());
  CHECK(family_disc() == family_disc_from_cyc());
  // both sides are degree-12 forms; spot-check one value
  QuadElt at11 = family_disc().eval(BigInt(1), BigInt(1));
  FreyCoeffs c = frey_at(BigInt(1), BigInt(1));
  QuadElt expect = BigInt(-16) * (BigInt(4) * c.a4 * c.a4 * c.a4 +
                                  BigInt(27) * c.a6 * c.a6);
  CHECK(at11 == expect);
}

TEST_CASE("cyclotomic invariants are sigma^2-fixed before descending") {
  auto inv = family_invariants_cyc();
  for (const auto& c : inv.first.coeff) CHECK(sigma_pow(c, 2) == c);
  for (const auto& c : inv.second.coeff) CHECK(sigma_pow(c, 2) == c);
  const FreyFamily& F = frey_family();
  for (size_t i = 0; i < inv.first.coeff.size(); ++i)
    CHECK(descend(inv.first.coeff[i]) == F.a4.coeff[i]);
  for (size_t i = 0; i < inv.second.coeff.size(); ++i)
    CHECK(descend(inv.second.coeff[i]) == F.a6.coeff[i]);
}
