#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "frey13/cyclotomic.hpp"

using namespace frey13;

namespace {

std::vector<std::pair<long, long>> coprime_pairs(uint64_t seed, size_t count,
                                                 long bound) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<long, long>> out;
  while (out.size() < count) {
    long a = static_cast<long>(rng() % static_cast<unsigned long>(2 * bound + 1)) - bound;
    long b = static_cast<long>(rng() % static_cast<unsigned long>(2 * bound + 1)) - bound;
    if ((a == 0 && b == 0) || std::gcd(a, b) != 1) continue;
    out.emplace_back(a, b);
  }
  return out;
}

}  // namespace

TEST_CASE("power basis folds zeta^12 away canonically") {
  CycElt z12 = CycElt::zeta_pow(12);
  CycElt sum = CycElt::zero();
  for (int i = 0; i <= 11; ++i) sum = sum + CycElt::zeta_pow(i);
  CHECK((z12 + sum).is_zero());  // 1 + zeta + ... + zeta^12 = 0
  CHECK(CycElt::zeta_pow(13) == CycElt::one());
  CHECK(CycElt::zeta_pow(-1) == CycElt::zeta_pow(12));
}

TEST_CASE("norm and trace of basic elements") {
  CHECK(norm(CycElt::one() - CycElt::zeta_pow(1)) == 13);
  CHECK(norm(CycElt::integer(BigInt(2))) == 4096);  // 2^12
  CHECK(trace_to_q(CycElt::one()) == 12);
  CHECK(trace_to_q(CycElt::zeta_pow(5)) == -1);
  // norm is multiplicative
  CycElt x = CycElt::zeta_pow(2) + CycElt::integer(BigInt(3));
  CycElt y = CycElt::zeta_pow(7) - CycElt::one();
  CHECK(norm(x * y) == norm(x) * norm(y));
}

TEST_CASE("galois action has order 12 and fixes rationals") {
  CycElt x = CycElt::zeta_pow(3) + BigInt(2) * CycElt::zeta_pow(8);
  CHECK(sigma_pow(x, 12) == x);
  CHECK(sigma_pow(CycElt::integer(BigInt(7)), 1) == CycElt::integer(BigInt(7)));
  // sigma(zeta) = zeta^2
  CHECK(sigma_pow(CycElt::zeta_pow(1), 1) == CycElt::zeta_pow(2));
  CHECK(sigma_pow(CycElt::zeta_pow(1), 6) == CycElt::zeta_pow(12));
}

TEST_CASE("valuation at the prime over 13") {
  CycElt lam = CycElt::one() - CycElt::zeta_pow(1);
  CHECK(val13(lam) == 1);
  CHECK(val13(CycElt::integer(BigInt(13))) == 12);
  CHECK(val13(lam * lam * CycElt::integer(BigInt(13))) == 14);
  // K-normalized valuation demands a sigma^6-fixed input
  CHECK(val13_K(CycElt::integer(BigInt(13))) == 6);
  CHECK_THROWS_AS(val13_K(lam), std::domain_error);
}

TEST_CASE("descent accepts exactly the sigma^2-fixed elements") {
  // w = sqrt(13) as a Gauss sum: sum of zeta^(QR) minus sum of zeta^(NQR)
  CycElt w = CycElt::zero();
  for (int i : {1, 3, 4, 9, 10, 12}) w = w + CycElt::zeta_pow(i);
  for (int i : {2, 5, 6, 7, 8, 11}) w = w - CycElt::zeta_pow(i);
  CHECK(sigma_pow(w, 2) == w);
  CHECK(descend(w) == QuadElt::from_w(BigInt(0), BigInt(1)));
  CHECK(descend(sigma_pow(w, 1)) == QuadElt::from_w(BigInt(0), BigInt(-1)));

  // eta0 = sum of zeta^(QR) = (-1 + w)/2
  CycElt eta0 = CycElt::zero();
  for (int i : {1, 3, 4, 9, 10, 12}) eta0 = eta0 + CycElt::zeta_pow(i);
  CHECK(descend(eta0) == QuadElt(BigInt(-1), BigInt(1)));

  CHECK(descend(CycElt::integer(BigInt(-5))) == QuadElt::integer(BigInt(-5)));
  CHECK_THROWS_AS(descend(CycElt::zeta_pow(1)), std::domain_error);
}

TEST_CASE("the cyclotomic quotient splits into residue and nonresidue sextics") {
  CHECK(phi_full().degree == 12);
  CHECK(phi_qr().degree == 6);
  CHECK((phi_qr() * phi_nqr()) == phi_full());
  // direct evaluation agrees with the integer form of (x^13 + y^13)/(x + y)
  for (const auto& [a, b] : coprime_pairs(23, 30, 40)) {
    BigInt va(a), vb(b);
    CHECK(phi_full().eval(va, vb) == CycElt::integer(phi_int_eval(va, vb)));
    // the two sextics multiply to it over the ring as well
    CycElt prod = phi_qr().eval(va, vb) * phi_nqr().eval(va, vb);
    CHECK(prod == CycElt::integer(phi_int_eval(va, vb)));
  }
}

TEST_CASE("difference-norm certificate: common divisors of the linear factors "
          "live over 13 only") {
  for (const auto& [a, b] : coprime_pairs(29, 25, 50)) {
    BigInt b12 = 1;
    for (int i = 0; i < 12; ++i) b12 *= BigInt(b < 0 ? -b : b);
    for (int i = 1; i <= 12; ++i) {
      CycElt lin = CycElt::integer(BigInt(a)) + BigInt(b) * CycElt::zeta_pow(i);
      BigInt n = norm(lin);
      if (n < 0) n = -n;
      if (n == 0) continue;
      // |N(zeta^i - zeta^j) * b| divides 13 * |b|^12 for every j
      BigInt g = gcd(n, BigInt(13) * b12);
      while (g % 13 == 0) g /= 13;
      CHECK(g == 1);
    }
  }
}

TEST_CASE("when 13 divides a + b every linear factor has valuation exactly 1") {
  std::vector<std::pair<long, long>> pairs = {
      {1, 12}, {2, 11}, {5, 8}, {1, 25}, {7, -20}, {14, -1}, {3, 23}};
  for (const auto& [a, b] : pairs) {
    REQUIRE((a + b) % 13 == 0);
    REQUIRE(std::gcd(a, b) == 1);
    for (int i = 1; i <= 12; ++i) {
      CycElt lin = CycElt::integer(BigInt(a)) + BigInt(b) * CycElt::zeta_pow(i);
      CHECK(val13(lin) == 1);
    }
    // and the quotient picks up 13 exactly once
    BigInt phi = phi_int_eval(BigInt(a), BigInt(b));
    if (phi < 0) phi = -phi;
    CHECK(phi % 13 == 0);
    CHECK((phi / 13) % 13 != 0);
  }
}

TEST_CASE("descended sextic values: norm, conjugate and ramified valuation") {
  const QuadPrime& L13 = prime_by_name("L13");
  for (const auto& [a, b] : coprime_pairs(31, 25, 40)) {
    BigInt va(a), vb(b);
    QuadElt q1 = descend(phi_qr().eval(va, vb));
    QuadElt q2 = descend(phi_nqr().eval(va, vb));
    CHECK(quad_norm(q1) == phi_int_eval(va, vb));
    CHECK(q2 == q1.conj());
    int expected = (a + b) % 13 == 0 ? 1 : 0;
    if (!q1.is_zero()) CHECK(val_at(L13, q1) == expected);
  }
}
