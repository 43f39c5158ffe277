#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "frey13/elimination.hpp"
#include "frey13/traces.hpp"

using namespace frey13;

TEST_CASE("enumerated trace sets match the frozen references") {
  for (const char* name : {"L3_0", "L3_1", "L5", "L17_0"}) {
    TraceOptions opt;
    TraceResult r = trace_set(prime_by_name(name), opt);
    CHECK(r.traces == expected_trace_set(name));
  }
}

TEST_CASE("grid policy and class accounting") {
  TraceOptions opt;
  TraceResult r3 = trace_set(prime_by_name("L3_0"), opt);
  CHECK(r3.grids == std::vector<long long>{3, 9, 27});
  // coprime classes: m^2 - (m/3)^2 per grid
  CHECK(r3.classes_scanned == 8 + 72 + 648);
  CHECK(r3.classes_skipped == 0);  // good reduction on the whole grid

  TraceResult r5 = trace_set(prime_by_name("L5"), opt);
  CHECK(r5.grids == std::vector<long long>{5, 25});
  CHECK(r5.classes_scanned == 24 + 600);
  // no grid prime is 1 mod 13, so the discriminant never vanishes on the grid
  CHECK(r5.classes_skipped == 0);

  opt.lift_modulus = 125;
  TraceResult deep = trace_set(prime_by_name("L5"), opt);
  CHECK(deep.grids == std::vector<long long>{5, 25, 125});
  CHECK(deep.traces == expected_trace_set("L5"));
}

TEST_CASE("the excluded primes are rejected") {
  TraceOptions opt;
  CHECK_THROWS_AS(trace_set(prime_by_name("L2"), opt), std::invalid_argument);
  CHECK_THROWS_AS(trace_set(prime_by_name("L13"), opt), std::invalid_argument);
  CHECK_THROWS_AS(expected_trace_set("L2"), std::out_of_range);
  CHECK_THROWS_AS(expected_constrained_traces(4), std::invalid_argument);
}

TEST_CASE("divisor constraint pins singletons at its own prime only") {
  TraceOptions opt;
  opt.d = 3;
  TraceResult c3 = trace_set(prime_by_name("L3_0"), opt);
  CHECK(c3.traces == std::vector<int>{-3});
  TraceResult c3b = trace_set(prime_by_name("L3_1"), opt);
  CHECK(c3b.traces == std::vector<int>{-1});
  // at a prime of a different residue characteristic the filter is inert
  TraceResult other = trace_set(prime_by_name("L7"), opt);
  CHECK(other.traces == expected_trace_set("L7"));

  opt.d = 5;
  TraceResult c5 = trace_set(prime_by_name("L5"), opt);
  CHECK(c5.traces == std::vector<int>{-2});
  CHECK(expected_constrained_traces(5).at("L5") == -2);
}

TEST_CASE("squared parameters give a subfamily, with its own singleton") {
  TraceOptions opt;
  opt.squares = true;
  TraceResult sq = trace_set(prime_by_name("L3_1"), opt);
  const auto& plain = expected_trace_set("L3_1");
  for (int t : sq.traces)
    CHECK(std::find(plain.begin(), plain.end(), t) != plain.end());

  opt.d = 5;
  TraceResult sq5 = trace_set(prime_by_name("L5"), opt);
  CHECK(sq5.traces == std::vector<int>{-2});
}

TEST_CASE("worker count changes nothing observable") {
  TraceOptions one;
  one.workers = 1;
  TraceOptions three;
  three.workers = 3;
  for (const char* name : {"L3_0", "L17_0"}) {
    TraceResult a = trace_set(prime_by_name(name), one);
    TraceResult b = trace_set(prime_by_name(name), three);
    CHECK(a.traces == b.traces);
    CHECK(a.classes_scanned == b.classes_scanned);
    CHECK(a.classes_skipped == b.classes_skipped);
    CHECK(a.grids == b.grids);
  }
}

TEST_CASE("single-curve traces reproduce the two sample eigenvalue rows") {
  const std::array<long long, 11> row11 = {-1, 1, 3, 7, -7, -1,
                                           2,  -3, -7, -1, 3};
  const std::array<long long, 11> row1m1 = {-3, -1, 1,  -3,  -3, -9,
                                            -2, -7, 5,  -11, -15};
  const auto& cols = eigenvalue_columns();
  REQUIRE(cols.size() == 11);
  for (size_t i = 0; i < cols.size(); ++i) {
    const QuadPrime& L = prime_by_name(cols[i]);
    CHECK(frey_trace_at(L, BigInt(1), BigInt(1)) == row11[i]);
    CHECK(frey_trace_at(L, BigInt(1), BigInt(-1)) == row1m1[i]);
  }
  CHECK(frey_trace_at(prime_by_name("L5"), BigInt(1), BigInt(1)) == 2);
}

TEST_CASE("swapping the enumeration loop order never changes a count") {
  std::mt19937_64 rng(0x5eed);
  for (const char* name : {"L3_0", "L5", "L17_0", "L2"}) {
    ResidueField k(prime_by_name(name));
    for (int iter = 0; iter < 6; ++iter) {
      auto pick = [&]() {
        return FFElt{static_cast<long long>(rng() % k.p()),
                     k.degree() == 2 ? static_cast<long long>(rng() % k.p())
                                     : 0};
      };
      FFElt a1 = pick(), a2 = pick(), a3 = pick(), a4 = pick(), a6 = pick();
      CHECK(count_points_general(k, a1, a2, a3, a4, a6) ==
            count_points_general_swapped(k, a1, a2, a3, a4, a6));
    }
  }
}

TEST_CASE("short and general counts agree away from characteristic 2") {
  ResidueField k(prime_by_name("L17_0"));
  std::mt19937_64 rng(0x5eed + 1);
  for (int iter = 0; iter < 8; ++iter) {
    FFElt a4 = k.from_int(static_cast<long long>(rng() % k.p()));
    FFElt a6 = k.from_int(static_cast<long long>(rng() % k.p()));
    CHECK(count_points_short(k, a4, a6) ==
          count_points_general(k, k.zero(), k.zero(), k.zero(), a4, a6));
  }
  ResidueField k2(prime_by_name("L2"));
  CHECK_THROWS_AS(count_points_short(k2, k2.one(), k2.one()),
                  std::invalid_argument);
}
