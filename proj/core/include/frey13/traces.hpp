#pragma once

#include <map>
#include <string>
#include <vector>

#include "frey13/quadfield.hpp"

namespace frey13 {

// Frobenius trace enumeration for the curve family at one prime L of
// Q(sqrt(13)), over every parameter class (a, b) mod l^k with (a, b) not
// both divisible by l (pairs violating coprimality carry no information).
//
// The trace only depends on the class of (a, b) mod l; the enumeration is
// nevertheless re-run on lifted grids (mod l^2, and mod 9 and 27 when
// l = 3) and any disagreement is a hard error. That guards the one step
// where representatives enter irreducibly: the residue characteristic 3
// path classifies a non-minimal integral model per pair.
struct TraceOptions {
  // 0 = none; d restricts the grid to d | a+b (or d | a^2+b^2 with
  // squares) and only bites when d equals the residue characteristic
  int d = 0;
  // enumerate E(a^2, b^2) instead of E(a, b)
  bool squares = false;
  // override the largest lift grid modulus (0 = default policy)
  long long lift_modulus = 0;
  int workers = 1;
};

struct TraceResult {
  std::string prime_name;
  std::vector<int> traces;       // sorted, deduplicated
  long long classes_scanned = 0;  // over all grids
  long long classes_skipped = 0;  // multiplicative-reduction classes
  std::vector<long long> grids;  // moduli actually enumerated
};

TraceResult trace_set(const QuadPrime& L, const TraceOptions& opt);

// trace of one specific curve of the family at L (good reduction required)
int frey_trace_at(const QuadPrime& L, const BigInt& a, const BigInt& b);

// the eleven primes the enumeration runs over (no L2, no L13)
const std::vector<std::string>& trace_prime_names();

// reference trace sets the enumeration must reproduce exactly
const std::vector<int>& expected_trace_set(const std::string& prime_name);

// expected singletons when d | a+b forces extra structure: the map sends
// each prime of residue characteristic d to its single surviving trace
// (d = 3 pins both primes over 3). The squares family with 5 | a^2 + b^2
// has the same singleton -2 at L5.
std::map<std::string, int> expected_constrained_traces(int d);

// point counts (projective, including infinity)
long long count_points_short(const ResidueField& k, FFElt a4, FFElt a6);
long long count_points_general(const ResidueField& k, FFElt a1, FFElt a2,
                               FFElt a3, FFElt a4, FFElt a6);
// same count with the nesting of the enumeration loops swapped; must agree
long long count_points_general_swapped(const ResidueField& k, FFElt a1,
                                       FFElt a2, FFElt a3, FFElt a4,
                                       FFElt a6);

}  // namespace frey13
