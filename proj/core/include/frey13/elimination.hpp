#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "frey13/exactalg.hpp"

namespace frey13 {

// column order of the eigenvalue table; the matching residue field sizes
// are 3,3,17,17,23,23,25,29,29,49,121
const std::vector<std::string>& eigenvalue_columns();

struct NewformRow {
  int s = 0;  // level class: conductor valuation at the prime over 2
  std::array<long long, 11> a{};
  int line = 0;  // source line, for diagnostics
};

struct FactorEntry {
  int s = 0;
  long long multiplicity = 0;
  IntPoly poly;  // monic factor of a Hecke characteristic polynomial
  int line = 0;
};

// Loaders validate as they read: eigenvalues must be integral and satisfy
// the Weil bound a^2 <= 4q column by column, factors must be monic with
// positive multiplicity. Errors carry the offending line number.
std::vector<NewformRow> load_newforms(const std::string& path);
std::vector<FactorEntry> load_factors(const std::string& path);

struct FormFate {
  NewformRow form;
  bool survived = false;
  int failing_column = -1;   // first column whose set misses the eigenvalue
  BigInt margin = 0;         // max |a - s| over the allowed set there
};

struct SieveOutcome {
  std::vector<FormFate> fates;
  std::vector<NewformRow> survivors;
  BigInt margin = 0;  // max margin over eliminated forms
};

// Keep exactly the rows whose eigenvalue lies in the allowed set at every
// column. allowed[i] indexes eigenvalue_columns().
SieveOutcome sieve(const std::vector<NewformRow>& forms,
                   const std::vector<std::set<int>>& allowed);

// Bound below which the mod-p representation could be reducible: the
// largest prime dividing any nonzero res(x^12 - 1, x^2 - a x + 3) over
// |a| <= 3. Evaluates to 97.
BigInt irreducibility_bound();

struct NonrationalReport {
  struct Evaluation {
    int s;
    long long multiplicity;
    int degree;
    long long value_at;   // the evaluation point
    BigInt char_value;    // factor evaluated there (never zero)
    BigInt max_prime;
  };
  std::vector<Evaluation> rows;
  BigInt bound = 0;  // max prime over all rows
};

// Forms with non-rational eigenvalues: a congruence a_f = t (mod P) with
// t rational forces p | Norm(a_f - t) = |c(t)| for the factor c of the
// characteristic polynomial, so the largest prime dividing c(t) over the
// relevant t bounds p. Factors of degree 1 belong to the rational table
// and are excluded; a zero value would mean a rational root of an
// irreducible nonlinear factor and is a hard error.
NonrationalReport nonrational_bound(const std::vector<FactorEntry>& factors,
                                    const std::vector<long long>& points);

// the two evaluation sets run side by side: the reference points, and the
// set the trace enumeration itself produces at the first prime over 3
std::vector<long long> reference_eval_points();    // {3, -1}
std::vector<long long> enumerated_eval_points();   // {-3, -1}

}  // namespace frey13
