#pragma once

#include <string>

#include "frey13/report.hpp"

namespace frey13 {

struct PipelineOptions {
  std::string data_dir = "data";
  int workers = 1;
  int d = 0;             // 0 = run all of 3, 5, 7, 11 where relevant
  bool squares = false;  // traces stage only
  std::string part;      // eliminate stage: "I", "II", or "" for both
  long long lift_modulus = 0;
};

// Each stage appends claims to the report and returns true when it added
// no Failed claim. Stages are independent; `all` chains every one.
bool run_algebra(Report& r);
bool run_family(Report& r);
bool run_conductors(Report& r);
bool run_traces(Report& r, const PipelineOptions& opt);
bool run_eliminate(Report& r, const PipelineOptions& opt);
bool run_bound(Report& r, const PipelineOptions& opt);
bool run_all(Report& r, const PipelineOptions& opt);

// the two statements taken on trust, by claim id
const std::vector<std::string>& named_assumption_ids();

// full verification: no failures and exactly the named assumptions
bool verdict_clean(const Report& r);

}  // namespace frey13
