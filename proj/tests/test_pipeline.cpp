#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "frey13/pipeline.hpp"

using namespace frey13;

namespace {

const std::string kData = FREY13_DATA_DIR;

bool has_claim(const Report& r, const std::string& id, ClaimStatus st) {
  for (const auto& c : r.claims())
    if (c.id == id) return c.status == st;
  return false;
}

}  // namespace

TEST_CASE("algebra stage verifies every identity") {
  Report r;
  CHECK(run_algebra(r));
  CHECK(r.failed_count() == 0);
  CHECK(has_claim(r, "phi-split", ClaimStatus::Verified));
  CHECK(has_claim(r, "pairing-null-relation", ClaimStatus::VerifiedWithNote));
  CHECK(has_claim(r, "scalar-valuations", ClaimStatus::Verified));
  CHECK(has_claim(r, "sigma4-cycle", ClaimStatus::Verified));
}

TEST_CASE("family stage verifies the model and names its assumption") {
  Report r;
  CHECK(run_family(r));
  CHECK(r.failed_count() == 0);
  CHECK(has_claim(r, "a4-matches-reference", ClaimStatus::Verified));
  CHECK(has_claim(r, "a6-extra-term", ClaimStatus::VerifiedWithNote));
  CHECK(has_claim(r, "unit-normalization", ClaimStatus::Assumption));
  CHECK(r.assumption_ids() == std::vector<std::string>{"unit-normalization"});
}

TEST_CASE("conductor stage verifies both primes and the tame shortcut") {
  Report r;
  CHECK(run_conductors(r));
  CHECK(r.failed_count() == 0);
  CHECK(has_claim(r, "even-prime-pattern", ClaimStatus::Verified));
  CHECK(has_claim(r, "thirteen-first-case", ClaimStatus::Verified));
  CHECK(has_claim(r, "tame-shortcut-agreement", ClaimStatus::Verified));
}

TEST_CASE("trace stage emits one claim per prime") {
  Report r;
  PipelineOptions opt;
  opt.workers = 2;
  CHECK(run_traces(r, opt));
  CHECK(r.claims().size() == 11);
  for (const auto& c : r.claims()) {
    CHECK(c.status == ClaimStatus::Verified);
    CHECK(c.id.rfind("trace-set-", 0) == 0);
  }
}

TEST_CASE("constrained and squares trace passes carry distinct claim ids") {
  Report r;
  PipelineOptions opt;
  opt.d = 5;
  CHECK(run_traces(r, opt));
  CHECK(has_claim(r, "trace-set-d5-L5", ClaimStatus::Verified));

  Report r2;
  PipelineOptions sq;
  sq.squares = true;
  CHECK(run_traces(r2, sq));
  CHECK(has_claim(r2, "squares-trace-L5", ClaimStatus::Verified));
  CHECK(has_claim(r2, "squares-sum-parity", ClaimStatus::Verified));
}

TEST_CASE("eliminate stage, squares part only") {
  Report r;
  PipelineOptions opt;
  opt.data_dir = kData;
  opt.part = "II";
  CHECK(run_eliminate(r, opt));
  CHECK(has_claim(r, "newform-table-loaded", ClaimStatus::Verified));
  CHECK(has_claim(r, "parity-excludes-s3", ClaimStatus::Verified));
  CHECK(has_claim(r, "squares-sieve-survivors", ClaimStatus::Verified));
  CHECK(has_claim(r, "squares-l5-kills-f2", ClaimStatus::Verified));
  // part I claims must be absent
  for (const auto& c : r.claims()) CHECK(c.id != "sieve-survivors");
}

TEST_CASE("eliminate stage, full") {
  Report r;
  PipelineOptions opt;
  opt.data_dir = kData;
  CHECK(run_eliminate(r, opt));
  CHECK(has_claim(r, "sieve-survivors", ClaimStatus::Verified));
  CHECK(has_claim(r, "survivor-f2-matches-sample", ClaimStatus::Verified));
  CHECK(has_claim(r, "survivor-f4-matches-sample", ClaimStatus::Verified));
  for (int d : {3, 5, 7, 11})
    CHECK(has_claim(r, "eliminate-d" + std::to_string(d), ClaimStatus::Verified));
  CHECK(has_claim(r, "f4-inertia", ClaimStatus::Assumption));
}

TEST_CASE("bound stage lands on the advertised exponent bound") {
  Report r;
  PipelineOptions opt;
  opt.data_dir = kData;
  CHECK(run_bound(r, opt));
  CHECK(has_claim(r, "irreducibility-bound", ClaimStatus::Verified));
  CHECK(has_claim(r, "nonrational-bound-reference", ClaimStatus::Verified));
  CHECK(has_claim(r, "nonrational-bound-enumerated", ClaimStatus::Verified));
  bool found = false;
  for (const auto& c : r.claims())
    if (c.id == "final-bound") {
      found = true;
      CHECK(c.status == ClaimStatus::Verified);
      CHECK(c.values["bound"] == "4992539");
    }
  CHECK(found);
}

TEST_CASE("a failing stage is caught, recorded and isolated") {
  Report r;
  PipelineOptions opt;
  opt.data_dir = "no/such/dir";
  CHECK_FALSE(run_eliminate(r, opt));
  CHECK(r.failed_count() == 1);
  CHECK(has_claim(r, "eliminate-exception", ClaimStatus::Failed));
  // the report object stays usable
  CHECK(run_algebra(r));
}

TEST_CASE("verdict logic demands exactly the named assumptions") {
  Report clean;
  clean.verified("x", "s/a", "fine");
  clean.assumption("unit-normalization", "s/b", "trusted", "why");
  clean.assumption("f4-inertia", "s/c", "trusted", "why");
  CHECK(verdict_clean(clean));

  Report missing;
  missing.verified("x", "s/a", "fine");
  missing.assumption("unit-normalization", "s/b", "trusted", "why");
  CHECK_FALSE(verdict_clean(missing));

  Report extra;
  extra.assumption("unit-normalization", "s/a", "trusted", "why");
  extra.assumption("f4-inertia", "s/b", "trusted", "why");
  extra.assumption("surprise", "s/c", "trusted", "why");
  CHECK_FALSE(verdict_clean(extra));

  Report broken;
  broken.failed("x", "s/a", "bad", "boom");
  broken.assumption("unit-normalization", "s/b", "trusted", "why");
  broken.assumption("f4-inertia", "s/c", "trusted", "why");
  CHECK_FALSE(verdict_clean(broken));

  CHECK(named_assumption_ids() ==
        std::vector<std::string>{"unit-normalization", "f4-inertia"});
}

TEST_CASE("stage output is byte-identical across runs and worker counts") {
  auto once = [](int workers) {
    Report r;
    PipelineOptions opt;
    opt.workers = workers;
    run_algebra(r);
    run_family(r);
    run_traces(r, opt);
    return r.to_json().dump(2);
  };
  std::string a = once(1);
  CHECK(a == once(1));
  CHECK(a == once(3));
}

TEST_CASE("the full pipeline ends clean") {
  Report r;
  PipelineOptions opt;
  opt.data_dir = kData;
  opt.workers = 2;
  CHECK(run_all(r, opt));
  CHECK(r.failed_count() == 0);
  CHECK(verdict_clean(r));
  CHECK(has_claim(r, "pipeline-verdict", ClaimStatus::Verified));
  auto ids = r.assumption_ids();
  std::sort(ids.begin(), ids.end());
  CHECK(ids == std::vector<std::string>{"f4-inertia", "unit-normalization"});
  CHECK(r.claims().size() > 50);
}
