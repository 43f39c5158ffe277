#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace frey13 {

using ordered_json = nlohmann::ordered_json;

enum class ClaimStatus { Verified, VerifiedWithNote, Assumption, Failed };

std::string status_name(ClaimStatus s);

// One checked statement. `anchor` is a stable stage slug (e.g.
// "family/descent"), `values` carries whatever numbers back the claim.
struct Claim {
  std::string id;
  std::string anchor;
  std::string statement;
  ClaimStatus status = ClaimStatus::Verified;
  ordered_json values = ordered_json::object();
  std::string note;  // set for VerifiedWithNote / Assumption / Failed
};

class Report {
 public:
  void add(Claim c);
  void verified(const std::string& id, const std::string& anchor,
                const std::string& statement,
                ordered_json values = ordered_json::object());
  void verified_note(const std::string& id, const std::string& anchor,
                     const std::string& statement, const std::string& note,
                     ordered_json values = ordered_json::object());
  void assumption(const std::string& id, const std::string& anchor,
                  const std::string& statement, const std::string& note);
  void failed(const std::string& id, const std::string& anchor,
              const std::string& statement, const std::string& note,
              ordered_json values = ordered_json::object());

  const std::vector<Claim>& claims() const { return claims_; }
  bool all_ok() const;  // no Failed claim
  std::vector<std::string> assumption_ids() const;
  int failed_count() const;

  // timings are attached only when enabled so default output is
  // byte-stable across runs and worker counts
  void set_timings_enabled(bool on) { timings_ = on; }
  bool timings_enabled() const { return timings_; }
  void add_timing(const std::string& stage, double seconds);

  ordered_json to_json() const;
  std::string to_text() const;

 private:
  std::vector<Claim> claims_;
  bool timings_ = false;
  std::vector<std::pair<std::string, double>> stage_seconds_;
};

}  // namespace frey13
