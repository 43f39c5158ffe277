#include "frey13/report.hpp"

#include <stdexcept>

namespace frey13 {

std::string status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Verified: return "verified";
    case ClaimStatus::VerifiedWithNote: return "verified-with-note";
    case ClaimStatus::Assumption: return "assumption";
    case ClaimStatus::Failed: return "failed";
  }
  return "?";
}

void Report::add(Claim c) {
  for (const auto& prev : claims_)
    if (prev.id == c.id) throw std::logic_error("duplicate claim id " + c.id);
  claims_.push_back(std::move(c));
}

void Report::verified(const std::string& id, const std::string& anchor,
                      const std::string& statement, ordered_json values) {
  add({id, anchor, statement, ClaimStatus::Verified, std::move(values), ""});
}

void Report::verified_note(const std::string& id, const std::string& anchor,
                           const std::string& statement, const std::string& note,
                           ordered_json values) {
  add({id, anchor, statement, ClaimStatus::VerifiedWithNote, std::move(values), note});
}

void Report::assumption(const std::string& id, const std::string& anchor,
                        const std::string& statement, const std::string& note) {
  add({id, anchor, statement, ClaimStatus::Assumption, ordered_json::object(), note});
}

void Report::failed(const std::string& id, const std::string& anchor,
                    const std::string& statement, const std::string& note,
                    ordered_json values) {
  add({id, anchor, statement, ClaimStatus::Failed, std::move(values), note});
}

bool Report::all_ok() const { return failed_count() == 0; }

int Report::failed_count() const {
  int n = 0;
  for (const auto& c : claims_)
    if (c.status == ClaimStatus::Failed) ++n;
  return n;
}

std::vector<std::string> Report::assumption_ids() const {
  std::vector<std::string> out;
  for (const auto& c : claims_)
    if (c.status == ClaimStatus::Assumption) out.push_back(c.id);
  return out;
}

void Report::add_timing(const std::string& stage, double seconds) {
  if (timings_) stage_seconds_.emplace_back(stage, seconds);
}

ordered_json Report::to_json() const {
  ordered_json doc;
  doc["schema_version"] = "1";
  doc["claims"] = ordered_json::array();
  for (const auto& c : claims_) {
    ordered_json j;
    j["id"] = c.id;
    j["anchor"] = c.anchor;
    j["statement"] = c.statement;
    j["status"] = status_name(c.status);
    if (!c.note.empty()) j["note"] = c.note;
    if (!c.values.empty()) j["values"] = c.values;
    doc["claims"].push_back(std::move(j));
  }
  ordered_json summary;
  summary["claims"] = claims_.size();
  summary["failed"] = failed_count();
  summary["assumptions"] = assumption_ids();
  doc["summary"] = std::move(summary);
  if (timings_) {
    ordered_json t = ordered_json::object();
    for (const auto& [stage, sec] : stage_seconds_) t[stage] = sec;
    doc["timings"] = std::move(t);
  }
  return doc;
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& c : claims_) {
    std::string tag;
    switch (c.status) {
      case ClaimStatus::Verified: tag = "ok  "; break;
      case ClaimStatus::VerifiedWithNote: tag = "note"; break;
      case ClaimStatus::Assumption: tag = "assm"; break;
      case ClaimStatus::Failed: tag = "FAIL"; break;
    }
    out += "[" + tag + "] " + c.anchor + " " + c.id + ": " + c.statement;
    if (!c.note.empty()) out += " (" + c.note + ")";
    out += "\n";
  }
  out += "claims: " + std::to_string(claims_.size()) +
         ", failed: " + std::to_string(failed_count()) +
         ", assumptions: " + std::to_string(assumption_ids().size()) + "\n";
  if (timings_) {
    for (const auto& [stage, sec] : stage_seconds_)
      out += "time " + stage + ": " + std::to_string(sec) + "s\n";
  }
  return out;
}

}  // namespace frey13
