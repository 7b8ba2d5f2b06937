#include "qball/report.hpp"

namespace qball {

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skipped: return "SKIPPED";
  }
  return "?";
}

void Report::add_residual(const std::string& rendered) {
  ++residual_count;
  if (residual_sample.size() < sample_limit) residual_sample.push_back(rendered);
  status = Status::fail;
}

void Report::absorb(const Report& other) {
  residual_count += other.residual_count;
  for (const auto& s : other.residual_sample) {
    if (residual_sample.size() < sample_limit) residual_sample.push_back(s);
  }
  for (const auto& s : other.notes) notes.push_back(s);
  truncated = truncated || other.truncated;
  if (other.status == Status::fail) {
    status = Status::fail;
  } else if (status == Status::skipped && other.status == Status::pass) {
    status = Status::pass;
  }
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["n"] = r.n;
  j["cutoff"] = r.cutoff;
  j["status"] = to_string(r.status);
  j["residual_count"] = r.residual_count;
  j["residual_sample"] = r.residual_sample;
  j["truncated"] = r.truncated;
  j["wall_ms"] = r.wall_ms;
  j["notes"] = r.notes;
  return j;
}

}  // namespace qball
