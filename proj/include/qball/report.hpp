#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qball {

enum class Status { pass, fail, skipped };

const char* to_string(Status s) noexcept;

/// Outcome of one verification suite.
struct Report {
  std::string suite;
  int n = 0;
  int cutoff = 0;
  Status status = Status::pass;
  std::size_t residual_count = 0;
  std::vector<std::string> residual_sample;
  bool truncated = false;
  long long wall_ms = 0;
  std::vector<std::string> notes;

  /// Records a nonzero residual and flips the status to FAIL.
  void add_residual(const std::string& rendered);
  void note(const std::string& s) { notes.push_back(s); }
  bool passed() const noexcept { return status == Status::pass; }
  /// Folds a sub-report into this one; FAIL dominates, then PASS, then SKIPPED.
  void absorb(const Report& other);

  static constexpr std::size_t sample_limit = 8;
};

nlohmann::ordered_json to_json(const Report& r);

}  // namespace qball
