#ifndef POLYPART_REPORT_HPP
#define POLYPART_REPORT_HPP

#include "polypart/integer.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polypart {

/// Outcome of an exhaustive or sampled check. Only the first violation is
/// kept as the counterexample.
struct VerificationReport {
  // Ordered parameters, e.g. {"t", 2}, {"H", 25}.
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  bool passed = true;
  std::vector<Integer> counts;
  std::uint64_t checked = 0;
  std::optional<nlohmann::ordered_json> counterexample;

  void fail(nlohmann::ordered_json example) {
    if (passed)
      counterexample = std::move(example);
    passed = false;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json doc;
    for (const auto &[key, value] : parameters)
      doc[key] = value;
    doc["status"] = passed ? "pass" : "fail";
    auto list = nlohmann::ordered_json::array();
    for (const auto &c : counts)
      list.push_back(c <= Integer(std::numeric_limits<std::int64_t>::max())
                         ? nlohmann::ordered_json(static_cast<std::int64_t>(c))
                         : nlohmann::ordered_json(c.str()));
    doc["counts"] = std::move(list);
    doc["checked"] = checked;
    doc["counterexample"] = counterexample ? *counterexample : nlohmann::ordered_json();
    return doc;
  }
};

class VerificationFailed : public Error {
public:
  explicit VerificationFailed(nlohmann::ordered_json counterexample)
      : Error("verification failed: " + counterexample.dump()),
        counterexample_(std::move(counterexample)) {}

  const nlohmann::ordered_json &counterexample() const { return counterexample_; }

private:
  nlohmann::ordered_json counterexample_;
};

inline void require_pass(const VerificationReport &report) {
  if (!report.passed)
    throw VerificationFailed(report.counterexample.value_or(nlohmann::ordered_json()));
}

} // namespace polypart

#endif
