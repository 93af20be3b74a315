#ifndef ISGX_VALIDATION_HPP
#define ISGX_VALIDATION_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace isgx {

struct CheckFailure {
  std::string check;    // dotted name of the failed check, e.g. "axiom-ii"
  std::string witness;  // human-readable witness data
  double residual = 0.0;
};

/// Outcome of a validation pass: passed() iff no failure was recorded.
class ValidationReport {
 public:
  bool passed() const { return failures_.empty(); }

  void record_check() { ++checks_run_; }

  void fail(std::string check, std::string witness, double residual = 0.0) {
    failures_.push_back({std::move(check), std::move(witness), residual});
  }

  /// Runs one named check: counts it, records a failure unless ok.
  void expect(bool ok, const std::string& check, const std::string& witness,
              double residual = 0.0) {
    record_check();
    if (!ok) fail(check, witness, residual);
  }

  /// Appends all failures of `other` under `prefix.`, accumulating counts.
  void absorb(const std::string& prefix, const ValidationReport& other) {
    checks_run_ += other.checks_run_;
    for (const auto& f : other.failures_)
      failures_.push_back({prefix + "." + f.check, f.witness, f.residual});
  }

  int checks_run() const { return checks_run_; }
  const std::vector<CheckFailure>& failures() const { return failures_; }

  nlohmann::json to_json() const {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : failures_)
      fs.push_back({{"check", f.check}, {"witness", f.witness}, {"residual", f.residual}});
    return {{"passed", passed()}, {"checks_run", checks_run_}, {"failures", fs}};
  }

 private:
  int checks_run_ = 0;
  std::vector<CheckFailure> failures_;
};

}  // namespace isgx

#endif  // ISGX_VALIDATION_HPP
