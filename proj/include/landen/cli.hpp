#pragma once

#include <string>

#include <json.hpp>

namespace landen::cli {

/// One command invocation, fully evaluated. rendered is the structured
/// document for standard output (JSON, or CSV for `compare --format csv`);
/// summary is the one-line human account for standard error. exit_code is 0
/// when every contained check passed, 1 when a check failed, 2 for usage or
/// domain errors.
struct RunResult {
  nlohmann::ordered_json report;
  std::string rendered;
  std::string summary;
  bool passed = false;
  int exit_code = 2;
};

/// Verification sweeps. target is one of lemma1, lemma2, vandermonde, knuth,
/// absorption, step1, step2, theorem1, collapse, all; bound is the series
/// order for the step/theorem targets and the sweep range for the rest.
RunResult cmd_verify(const std::string& target, long bound);

/// Perimeter of the ellipse with semi-axes a >= b (exact rational text,
/// "p/q" or decimal) to the requested digits. method is maclaurin, ivory or
/// both; both also checks cross-method agreement.
RunResult cmd_perimeter(const std::string& a_text, const std::string& b_text, long digits,
                        const std::string& method);

/// Term counts each series needs to push its proven perimeter error below
/// eps, plus the coefficient tables used. format is json or csv.
RunResult cmd_compare(const std::string& a_text, const std::string& b_text,
                      const std::string& eps_text, const std::string& format);

}  // namespace landen::cli
