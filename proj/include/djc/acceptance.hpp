#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace djc {

struct AcceptConfig {
  std::uint64_t seed = 0;      // added to every corpus seed
  int widen_rounds = 2;
  int oracle_cell_limit = 12;  // at most 14
  bool mutate_veblen = false;  // split the curve's own edges during refinement
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Runs all ten acceptance criteria. Throws BadParameters on a bad config.
std::vector<CriterionResult> run_acceptance(const AcceptConfig& config = {});

/// `criterion <id> <PASS|FAIL> <name>: <detail> (<seconds> s)`
std::string format_result(const CriterionResult& result);

/// Lower-case hex SHA-256.
std::string sha256_hex(const std::string& data);

}  // namespace djc
