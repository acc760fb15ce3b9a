#pragma once
// Acceptance suites 1..11. Each suite is seeded, exact, and checks a
// library computation against an independent route (a second algorithm,
// a floating-point count, or a closed form).

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace braidcoh {

struct CriterionResult {
  int id = 0;
  std::string tag;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240611;
  /// Holds data/p2_torus.pres and tests/fixtures/anchors.txt.
  std::filesystem::path repo_root;
};

/// Repository root recorded at build time.
std::filesystem::path default_repo_root();

struct CriterionInfo {
  int id;
  std::string tag;
  std::string name;
};

const std::vector<CriterionInfo>& acceptance_criteria();

/// Accepts an id ("7") or a tag ("kunneth"); throws PreconditionError otherwise.
int criterion_id(const std::string& id_or_tag);

CriterionResult run_criterion(int id, const AcceptanceOptions& opt);

}  // namespace braidcoh
