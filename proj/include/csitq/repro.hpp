#pragma once

#include <string>
#include <vector>

namespace csitq {

struct ReproCheck {
  std::string name;
  std::string detail;
  bool pass = false;
};

/// Result of one bundled claim check (thm1, thm2, cor1, thm4, thm5, lemma1,
/// lemma2). Passing requires every sub-check within its pinned tolerance.
struct ReproReport {
  std::string claim;
  std::vector<ReproCheck> checks;
  double seconds = 0.0;

  bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return !checks.empty();
  }
};

std::vector<std::string> known_claims();

/// Runs the named claim bundle. m_override replaces the default graph size
/// where the claim has one (cor1: limit evaluated at m = 1000 by default).
/// Throws std::invalid_argument for unknown claims.
ReproReport reproduce(const std::string& claim, int m_override = 0);

}  // namespace csitq
