#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace harmocass::verify {

/// One named check: passes when measured <= tolerance. `measured` is the
/// worst residual seen (or the mismatch count for exact checks).
struct Check {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
};

struct VerifyReport {
  std::vector<Check> checks;

  bool overall() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

enum class Suite { Projectile, Oscillator, Cassini, Oracle, All };

/// Maps a suite name ("projectile", "oscillator", "cassini", "oracle",
/// "all") to its enum; nullopt for anything else.
std::optional<Suite> suite_from_name(std::string_view name);

/// Runs the property checks of the selected module suite(s). When
/// tol_override is set it replaces every check's default tolerance; checks
/// never throw on failure, they report.
VerifyReport run_suite(Suite suite, std::optional<double> tol_override = {});

}  // namespace harmocass::verify
