// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vlcpos/scenario.hpp"

namespace vlcpos {

/// REPRODUCED: matches the published number within tolerance.
/// TREND-ONLY: the qualitative claim holds, the number does not transfer.
/// NOT-REPRODUCIBLE: the published number cannot follow from the model; the
/// check asserts that the documented gap is still present.
enum class Verdict { Reproduced, TrendOnly, NotReproducible };

std::string_view to_string(Verdict v) noexcept;

struct ReplicationCheck {
  std::string id;
  std::string description;
  double published = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;  // only meaningful for Reproduced
  Verdict verdict = Verdict::Reproduced;
  bool passed = false;
  std::string note;

  double abs_diff() const;
};

struct ReplicationReport {
  std::vector<ReplicationCheck> checks;
  std::vector<std::string> assumptions;

  bool all_passed() const noexcept;
  const ReplicationCheck* find(std::string_view id) const noexcept;
};

/// Half a unit in the last printed digit of the published 4-decimal tables.
inline constexpr double kPublishedRoundingTolerance = 5e-4;  // m

ReplicationReport replication_report(const ScenarioConfig& config,
                                     RunOptions options = {});

}  // namespace vlcpos
