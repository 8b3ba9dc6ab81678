#pragma once

namespace alttam {

// Size caps. Each default can be raised (or lowered) process-wide with the
// ALT_TAMARI_MAX_N environment variable, which replaces every cap below.
inline constexpr int kDefaultPathCap = 14;
inline constexpr int kDefaultPosetCap = 9;
inline constexpr int kDefaultHasseCap = 7;

// Hard limit of the packed path representation (2n steps in 64 bits).
inline constexpr int kMaxPathSize = 32;

int path_cap();
int poset_cap();
int hasse_cap();

}  // namespace alttam
