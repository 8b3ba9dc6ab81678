#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alttam/alt_tamari.hpp"

namespace alttam {

struct VerifyOptions {
  int n_max = 6;
  std::vector<std::string> only;  // empty runs every property
  std::uint64_t seed = kDefaultSeed;
  int jobs = 1;
};

struct PropertyReport {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// census, bijections, covering, refinement, extremes, lemmas, mirror, trees, series
const std::vector<std::string>& property_names();

/// Runs the selected properties in a fixed order. Throws InvalidArgument for an
/// unknown name in `only`.
std::vector<PropertyReport> run_verify(const VerifyOptions& options);

}  // namespace alttam
