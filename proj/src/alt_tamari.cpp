#include "alttam/alt_tamari.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "alttam/error.hpp"

namespace alttam {

IncrementFunction::IncrementFunction(std::vector<std::uint8_t> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorKind::InvalidArgument, "increment function of size 0");
  for (std::uint8_t v : values_) {
    if (v > 1) throw Error(ErrorKind::InvalidArgument, "increment values must be 0 or 1");
  }
}

IncrementFunction IncrementFunction::ones(int n) {
  return IncrementFunction(std::vector<std::uint8_t>(static_cast<std::size_t>(std::max(n, 0)), 1));
}

IncrementFunction IncrementFunction::zeros(int n) {
  return IncrementFunction(std::vector<std::uint8_t>(static_cast<std::size_t>(std::max(n, 0)), 0));
}

std::string IncrementFunction::to_string() const {
  std::string out;
  for (std::uint8_t v : values_) out.push_back(v ? '1' : '0');
  return out;
}

bool IncrementFunction::pointwise_leq(const IncrementFunction& other) const {
  if (size() != other.size()) throw Error(ErrorKind::SizeMismatch, "increment functions of different sizes");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > other.values_[i]) return false;
  }
  return true;
}

IncrementFunction parse_delta(std::string_view text, int n) {
  if (text == "tamari" || text == "dyck") {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "named increment function needs a size");
    return text == "tamari" ? IncrementFunction::ones(n) : IncrementFunction::zeros(n);
  }
  std::vector<std::uint8_t> values;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::InvalidArgument, "increment function '" + std::string(text) + "' is not a bitstring");
    }
    values.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  if (n > 0 && static_cast<int>(values.size()) != n) {
    throw Error(ErrorKind::SizeMismatch, "increment function '" + std::string(text) + "' does not have length " +
                                             std::to_string(n));
  }
  return IncrementFunction(std::move(values));
}

std::vector<IncrementFunction> delta_test_set(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "size must be positive");
  std::vector<IncrementFunction> out;
  if (n <= 5) {
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<std::uint8_t> values(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = (mask >> (n - 1 - i)) & 1U;
      out.emplace_back(std::move(values));
    }
    return out;
  }
  out.push_back(IncrementFunction::zeros(n));
  out.push_back(IncrementFunction::ones(n));
  std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(n));
  std::bernoulli_distribution coin(0.5);
  while (out.size() < 10) {
    std::vector<std::uint8_t> values(static_cast<std::size_t>(n));
    for (auto& v : values) v = coin(rng) ? 1 : 0;
    IncrementFunction candidate(std::move(values));
    if (std::find(out.begin(), out.end(), candidate) == out.end()) out.push_back(std::move(candidate));
  }
  return out;
}

namespace {

void require_size(const IncrementFunction& delta, const DyckPath& path) {
  if (delta.size() != path.size()) {
    throw Error(ErrorKind::SizeMismatch, "increment function of size " + std::to_string(delta.size()) +
                                             " for a path of size " + std::to_string(path.size()));
  }
}

}  // namespace

int delta_elevation(const IncrementFunction& delta, const DyckPath& path, Span span) {
  require_size(delta, path);
  if (span.start < 0 || span.end >= path.length() || span.start > span.end) {
    throw Error(ErrorKind::SpanOutOfRange, "span outside the path");
  }
  int label = 0;
  for (int i = 0; i < span.start; ++i) label += path.is_up(i) ? 1 : 0;
  int total = 0;
  for (int i = span.start; i <= span.end; ++i) {
    if (path.is_up(i)) {
      total += delta(++label);
    } else {
      total -= 1;
    }
  }
  return total;
}

int delta_excursion_length(const IncrementFunction& delta, std::span<const Step> word, int start,
                           int first_label) {
  int label = first_label;
  int elevation = 0;
  for (int i = start; i < static_cast<int>(word.size()); ++i) {
    if (word[static_cast<std::size_t>(i)] == Step::Up) {
      elevation += delta(label++);
    } else {
      elevation -= 1;
    }
    if (elevation == 0) return i - start + 1;
  }
  return -1;
}

Span delta_excursion(const IncrementFunction& delta, const DyckPath& path, int label) {
  require_size(delta, path);
  const int start = path.up_position(label);
  Word steps = path.steps();
  const int len = delta_excursion_length(delta, steps, start, label);
  return Span{start, start + len - 1};
}

DyckPath delta_rotation(const IncrementFunction& delta, const DyckPath& path, int label) {
  require_size(delta, path);
  const int start = path.up_position(label);
  if (start == 0 || !path.is_down(start - 1)) {
    throw Error(ErrorKind::NotAValley, "u_" + std::to_string(label) + " is not preceded by a down step");
  }
  Word steps = path.steps();
  const int len = delta_excursion_length(delta, steps, start, label);
  // shift C_i one step left and drop the d after it
  auto first = steps.begin() + (start - 1);
  std::rotate(first, first + 1, first + 1 + len);
  return DyckPath::from_steps(steps);
}

std::vector<Rotation> upper_covers(const IncrementFunction& delta, const DyckPath& path) {
  require_size(delta, path);
  std::vector<Rotation> out;
  Word steps = path.steps();
  int label = 0;
  for (int i = 0; i < path.length(); ++i) {
    if (!path.is_up(i)) continue;
    ++label;
    if (i == 0 || !path.is_down(i - 1)) continue;
    const int len = delta_excursion_length(delta, steps, i, label);
    Word rotated = steps;
    auto first = rotated.begin() + (i - 1);
    std::rotate(first, first + 1, first + 1 + len);
    out.push_back(Rotation{label, DyckPath::from_steps(rotated)});
  }
  return out;
}

StepStats step_stats(const IncrementFunction& delta, const DyckPath& path) {
  require_size(delta, path);
  StepStats stats;
  Word steps = path.steps();
  int label = 0;
  for (int i = 0; i < path.length(); ++i) {
    if (!path.is_up(i)) continue;
    ++label;
    stats.h.push_back(i + 1);
    stats.ell.push_back(delta_excursion_length(delta, steps, i, label));
  }
  return stats;
}

bool leq_by_search(const IncrementFunction& delta, const DyckPath& lower, const DyckPath& upper) {
  require_size(delta, lower);
  require_size(delta, upper);
  std::vector<DyckPath> stack{lower};
  std::unordered_set<DyckPath> seen{lower};
  while (!stack.empty()) {
    DyckPath current = stack.back();
    stack.pop_back();
    if (current == upper) return true;
    for (const Rotation& r : upper_covers(delta, current)) {
      // every rotation moves up in the inclusion order, so leaving the region
      // under `upper` can never come back
      if (!includes(r.result, upper)) continue;
      if (seen.insert(r.result).second) stack.push_back(r.result);
    }
  }
  return false;
}

AltTamariPoset AltTamariPoset::build(const IncrementFunction& delta) { return build(delta, poset_cap()); }

AltTamariPoset AltTamariPoset::build(const IncrementFunction& delta, int cap) {
  const int n = delta.size();
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "posets need size at least 1");
  if (n > cap) {
    throw Error(ErrorKind::SizeTooLarge, "size " + std::to_string(n) + " exceeds poset cap " + std::to_string(cap));
  }
  AltTamariPoset out;
  out.delta_ = delta;
  out.paths_ = enumerate_paths(n, std::max(cap, n));
  out.index_.reserve(out.paths_.size());
  std::vector<std::string> labels;
  labels.reserve(out.paths_.size());
  for (std::size_t i = 0; i < out.paths_.size(); ++i) {
    out.index_.emplace(out.paths_[i], i);
    labels.push_back(out.paths_[i].word());
  }
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < out.paths_.size(); ++i) {
    for (const Rotation& r : upper_covers(delta, out.paths_[i])) covers.emplace_back(i, out.index_.at(r.result));
  }
  // Rotations are exactly the covers; a redundant one means a bug upstream.
  out.poset_ = Poset::build(std::move(labels), std::move(covers), Reduction::Assert);
  return out;
}

std::size_t AltTamariPoset::index_of(const DyckPath& path) const {
  auto it = index_.find(path);
  if (it == index_.end()) throw Error(ErrorKind::UnknownElement, "path " + path.word() + " is not in the poset");
  return it->second;
}

bool refines(const AltTamariPoset& finer, const AltTamariPoset& coarser) {
  if (finer.n() != coarser.n()) throw Error(ErrorKind::SizeMismatch, "posets of different sizes");
  // identical element order, so up-set rows compare bit for bit
  for (std::size_t i = 0; i < finer.paths().size(); ++i) {
    if (!simd::is_subset(coarser.poset().up_set(i), finer.poset().up_set(i))) return false;
  }
  return true;
}

bool refines(const IncrementFunction& finer, const IncrementFunction& coarser, int n) {
  if (finer.size() != n || coarser.size() != n) throw Error(ErrorKind::SizeMismatch, "increment size != n");
  return refines(AltTamariPoset::build(finer), AltTamariPoset::build(coarser));
}

}  // namespace alttam
