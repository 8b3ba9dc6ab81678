#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "alttam/dyck_path.hpp"
#include "alttam/poset.hpp"

namespace alttam {

/// delta: {1..n} -> {0,1}. Up step u_i raises the delta-altitude by delta(i);
/// every down step lowers it by one.
class IncrementFunction {
 public:
  IncrementFunction() = default;
  /// Throws InvalidArgument on an empty vector or a value other than 0/1.
  explicit IncrementFunction(std::vector<std::uint8_t> values);

  static IncrementFunction ones(int n);
  static IncrementFunction zeros(int n);

  int size() const { return static_cast<int>(values_.size()); }
  /// delta(label), label in 1..n.
  int operator()(int label) const { return values_[static_cast<std::size_t>(label - 1)]; }
  const std::vector<std::uint8_t>& values() const { return values_; }

  /// Bitstring form, e.g. "0110".
  std::string to_string() const;

  /// Pointwise order delta <= other.
  bool pointwise_leq(const IncrementFunction& other) const;

  friend bool operator==(const IncrementFunction&, const IncrementFunction&) = default;

 private:
  std::vector<std::uint8_t> values_;
};

/// Accepts a bitstring ("0110") or the names "tamari" (all ones) and "dyck"
/// (all zeros). Named forms need n >= 1; a bitstring must have length n when
/// n > 0.
IncrementFunction parse_delta(std::string_view text, int n = 0);

inline constexpr std::uint64_t kDefaultSeed = 0xA117;

/// Both constant functions, every function for n <= 5, plus eight seeded
/// random functions for larger n. Deterministic for a given seed.
std::vector<IncrementFunction> delta_test_set(int n, std::uint64_t seed = kDefaultSeed);

/// Sum of per-step increments over a span of the path.
int delta_elevation(const IncrementFunction& delta, const DyckPath& path, Span span);

/// Length of the delta-excursion of the up step at `start` in an arbitrary
/// word whose up steps from `start` on carry labels first_label, first_label+1, ...
/// Returns -1 if the word ends before the elevation returns to zero.
int delta_excursion_length(const IncrementFunction& delta, std::span<const Step> word, int start,
                           int first_label);

Span delta_excursion(const IncrementFunction& delta, const DyckPath& path, int label);

/// P = A d C_i B  ->  A C_i d B. Throws NotAValley.
DyckPath delta_rotation(const IncrementFunction& delta, const DyckPath& path, int label);

struct Rotation {
  int label = 0;
  DyckPath result;
};

/// One rotation per valley, in left-to-right order.
std::vector<Rotation> upper_covers(const IncrementFunction& delta, const DyckPath& path);

struct StepStats {
  std::vector<int> h;    // 1-based position of u_i
  std::vector<int> ell;  // length of the delta-excursion of u_i
};

StepStats step_stats(const IncrementFunction& delta, const DyckPath& path);

/// Reachability by rotations, pruned by Dyck-lattice inclusion. Meant for
/// one-off queries where building the whole poset would be wasteful.
bool leq_by_search(const IncrementFunction& delta, const DyckPath& lower, const DyckPath& upper);

class AltTamariPoset {
 public:
  /// Elements are enumerate_paths(n) in order; covers are all delta-rotations.
  /// Throws SizeTooLarge above the cap, and InvalidArgument if some rotation
  /// turns out not to be a cover.
  static AltTamariPoset build(const IncrementFunction& delta);
  static AltTamariPoset build(const IncrementFunction& delta, int cap);

  int n() const { return delta_.size(); }
  const IncrementFunction& delta() const { return delta_; }
  const Poset& poset() const { return poset_; }
  const std::vector<DyckPath>& paths() const { return paths_; }
  const DyckPath& path(std::size_t i) const { return paths_.at(i); }
  /// Throws UnknownElement.
  std::size_t index_of(const DyckPath& path) const;
  bool leq(const DyckPath& a, const DyckPath& b) const { return poset_.leq(index_of(a), index_of(b)); }

 private:
  IncrementFunction delta_;
  std::vector<DyckPath> paths_;
  std::unordered_map<DyckPath, std::size_t> index_;
  Poset poset_;
};

/// True iff every relation of `coarser` also holds in `finer`.
bool refines(const AltTamariPoset& finer, const AltTamariPoset& coarser);
bool refines(const IncrementFunction& finer, const IncrementFunction& coarser, int n);

}  // namespace alttam
