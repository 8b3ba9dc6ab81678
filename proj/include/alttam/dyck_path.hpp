#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alttam/limits.hpp"

namespace alttam {

enum class Step : std::uint8_t { Up, Down };

// Arbitrary step sequence. Used for subwords (A, B, C_i, ...) which need not
// be Dyck words on their own.
using Word = std::vector<Step>;

// Contiguous subword of a path, 0-based inclusive bounds.
struct Span {
  int start = 0;
  int end = 0;

  int length() const { return end - start + 1; }
  bool contains(int index) const { return start <= index && index <= end; }
  bool contains(const Span& other) const { return start <= other.start && other.end <= end; }
  bool disjoint(const Span& other) const { return end < other.start || other.end < start; }

  friend bool operator==(const Span&, const Span&) = default;
};

/// Immutable Dyck path of size n <= kMaxPathSize.
///
/// Steps are packed most-significant-bit first, with Down stored as 1, so for
/// two paths of the same size the integer order of bits() is the
/// lexicographic order of their words with u < d.
class DyckPath {
 public:
  DyckPath() = default;

  /// Throws NonDyckWord when the steps are unbalanced or dip below zero.
  static DyckPath from_steps(std::span<const Step> steps);

  int size() const { return size_; }
  int length() const { return 2 * size_; }
  bool empty() const { return size_ == 0; }

  Step operator[](int index) const {
    return (bits_ >> (63 - index)) & 1U ? Step::Down : Step::Up;
  }
  bool is_up(int index) const { return (*this)[index] == Step::Up; }
  bool is_down(int index) const { return (*this)[index] == Step::Down; }

  Word steps() const;
  std::string word() const;
  std::uint64_t bits() const { return bits_; }

  /// 0-based step index of the up step u_label (labels are 1-based).
  int up_position(int label) const;
  /// Label of the up step at a step index; the index must hold an up step.
  int up_label_at(int index) const;
  /// 1-based up-step labels h_1..h_n rendered as 0-based positions.
  std::vector<int> up_positions() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend std::strong_ordering operator<=>(const DyckPath& a, const DyckPath& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
  int size_ = 0;
};

/// Accepts u/d, U/D and 1/0 (1 = up). Whitespace is ignored.
DyckPath parse_dyck(std::string_view text);
Word parse_word(std::string_view text);
std::string to_string(std::span<const Step> word);

bool is_dyck_word(std::span<const Step> word);

std::vector<int> heights(const DyckPath& path);

/// 0-based index of the down step matching u_i.
int match_up(const DyckPath& path, int label);
Span excursion(const DyckPath& path, int label);

/// 0-based index of the d in every du factor.
std::vector<int> valleys(const DyckPath& path);
/// 0-based index of the u in every ud factor.
std::vector<int> peaks(const DyckPath& path);

DyckPath mirror(const DyckPath& path);

/// True iff `lower` stays weakly under `upper` (the Dyck lattice order).
bool includes(const DyckPath& lower, const DyckPath& upper);

/// All paths of size n in lexicographic order (u < d).
std::vector<DyckPath> enumerate_paths(int n);
std::vector<DyckPath> enumerate_paths(int n, int cap);

std::uint64_t catalan_u64(int n);

}  // namespace alttam

template <>
struct std::hash<alttam::DyckPath> {
  std::size_t operator()(const alttam::DyckPath& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.bits() ^ (static_cast<std::uint64_t>(p.size()) * 0x9E3779B97F4A7C15ULL));
  }
};
