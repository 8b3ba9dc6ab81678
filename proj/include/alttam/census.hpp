#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "alttam/alt_tamari.hpp"
#include "alttam/bigint.hpp"

namespace alttam {

enum class IntervalKind { Trivial, Covering, Left, Right, NotLinear };

std::string to_string(IntervalKind kind);

/// Structural shape of a pair (P, Q):
///   Covering  P = A d C B        Q = A C d B
///   Left(k)   P = A d^k C B      Q = A C d^k B
///   Right(k)  P = A d C_1..C_k B Q = A C_1..C_k d B
/// with every C a delta-excursion. `prefix` is |A| (0 for Trivial/NotLinear).
struct Classification {
  IntervalKind kind = IntervalKind::NotLinear;
  int height = -1;
  int prefix = 0;

  bool linear() const { return kind != IntervalKind::NotLinear; }
};

/// Pure word test; needs no poset. Ties at height 1 resolve to Covering.
/// Throws SizeMismatch.
Classification classify(const IncrementFunction& delta, const DyckPath& bottom, const DyckPath& top);

struct CountsTable {
  int n = 0;
  IncrementFunction delta;
  std::vector<BigInt> counts;              // linear intervals per height
  std::vector<std::uint64_t> left_counts;  // Left(k) per height
  std::vector<std::uint64_t> right_counts; // Right(k) per height
  // Comparable pairs where the structural classification disagreed with the
  // poset (different height, or linear on one side only). Zero when correct.
  std::uint64_t disagreements = 0;
  std::uint64_t comparable_pairs = 0;

  BigInt count(int height) const;
  BigInt total() const;
};

/// Linear intervals of Tam^delta_n by height. Work is split across `jobs`
/// threads by bottom element; the result does not depend on `jobs`.
CountsTable census(const AltTamariPoset& poset, int jobs = 1);
CountsTable census(const IncrementFunction& delta, int jobs = 1);

/// Number of linear intervals of height k in any Tam^delta_n (n >= 1).
BigInt closed_form(int n, int k);
BigInt total_closed_form(int n);

/// (left, right) counts of height k in a census. Throws HeightOutOfRange
/// unless 2 <= k < n.
std::pair<std::uint64_t, std::uint64_t> left_right_split(const CountsTable& table, int k);
std::pair<std::uint64_t, std::uint64_t> left_right_split(const IncrementFunction& delta, int k, int jobs = 1);
/// binom(2n - k, n + 1) for each side.
BigInt left_right_closed_form(int n, int k);

struct TableRow {
  int height = 0;
  BigInt count;
  BigInt expected;
  bool match = false;
};

/// Rows for heights 0..max(n-1, highest observed height).
std::vector<TableRow> table_rows(const CountsTable& table);
bool matches_closed_form(const CountsTable& table);

std::string to_csv(const std::vector<CountsTable>& tables);
std::string to_json(const std::vector<CountsTable>& tables);

}  // namespace alttam
