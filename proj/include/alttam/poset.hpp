#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "alttam/bitrow.hpp"

namespace alttam {

using Cover = std::pair<std::size_t, std::size_t>;  // (low, high)

// How build treats covers implied by other covers.
enum class Reduction {
  Reduce,  // drop them and count them in removed_redundant()
  Assert,  // throw InvalidArgument; for generators that promise a Hasse diagram
};

/// Finite poset given by its Hasse diagram, with the reachability closure
/// held as dense bit rows in both directions.
class Poset {
 public:
  Poset() = default;

  /// Throws DuplicateElement, CycleDetected, IndexOutOfRange.
  static Poset build(std::vector<std::string> labels, std::vector<Cover> covers,
                     Reduction reduction = Reduction::Reduce);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Throws UnknownElement.
  std::size_t index_of(const std::string& label) const;

  /// Sorted (low, high) pairs of the Hasse diagram.
  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_.at(i); }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_.at(i); }
  std::size_t removed_redundant() const { return removed_redundant_; }

  bool leq(std::size_t a, std::size_t b) const;
  std::span<const std::uint64_t> up_set(std::size_t a) const { return up_.row(a); }
  std::span<const std::uint64_t> down_set(std::size_t b) const { return down_.row(b); }

  /// Ascending element indices of [a, b]; empty when a is not below b.
  std::vector<std::size_t> interval_elements(std::size_t a, std::size_t b) const;
  std::size_t interval_size(std::size_t a, std::size_t b) const;

  /// Longest chain length from a to b. Throws NotComparable.
  int interval_height(std::size_t a, std::size_t b) const;

  /// Chain test: every two elements of [a, b] are comparable. Throws NotComparable.
  bool is_linear_interval(std::size_t a, std::size_t b) const;
  /// Counts maximal chains from a to b and reports whether there is exactly one.
  bool has_unique_maximal_chain(std::size_t a, std::size_t b) const;

  /// For every element q: the height of [a, q] when it is linear, -1 when it
  /// is not linear or a is not below q. Single pass over the up-set of a.
  std::vector<int> linear_heights_from(std::size_t a) const;

  /// A topological order (every cover goes from earlier to later).
  const std::vector<std::size_t>& topological_order() const { return topo_; }
  std::size_t topological_rank(std::size_t i) const { return rank_.at(i); }

 private:
  void check_index(std::size_t i) const;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::size_t> topo_;
  std::vector<std::size_t> rank_;
  simd::BitMatrix up_;
  simd::BitMatrix down_;
  std::size_t removed_redundant_ = 0;
};

/// L(P) = T + U eps with eps^2 = 0.
struct LinearPolynomial {
  std::uint64_t trivial = 0;
  std::uint64_t nontrivial = 0;

  friend LinearPolynomial operator*(const LinearPolynomial& a, const LinearPolynomial& b) {
    return {a.trivial * b.trivial, a.trivial * b.nontrivial + a.nontrivial * b.trivial};
  }
  friend bool operator==(const LinearPolynomial&, const LinearPolynomial&) = default;
};

Poset product(const Poset& a, const Poset& b);
LinearPolynomial linear_polynomial(const Poset& poset);

/// Number of linear intervals per height, index = height.
std::vector<std::uint64_t> linear_interval_histogram(const Poset& poset);

bool is_lattice(const Poset& poset);

/// Hasse diagram recomputed from the closure alone.
std::vector<Cover> transitive_reduction_of_closure(const Poset& poset);

std::string to_dot(const Poset& poset, const std::string& name = "hasse");
std::string to_json(const Poset& poset);

}  // namespace alttam
