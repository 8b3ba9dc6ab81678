#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alttam/alt_tamari.hpp"
#include "alttam/census.hpp"

namespace alttam {

struct MarkedPath {
  DyckPath path;
  int mark = 0;  // 0-based step index
  Step mark_kind = Step::Down;

  friend bool operator==(const MarkedPath&, const MarkedPath&) = default;
};

/// Space-separated steps with '*' after the marked one: "u u d* d u d".
std::string to_string(const MarkedPath& marked);
/// Accepts spaced or unspaced words; exactly one '*' is required.
MarkedPath parse_marked(std::string_view text);

/// A marked path P_0 plus parts P_1..P_k (each possibly empty).
struct Decomposition {
  MarkedPath marked;
  std::vector<DyckPath> parts;

  int height() const { return static_cast<int>(parts.size()); }
  /// Size of the interval this decomposes: |P_0| + ... + |P_k| + k.
  int interval_size() const;
  /// Covering for one part on a down mark, Right for more, Left on an up mark.
  IntervalKind kind() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct Interval {
  DyckPath bottom;
  DyckPath top;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Throws NotACovering.
Decomposition decompose_covering(const IncrementFunction& delta, const DyckPath& bottom, const DyckPath& top);
/// Throws SizeMismatch (or InvalidArgument on a malformed decomposition).
Interval compose_covering(const IncrementFunction& delta, const Decomposition& d);

/// Throws NotLeft.
Decomposition decompose_left(const IncrementFunction& delta, const DyckPath& bottom, const DyckPath& top);
Interval compose_left(const IncrementFunction& delta, const Decomposition& d);

/// Throws NotRight.
Decomposition decompose_right(const IncrementFunction& delta, const DyckPath& bottom, const DyckPath& top);
Interval compose_right(const IncrementFunction& delta, const Decomposition& d);

/// Dispatches on classify(); throws NotLinear for non-linear pairs and
/// InvalidArgument for trivial ones, which have no decomposition.
Decomposition decompose(const IncrementFunction& delta, const DyckPath& bottom, const DyckPath& top);
/// Dispatches on d.kind().
Interval compose(const IncrementFunction& delta, const Decomposition& d);

/// Height-preserving image of a linear interval of Tam^from in Tam^to.
/// Throws NotLinear, SizeMismatch.
Interval transport(const IncrementFunction& from, const IncrementFunction& to, const DyckPath& bottom,
                   const DyckPath& top);

/// {"kind": ..., "marked": "u d*", "parts": ["", "ud"]}
std::string to_json(const Decomposition& d);

}  // namespace alttam
