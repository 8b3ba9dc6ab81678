#pragma once

#include <string>
#include <vector>

#include "alttam/bigint.hpp"

namespace alttam {

inline constexpr int kDefaultSeriesOrder = 64;

/// Power series in t with exact integer coefficients, known up to and
/// including degree order(). Every operation tracks how far its result is
/// still exact, so a product of a series known to t^10 with one known to t^8
/// is known to t^8.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  /// Coefficients beyond `coeffs` are zero up to `order`.
  TruncatedSeries(std::vector<BigInt> coeffs, int order);

  static TruncatedSeries constant(const BigInt& c, int order);
  /// The series t.
  static TruncatedSeries variable(int order);

  int order() const { return order_; }
  /// [t^n]; throws OrderExceeded when n > order().
  const BigInt& operator[](int n) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  TruncatedSeries truncated(int order) const;
  TruncatedSeries derivative() const;
  /// Multiplication by t^k.
  TruncatedSeries shift(int k) const;
  /// this(inner); needs [t^0] inner = 0 (throws InvalidArgument otherwise).
  TruncatedSeries compose(const TruncatedSeries& inner) const;
  /// 1/this; needs a constant term of +1 or -1.
  TruncatedSeries inverse() const;
  TruncatedSeries pow(int e) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const BigInt& c, const TruncatedSeries& a);

  /// Equal on every degree both sides know.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  bool is_zero() const;

 private:
  std::vector<BigInt> coeffs_;  // size order_ + 1
  int order_ = -1;
};

/// A(t) with A = 1 + t A^2; [t^n] A = C_n.
TruncatedSeries solve_tree_series(int order = kDefaultSeriesOrder);
/// t A'(t): trees with a marked node, [t^n] = n C_n.
TruncatedSeries marked_series(int order = kDefaultSeriesOrder);
/// phi_k(x) = (1 + x)^(k+3) / (1 - x) as a series in x.
TruncatedSeries phi_series(int k, int order = kDefaultSeriesOrder);

enum class PhiRoute {
  Series,    // compose phi_k with B = A - 1 and read the coefficient
  Binomial,  // binom(k + 2 + 2n, n)
  Lagrange,  // coefficient extraction through B = t (1 + B)^2
};

/// [t^n] phi_k(B). Throws OrderExceeded when n > order, InvalidArgument for k < 1.
BigInt phi_coeff(int k, int n, PhiRoute route, int order = kDefaultSeriesOrder);

/// S_0 = A - 1, S_1 = t^2 A' A, S_k = 2 t^(k+1) A' A^k.
TruncatedSeries s_series(int k, int order = kDefaultSeriesOrder);
/// [t^n] S_k. Throws OrderExceeded when n > order.
BigInt s_coeff(int k, int n, int order = kDefaultSeriesOrder);

}  // namespace alttam
