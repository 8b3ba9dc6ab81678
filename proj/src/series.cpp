#include "alttam/series.hpp"

#include <algorithm>

#include "alttam/error.hpp"

namespace alttam {

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::constant(const BigInt& c, int order) { return TruncatedSeries({c}, order); }

TruncatedSeries TruncatedSeries::variable(int order) { return TruncatedSeries({0, 1}, order); }

const BigInt& TruncatedSeries::operator[](int n) const {
  if (n < 0 || n > order_) {
    throw Error(ErrorKind::OrderExceeded, "coefficient t^" + std::to_string(n) + " beyond order " +
                                              std::to_string(order_));
  }
  return coeffs_[static_cast<std::size_t>(n)];
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  return TruncatedSeries(coeffs_, std::min(order, order_));
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order_ < 1) throw Error(ErrorKind::OrderExceeded, "derivative of a series known only to t^0");
  std::vector<BigInt> out(static_cast<std::size_t>(order_));
  for (int i = 1; i <= order_; ++i) out[static_cast<std::size_t>(i - 1)] = coeffs_[static_cast<std::size_t>(i)] * i;
  return TruncatedSeries(std::move(out), order_ - 1);
}

TruncatedSeries TruncatedSeries::shift(int k) const {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative shift");
  std::vector<BigInt> out(static_cast<std::size_t>(k), 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return TruncatedSeries(std::move(out), order_ + k);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order_, b.order_);
  std::vector<BigInt> out(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) out[static_cast<std::size_t>(i)] = a[i] + b[i];
  return TruncatedSeries(std::move(out), order);
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a + BigInt(-1) * b;
}

TruncatedSeries operator*(const BigInt& c, const TruncatedSeries& a) {
  std::vector<BigInt> out = a.coeffs_;
  for (BigInt& x : out) x *= c;
  return TruncatedSeries(std::move(out), a.order_);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order_, b.order_);
  std::vector<BigInt> out(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      out[static_cast<std::size_t>(i + j)] += a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return TruncatedSeries(std::move(out), order);
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order_, b.order_);
  for (int i = 0; i <= order; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
  if (inner.order_ >= 0 && inner[0] != 0) {
    throw Error(ErrorKind::InvalidArgument, "composition needs an inner series without constant term");
  }
  // Since inner has no constant term, degrees of this beyond inner's order
  // only feed degrees beyond it as well.
  const int order = std::min(order_, inner.order_);
  // Horner from the top coefficient down.
  TruncatedSeries out = constant(0, order);
  const TruncatedSeries x = inner.truncated(order);
  for (int i = order; i >= 0; --i) out = out * x + constant(coeffs_[static_cast<std::size_t>(i)], order);
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (order_ < 0 || (coeffs_[0] != 1 && coeffs_[0] != -1)) {
    throw Error(ErrorKind::InvalidArgument, "only series with constant term +1 or -1 are invertible");
  }
  // 1/(c0 (1 - y)) = c0 * sum y^j with y = 1 - this / c0
  const BigInt c0 = coeffs_[0];
  const TruncatedSeries y = constant(1, order_) - c0 * *this;
  std::vector<BigInt> geometric(static_cast<std::size_t>(order_) + 1, 1);
  return c0 * TruncatedSeries(std::move(geometric), order_).compose(y);
}

TruncatedSeries TruncatedSeries::pow(int e) const {
  if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative power");
  TruncatedSeries out = constant(1, order_);
  TruncatedSeries base = *this;
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

TruncatedSeries solve_tree_series(int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "series order must be non-negative");
  // Each pass of A <- 1 + t A^2 fixes at least one more coefficient.
  TruncatedSeries a = TruncatedSeries::constant(1, order);
  const TruncatedSeries one = TruncatedSeries::constant(1, order);
  for (int pass = 0; pass < order; ++pass) a = one + (a * a).shift(1).truncated(order);
  return a;
}

TruncatedSeries marked_series(int order) {
  // A' loses a degree and the shift by t gives it back
  return solve_tree_series(order).derivative().shift(1);
}

TruncatedSeries phi_series(int k, int order) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "phi_k needs k >= 1");
  const TruncatedSeries one_plus_x({1, 1}, order);
  const TruncatedSeries one_minus_x({1, -1}, order);
  return one_plus_x.pow(k + 3) * one_minus_x.inverse();
}

namespace {

void check_order(int n, int order) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  if (n > order) {
    throw Error(ErrorKind::OrderExceeded, "degree " + std::to_string(n) + " beyond order " + std::to_string(order));
  }
}

}  // namespace

BigInt phi_coeff(int k, int n, PhiRoute route, int order) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "phi_k needs k >= 1");
  check_order(n, order);
  switch (route) {
    case PhiRoute::Series: {
      const TruncatedSeries b = solve_tree_series(order) - TruncatedSeries::constant(1, order);
      return phi_series(k, order).compose(b)[n];
    }
    case PhiRoute::Binomial:
      return binomial(k + 2L + 2L * n, n);
    case PhiRoute::Lagrange: {
      if (n == 0) return 1;
      // (1/n) [x^(n-1)] phi_k'(x) (1 + x)^(2n)
      BigInt sum = 0;
      for (long j = 0; j < n; ++j) {
        sum += (k + 3) * binomial(k + 2L + 2L * n, j);
        sum += binomial(k + 3L + 2L * n, j) * (n - j);
      }
      if (sum % n != 0) throw Error(ErrorKind::InvalidArgument, "coefficient extraction is not integral");
      return sum / n;
    }
  }
  return 0;
}

TruncatedSeries s_series(int k, int order) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "S_k needs k >= 0");
  // one spare degree so that A' is still known to `order`
  const TruncatedSeries a = solve_tree_series(order + 1);
  const TruncatedSeries one = TruncatedSeries::constant(1, order + 1);
  if (k == 0) return (a - one).truncated(order);
  const TruncatedSeries da = a.derivative();
  if (k == 1) return (da * a).shift(2).truncated(order);
  return (BigInt(2) * (da * a.pow(k)).shift(k + 1)).truncated(order);
}

BigInt s_coeff(int k, int n, int order) {
  check_order(n, order);
  return s_series(k, order)[n];
}

}  // namespace alttam
