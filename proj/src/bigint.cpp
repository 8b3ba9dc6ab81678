#include "alttam/bigint.hpp"

namespace alttam {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt catalan(int n) {
  if (n < 0) return 0;
  return binomial(2L * n, n) / (n + 1);
}

}  // namespace alttam
