#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace alttam {

using BigInt = boost::multiprecision::cpp_int;

/// binom(n, k), zero outside 0 <= k <= n.
BigInt binomial(long n, long k);
BigInt catalan(int n);

}  // namespace alttam
