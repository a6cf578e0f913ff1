#pragma once

#include "parkpoly/rational.hpp"

namespace parkpoly {

Integer factorial(long n);

/// C(n, k). Requires n >= 0 (the generalized coefficient for negative n is
/// deliberately rejected); returns 0 for k < 0 or k > n.
Integer binomial(long n, long k);

Integer int_pow(const Integer& base, unsigned long e);

/// Odd double factorial m!! for odd m >= -3, extended downward via
/// m!! = (m+2)!!/(m+2), so (-1)!! = 1 and (-3)!! = -1. Even m or m < -3
/// is an error.
Integer odd_double_factorial(long m);

/// Stirling numbers of the second kind S(n, k) via the recurrence
/// S(n,k) = k*S(n-1,k) + S(n-1,k-1). Requires n >= 0; 0 outside 0 <= k <= n.
Integer stirling2(long n, long k);

}  // namespace parkpoly
