#include "parkpoly/numeric.hpp"

#include <vector>

namespace parkpoly {

Integer factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(long n, long k) {
    if (n < 0) throw std::domain_error("binomial: negative n is not supported");
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Integer odd_double_factorial(long m) {
    if (m % 2 == 0) throw std::domain_error("odd_double_factorial: even argument");
    if (m < -3) throw std::domain_error("odd_double_factorial: argument below -3");
    if (m == -3) return -1;
    if (m == -1) return 1;
    Integer r = 1;
    for (long v = m; v >= 1; v -= 2) r *= v;
    return r;
}

Integer stirling2(long n, long k) {
    if (n < 0) throw std::domain_error("stirling2: negative n");
    if (k < 0 || k > n) return 0;
    // row-by-row DP; row[j] = S(i, j)
    std::vector<Integer> row(static_cast<size_t>(n) + 1);
    row[0] = 1;
    for (long i = 1; i <= n; ++i) {
        for (long j = i; j >= 1; --j) row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[static_cast<size_t>(k)];
}

}  // namespace parkpoly
