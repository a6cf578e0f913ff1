#include "parkpoly/rational.hpp"

#include "parkpoly/numeric.hpp"

namespace parkpoly {

Rational rat_pow(const Rational& base, long e) {
    if (e >= 0) {
        return Rational(int_pow(base.numerator(), static_cast<unsigned long>(e)),
                        int_pow(base.denominator(), static_cast<unsigned long>(e)));
    }
    if (base.is_zero())
        throw std::domain_error("rat_pow: zero base with negative exponent");
    return Rational(int_pow(base.denominator(), static_cast<unsigned long>(-e)),
                    int_pow(base.numerator(), static_cast<unsigned long>(-e)));
}

}  // namespace parkpoly
