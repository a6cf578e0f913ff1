#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <utility>

namespace parkpoly {

using Integer = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq so that construction,
/// integrality checks and serialization live in one place. Arithmetic on
/// canonical operands stays canonical, so every value this class hands out
/// satisfies the invariant.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: intentionally implicit
    Rational(const Integer& n) : v_(n) {}
    // disambiguates GMP expression templates (e.g. products of Integers)
    template <typename T, typename U>
    explicit Rational(const __gmp_expr<T, U>& e) : v_(Integer(e)) {}
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// Exact conversion; throws unless the denominator is 1.
    Integer to_integer() const {
        if (!is_integer())
            throw std::logic_error("Rational: expected an integer, got " + str());
        return v_.get_num();
    }

    /// Serialized as "p/q" in lowest terms, q > 0, e.g. "24/1", "-3/2".
    std::string str() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& y) { v_ += y.v_; return *this; }
    Rational& operator-=(const Rational& y) { v_ -= y.v_; return *this; }
    Rational& operator*=(const Rational& y) { v_ *= y.v_; return *this; }
    Rational& operator/=(const Rational& y) {
        if (y.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= y.v_;
        return *this;
    }

    friend Rational operator+(Rational x, const Rational& y) { return x += y; }
    friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
    friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
    friend Rational operator/(Rational x, const Rational& y) { return x /= y; }

    friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
    friend bool operator!=(const Rational& x, const Rational& y) { return x.v_ != y.v_; }
    friend bool operator<(const Rational& x, const Rational& y) { return x.v_ < y.v_; }
    friend bool operator<=(const Rational& x, const Rational& y) { return x.v_ <= y.v_; }
    friend bool operator>(const Rational& x, const Rational& y) { return x.v_ > y.v_; }
    friend bool operator>=(const Rational& x, const Rational& y) { return x.v_ >= y.v_; }

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

/// base^e with e possibly negative (base must then be nonzero).
Rational rat_pow(const Rational& base, long e);

}  // namespace parkpoly
