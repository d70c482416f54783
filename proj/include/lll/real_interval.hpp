#ifndef LLL_REAL_INTERVAL_HPP
#define LLL_REAL_INTERVAL_HPP

#include <mpfr.h>

#include <string>

#include "lll/rational.hpp"

namespace lll {

// Closed interval [lo, hi] of MPFR floats; every operation rounds lo down and hi up,
// so the true value of an expression always lies inside the result.
class RealInterval {
public:
    static constexpr mpfr_prec_t precision = 256;

    RealInterval();
    explicit RealInterval(const Rational& q);
    explicit RealInterval(long n);
    RealInterval(const RealInterval& other);
    RealInterval(RealInterval&& other) noexcept;
    RealInterval& operator=(const RealInterval& other);
    RealInterval& operator=(RealInterval&& other) noexcept;
    ~RealInterval();

    friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator/(const RealInterval& a, const RealInterval& b);
    RealInterval operator-() const;

    RealInterval sqrt() const;
    RealInterval root(unsigned long k) const;  // real k-th root of a nonnegative interval
    RealInterval pow(unsigned long k) const;
    RealInterval square() const;
    RealInterval clamp_nonnegative() const;     // max(x, 0)

    bool contains_zero() const;
    bool certainly_positive() const;
    bool certainly_negative() const;
    bool certainly_less(const RealInterval& other) const;  // hi < other.lo

    // Conservative endpoints as exact rationals (MPFR values are dyadic).
    Rational lower() const;
    Rational upper() const;
    double lower_double() const;
    double upper_double() const;
    double mid_double() const;
    double relative_width() const;
    std::string lower_string(int digits = 17) const;
    std::string upper_string(int digits = 17) const;

private:
    mpfr_t lo_, hi_;
};

}  // namespace lll

#endif
