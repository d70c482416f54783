#include "lll/real_interval.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace lll {

RealInterval::RealInterval()
{
    mpfr_init2(lo_, precision);
    mpfr_init2(hi_, precision);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const Rational& q)
{
    mpfr_init2(lo_, precision);
    mpfr_init2(hi_, precision);
    mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

RealInterval::RealInterval(long n)
{
    mpfr_init2(lo_, precision);
    mpfr_init2(hi_, precision);
    mpfr_set_si(lo_, n, MPFR_RNDD);
    mpfr_set_si(hi_, n, MPFR_RNDU);
}

RealInterval::RealInterval(const RealInterval& other)
{
    mpfr_init2(lo_, precision);
    mpfr_init2(hi_, precision);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& other) noexcept : RealInterval()
{
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

RealInterval& RealInterval::operator=(const RealInterval& other)
{
    if (this != &other) {
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& other) noexcept
{
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

RealInterval::~RealInterval()
{
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RealInterval operator+(const RealInterval& a, const RealInterval& b)
{
    RealInterval r;
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

RealInterval operator-(const RealInterval& a, const RealInterval& b)
{
    RealInterval r;
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator-() const
{
    RealInterval r;
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

namespace {

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

void corner_hull(mpfr_t lo, mpfr_t hi, mpfr_srcptr alo, mpfr_srcptr ahi, mpfr_srcptr blo, mpfr_srcptr bhi,
                 BinaryOp op)
{
    mpfr_srcptr as[2] = {alo, ahi};
    mpfr_srcptr bs[2] = {blo, bhi};
    mpfr_t t;
    mpfr_init2(t, RealInterval::precision);
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            op(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, lo)) mpfr_set(lo, t, MPFR_RNDD);
            op(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, hi)) mpfr_set(hi, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
}

}  // namespace

RealInterval operator*(const RealInterval& a, const RealInterval& b)
{
    RealInterval r;
    corner_hull(r.lo_, r.hi_, a.lo_, a.hi_, b.lo_, b.hi_, mpfr_mul);
    return r;
}

RealInterval operator/(const RealInterval& a, const RealInterval& b)
{
    if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
    RealInterval r;
    corner_hull(r.lo_, r.hi_, a.lo_, a.hi_, b.lo_, b.hi_, mpfr_div);
    return r;
}

RealInterval RealInterval::sqrt() const
{
    if (mpfr_sgn(lo_) < 0) throw std::domain_error("sqrt of an interval with negative part");
    RealInterval r;
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::root(unsigned long k) const
{
    if (k == 0) throw std::domain_error("zeroth root");
    if (mpfr_sgn(lo_) < 0) throw std::domain_error("root of an interval with negative part");
    RealInterval r;
    mpfr_rootn_ui(r.lo_, lo_, k, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, hi_, k, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::pow(unsigned long k) const
{
    RealInterval r(1L);
    for (unsigned long i = 0; i < k; ++i) r = r * *this;
    return r;
}

RealInterval RealInterval::square() const
{
    RealInterval r;
    if (mpfr_sgn(lo_) >= 0) {
        mpfr_sqr(r.lo_, lo_, MPFR_RNDD);
        mpfr_sqr(r.hi_, hi_, MPFR_RNDU);
    } else if (mpfr_sgn(hi_) <= 0) {
        mpfr_sqr(r.lo_, hi_, MPFR_RNDD);
        mpfr_sqr(r.hi_, lo_, MPFR_RNDU);
    } else {
        mpfr_set_zero(r.lo_, 1);
        mpfr_t a, b;
        mpfr_init2(a, precision);
        mpfr_init2(b, precision);
        mpfr_sqr(a, lo_, MPFR_RNDU);
        mpfr_sqr(b, hi_, MPFR_RNDU);
        mpfr_max(r.hi_, a, b, MPFR_RNDU);
        mpfr_clear(a);
        mpfr_clear(b);
    }
    return r;
}

RealInterval RealInterval::clamp_nonnegative() const
{
    RealInterval r(*this);
    if (mpfr_sgn(r.lo_) < 0) mpfr_set_zero(r.lo_, 1);
    if (mpfr_sgn(r.hi_) < 0) mpfr_set_zero(r.hi_, 1);
    return r;
}

bool RealInterval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool RealInterval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool RealInterval::certainly_negative() const { return mpfr_sgn(hi_) < 0; }
bool RealInterval::certainly_less(const RealInterval& other) const { return mpfr_less_p(hi_, other.lo_); }

Rational RealInterval::lower() const
{
    Rational q;
    mpfr_get_q(q.get_mpq_t(), lo_);
    return q;
}

Rational RealInterval::upper() const
{
    Rational q;
    mpfr_get_q(q.get_mpq_t(), hi_);
    return q;
}

double RealInterval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RealInterval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double RealInterval::mid_double() const
{
    mpfr_t m;
    mpfr_init2(m, precision + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

double RealInterval::relative_width() const
{
    double mid = std::fabs(mid_double());
    double w = upper_double() - lower_double();
    return mid == 0.0 ? w : w / mid;
}

namespace {

std::string format(mpfr_srcptr x, int digits, mpfr_rnd_t rnd)
{
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    std::string fmt = "%." + std::to_string(digits) + (rnd == MPFR_RNDD ? "RDe" : "RUe");
    mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), x);
    return std::string(buf.data());
}

}  // namespace

std::string RealInterval::lower_string(int digits) const { return format(lo_, digits, MPFR_RNDD); }
std::string RealInterval::upper_string(int digits) const { return format(hi_, digits, MPFR_RNDU); }

}  // namespace lll
