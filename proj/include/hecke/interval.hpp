#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace hecke {

/// Closed interval [lo, hi] with MPFR endpoints and outward rounding.
///
/// Every operation rounds the lower endpoint toward -inf and the upper one
/// toward +inf, so the true value of an expression evaluated on enclosures is
/// always inside the result. Endpoints are dyadic rationals.
class RealInterval {
public:
    explicit RealInterval(long precision_bits = 128);
    RealInterval(const mpz_class& value, long precision_bits);
    RealInterval(const mpq_class& value, long precision_bits);
    RealInterval(const RealInterval& other);
    RealInterval(RealInterval&& other) noexcept;
    RealInterval& operator=(const RealInterval& other);
    RealInterval& operator=(RealInterval&& other) noexcept;
    ~RealInterval();

    /// Interval from explicit endpoints; lo <= hi is the caller's responsibility.
    static RealInterval from_bounds(mpfr_srcptr lo, mpfr_srcptr hi, long precision_bits);

    long precision_bits() const { return prec_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }

    RealInterval operator+(const RealInterval& rhs) const;
    RealInterval operator-(const RealInterval& rhs) const;
    RealInterval operator*(const RealInterval& rhs) const;
    /// Throws DomainError when the divisor straddles zero.
    RealInterval operator/(const RealInterval& rhs) const;
    RealInterval operator-() const;

    /// Square root; the lower endpoint is clamped at zero.
    RealInterval sqrt() const;

    /// +1 / -1 when the interval excludes zero, 0 when it straddles (or touches) it.
    int certain_sign() const;
    bool contains_zero() const { return certain_sign() == 0; }
    bool contains(const mpq_class& x) const;

    /// hi - lo, rounded up.
    double width() const;
    double midpoint() const;

    /// Fixed-point rendering of an endpoint with `digits` digits after the point.
    std::string lo_fixed(int digits) const;
    std::string hi_fixed(int digits) const;

private:
    long prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace hecke
