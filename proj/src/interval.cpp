#include "hecke/interval.hpp"

#include <algorithm>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

RealInterval::RealInterval(long precision_bits) : prec_(precision_bits) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const mpz_class& value, long precision_bits) : prec_(precision_bits) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_z(lo_, value.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi_, value.get_mpz_t(), MPFR_RNDU);
}

RealInterval::RealInterval(const mpq_class& value, long precision_bits) : prec_(precision_bits) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

RealInterval::RealInterval(const RealInterval& other) : prec_(other.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& other) noexcept : prec_(other.prec_) {
    mpfr_init2(lo_, MPFR_PREC_MIN);
    mpfr_init2(hi_, MPFR_PREC_MIN);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

RealInterval& RealInterval::operator=(const RealInterval& other) {
    if (this != &other) {
        prec_ = other.prec_;
        mpfr_set_prec(lo_, prec_);
        mpfr_set_prec(hi_, prec_);
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& other) noexcept {
    if (this != &other) {
        std::swap(prec_, other.prec_);
        mpfr_swap(lo_, other.lo_);
        mpfr_swap(hi_, other.hi_);
    }
    return *this;
}

RealInterval::~RealInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RealInterval RealInterval::from_bounds(mpfr_srcptr lo, mpfr_srcptr hi, long precision_bits) {
    RealInterval r(precision_bits);
    mpfr_set(r.lo_, lo, MPFR_RNDD);
    mpfr_set(r.hi_, hi, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator+(const RealInterval& rhs) const {
    RealInterval r(std::max(prec_, rhs.prec_));
    mpfr_add(r.lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, rhs.hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator-(const RealInterval& rhs) const {
    RealInterval r(std::max(prec_, rhs.prec_));
    mpfr_sub(r.lo_, lo_, rhs.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, rhs.lo_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator-() const {
    RealInterval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator*(const RealInterval& rhs) const {
    const long prec = std::max(prec_, rhs.prec_);
    RealInterval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_srcptr a[2] = {lo_, hi_};
    mpfr_srcptr b[2] = {rhs.lo_, rhs.hi_};
    bool first = true;
    for (auto x : a) {
        for (auto y : b) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

RealInterval RealInterval::operator/(const RealInterval& rhs) const {
    if (rhs.contains_zero()) throw DomainError("interval division by an interval containing zero");
    const long prec = std::max(prec_, rhs.prec_);
    RealInterval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_srcptr a[2] = {lo_, hi_};
    mpfr_srcptr b[2] = {rhs.lo_, rhs.hi_};
    bool first = true;
    for (auto x : a) {
        for (auto y : b) {
            mpfr_div(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_div(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

RealInterval RealInterval::sqrt() const {
    if (mpfr_sgn(hi_) < 0) throw DomainError("square root of a negative interval");
    RealInterval r(prec_);
    if (mpfr_sgn(lo_) <= 0) {
        mpfr_set_zero(r.lo_, 1);
    } else {
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    }
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

int RealInterval::certain_sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
}

bool RealInterval::contains(const mpq_class& x) const {
    return mpfr_cmp_q(lo_, x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, x.get_mpq_t()) >= 0;
}

double RealInterval::width() const {
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_sub(t, hi_, lo_, MPFR_RNDU);
    const double w = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return w;
}

double RealInterval::midpoint() const {
    mpfr_t t;
    mpfr_init2(t, prec_ + 1);
    mpfr_add(t, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(t, t, 1, MPFR_RNDN);
    const double m = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return m;
}

namespace {

std::string fixed(mpfr_srcptr x, int digits) {
    const int n = mpfr_snprintf(nullptr, 0, "%.*RNf", digits, x);
    std::vector<char> buf(static_cast<std::size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*RNf", digits, x);
    std::string s(buf.data());
    // "-0.000" and "0.000" must render identically.
    if (s.size() > 1 && s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

}  // namespace

std::string RealInterval::lo_fixed(int digits) const { return fixed(lo_, digits); }
std::string RealInterval::hi_fixed(int digits) const { return fixed(hi_, digits); }

}  // namespace hecke
