#include "hecke/field.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace hecke {

namespace {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

void trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

void trim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Exact quotient of a by the monic polynomial b.
ZPoly zdiv_monic(ZPoly a, const ZPoly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {0};
    ZPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const mpz_class c = a[i];
        if (c == 0) continue;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    trim(a);
    if (!a.empty()) throw InternalError("cyclotomic division left a remainder");
    return q;
}

// Quotient and remainder over Q.
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {QPoly{}, a};
    QPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        if (a[i] == 0) continue;
        const mpq_class c = a[i] / b[db];
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

std::string signed_join(const std::vector<std::string>& terms) {
    // Each term starts with '-' or not; joins as "a - b + c".
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string& t = terms[i];
        const bool neg = !t.empty() && t[0] == '-';
        if (i == 0) {
            out += t;
        } else {
            out += neg ? " - " : " + ";
            out += neg ? t.substr(1) : t;
        }
    }
    return out;
}

std::string poly_string(const std::vector<mpz_class>& c, const std::string& var) {
    std::vector<std::string> terms;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        std::string mag;
        const mpz_class a = abs(c[i]);
        if (i == 0) {
            mag = a.get_str();
        } else {
            if (a != 1) mag = a.get_str();
            mag += var;
            if (i > 1) mag += "^" + std::to_string(i);
        }
        terms.push_back(c[i] < 0 ? "-" + mag : mag);
    }
    if (terms.empty()) return "0";
    return signed_join(terms);
}

}  // namespace

// ---------------------------------------------------------------- MinPoly

std::string MinPoly::to_string() const { return poly_string(coeffs, "x"); }

int euler_phi(int n) {
    int result = n;
    for (int q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        while (n % q == 0) n /= q;
        result -= result / q;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<mpz_class> cyclotomic_polynomial(int n) {
    if (n < 1) throw DomainError("cyclotomic index must be positive");
    ZPoly num(static_cast<std::size_t>(n) + 1, 0);
    num[0] = -1;
    num[n] = 1;
    ZPoly den{1};
    for (int d = 1; d < n; ++d)
        if (n % d == 0) den = zmul(den, cyclotomic_polynomial(d));
    return zdiv_monic(num, den);
}

MinPoly minimal_polynomial(int p) {
    if (p < 3) throw DomainError("p must be at least 3, got " + std::to_string(p));
    const ZPoly phi = cyclotomic_polynomial(2 * p);
    const int m = static_cast<int>(phi.size() - 1) / 2;

    // x^{-m}Φ(x) = c_m + Σ_j c_{m+j}(x^j + x^{-j}), and x^j + x^{-j} = D_j(x + 1/x).
    ZPoly result{phi[m]};
    result.resize(static_cast<std::size_t>(m) + 1, 0);
    ZPoly prev{2};
    ZPoly cur{0, 1};
    for (int j = 1; j <= m; ++j) {
        for (std::size_t i = 0; i < cur.size(); ++i) result[i] += phi[m + j] * cur[i];
        ZPoly next(cur.size() + 1, 0);
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    trim(result);
    return MinPoly{p, result};
}

// ---------------------------------------------------------------- HeckeField

HeckeField::HeckeField(int p) : minpoly_(minimal_polynomial(p)) {}

const HeckeField& HeckeField::get(int p) {
    if (p < 3) throw DomainError("p must be at least 3, got " + std::to_string(p));
    static std::mutex mutex;
    static std::map<int, const HeckeField*> registry;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = registry.find(p);
    if (it != registry.end()) return *it->second;
    const HeckeField* f = new HeckeField(p);
    registry.emplace(p, f);
    return *f;
}

RealInterval HeckeField::lambda_enclosure(long precision_bits) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = lambda_cache_.find(precision_bits);
        if (it != lambda_cache_.end()) return it->second;
    }
    const long work = precision_bits + 32;
    mpfr_t pi_lo, pi_hi, lo, hi;
    mpfr_inits2(work, pi_lo, pi_hi, lo, hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    mpfr_div_ui(pi_lo, pi_lo, static_cast<unsigned long>(p()), MPFR_RNDD);
    mpfr_div_ui(pi_hi, pi_hi, static_cast<unsigned long>(p()), MPFR_RNDU);
    // cos is decreasing on [0, π/3].
    mpfr_cos(lo, pi_hi, MPFR_RNDD);
    mpfr_cos(hi, pi_lo, MPFR_RNDU);
    mpfr_mul_2ui(lo, lo, 1, MPFR_RNDD);
    mpfr_mul_2ui(hi, hi, 1, MPFR_RNDU);
    RealInterval r = RealInterval::from_bounds(lo, hi, precision_bits);
    mpfr_clears(pi_lo, pi_hi, lo, hi, static_cast<mpfr_ptr>(nullptr));

    std::lock_guard<std::mutex> lock(cache_mutex_);
    lambda_cache_.emplace(precision_bits, r);
    return r;
}

// ---------------------------------------------------------------- RingElem

RingElem::RingElem(int p, long value) : RingElem(p, mpz_class(value)) {}

RingElem::RingElem(int p, const mpz_class& value) : field_(&HeckeField::get(p)) {
    coeffs_.assign(static_cast<std::size_t>(field_->degree()), 0);
    coeffs_[0] = value;
}

RingElem::RingElem(int p, std::vector<mpz_class> coeffs) : field_(&HeckeField::get(p)), coeffs_(std::move(coeffs)) {
    reduce();
}

RingElem RingElem::lambda(int p) { return RingElem(p, std::vector<mpz_class>{0, 1}); }

int RingElem::p() const { return field_ ? field_->p() : 0; }

const HeckeField& RingElem::field() const {
    if (!field_) throw InternalError("ring element used before initialization");
    return *field_;
}

void RingElem::reduce() {
    const auto& m = field_->minpoly().coeffs;
    const std::size_t deg = m.size() - 1;
    for (std::size_t i = coeffs_.size(); i-- > deg;) {
        const mpz_class c = coeffs_[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j < deg; ++j) coeffs_[i - deg + j] -= c * m[j];
        coeffs_[i] = 0;
    }
    coeffs_.resize(deg, 0);
}

bool RingElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c == 0; });
}

bool RingElem::is_integer() const {
    return std::all_of(coeffs_.begin() + (coeffs_.empty() ? 0 : 1), coeffs_.end(),
                       [](const mpz_class& c) { return c == 0; });
}

mpz_class RingElem::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void RingElem::check_same(const RingElem& rhs) const {
    if (field_ != rhs.field_) {
        if (!field_ || !rhs.field_) throw InternalError("ring element used before initialization");
        throw DomainError("mixing elements of Z[lambda_" + std::to_string(p()) + "] and Z[lambda_" +
                          std::to_string(rhs.p()) + "]");
    }
}

RingElem RingElem::operator-() const {
    RingElem r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

RingElem RingElem::operator+(const RingElem& rhs) const {
    check_same(rhs);
    RingElem r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += rhs.coeffs_[i];
    return r;
}

RingElem RingElem::operator-(const RingElem& rhs) const {
    check_same(rhs);
    RingElem r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= rhs.coeffs_[i];
    return r;
}

RingElem RingElem::operator*(const RingElem& rhs) const {
    check_same(rhs);
    RingElem r;
    r.field_ = field_;
    r.coeffs_ = zmul(coeffs_, rhs.coeffs_);
    r.reduce();
    return r;
}

RingElem RingElem::operator*(long rhs) const {
    RingElem r = *this;
    for (auto& c : r.coeffs_) c *= rhs;
    return r;
}

RingElem RingElem::pow(unsigned e) const {
    RingElem result(p(), 1L);
    RingElem base = *this;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

RingElem RingElem::divexact(const mpz_class& d) const {
    RingElem r = *this;
    for (auto& c : r.coeffs_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) throw InternalError("inexact integer division");
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    }
    return r;
}

RealInterval RingElem::enclose(long precision_bits) const {
    const RealInterval lam = field().lambda_enclosure(precision_bits);
    RealInterval acc(coeffs_.back(), precision_bits);
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * lam + RealInterval(coeffs_[i], precision_bits);
    return acc;
}

std::string RingElem::to_string(const std::string& var) const { return poly_string(coeffs_, var); }

bool operator==(const RingElem& a, const RingElem& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }

std::ostream& operator<<(std::ostream& os, const RingElem& x) { return os << x.to_string(); }

std::optional<RingElem> ring_quotient(const RingElem& x, const RingElem& y) {
    if (y.is_zero()) throw DomainError("division by zero in Z[lambda]");
    if (y.is_integer()) {
        const mpz_class& d = y.coeffs()[0];
        for (const auto& c : x.coeffs())
            if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
        return x.divexact(d);
    }
    const FieldElem q = FieldElem(x) / FieldElem(y);
    if (!q.is_integral()) return std::nullopt;
    return q.num();
}

// ---------------------------------------------------------------- FieldElem

FieldElem::FieldElem(int p, long value) : num_(p, value) {}

FieldElem::FieldElem(const RingElem& num) : num_(num) {}

FieldElem::FieldElem(const RingElem& num, const mpz_class& den) : num_(num), den_(den) {
    if (den_ == 0) throw DomainError("zero denominator");
    canonicalize();
}

FieldElem FieldElem::rational(int p, const mpq_class& q) {
    return FieldElem(RingElem(p, q.get_num()), q.get_den());
}

void FieldElem::canonicalize() {
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    mpz_class g = num_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        num_ = num_.divexact(g);
        den_ /= g;
    }
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    r.num_ = -r.num_;
    return r;
}

FieldElem FieldElem::operator+(const FieldElem& rhs) const {
    if (den_ == rhs.den_) return FieldElem(num_ + rhs.num_, den_);
    return FieldElem(num_ * RingElem(p(), rhs.den_) + rhs.num_ * RingElem(p(), den_), den_ * rhs.den_);
}

FieldElem FieldElem::operator-(const FieldElem& rhs) const { return *this + (-rhs); }

FieldElem FieldElem::operator*(const FieldElem& rhs) const {
    return FieldElem(num_ * rhs.num_, den_ * rhs.den_);
}

FieldElem FieldElem::operator/(const FieldElem& rhs) const { return *this * rhs.inverse(); }

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(lambda)");
    const int P = p();
    if (num_.is_integer()) return FieldElem(RingElem(P, den_), num_.coeffs()[0]);

    QPoly r0(num_.field().minpoly().coeffs.begin(), num_.field().minpoly().coeffs.end());
    QPoly r1(num_.coeffs().begin(), num_.coeffs().end());
    trim(r1);
    QPoly s0{}, s1{1};
    while (!r1.empty()) {
        auto [q, r] = qdivmod(r0, r1);
        QPoly s = qsub(s0, qmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1) throw InternalError("minimal polynomial is not irreducible");
    // num^{-1} = s0 / r0[0]; the inverse of num/den is den·s0/r0[0].
    mpz_class common = 1;
    for (auto& c : s0) {
        c = c * den_ / r0[0];
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<mpz_class> coeffs;
    coeffs.reserve(s0.size());
    for (const auto& c : s0) coeffs.emplace_back(c.get_num() * (common / c.get_den()));
    return FieldElem(RingElem(P, std::move(coeffs)), common);
}

FieldElem FieldElem::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem result(p(), 1L);
    FieldElem base = *this;
    unsigned u = static_cast<unsigned>(e);
    while (u) {
        if (u & 1U) result *= base;
        u >>= 1U;
        if (u) base *= base;
    }
    return result;
}

RealInterval FieldElem::enclose(long precision_bits) const {
    const RealInterval n = num_.enclose(precision_bits);
    if (den_ == 1) return n;
    return n / RealInterval(den_, precision_bits);
}

std::string FieldElem::to_string(const std::string& var) const {
    const std::string n = num_.to_string(var);
    if (den_ == 1) return n;
    const bool compound = n.find(' ') != std::string::npos;
    return (compound ? "(" + n + ")" : n) + "/" + den_.get_str();
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.to_string(); }

// ---------------------------------------------------------------- ExtElem

ExtElem::ExtElem(const FieldElem& u, const RingElem& D) : u_(u), v_(u.p(), 0L), D_(D) {}

ExtElem::ExtElem(const FieldElem& u, const FieldElem& v, const RingElem& D) : u_(u), v_(v), D_(D) {
    if (u.p() != v.p() || u.p() != D.p()) throw DomainError("mixing different Hecke fields in one extension element");
}

ExtElem ExtElem::sqrt_of(const RingElem& D) {
    return ExtElem(FieldElem(D.p(), 0L), FieldElem(D.p(), 1L), D);
}

RingElem ExtElem::common_D(const ExtElem& rhs) const {
    if (D_ == rhs.D_) return D_;
    if (v_.is_zero()) return rhs.D_;
    if (rhs.v_.is_zero()) return D_;
    throw DomainError("mixing different discriminants: " + D_.to_string() + " and " + rhs.D_.to_string());
}

ExtElem ExtElem::conj() const { return ExtElem(u_, -v_, D_); }

FieldElem ExtElem::norm() const { return u_ * u_ - v_ * v_ * FieldElem(D_); }

ExtElem ExtElem::operator-() const { return ExtElem(-u_, -v_, D_); }

ExtElem ExtElem::operator+(const ExtElem& rhs) const {
    return ExtElem(u_ + rhs.u_, v_ + rhs.v_, common_D(rhs));
}

ExtElem ExtElem::operator-(const ExtElem& rhs) const {
    return ExtElem(u_ - rhs.u_, v_ - rhs.v_, common_D(rhs));
}

ExtElem ExtElem::operator*(const ExtElem& rhs) const {
    const RingElem D = common_D(rhs);
    if (v_.is_zero()) return ExtElem(u_ * rhs.u_, u_ * rhs.v_, D);
    if (rhs.v_.is_zero()) return ExtElem(u_ * rhs.u_, v_ * rhs.u_, D);
    return ExtElem(u_ * rhs.u_ + v_ * rhs.v_ * FieldElem(D), u_ * rhs.v_ + v_ * rhs.u_, D);
}

ExtElem ExtElem::operator*(const FieldElem& rhs) const { return ExtElem(u_ * rhs, v_ * rhs, D_); }

ExtElem ExtElem::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    if (v_.is_zero()) return ExtElem(u_.inverse(), D_);
    const FieldElem n = norm();
    if (n.is_zero()) {
        FieldElem w = u_ / v_;
        if (sign(w) < 0) w = -w;
        throw ZeroDivisor(w);
    }
    const FieldElem ni = n.inverse();
    return ExtElem(u_ * ni, -v_ * ni, D_);
}

ExtElem ExtElem::operator/(const ExtElem& rhs) const { return *this * rhs.inverse(); }

ExtElem ExtElem::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    ExtElem result(FieldElem(p(), 1L), D_);
    ExtElem base = *this;
    unsigned u = static_cast<unsigned>(e);
    while (u) {
        if (u & 1U) result *= base;
        u >>= 1U;
        if (u) base *= base;
    }
    return result;
}

ExtElem ExtElem::fold(const FieldElem& w) const { return ExtElem(u_ + v_ * w, D_); }

RealInterval ExtElem::enclose(long precision_bits) const {
    RealInterval r = u_.enclose(precision_bits);
    if (v_.is_zero()) return r;
    return r + v_.enclose(precision_bits) * D_.enclose(precision_bits).sqrt();
}

std::string ExtElem::to_string(const std::string& var) const {
    if (v_.is_zero()) return u_.to_string(var);
    const std::string root = "sqrt(" + D_.to_string(var) + ")";
    std::string vpart;
    if (v_ == FieldElem(p(), 1L)) {
        vpart = root;
    } else if (v_ == FieldElem(p(), -1L)) {
        vpart = "-" + root;
    } else {
        const std::string vs = v_.to_string(var);
        const bool paren = vs.find(' ') != std::string::npos;
        vpart = (paren ? "(" + vs + ")" : vs) + "*" + root;
    }
    if (u_.is_zero()) return vpart;
    return signed_join({u_.to_string(var), vpart});
}

bool operator==(const ExtElem& a, const ExtElem& b) {
    return a.u_ == b.u_ && a.v_ == b.v_ && (a.v_.is_zero() || a.D_ == b.D_);
}

std::ostream& operator<<(std::ostream& os, const ExtElem& x) { return os << x.to_string(); }

// ---------------------------------------------------------------- sign & decimals

int sign(const RingElem& x) {
    if (x.is_zero()) return 0;
    if (x.is_integer()) return sgn(x.coeffs()[0]);
    for (long bits = SignPolicy::start_bits; bits <= SignPolicy::max_bits; bits *= 2) {
        const int s = x.enclose(bits).certain_sign();
        if (s != 0) return s;
    }
    throw InternalError("sign of a nonzero element undecided at " + std::to_string(SignPolicy::max_bits) + " bits: " +
                        x.to_string());
}

int sign(const FieldElem& x) { return sign(x.num()); }

int sign(const ExtElem& x) {
    const int su = sign(x.u());
    if (x.v().is_zero()) return su;
    const int sd = sign(x.D());
    if (sd < 0) throw DomainError("negative discriminant " + x.D().to_string());
    if (sd == 0) return su;
    const int sv = sign(x.v());
    if (su == 0) return sv;
    if (su == sv) return su;
    return su * sign(x.norm());
}

std::string to_decimal(const ExtElem& x, int digits) {
    if (x.is_zero() || sign(x) == 0) return RealInterval(0).lo_fixed(digits);
    long bits = static_cast<long>(digits * 3.33) + 96;
    std::string hi;
    for (int round = 0; round < 8; ++round, bits *= 2) {
        const RealInterval iv = x.enclose(bits);
        std::string lo = iv.lo_fixed(digits);
        hi = iv.hi_fixed(digits);
        if (lo == hi) return lo;
    }
    return hi;
}

std::string to_decimal(const FieldElem& x, int digits) {
    return to_decimal(ExtElem(x, RingElem(x.p(), 0L)), digits);
}

}  // namespace hecke
