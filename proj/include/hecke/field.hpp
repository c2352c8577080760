#pragma once

// Exact arithmetic in Z[λ_p], λ_p = 2cos(π/p), its fraction field Q(λ_p),
// and a formal quadratic extension Q(λ_p)[t]/(t² − D).

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/interval.hpp"

namespace hecke {

/// Monic integer minimal polynomial of 2cos(π/p), constant term first.
struct MinPoly {
    int p = 0;
    std::vector<mpz_class> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    /// "x^2 - x - 1"
    std::string to_string() const;
    friend bool operator==(const MinPoly&, const MinPoly&) = default;
};

/// Φ_n(x), constant term first, via the exact division recursion.
std::vector<mpz_class> cyclotomic_polynomial(int n);

/// Euler's totient.
int euler_phi(int n);

/// Minimal polynomial of 2cos(π/p) from the palindromic rewrite of Φ_{2p}.
/// Throws DomainError for p < 3.
MinPoly minimal_polynomial(int p);

/// Per-p context. Instances are created once and never destroyed, so raw
/// pointers to them stay valid for the life of the process.
class HeckeField {
public:
    static const HeckeField& get(int p);

    int p() const { return minpoly_.p; }
    int degree() const { return minpoly_.degree(); }
    const MinPoly& minpoly() const { return minpoly_; }

    /// Certified enclosure of λ_p with the given working precision.
    RealInterval lambda_enclosure(long precision_bits) const;

private:
    explicit HeckeField(int p);

    MinPoly minpoly_;
    mutable std::mutex cache_mutex_;
    mutable std::map<long, RealInterval> lambda_cache_;
};

/// Element of Z[λ_p]: Σ coeffs[i]·λ^i with coeffs reduced modulo the minimal polynomial.
class RingElem {
public:
    /// Placeholder without a field; only assignment and destruction are valid on it.
    RingElem() = default;
    RingElem(int p, long value);
    RingElem(int p, const mpz_class& value);
    /// Any length is accepted; the vector is reduced modulo the minimal polynomial.
    RingElem(int p, std::vector<mpz_class> coeffs);

    static RingElem lambda(int p);

    int p() const;
    bool has_field() const { return field_ != nullptr; }
    const HeckeField& field() const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_integer() const;
    /// Non-negative gcd of all coefficients (0 for the zero element).
    mpz_class content() const;

    RingElem operator-() const;
    RingElem operator+(const RingElem& rhs) const;
    RingElem operator-(const RingElem& rhs) const;
    RingElem operator*(const RingElem& rhs) const;
    RingElem operator*(long rhs) const;
    RingElem& operator+=(const RingElem& rhs) { return *this = *this + rhs; }
    RingElem& operator-=(const RingElem& rhs) { return *this = *this - rhs; }
    RingElem& operator*=(const RingElem& rhs) { return *this = *this * rhs; }
    RingElem pow(unsigned e) const;
    /// Exact division by an integer that divides every coefficient.
    RingElem divexact(const mpz_class& d) const;

    RealInterval enclose(long precision_bits) const;

    /// Polynomial in `var`, highest power first: "l^2 - 1".
    std::string to_string(const std::string& var = "l") const;

    friend bool operator==(const RingElem& a, const RingElem& b);

private:
    const HeckeField* field_ = nullptr;
    std::vector<mpz_class> coeffs_;

    void check_same(const RingElem& rhs) const;
    void reduce();
};

std::ostream& operator<<(std::ostream& os, const RingElem& x);

/// x / y when the quotient lies in Z[λ], nullopt otherwise. y must be nonzero.
std::optional<RingElem> ring_quotient(const RingElem& x, const RingElem& y);

/// Element of Q(λ_p) as num/den with den a positive integer and
/// gcd(den, content(num)) = 1.
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(int p, long value);
    FieldElem(const RingElem& num);  // NOLINT(google-explicit-constructor)
    FieldElem(const RingElem& num, const mpz_class& den);
    static FieldElem rational(int p, const mpq_class& q);

    int p() const { return num_.p(); }
    const RingElem& num() const { return num_; }
    const mpz_class& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == 1; }
    bool is_rational() const { return num_.is_integer(); }

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& rhs) const;
    FieldElem operator-(const FieldElem& rhs) const;
    FieldElem operator*(const FieldElem& rhs) const;
    FieldElem operator/(const FieldElem& rhs) const;
    FieldElem& operator+=(const FieldElem& rhs) { return *this = *this + rhs; }
    FieldElem& operator-=(const FieldElem& rhs) { return *this = *this - rhs; }
    FieldElem& operator*=(const FieldElem& rhs) { return *this = *this * rhs; }
    /// Multiplicative inverse through the extended polynomial gcd with the minimal polynomial.
    FieldElem inverse() const;
    FieldElem pow(int e) const;

    RealInterval enclose(long precision_bits) const;
    std::string to_string(const std::string& var = "l") const;

    friend bool operator==(const FieldElem& a, const FieldElem& b) = default;

private:
    RingElem num_;
    mpz_class den_ = 1;

    void canonicalize();
};

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

/// Element u + v·√D of Q(λ_p)[t]/(t² − D), √D the non-negative real root.
///
/// When D happens to be a square in Q(λ_p) the ring has zero divisors; dividing
/// by one raises ZeroDivisor carrying the exact square root of D, and callers
/// restart with fold() applied.
class ExtElem {
public:
    ExtElem() = default;
    ExtElem(const FieldElem& u, const RingElem& D);
    ExtElem(const FieldElem& u, const FieldElem& v, const RingElem& D);
    /// The element √D itself.
    static ExtElem sqrt_of(const RingElem& D);

    int p() const { return u_.p(); }
    const FieldElem& u() const { return u_; }
    const FieldElem& v() const { return v_; }
    const RingElem& D() const { return D_; }

    /// Formally zero (u = v = 0).
    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    bool in_base_field() const { return v_.is_zero(); }

    ExtElem conj() const;
    /// u² − v²·D
    FieldElem norm() const;

    ExtElem operator-() const;
    ExtElem operator+(const ExtElem& rhs) const;
    ExtElem operator-(const ExtElem& rhs) const;
    ExtElem operator*(const ExtElem& rhs) const;
    ExtElem operator*(const FieldElem& rhs) const;
    ExtElem operator/(const ExtElem& rhs) const;
    ExtElem& operator+=(const ExtElem& rhs) { return *this = *this + rhs; }
    ExtElem& operator-=(const ExtElem& rhs) { return *this = *this - rhs; }
    ExtElem& operator*=(const ExtElem& rhs) { return *this = *this * rhs; }
    ExtElem inverse() const;
    ExtElem pow(int e) const;

    /// Replace √D by the exact root w (w² = D, w > 0).
    ExtElem fold(const FieldElem& w) const;

    RealInterval enclose(long precision_bits) const;
    std::string to_string(const std::string& var = "l") const;

    /// √D parts are compared only when present.
    friend bool operator==(const ExtElem& a, const ExtElem& b);

private:
    FieldElem u_;
    FieldElem v_;
    RingElem D_;

    RingElem common_D(const ExtElem& rhs) const;
};

std::ostream& operator<<(std::ostream& os, const ExtElem& x);

/// Raised when dividing by a nonzero element of norm zero: D is then a perfect
/// square in Q(λ_p) and `witness()` is its positive square root.
class ZeroDivisor : public DomainError {
public:
    explicit ZeroDivisor(FieldElem witness)
        : DomainError("zero divisor: the discriminant is a square in Q(lambda)"), witness_(std::move(witness)) {}
    const FieldElem& witness() const { return witness_; }

private:
    FieldElem witness_;
};

/// Sign-oracle policy: start precision and the bound past which a still
/// undecided nonzero value is reported as an internal error.
struct SignPolicy {
    static constexpr long start_bits = 128;
    static constexpr long max_bits = 8192;
};

/// Exact sign under the real embedding λ_p = 2cos(π/p). Zero is decided
/// algebraically first; the sign of a nonzero value comes from certified
/// interval evaluation at increasing precision.
int sign(const RingElem& x);
int sign(const FieldElem& x);
/// Signs in the extension reduce to signs in Q(λ): when u and v disagree the
/// answer is sign(u)·sign(u² − v²D). A zero norm there means u + v√D = 0.
int sign(const ExtElem& x);

/// Fixed-point decimal rendering with `digits` digits after the point.
std::string to_decimal(const ExtElem& x, int digits);
std::string to_decimal(const FieldElem& x, int digits);

}  // namespace hecke
