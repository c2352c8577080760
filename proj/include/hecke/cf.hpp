#pragma once

// Quadratic surds over Z[λ_p] and their λ-continued fractions.

#include <cstdint>
#include <string>
#include <vector>

#include "hecke/field.hpp"
#include "hecke/group.hpp"

namespace hecke {

/// (P + √D)/Q with P, Q, D in Z[λ_p], Q ≠ 0 and D ≥ 0.
///
/// Equality of values is semantic (surd_equal); operator== compares the
/// stored triple. The conjugate (P − √D)/Q is stored as (−P + √D)/(−Q).
class Surd {
public:
    Surd() = default;
    Surd(RingElem P, RingElem Q, RingElem D);

    int p() const { return P_.p(); }
    const RingElem& P() const { return P_; }
    const RingElem& Q() const { return Q_; }
    const RingElem& D() const { return D_; }

    ExtElem value() const;
    Surd conjugate() const { return Surd(-P_, -Q_, D_); }

    /// True when Q divides D − P² in Z[λ].
    bool is_normalized() const;
    /// Same value with Q | D − P², rescaling (P, Q, D) by Q when needed.
    Surd normalized() const;

    RealInterval enclose(long precision_bits) const { return value().enclose(precision_bits); }
    /// "(P + sqrt(D))/Q"
    std::string to_string(const std::string& var = "l") const;

    friend bool operator==(const Surd&, const Surd&) = default;

private:
    RingElem P_, Q_, D_;
};

/// Exact value equality, across discriminants as well.
bool surd_equal(const Surd& a, const Surd& b);
/// Exact ordering of values. Throws NotComparable for unequal surds with different D.
int compare(const Surd& a, const Surd& b);
int sign(const Surd& a);

/// M·α through the action of M^{−1} on the form of α. The result keeps D and
/// is normalized. Throws DomainError when the image is ∞.
Surd act(const Mat& m, const Surd& alpha);
/// S^i α = α + iλ.
Surd shift(const Surd& alpha, long i);

std::string to_decimal(const Surd& a, int digits);

/// λ-continued fraction [r_0; r_1, …, r_n, period repeating].
struct CF {
    int p = 0;
    std::vector<std::int64_t> preperiod;
    std::vector<std::int64_t> period;

    std::string to_string() const;
    friend bool operator==(const CF&, const CF&) = default;
};

/// ⌊α/λ⌋, exact including the case α/λ ∈ Z.
std::int64_t floor_over_lambda(const ExtElem& alpha);
std::int64_t floor_over_lambda(const Surd& alpha);

/// Iterates r_j = ⌊α_j/λ⌋ + 1, α_{j+1} = 1/(r_jλ − α_j) until the exact state repeats.
CF cf_expand(const Surd& alpha, int max_steps = 10000);

/// Runs of ones: at most p − 2 at the very start, at most p − 3 elsewhere,
/// the period read cyclically. An all-ones period is never admissible.
bool is_admissible(const CF& cf);
/// Period is a rotation of [2, 1, …, 1] with p − 3 ones.
bool is_parabolic_period(int p, const std::vector<std::int64_t>& period);
inline bool is_parabolic_period(const CF& cf) { return is_parabolic_period(cf.p, cf.period); }

/// Least rotation of a period.
std::vector<std::int64_t> canonical_period(const std::vector<std::int64_t>& period);
bool same_period_up_to_rotation(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b);

/// Rotation W = V_1^{m_1}V_{j_1} ⋯ V_1^{m_l}V_{j_l} with every j_t ≥ 2,
/// lexicographically least among those. Throws ParabolicError for pure powers
/// of V_1 or V_{p−1}.
std::vector<int> block_rotation(const GenWord& w);

/// Each block V_1^m V_j becomes m + 2 followed by j − 2 ones.
std::vector<std::int64_t> word_to_period(const GenWord& w);
/// Inverse of word_to_period; returns the canonical word.
GenWord period_to_word(int p, const std::vector<std::int64_t>& period);

/// Π S^{r}T over the entries.
Mat cf_matrix(int p, const std::vector<std::int64_t>& entries);

/// Attracting fixed point (a − d + √D)/(2c) of VWV^{−1}, D = trace² − 4.
Surd surd_of_cf(const CF& cf);

/// Purely periodic expansion with a non-parabolic period.
bool is_reduced(const Surd& alpha);
/// 0 < α′ < U^{j+2}(0) < α < U^{j+1}(0) for some 0 ≤ j ≤ p − 3.
bool reduced_by_inequality(const Surd& alpha);

}  // namespace hecke
