#pragma once

// Matrices of the Hecke group G_p and conjugacy-class generator words.

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "hecke/field.hpp"

namespace hecke {

/// Determinant-one 2×2 matrix over Z[λ_p], kept as the projective
/// representative with positive trace (ties at trace 0 broken by the first
/// nonzero of c, a being positive).
class Mat {
public:
    /// Throws DomainError unless ad − bc = 1.
    Mat(RingElem a, RingElem b, RingElem c, RingElem d);
    static Mat identity(int p);

    int p() const { return a_.p(); }
    const RingElem& a() const { return a_; }
    const RingElem& b() const { return b_; }
    const RingElem& c() const { return c_; }
    const RingElem& d() const { return d_; }
    RingElem trace() const { return a_ + d_; }

    Mat operator*(const Mat& rhs) const;
    Mat inverse() const;
    Mat transpose() const;
    Mat pow(unsigned e) const;

    /// Möbius action z ↦ (az + b)/(cz + d); DomainError when cz + d = 0.
    FieldElem apply(const FieldElem& z) const;

    friend bool operator==(const Mat&, const Mat&) = default;

    std::string to_string() const;

private:
    struct Unchecked {};
    Mat(Unchecked, RingElem a, RingElem b, RingElem c, RingElem d);
    void normalize();

    RingElem a_, b_, c_, d_;
};

enum class MatClass { hyperbolic, parabolic, elliptic };

std::string to_string(MatClass k);

Mat generator_S(int p);
Mat generator_T(int p);
/// U = ST
Mat generator_U(int p);
/// V_j = U^{j−1}S = [[a_j, a_{j+1}], [a_{j−1}, a_j]] with a_0 = 0, a_1 = 1, a_{j+1} = λa_j − a_{j−1}.
Mat generator_V(int p, int j);

/// sin(jπ/p)/sin(π/p) as an element of Z[λ].
RingElem chebyshev_a(int p, int j);

/// Trichotomy by sign(|trace| − 2).
MatClass classify(const Mat& m);

/// Cyclic word in the letters 1..p−1, stored as its least rotation.
struct GenWord {
    int p = 0;
    std::vector<int> letters;

    /// Validates letters and canonicalizes the rotation.
    static GenWord make(int p, std::vector<int> letters);

    std::size_t size() const { return letters.size(); }
    bool primitive() const;
    /// Pure power of V_1 or of V_{p−1}.
    bool parabolic() const;
    /// "1,3,5"
    std::string to_string() const;

    friend bool operator==(const GenWord&, const GenWord&) = default;
    friend auto operator<=>(const GenWord&, const GenWord&) = default;
};

std::vector<int> canonical_rotation(const std::vector<int>& letters);
bool is_primitive_word(const std::vector<int>& letters);
/// Shortest word r with letters = r^e; returns (r, e).
std::pair<std::vector<int>, int> primitive_root(const std::vector<int>& letters);

/// Letters reversed, each j mapped to p − j, canonical rotation.
GenWord transpose_word(const GenWord& w);

/// Product of the V_j, left to right.
Mat word_to_matrix(const GenWord& w);

/// Canonical primitive necklaces of length n over {1..p−1}, lexicographically sorted.
/// For n = 1 the parabolic letters 1 and p − 1 are left out.
std::vector<GenWord> enumerate_words(int p, int n);

/// Canonical word whose product is conjugate to M. Throws DomainError for
/// non-hyperbolic M and NonPrimitive when M is a proper power.
GenWord word_of_matrix(const Mat& m);

}  // namespace hecke
