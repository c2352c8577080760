#pragma once

// λ-binary quadratic forms and the matrix ↔ form ↔ fixed point correspondence.

#include <string>
#include <utility>

#include "hecke/cf.hpp"
#include "hecke/group.hpp"

namespace hecke {

/// A x² + B xy + C y² over Z[λ_p]. Never content-normalized.
struct QForm {
    RingElem A, B, C;

    int p() const { return A.p(); }
    RingElem disc() const { return B * B - A * C * 4L; }
    std::string to_string() const;
    friend bool operator==(const QForm&, const QForm&) = default;
};

/// [c, d − a, −b]. Throws DomainError for non-hyperbolic M.
QForm form_of_matrix(const Mat& m);

/// Attracting and repelling fixed points (a − d ± √D)/(2c). Throws DomainError when c = 0.
std::pair<Surd, Surd> fixed_points(const Mat& m);

/// (Q ∘ M)(x, y) = Q(ax + by, cx + dy).
QForm act(const QForm& q, const Mat& m);
QForm negate(const QForm& q);

/// A > 0 > C.
bool is_simple(const QForm& q);

/// Root (−B + √D)/(2A) of a form with A ≠ 0.
Surd surd_of_form(const QForm& q);

/// Primitive hyperbolic matrix with attracting fixed point α, built from its
/// continued fraction. Throws DomainError for parabolic points.
Mat matrix_of_surd(const Surd& alpha);

/// Q_{M^⊤} = −Q_M ∘ T and α_{M^⊤} = T·α′_M, checked exactly.
bool transpose_form_identity_check(const Mat& m);

}  // namespace hecke
