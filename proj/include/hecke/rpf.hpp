#pragma once

// Rational period functions: construction from ISPs, the linear ansatz for
// the z^{−n} constants, exact evaluation and verification.

#include <optional>
#include <string>
#include <vector>

#include "hecke/cf.hpp"
#include "hecke/isp.hpp"

namespace hecke {

/// coeff / (z − alpha)^order
struct PoleTerm {
    Surd alpha;
    int order = 1;
    ExtElem coeff;

    friend bool operator==(const PoleTerm&, const PoleTerm&) = default;
};

/// Σ pole terms + a0(1 − z^{−2k}) + b1 z^{−1} + Σ_{n=1}^{2k−1} c_n z^{−n}, weight 2k.
struct RPF {
    int p = 0;
    int k = 1;
    /// Shared discriminant of the poles and coefficients.
    RingElem D;
    std::vector<PoleTerm> pole_terms;
    ExtElem a0;
    ExtElem b1;
    /// c_1 … c_{2k−1}
    std::vector<ExtElem> tail;

    /// Zero RPF of weight 2k.
    static RPF zero(int p, int k, const RingElem& D);

    /// True when a0, b1 or some tail constant is nonzero, i.e. z = 0 may be a pole.
    bool has_zero_part() const;
    /// Σ orders, plus 2k when the zero part is present.
    int order_mass() const;

    RPF operator+(const RPF& rhs) const;
    RPF operator-(const RPF& rhs) const;
    RPF operator*(const ExtElem& s) const;

    friend bool operator==(const RPF&, const RPF&) = default;
};

/// a0(1 − z^{−2k}) + b1 z^{−1}; b1 must vanish unless k = 1.
RPF q_zero(int p, int k, const ExtElem& a0, const ExtElem& b1);

/// Principal part at α of (α − α′)^k / ((z − α)^k (z − α′)^k): the coefficient
/// on (z − α)^{−(k−j)} is C(k−1+j, j)(−1)^j(α − α′)^{−j}.
std::vector<PoleTerm> principal_part(int k, const Surd& alpha);

/// Q_α(z, 1)^{−k} = D^{−k/2}(q_{k,α} + (−1)^k q_{k,α′}) as pole terms.
std::vector<PoleTerm> quadratic_power(int k, const Surd& alpha);

/// Σ_{α ∈ Z_A} Q_α(z,1)^{−k} for a symmetric ISP and odd k.
RPF build_symmetric_odd(int k, const ISP& isp);
/// Σ_{Z_A} Q_α^{−k} − (−1)^k Σ_{Z_{−A}} Q_α^{−k} for a non-symmetric ISP.
RPF build_union(int k, const ISP& isp);

enum class AnsatzTemplate { symmetric, nonsymmetric };

struct AnsatzResult {
    enum class Kind { unique, family, no_solution };
    Kind kind = Kind::no_solution;
    /// Free constants set to zero in the family case.
    RPF particular;
    /// Each direction is a full vector (c_1 … c_{2k−1}) spanning the homogeneous solutions.
    std::vector<std::vector<ExtElem>> directions;
    int equations = 0;
    int rank = 0;
};

/// Fixes the pole part from the template and solves exactly for c_1 … c_{2k−1}.
AnsatzResult build_ansatz(int k, const ISP& isp, AnsatzTemplate tmpl);

/// Exact value at z. Throws PoleHit at a pole.
ExtElem evaluate(const RPF& q, const FieldElem& z);

/// q(z) + z^{−2k} q(−1/z)
ExtElem residual_T(const RPF& q, const FieldElem& z);
/// Σ_{j=0}^{p−1} (c_j z + d_j)^{−2k} q(U^j z). Throws PoleHit when a copy is singular at z.
ExtElem residual_U(const RPF& q, const FieldElem& z);

/// Number of sample points that decides both relations: 2k(p+1) + T(p+1) + 8,
/// T the order mass.
int sample_budget(const RPF& q);

struct Verdict {
    bool valid = false;
    /// "T" or "U" on failure.
    std::string relation;
    std::optional<FieldElem> witness;
    std::optional<ExtElem> residual;
    int points_checked = 0;
};

/// Both relations at sample_budget(q) even integers 2, 4, 6, … that avoid poles.
Verdict verify(const RPF& q);

/// Replaces √D by its integer square root when D is a perfect square integer.
ExtElem simplify(const ExtElem& x);

/// LaTeX rendering; conjugate pole pairs that form s·Q(z,1)^{−k} are shown as
/// such when `pretty` is set.
std::string to_latex(const RPF& q, bool pretty = true);
std::string to_latex(const RingElem& x);
std::string to_latex(const FieldElem& x);
std::string to_latex(const ExtElem& x);

}  // namespace hecke
