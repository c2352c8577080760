#include "hecke/quadforms.hpp"

namespace hecke {

std::string QForm::to_string() const {
    return "[" + A.to_string() + ", " + B.to_string() + ", " + C.to_string() + "]";
}

QForm form_of_matrix(const Mat& m) {
    if (classify(m) != MatClass::hyperbolic) throw DomainError("form of a non-hyperbolic matrix");
    QForm q{m.c(), m.d() - m.a(), -m.b()};
    const RingElem tr = m.trace();
    if (q.disc() != tr * tr - RingElem(m.p(), 4L)) throw InternalError("form discriminant differs from trace^2 - 4");
    return q;
}

std::pair<Surd, Surd> fixed_points(const Mat& m) {
    if (m.c().is_zero()) throw DomainError("matrix with c = 0 fixes infinity");
    const RingElem tr = m.trace();
    Surd alpha(m.a() - m.d(), m.c() * 2L, tr * tr - RingElem(m.p(), 4L));
    Surd conj = alpha.conjugate();
    return {std::move(alpha), std::move(conj)};
}

QForm act(const QForm& q, const Mat& m) {
    const RingElem &a = m.a(), &b = m.b(), &c = m.c(), &d = m.d();
    QForm r{q.A * a * a + q.B * a * c + q.C * c * c,
            q.A * a * b * 2L + q.B * (a * d + b * c) + q.C * c * d * 2L,
            q.A * b * b + q.B * b * d + q.C * d * d};
    if (r.disc() != q.disc()) throw InternalError("form action changed the discriminant");
    return r;
}

QForm negate(const QForm& q) { return QForm{-q.A, -q.B, -q.C}; }

bool is_simple(const QForm& q) { return sign(q.A) > 0 && sign(q.C) < 0; }

Surd surd_of_form(const QForm& q) {
    if (q.A.is_zero()) throw DomainError("form with A = 0 has a root at infinity");
    return Surd(-q.B, q.A * 2L, q.disc());
}

Mat matrix_of_surd(const Surd& alpha) {
    const CF cf = cf_expand(alpha);
    if (is_parabolic_period(cf)) throw DomainError("parabolic point has no hyperbolic stabilizer");
    const Mat V = cf_matrix(cf.p, cf.preperiod);
    return V * cf_matrix(cf.p, cf.period) * V.inverse();
}

bool transpose_form_identity_check(const Mat& m) {
    const Mat mt = m.transpose();
    const Mat T = generator_T(m.p());
    if (form_of_matrix(mt) != negate(act(form_of_matrix(m), T))) return false;
    const Surd lhs = fixed_points(mt).first;
    const Surd rhs = act(T, fixed_points(m).second);
    return surd_equal(lhs, rhs);
}

GenWord word_of_matrix(const Mat& m) {
    if (classify(m) != MatClass::hyperbolic) throw DomainError("word of a non-hyperbolic matrix");
    const CF cf = cf_expand(fixed_points(m).first);
    const GenWord root = period_to_word(m.p(), cf.period);
    const Mat r = word_to_matrix(root);
    const RingElem target = m.trace();
    Mat power = r;
    for (int e = 1;; ++e) {
        const int s = sign(power.trace() - target);
        if (s == 0) {
            if (e == 1) return root;
            throw NonPrimitive(m.p(), root.letters, e);
        }
        if (s > 0) throw InternalError("matrix trace is not a power of its primitive root's trace");
        power = power * r;
    }
}

}  // namespace hecke
