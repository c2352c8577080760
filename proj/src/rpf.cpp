#include "hecke/rpf.hpp"

#include <algorithm>

namespace hecke {

namespace {

ExtElem ext_zero(int p, const RingElem& D) { return ExtElem(FieldElem(p, 0L), D); }
ExtElem ext_int(int p, long v, const RingElem& D) { return ExtElem(FieldElem(p, v), D); }

mpz_class binomial(long n, long r) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return b;
}

void merge_into(std::vector<PoleTerm>& terms, const PoleTerm& t) {
    for (auto& existing : terms) {
        if (existing.order == t.order && existing.alpha == t.alpha) {
            existing.coeff += t.coeff;
            return;
        }
    }
    terms.push_back(t);
}

void drop_zero_terms(std::vector<PoleTerm>& terms) {
    terms.erase(std::remove_if(terms.begin(), terms.end(), [](const PoleTerm& t) { return t.coeff.is_zero(); }),
                terms.end());
}

std::vector<PoleTerm> scaled(std::vector<PoleTerm> terms, const ExtElem& s) {
    for (auto& t : terms) t.coeff = t.coeff * s;
    return terms;
}

void append(RPF& q, const std::vector<PoleTerm>& terms) {
    for (const auto& t : terms) merge_into(q.pole_terms, t);
    drop_zero_terms(q.pole_terms);
}

// D^{−k/2}
ExtElem inverse_root_power(int k, const RingElem& D) {
    const FieldElem Dinv = FieldElem(D).inverse();
    if (k % 2 == 0) return ExtElem(Dinv.pow(k / 2), D);
    return ExtElem(FieldElem(D.p(), 0L), Dinv.pow((k + 1) / 2), D);
}

void check_weight(int k) {
    if (k < 1) throw DomainError("weight 2k needs k >= 1");
}

std::vector<Mat> u_powers(int p) {
    std::vector<Mat> out;
    const Mat U = generator_U(p);
    Mat m = Mat::identity(p);
    for (int j = 0; j < p; ++j) {
        out.push_back(m);
        m = m * U;
    }
    return out;
}

ExtElem evaluate_impl(const RPF& q, const FieldElem& z, const std::optional<FieldElem>& root) {
    auto F = [&](const ExtElem& x) { return root ? x.fold(*root) : x; };
    ExtElem acc = ext_zero(q.p, q.D);
    const Surd* last = nullptr;
    ExtElem inv;
    for (const PoleTerm& t : q.pole_terms) {
        if (!last || !(*last == t.alpha)) {
            const ExtElem diff = F(ExtElem(z, t.alpha.D()) - t.alpha.value());
            if (sign(diff) == 0) throw PoleHit(t.alpha.to_string());
            inv = diff.inverse();
            last = &t.alpha;
        }
        acc += F(t.coeff) * inv.pow(t.order);
    }
    if (q.has_zero_part()) {
        if (z.is_zero()) throw PoleHit("0");
        const FieldElem zi = z.inverse();
        acc += F(q.a0) * (FieldElem(q.p, 1L) - zi.pow(2 * q.k));
        acc += F(q.b1) * zi;
        FieldElem zp = zi;
        for (const ExtElem& c : q.tail) {
            acc += F(c) * zp;
            zp *= zi;
        }
    }
    return acc;
}

}  // namespace

// ---------------------------------------------------------------- RPF

RPF RPF::zero(int p, int k, const RingElem& D) {
    check_weight(k);
    RPF q;
    q.p = p;
    q.k = k;
    q.D = D;
    q.a0 = ext_zero(p, D);
    q.b1 = ext_zero(p, D);
    q.tail.assign(static_cast<std::size_t>(2 * k - 1), ext_zero(p, D));
    return q;
}

bool RPF::has_zero_part() const {
    if (!a0.is_zero() || !b1.is_zero()) return true;
    return std::any_of(tail.begin(), tail.end(), [](const ExtElem& c) { return !c.is_zero(); });
}

int RPF::order_mass() const {
    int T = 0;
    for (const auto& t : pole_terms) T += t.order;
    const bool has_tail = std::any_of(tail.begin(), tail.end(), [](const ExtElem& c) { return !c.is_zero(); });
    if (has_zero_part() || has_tail) T += 2 * k;
    return T;
}

RPF RPF::operator+(const RPF& rhs) const {
    if (p != rhs.p || k != rhs.k) throw DomainError("adding period functions of different group or weight");
    RPF r = *this;
    if (r.pole_terms.empty() && !rhs.pole_terms.empty()) r.D = rhs.D;
    append(r, rhs.pole_terms);
    r.a0 += rhs.a0;
    r.b1 += rhs.b1;
    for (std::size_t i = 0; i < r.tail.size(); ++i) r.tail[i] += rhs.tail[i];
    return r;
}

RPF RPF::operator-(const RPF& rhs) const { return *this + rhs * ext_int(rhs.p, -1, rhs.D); }

RPF RPF::operator*(const ExtElem& s) const {
    RPF r = *this;
    r.pole_terms = scaled(r.pole_terms, s);
    drop_zero_terms(r.pole_terms);
    r.a0 *= s;
    r.b1 *= s;
    for (auto& c : r.tail) c *= s;
    return r;
}

RPF q_zero(int p, int k, const ExtElem& a0, const ExtElem& b1) {
    check_weight(k);
    if (k != 1 && !b1.is_zero()) throw DomainError("the z^{-1} term of a pole-at-zero function needs weight 2");
    RPF q = RPF::zero(p, k, a0.D());
    q.a0 = a0;
    q.b1 = b1;
    return q;
}

std::vector<PoleTerm> principal_part(int k, const Surd& alpha) {
    check_weight(k);
    const int p = alpha.p();
    const RingElem& D = alpha.D();
    if (D.is_zero()) throw DomainError("principal part needs alpha != alpha'");
    // (α − α′)^{−1} = Q/(2√D) = (Q/(2D))√D
    const ExtElem inv_gap(FieldElem(p, 0L), FieldElem(alpha.Q()) / FieldElem(D * 2L), D);
    std::vector<PoleTerm> out;
    ExtElem gap_pow = ext_int(p, 1, D);
    for (int j = 0; j < k; ++j) {
        mpz_class c = binomial(k - 1 + j, j);
        if (j % 2) c = -c;
        out.push_back(PoleTerm{alpha, k - j, gap_pow * FieldElem(RingElem(p, c))});
        gap_pow *= inv_gap;
    }
    return out;
}

std::vector<PoleTerm> quadratic_power(int k, const Surd& alpha) {
    const ExtElem s = inverse_root_power(k, alpha.D());
    std::vector<PoleTerm> out = scaled(principal_part(k, alpha), s);
    const ExtElem s2 = k % 2 ? s * ext_int(alpha.p(), -1, alpha.D()) : s;
    for (auto& t : scaled(principal_part(k, alpha.conjugate()), s2)) out.push_back(std::move(t));
    return out;
}

RPF build_symmetric_odd(int k, const ISP& isp) {
    if (!isp.symmetric) throw DomainError("word " + isp.word.to_string() + " is not Hecke-symmetric");
    if (k % 2 == 0) throw DomainError("the symmetric quadratic construction needs odd k");
    RPF q = RPF::zero(isp.p(), k, isp.D);
    for (const Surd& a : isp.positives) append(q, quadratic_power(k, a));
    return q;
}

RPF build_union(int k, const ISP& isp) {
    if (isp.symmetric) throw DomainError("word " + isp.word.to_string() + " is Hecke-symmetric; the union degenerates");
    const ISP other = isp_of_word(isp.conjugate_word);
    RPF q = RPF::zero(isp.p(), k, isp.D);
    for (const Surd& a : isp.positives) append(q, quadratic_power(k, a));
    // −(−1)^k
    const ExtElem s = ext_int(isp.p(), k % 2 ? 1 : -1, isp.D);
    for (const Surd& a : other.positives) append(q, scaled(quadratic_power(k, a), s));
    return q;
}

// ---------------------------------------------------------------- evaluation

ExtElem evaluate(const RPF& q, const FieldElem& z) {
    try {
        return evaluate_impl(q, z, std::nullopt);
    } catch (const ZeroDivisor& e) {
        return evaluate_impl(q, z, e.witness());
    }
}

ExtElem residual_T(const RPF& q, const FieldElem& z) {
    if (z.is_zero()) throw PoleHit("0");
    const FieldElem zi = z.inverse();
    return evaluate(q, z) + evaluate(q, -zi) * zi.pow(2 * q.k);
}

ExtElem residual_U(const RPF& q, const FieldElem& z) {
    ExtElem acc = ext_zero(q.p, q.D);
    for (const Mat& m : u_powers(q.p)) {
        const FieldElem den = FieldElem(m.c()) * z + FieldElem(m.d());
        if (den.is_zero()) throw PoleHit("infinity");
        const FieldElem image = (FieldElem(m.a()) * z + FieldElem(m.b())) / den;
        acc += evaluate(q, image) * den.pow(-2 * q.k);
    }
    return acc;
}

int sample_budget(const RPF& q) { return 2 * q.k * (q.p + 1) + q.order_mass() * (q.p + 1) + 8; }

Verdict verify(const RPF& q) {
    Verdict v;
    const int need = sample_budget(q);
    const long max_point = 2L * (need + 64) * 4;
    for (long n = 2; v.points_checked < need; n += 2) {
        if (n > max_point) throw InternalError("too many sample points hit poles");
        const FieldElem z(q.p, n);
        ExtElem rT, rU;
        try {
            rT = residual_T(q, z);
            rU = residual_U(q, z);
        } catch (const PoleHit&) {
            continue;
        }
        ++v.points_checked;
        if (sign(rT) != 0) {
            v.relation = "T";
            v.witness = z;
            v.residual = rT;
            return v;
        }
        if (sign(rU) != 0) {
            v.relation = "U";
            v.witness = z;
            v.residual = rU;
            return v;
        }
    }
    v.valid = true;
    return v;
}

// ---------------------------------------------------------------- ansatz

namespace {

using Row = std::vector<ExtElem>;

struct Reduced {
    bool consistent = true;
    std::vector<int> pivots;
    std::vector<Row> rows;
};

Reduced row_reduce(std::vector<Row> rows, std::size_t ncols) {
    for (;;) {
        try {
            Reduced out;
            std::size_t r = 0;
            for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
                std::size_t piv = r;
                while (piv < rows.size() && sign(rows[piv][col]) == 0) ++piv;
                if (piv == rows.size()) continue;
                std::swap(rows[r], rows[piv]);
                const ExtElem inv = rows[r][col].inverse();
                for (auto& x : rows[r]) x *= inv;
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    if (i == r || rows[i][col].is_zero()) continue;
                    const ExtElem f = rows[i][col];
                    for (std::size_t j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
                }
                out.pivots.push_back(static_cast<int>(col));
                ++r;
            }
            for (std::size_t i = r; i < rows.size(); ++i)
                if (sign(rows[i][ncols]) != 0) out.consistent = false;
            rows.resize(r);
            out.rows = std::move(rows);
            return out;
        } catch (const ZeroDivisor& e) {
            for (auto& row : rows)
                for (auto& x : row) x = x.fold(e.witness());
        }
    }
}

bool is_odd_prime(long n) {
    if (n < 3 || n % 2 == 0) return false;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

AnsatzResult build_ansatz(int k, const ISP& isp, AnsatzTemplate tmpl) {
    check_weight(k);
    const bool want_symmetric = tmpl == AnsatzTemplate::symmetric;
    if (want_symmetric != isp.symmetric)
        throw DomainError(std::string("the ") + (want_symmetric ? "symmetric" : "nonsymmetric") +
                          " template does not match word " + isp.word.to_string());
    const int p = isp.p();
    const RingElem& D = isp.D;
    const ExtElem minus_one = ext_int(p, -1, D);

    RPF fixed = RPF::zero(p, k, D);
    if (want_symmetric) {
        for (const Surd& a : isp.positives) {
            append(fixed, principal_part(k, a));
            append(fixed, scaled(principal_part(k, a.conjugate()), minus_one));
        }
    } else {
        const ISP other = isp_of_word(isp.conjugate_word);
        for (const Surd& a : isp.positives) append(fixed, principal_part(k, a));
        for (const Surd& a : other.positives) append(fixed, scaled(principal_part(k, a.conjugate()), minus_one));
    }

    const std::size_t n = static_cast<std::size_t>(2 * k - 1);
    std::vector<RPF> basis;
    for (std::size_t i = 0; i < n; ++i) {
        RPF b = RPF::zero(p, k, D);
        b.tail[i] = ext_int(p, 1, D);
        basis.push_back(std::move(b));
    }

    int mass = 2 * k;
    for (const auto& t : fixed.pole_terms) mass += t.order;
    const int need = 2 * k * (p + 1) + mass * (p + 1) + 8;

    std::vector<Row> rows;
    int used = 0;
    for (long z = 3; used < need; z += 2) {
        if (!is_odd_prime(z)) continue;
        const FieldElem zf(p, z);
        Row rowT(n + 1), rowU(n + 1);
        try {
            for (std::size_t i = 0; i < n; ++i) {
                rowT[i] = residual_T(basis[i], zf);
                rowU[i] = residual_U(basis[i], zf);
            }
            rowT[n] = -residual_T(fixed, zf);
            rowU[n] = -residual_U(fixed, zf);
        } catch (const PoleHit&) {
            continue;
        }
        rows.push_back(std::move(rowT));
        rows.push_back(std::move(rowU));
        ++used;
    }

    AnsatzResult res;
    res.equations = static_cast<int>(rows.size());
    const Reduced red = row_reduce(std::move(rows), n);
    res.rank = static_cast<int>(red.pivots.size());
    if (!red.consistent) {
        res.kind = AnsatzResult::Kind::no_solution;
        res.particular = fixed;
        return res;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : red.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    RPF particular = fixed;
    for (std::size_t i = 0; i < red.pivots.size(); ++i)
        particular.tail[static_cast<std::size_t>(red.pivots[i])] = red.rows[i][n];
    res.particular = particular;

    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<ExtElem> dir(n, ext_zero(p, D));
        dir[f] = ext_int(p, 1, D);
        for (std::size_t i = 0; i < red.pivots.size(); ++i)
            dir[static_cast<std::size_t>(red.pivots[i])] = -red.rows[i][f];
        res.directions.push_back(std::move(dir));
    }
    res.kind = res.directions.empty() ? AnsatzResult::Kind::unique : AnsatzResult::Kind::family;
    return res;
}

// ---------------------------------------------------------------- rendering

ExtElem simplify(const ExtElem& x) {
    if (x.v().is_zero() || !x.D().is_integer()) return x;
    const mpz_class& d = x.D().coeffs()[0];
    if (d < 0 || !mpz_perfect_square_p(d.get_mpz_t())) return x;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
    return x.fold(FieldElem(RingElem(x.p(), r)));
}

namespace {

std::string join_signed(const std::vector<std::string>& terms) {
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
    return out.empty() ? "0" : out;
}

// No " + " or " - " outside braces and \\left...\\right groups.
bool single_term(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '{' || s.compare(i, 5, "\\left") == 0) ++depth;
        if (s[i] == '}' || s.compare(i, 6, "\\right") == 0) --depth;
        if (depth == 0 && i + 2 < s.size() && s[i] == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ')
            return false;
    }
    return true;
}

// c·body with unit coefficients elided; body may be empty for a bare constant.
std::string scaled_latex(const ExtElem& c, const std::string& body) {
    const ExtElem x = simplify(c);
    const bool neg = sign(x) < 0;
    const ExtElem mag = neg ? -x : x;
    std::string coef = to_latex(mag);
    std::string out;
    if (body.empty()) {
        out = coef;
    } else if (coef == "1") {
        out = body;
    } else {
        out = (single_term(coef) ? coef : "\\left(" + coef + "\\right)") + " " + body;
    }
    return neg ? "-" + out : out;
}

std::string frac_latex(const ExtElem& c, const std::string& den) {
    const ExtElem x = simplify(c);
    const bool neg = sign(x) < 0;
    const ExtElem mag = neg ? -x : x;
    const std::string out = "\\frac{" + to_latex(mag) + "}{" + den + "}";
    return neg ? "-" + out : out;
}

std::string power(const std::string& base, int e) {
    return e == 1 ? base : base + "^{" + std::to_string(e) + "}";
}

std::string linear_factor(const Surd& a) {
    const ExtElem x = simplify(a.value());
    const bool neg = sign(x) < 0;
    const std::string body = to_latex(neg ? -x : x);
    return (neg ? "z + " : "z - ") + (single_term(body) ? body : "\\left(" + body + "\\right)");
}

std::string quadratic_latex(const FieldElem& A, const FieldElem& B, const FieldElem& C) {
    std::vector<std::string> terms;
    auto add = [&](const FieldElem& c, const std::string& mono) {
        if (c.is_zero()) return;
        terms.push_back(scaled_latex(ExtElem(c, RingElem(c.p(), 0L)), mono));
    };
    add(A, "z^{2}");
    add(B, "z");
    add(C, "");
    return join_signed(terms);
}

}  // namespace

std::string to_latex(const RingElem& x) {
    std::vector<std::string> terms;
    const auto& c = x.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        const mpz_class a = abs(c[i]);
        std::string t;
        if (i == 0) {
            t = a.get_str();
        } else {
            if (a != 1) t = a.get_str();
            t += i == 1 ? "\\lambda" : "\\lambda^{" + std::to_string(i) + "}";
        }
        terms.push_back(c[i] < 0 ? "-" + t : t);
    }
    return join_signed(terms);
}

std::string to_latex(const FieldElem& x) {
    if (x.is_integral()) return to_latex(x.num());
    const bool neg = std::all_of(x.num().coeffs().begin(), x.num().coeffs().end(), [](const mpz_class& c) { return c <= 0; });
    const FieldElem mag = neg ? -x : x;
    const std::string out = "\\frac{" + to_latex(mag.num()) + "}{" + mag.den().get_str() + "}";
    return neg ? "-" + out : out;
}

std::string to_latex(const ExtElem& x) {
    if (x.v().is_zero()) return to_latex(x.u());
    const std::string root = "\\sqrt{" + to_latex(x.D()) + "}";
    std::string vpart;
    const std::string vs = to_latex(x.v());
    if (vs == "1") {
        vpart = root;
    } else if (vs == "-1") {
        vpart = "-" + root;
    } else {
        vpart = (single_term(vs) ? vs : "\\left(" + vs + "\\right)") + root;
    }
    if (x.u().is_zero()) return vpart;
    return join_signed({to_latex(x.u()), vpart});
}

std::string to_latex(const RPF& q, bool pretty) {
    std::vector<std::string> terms;
    std::vector<bool> used(q.pole_terms.size(), false);
    const int k = q.k;

    if (pretty) {
        for (std::size_t i = 0; i < q.pole_terms.size(); ++i) {
            const PoleTerm& t = q.pole_terms[i];
            if (used[i] || t.order != k) continue;
            // Representative with Q > 0 so that the form has A > 0.
            const Surd rep = sign(t.alpha.Q()) > 0 ? t.alpha : t.alpha.conjugate();
            const std::vector<PoleTerm> unit = quadratic_power(k, rep);
            // s is read off the leading coefficient at rep.
            std::optional<ExtElem> lead;
            for (const auto& u : q.pole_terms)
                if (u.order == k && u.alpha == rep) lead = u.coeff;
            if (!lead) continue;
            const ExtElem s = *lead / unit.front().coeff;
            std::vector<std::size_t> hits;
            bool ok = true;
            for (const auto& u : unit) {
                const ExtElem want = u.coeff * s;
                bool found = false;
                for (std::size_t j = 0; j < q.pole_terms.size(); ++j) {
                    const PoleTerm& have = q.pole_terms[j];
                    if (!used[j] && have.order == u.order && have.alpha == u.alpha && sign(have.coeff - want) == 0) {
                        hits.push_back(j);
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            for (auto j : hits) used[j] = true;
            const FieldElem A = FieldElem(rep.Q()) / FieldElem(rep.p(), 2L);
            const FieldElem B = -FieldElem(rep.P());
            const FieldElem C = (FieldElem(rep.P()) * FieldElem(rep.P()) - FieldElem(rep.D())) / FieldElem(rep.Q() * 2L);
            terms.push_back(frac_latex(s, power("\\left(" + quadratic_latex(A, B, C) + "\\right)", k)));
        }
    }
    for (std::size_t i = 0; i < q.pole_terms.size(); ++i) {
        if (used[i]) continue;
        const PoleTerm& t = q.pole_terms[i];
        terms.push_back(frac_latex(t.coeff, power("\\left(" + linear_factor(t.alpha) + "\\right)", t.order)));
    }
    if (!q.a0.is_zero())
        terms.push_back(scaled_latex(q.a0, "\\left(1 - z^{-" + std::to_string(2 * k) + "}\\right)"));
    if (!q.b1.is_zero()) terms.push_back(frac_latex(q.b1, "z"));
    for (std::size_t n = 0; n < q.tail.size(); ++n)
        if (!q.tail[n].is_zero()) terms.push_back(frac_latex(q.tail[n], power("z", static_cast<int>(n) + 1)));
    return join_signed(terms);
}

}  // namespace hecke
