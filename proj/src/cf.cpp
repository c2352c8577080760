#include "hecke/cf.hpp"

#include <algorithm>
#include <map>

namespace hecke {

// ---------------------------------------------------------------- Surd

Surd::Surd(RingElem P, RingElem Q, RingElem D) : P_(std::move(P)), Q_(std::move(Q)), D_(std::move(D)) {
    if (P_.p() != Q_.p() || P_.p() != D_.p()) throw DomainError("surd components from different fields");
    if (Q_.is_zero()) throw DomainError("surd with zero denominator");
    if (sign(D_) < 0) throw DomainError("surd with negative discriminant " + D_.to_string());
}

ExtElem Surd::value() const {
    const FieldElem qi = FieldElem(Q_).inverse();
    return ExtElem(FieldElem(P_) * qi, qi, D_);
}

bool Surd::is_normalized() const { return ring_quotient(D_ - P_ * P_, Q_).has_value(); }

Surd Surd::normalized() const {
    if (is_normalized()) return *this;
    // (P + √D)/Q = (sPQ + √(Q²D))/(sQ²) with s = sign(Q).
    const RingElem s(p(), static_cast<long>(sign(Q_)));
    return Surd(s * P_ * Q_, s * Q_ * Q_, Q_ * Q_ * D_);
}

std::string Surd::to_string(const std::string& var) const {
    const std::string P = P_.to_string(var);
    std::string num = "sqrt(" + D_.to_string(var) + ")";
    if (!P_.is_zero()) num = P + " + " + num;
    const std::string Q = Q_.to_string(var);
    return "(" + num + ")/" + (Q.find(' ') != std::string::npos ? "(" + Q + ")" : Q);
}

bool surd_equal(const Surd& a, const Surd& b) {
    if (a.p() != b.p()) throw DomainError("comparing surds from different fields");
    if (a.D() == b.D()) return sign(a.value() - b.value()) == 0;
    const ExtElem x = a.value();
    const FieldElem shift = FieldElem(b.P()) / FieldElem(b.Q());
    if (b.D().is_zero()) return sign(x - ExtElem(shift, a.D())) == 0;
    // b is the root of (x − P/Q)² = D/Q² lying on the sign(Q) side of P/Q.
    const FieldElem q2 = FieldElem(b.Q()) * FieldElem(b.Q());
    const ExtElem y = x - ExtElem(shift, a.D());
    const ExtElem poly = y * y - ExtElem(FieldElem(b.D()) / q2, a.D());
    if (sign(poly) != 0) return false;
    return sign(y) == sign(b.Q());
}

int compare(const Surd& a, const Surd& b) {
    if (a.p() != b.p()) throw DomainError("comparing surds from different fields");
    if (a.D() == b.D()) return sign(a.value() - b.value());
    if (surd_equal(a, b)) return 0;
    throw NotComparable("ordering surds with different discriminants " + a.D().to_string() + " and " +
                        b.D().to_string());
}

int sign(const Surd& a) { return sign(a.value()); }

Surd act(const Mat& m, const Surd& alpha) {
    const Surd s = alpha.normalized();
    // Form of α: Q x² − 2P xy + C y², C = (P² − D)/Q.
    const RingElem A = s.Q();
    const RingElem Bh = -s.P();
    const auto C = ring_quotient(s.P() * s.P() - s.D(), s.Q());
    if (!C) throw InternalError("surd normalization failed");
    // Compose with M^{-1} = [[d, -b], [-c, a]].
    const RingElem ga = m.d(), gb = -m.b(), gc = -m.c(), gd = m.a();
    const RingElem A2 = A * ga * ga + Bh * ga * gc * 2L + *C * gc * gc;
    const RingElem Bh2 = A * ga * gb + Bh * (ga * gd + gb * gc) + *C * gc * gd;
    if (A2.is_zero()) throw DomainError("Moebius image of the surd is infinity");
    return Surd(-Bh2, A2, s.D());
}

Surd shift(const Surd& alpha, long i) {
    return Surd(alpha.P() + RingElem::lambda(alpha.p()) * alpha.Q() * i, alpha.Q(), alpha.D());
}

std::string to_decimal(const Surd& a, int digits) { return to_decimal(a.value(), digits); }

// ---------------------------------------------------------------- CF

std::string CF::to_string() const {
    auto join = [](const std::vector<std::int64_t>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(v[i]);
        }
        return s;
    };
    return "[" + join(preperiod) + "; (" + join(period) + ")]";
}

std::int64_t floor_over_lambda(const ExtElem& alpha) {
    const int p = alpha.p();
    const HeckeField& f = HeckeField::get(p);
    mpz_class flo, fhi;
    for (long bits = 128;; bits *= 2) {
        if (bits > (1L << 20)) throw InternalError("floor_over_lambda did not converge");
        const RealInterval q = alpha.enclose(bits) / f.lambda_enclosure(bits);
        mpfr_get_z(flo.get_mpz_t(), q.lo(), MPFR_RNDD);
        mpfr_get_z(fhi.get_mpz_t(), q.hi(), MPFR_RNDD);
        if (flo == fhi) break;
        if (fhi == flo + 1) {
            // Decide α ≥ fhi·λ exactly.
            const FieldElem m(RingElem::lambda(p) * RingElem(p, fhi));
            if (sign(alpha - ExtElem(m, alpha.D())) < 0) fhi = flo;
            break;
        }
    }
    if (!fhi.fits_slong_p()) throw DomainError("continued fraction entry out of range");
    return fhi.get_si();
}

std::int64_t floor_over_lambda(const Surd& alpha) { return floor_over_lambda(alpha.value()); }

namespace {

// Coarse numeric bucket of a value; equal values land in the same or an adjacent bucket.
mpz_class bucket_of(const ExtElem& x) {
    const RealInterval e = x.enclose(128);
    mpfr_t t;
    mpfr_init2(t, 128);
    mpfr_mul_2si(t, e.lo(), 40, MPFR_RNDD);
    mpz_class k;
    mpfr_get_z(k.get_mpz_t(), t, MPFR_RNDD);
    mpfr_clear(t);
    return k;
}

Mat step_matrix(int p, std::int64_t r) {
    // z ↦ 1/(rλ − z)
    return Mat(RingElem(p, 0L), RingElem(p, 1L), RingElem(p, -1L), RingElem::lambda(p) * static_cast<long>(r));
}

}  // namespace

CF cf_expand(const Surd& alpha, int max_steps) {
    const int p = alpha.p();
    Surd s = alpha.normalized();
    // Keyed by value: the (P, Q) pair can drift by units of Z[λ], and when √D lies in
    // Q(λ) the conjugate never cycles.
    std::map<mpz_class, std::vector<std::size_t>> buckets;
    std::vector<ExtElem> values;
    std::vector<std::int64_t> entries;
    for (int step = 0; step <= max_steps; ++step) {
        const ExtElem x = s.value();
        const mpz_class key = bucket_of(x);
        for (const mpz_class& k : std::vector<mpz_class>{key - 1, key, key + 1}) {
            const auto it = buckets.find(k);
            if (it == buckets.end()) continue;
            for (std::size_t start : it->second)
                if (sign(values[start] - x) == 0)
                    return CF{p, std::vector<std::int64_t>(entries.begin(), entries.begin() + static_cast<long>(start)),
                              std::vector<std::int64_t>(entries.begin() + static_cast<long>(start), entries.end())};
        }
        buckets[key].push_back(values.size());
        values.push_back(x);
        const std::int64_t r = floor_over_lambda(x) + 1;
        entries.push_back(r);
        s = act(step_matrix(p, r), s);
    }
    throw NotPeriodic("continued fraction did not become periodic within " + std::to_string(max_steps) + " steps");
}

bool is_parabolic_period(int p, const std::vector<std::int64_t>& period) {
    if (static_cast<int>(period.size()) != p - 2) return false;
    std::vector<std::int64_t> target(static_cast<std::size_t>(p - 2), 1);
    target[0] = 2;
    return canonical_period(period) == canonical_period(target);
}

bool is_admissible(const CF& cf) {
    const int p = cf.p;
    if (cf.period.empty()) return false;
    for (std::size_t i = 1; i < cf.preperiod.size(); ++i)
        if (cf.preperiod[i] < 1) return false;
    for (auto r : cf.period)
        if (r < 1) return false;
    if (std::all_of(cf.period.begin(), cf.period.end(), [](std::int64_t r) { return r == 1; })) return false;

    // Three copies of the period expose every cyclic run in full.
    std::vector<std::int64_t> seq = cf.preperiod;
    for (int copy = 0; copy < 3; ++copy) seq.insert(seq.end(), cf.period.begin(), cf.period.end());
    std::size_t i = 0;
    while (i < seq.size()) {
        if (seq[i] != 1) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < seq.size() && seq[j] == 1) ++j;
        if (j == seq.size()) break;
        const auto run = static_cast<long>(j - i);
        if (run > (i == 0 ? p - 2 : p - 3)) return false;
        i = j;
    }
    return true;
}

std::vector<std::int64_t> canonical_period(const std::vector<std::int64_t>& period) {
    const std::size_t n = period.size();
    if (n == 0) return {};
    std::size_t best = 0;
    for (std::size_t s = 1; s < n; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto x = period[(s + i) % n];
            const auto y = period[(best + i) % n];
            if (x != y) {
                if (x < y) best = s;
                break;
            }
        }
    }
    std::vector<std::int64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = period[(best + i) % n];
    return out;
}

bool same_period_up_to_rotation(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    return a.size() == b.size() && canonical_period(a) == canonical_period(b);
}

std::vector<int> block_rotation(const GenWord& w) {
    if (w.parabolic()) throw ParabolicError("word " + w.to_string() + " is a pure power of a parabolic generator");
    const std::size_t n = w.size();
    std::vector<int> best;
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<int> rot(n);
        for (std::size_t i = 0; i < n; ++i) rot[i] = w.letters[(s + i) % n];
        if (rot.back() == 1) continue;
        if (best.empty() || rot < best) best = std::move(rot);
    }
    if (best.empty()) throw ParabolicError("word " + w.to_string() + " has no generator other than V_1");
    return best;
}

std::vector<std::int64_t> word_to_period(const GenWord& w) {
    const std::vector<int> rot = block_rotation(w);
    std::vector<std::int64_t> period;
    std::int64_t ones = 0;
    for (int j : rot) {
        if (j == 1) {
            ++ones;
            continue;
        }
        period.push_back(ones + 2);
        for (int i = 0; i < j - 2; ++i) period.push_back(1);
        ones = 0;
    }
    return period;
}

GenWord period_to_word(int p, const std::vector<std::int64_t>& period) {
    if (period.empty()) throw DomainError("empty period");
    for (auto r : period)
        if (r < 1) throw DomainError("period entries must be positive");
    const std::size_t n = period.size();
    std::size_t start = n;
    for (std::size_t i = 0; i < n; ++i)
        if (period[i] >= 2) {
            start = i;
            break;
        }
    if (start == n) throw DomainError("all-ones period is not admissible");
    std::vector<int> letters;
    std::size_t i = 0;
    while (i < n) {
        const std::int64_t r = period[(start + i) % n];
        ++i;
        std::int64_t ones = 0;
        while (i < n && period[(start + i) % n] == 1) {
            ++ones;
            ++i;
        }
        if (ones > p - 3) throw DomainError("run of " + std::to_string(ones) + " ones exceeds p - 3");
        for (std::int64_t m = 0; m < r - 2; ++m) letters.push_back(1);
        letters.push_back(static_cast<int>(ones) + 2);
    }
    const GenWord w = GenWord::make(p, letters);
    if (w.parabolic()) throw ParabolicError("period is parabolic");
    return w;
}

Mat cf_matrix(int p, const std::vector<std::int64_t>& entries) {
    Mat m = Mat::identity(p);
    const RingElem lam = RingElem::lambda(p);
    for (auto r : entries) {
        // S^r T = [[rλ, −1], [1, 0]]
        m = m * Mat(lam * static_cast<long>(r), RingElem(p, -1L), RingElem(p, 1L), RingElem(p, 0L));
    }
    return m;
}

Surd surd_of_cf(const CF& cf) {
    if (cf.period.empty()) throw DomainError("continued fraction without a period");
    if (is_parabolic_period(cf)) throw ParabolicError("parabolic period has no hyperbolic fixed point");
    const Mat V = cf_matrix(cf.p, cf.preperiod);
    const Mat W = cf_matrix(cf.p, cf.period);
    const Mat M = V * W * V.inverse();
    if (M.c().is_zero()) throw DomainError("fixed point at infinity");
    const RingElem tr = M.trace();
    return Surd(M.a() - M.d(), M.c() * 2L, tr * tr - RingElem(cf.p, 4L));
}

bool is_reduced(const Surd& alpha) {
    const CF cf = cf_expand(alpha);
    return cf.preperiod.empty() && !is_parabolic_period(cf);
}

bool reduced_by_inequality(const Surd& alpha) {
    const int p = alpha.p();
    const ExtElem a = alpha.value();
    const ExtElem ac = alpha.conjugate().value();
    if (sign(ac) <= 0) return false;
    const Mat U = generator_U(p);
    // U^k(0) = b/d of U^k; infinite when d = 0.
    auto u_at_zero = [&](int k) -> std::optional<FieldElem> {
        const Mat m = U.pow(static_cast<unsigned>(k));
        if (m.d().is_zero()) return std::nullopt;
        return FieldElem(m.b()) / FieldElem(m.d());
    };
    for (int j = 0; j <= p - 3; ++j) {
        const auto upper = u_at_zero(j + 1);
        const auto mid = u_at_zero(j + 2);
        if (!mid) continue;
        const ExtElem m(*mid, alpha.D());
        if (sign(ac - m) >= 0) continue;
        if (sign(m - a) >= 0) continue;
        if (upper && sign(a - ExtElem(*upper, alpha.D())) >= 0) continue;
        return true;
    }
    return false;
}

}  // namespace hecke
