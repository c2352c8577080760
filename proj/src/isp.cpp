#include "hecke/isp.hpp"

#include "hecke/quadforms.hpp"

namespace hecke {

ISP isp_of_word(const GenWord& input) {
    const GenWord w = GenWord::make(input.p, input.letters);
    if (w.parabolic()) throw ParabolicError("word " + w.to_string() + " is parabolic");
    if (auto [root, e] = primitive_root(w.letters); e > 1) throw NonPrimitive(w.p, canonical_rotation(root), e);

    const std::vector<int> rot = block_rotation(w);
    // Blocks V_1^{m}V_j; block t starts where the previous one ended.
    std::vector<std::size_t> starts;
    std::vector<int> ms;
    int ones = 0;
    std::size_t block_start = 0;
    for (std::size_t i = 0; i < rot.size(); ++i) {
        if (rot[i] == 1) {
            ++ones;
            continue;
        }
        starts.push_back(block_start);
        ms.push_back(ones);
        ones = 0;
        block_start = i + 1;
    }

    ISP isp;
    isp.word = w;
    for (std::size_t t = 0; t < starts.size(); ++t) {
        std::vector<int> r(rot.begin() + static_cast<long>(starts[t]), rot.end());
        r.insert(r.end(), rot.begin(), rot.begin() + static_cast<long>(starts[t]));
        // word_to_period would re-rotate; build the period of this exact rotation.
        std::vector<std::int64_t> period;
        int run = 0;
        for (int j : r) {
            if (j == 1) {
                ++run;
                continue;
            }
            period.push_back(run + 2);
            for (int i = 0; i < j - 2; ++i) period.push_back(1);
            run = 0;
        }
        const Surd beta = surd_of_cf(CF{w.p, {}, period});
        if (t == 0) {
            isp.beta1 = beta;
            isp.D = beta.D();
        } else if (beta.D() != isp.D) {
            throw InternalError("rotations of one word gave different discriminants");
        }
        for (int i = 1; i <= ms[t] + 1; ++i) {
            Surd alpha = shift(beta, -i);
            if (sign(alpha) <= 0 || sign(alpha.conjugate()) >= 0)
                throw InternalError("pole " + alpha.to_string() + " of word " + w.to_string() + " is not simple");
            isp.positives.push_back(std::move(alpha));
        }
        isp.block_sizes.push_back(ms[t] + 1);
    }
    isp.conjugate_word = transpose_word(w);
    isp.symmetric = isp.conjugate_word == w;
    return isp;
}

mpz_class necklace_count(int q, int n) {
    // (1/n) Σ_{d|n} μ(d) q^{n/d}
    auto mobius = [](int m) {
        int result = 1;
        for (int f = 2; f * f <= m; ++f) {
            if (m % f != 0) continue;
            m /= f;
            if (m % f == 0) return 0;
            result = -result;
        }
        if (m > 1) result = -result;
        return result;
    };
    mpz_class sum = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const int mu = mobius(d);
        if (mu == 0) continue;
        mpz_class term;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n / d));
        sum += mu * term;
    }
    return sum / n;
}

mpz_class count_isps(int p, int n) {
    if (p < 3) throw DomainError("p must be at least 3, got " + std::to_string(p));
    if (n < 1) throw DomainError("n must be positive");
    if (n == 1) return p - 3;
    return necklace_count(p - 1, n);
}

CountTable count_table(int p, int max_n) {
    CountTable t{p, {}};
    for (int n = 1; n <= max_n; ++n) t.rows[n] = count_isps(p, n);
    return t;
}

std::vector<ISP> enumerate_isps(int p, int n) {
    std::vector<ISP> out;
    for (const GenWord& w : enumerate_words(p, n)) out.push_back(isp_of_word(w));
    return out;
}

bool is_hecke_symmetric(const GenWord& w) { return conjugate_isp(w) == GenWord::make(w.p, w.letters); }

GenWord conjugate_isp(const GenWord& w) { return transpose_word(GenWord::make(w.p, w.letters)); }

bool symmetry_via_numbers(const ISP& isp) {
    for (const Surd& alpha : isp.positives) {
        const CF a = cf_expand(alpha);
        const CF b = cf_expand(alpha.conjugate());
        if (!same_period_up_to_rotation(a.period, b.period)) return false;
    }
    return true;
}

}  // namespace hecke
