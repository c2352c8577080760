#include <doctest.h>

#include <random>

#include "hecke/cf.hpp"
#include "hecke/quadforms.hpp"

using namespace hecke;

namespace {

using Period = std::vector<std::int64_t>;

RingElem r(int p, long v) { return RingElem(p, v); }
RingElem lam(int p) { return RingElem::lambda(p); }

// Numeric λ-CF value by backward recursion on a long truncation.
double cf_numeric(int p, const CF& cf) {
    const double l = 2 * std::cos(M_PI / p);
    std::vector<std::int64_t> entries = cf.preperiod;
    for (int i = 0; i < 60; ++i) entries.insert(entries.end(), cf.period.begin(), cf.period.end());
    double x = entries.back() * l;
    for (std::size_t i = entries.size() - 1; i-- > 0;) x = entries[i] * l - 1 / x;
    return x;
}

// A random point in the orbit of the reduced point of a random word, with that word's period.
struct OrbitPoint {
    Surd alpha;
    Period period;
};

OrbitPoint random_orbit_point(int p, std::mt19937& rng) {
    std::vector<GenWord> words;
    while (words.empty()) words = enumerate_words(p, 1 + static_cast<int>(rng() % 3));
    const GenWord& w = words[rng() % words.size()];
    const Period period = word_to_period(w);
    Surd alpha = surd_of_cf(CF{p, {}, period});
    std::uniform_int_distribution<int> power(-3, 3);
    for (int i = static_cast<int>(rng() % 5); i > 0; --i) {
        const int e = power(rng);
        const Mat s = generator_S(p).pow(static_cast<unsigned>(std::abs(e)));
        alpha = act((e >= 0 ? s : s.inverse()) * generator_T(p), alpha);
    }
    return {alpha, period};
}

}  // namespace

TEST_CASE("surd basics") {
    const Surd golden(r(3, 1), r(3, 2), r(3, 5));
    CHECK(golden.to_string() == "(1 + sqrt(5))/2");
    CHECK(to_decimal(golden, 12) == "1.618033988750");
    CHECK(sign(golden) == 1);
    CHECK(sign(golden.conjugate()) == -1);
    CHECK_THROWS_AS(Surd(r(3, 1), r(3, 0), r(3, 5)), DomainError);
    CHECK_THROWS_AS(Surd(r(3, 1), r(3, 1), r(3, -5)), DomainError);
}

TEST_CASE("surd equality across discriminants") {
    // (2 + √7)/√3 in G_6 written two ways
    const Surd a(lam(6) * 2L, r(6, 3), r(6, 21));
    const Surd b(lam(6) * 4L, r(6, 6), r(6, 84));
    CHECK(surd_equal(a, b));
    CHECK(compare(a, b) == 0);
    // 1 = √4/2 = (1 + √0)/1
    CHECK(surd_equal(Surd(r(4, 0), r(4, 2), r(4, 4)), Surd(r(4, 1), r(4, 1), r(4, 0))));
    CHECK_THROWS_AS(compare(Surd(r(3, 0), r(3, 1), r(3, 2)), Surd(r(3, 0), r(3, 1), r(3, 3))), NotComparable);
    CHECK(compare(Surd(r(3, 0), r(3, 1), r(3, 2)), Surd(r(3, 1), r(3, 1), r(3, 2))) == -1);
}

TEST_CASE("normalization keeps the value") {
    const Surd a(r(5, 1), r(5, 3), r(5, 8));
    CHECK_FALSE(a.is_normalized());
    const Surd n = a.normalized();
    CHECK(n.is_normalized());
    CHECK(surd_equal(a, n));
}

TEST_CASE("group action on surds") {
    const int p = 5;
    const Surd a(lam(p), r(p, 3), r(p, 11));
    // S·α = (P + λQ + √D)/Q, T·α = −1/α = (−QP + √(Q²D))/(P² − D)
    CHECK(surd_equal(act(generator_S(p), a), Surd(a.P() + lam(p) * a.Q(), a.Q(), a.D())));
    CHECK(surd_equal(act(generator_T(p), a), Surd(-a.Q() * a.P(), a.P() * a.P() - a.D(), a.Q() * a.Q() * a.D())));
    CHECK(surd_equal(shift(a, -2), act(generator_S(p).pow(2).inverse(), a)));
    const Mat g = generator_V(p, 2) * generator_T(p);
    CHECK(surd_equal(act(g * g, a), act(g, act(g, a))));
}

TEST_CASE("floor over lambda at exact boundaries") {
    CHECK(floor_over_lambda(ExtElem(FieldElem(lam(5) * 3L), r(5, 2))) == 3);
    CHECK(floor_over_lambda(ExtElem(FieldElem(lam(5) * 3L) - FieldElem(RingElem(5, 1L), 1000), r(5, 2))) == 2);
    CHECK(floor_over_lambda(ExtElem(FieldElem(lam(5) * -1L), r(5, 2))) == -1);
}

TEST_CASE("expansions of known points") {
    CHECK(cf_expand(Surd(r(3, 3), r(3, 2), r(3, 5))) == CF{3, {}, {3}});
    CHECK(cf_expand(Surd(r(4, 1), r(4, 1), r(4, 2))) == CF{4, {}, {2}});
    CHECK(cf_expand(Surd(r(6, 1), r(6, 1), r(6, 0))) == CF{6, {1}, {1, 2}});
    CHECK(cf_expand(Surd(r(6, 0), r(6, 2), r(6, 2))) == CF{6, {1}, {1, 1, 2}});
    CHECK(cf_expand(Surd(r(3, 1), r(3, 2), r(3, 5))) == CF{3, {2}, {3}});
    CHECK(cf_expand(Surd(r(3, -1), r(3, 2), r(3, 5))) == CF{3, {1}, {3}});
    // λ + √λ in G_5 = [2 repeating]
    CHECK(cf_expand(Surd(lam(5), r(5, 1), lam(5))) == CF{5, {}, {2}});
}

TEST_CASE("expansion of orbit points: period, value and admissibility") {
    std::mt19937 rng(5);
    for (int p = 3; p <= 8; ++p)
        for (int t = 0; t < 40; ++t) {
            const auto [a, period] = random_orbit_point(p, rng);
            const CF cf = cf_expand(a);
            CHECK(same_period_up_to_rotation(cf.period, period));
            CHECK(is_admissible(cf));
            CHECK(std::abs(cf_numeric(p, cf) - a.value().enclose(64).midpoint()) < 1e-9);
            CHECK(surd_equal(surd_of_cf(cf), a));
        }
}

TEST_CASE("admissibility and parabolic periods") {
    CHECK(is_parabolic_period(5, {2, 1, 1}));
    CHECK(is_parabolic_period(5, {1, 2, 1}));
    CHECK_FALSE(is_parabolic_period(5, {2, 1}));
    CHECK(is_admissible(CF{5, {}, {2, 1, 1}}));
    CHECK_FALSE(is_admissible(CF{5, {}, {2, 1, 1, 1}}));
    CHECK(is_admissible(CF{5, {1, 1, 1}, {3}}));
    CHECK_FALSE(is_admissible(CF{5, {2, 1, 1, 1}, {3}}));
    CHECK_FALSE(is_admissible(CF{5, {}, {1}}));
}

TEST_CASE("word and period translation") {
    CHECK(word_to_period(GenWord::make(6, {1, 3, 5})) == Period{3, 1, 2, 1, 1, 1});
    CHECK(word_to_period(GenWord::make(6, {1, 2, 5})) == Period{3, 2, 1, 1, 1});
    CHECK(word_to_period(GenWord::make(6, {1, 4, 5})) == Period{3, 1, 1, 2, 1, 1, 1});
    CHECK(word_to_period(GenWord::make(3, {1, 2})) == Period{3});
    CHECK(word_to_period(GenWord::make(5, {3})) == Period{2, 1});
    for (int p = 3; p <= 9; ++p) {
        Period expected{3};
        for (int i = 0; i < p - 3; ++i) expected.push_back(1);
        CHECK(word_to_period(GenWord::make(p, {1, p - 1})) == expected);
    }
    CHECK(period_to_word(6, {1, 3, 1, 2, 1, 1}) == GenWord::make(6, {1, 3, 5}));
    CHECK_THROWS_AS(period_to_word(5, {2, 1, 1, 1}), DomainError);
    CHECK_THROWS_AS(block_rotation(GenWord::make(5, {1})), ParabolicError);
}

TEST_CASE("reduced points of words") {
    CHECK(surd_equal(surd_of_cf(CF{3, {}, {3}}), Surd(r(3, 3), r(3, 2), r(3, 5))));
    CHECK(surd_equal(surd_of_cf(CF{5, {}, {2}}), Surd(lam(5), r(5, 1), lam(5))));
    // 1/√2 = [1; 1,1,2 repeating] in G_6
    CHECK(surd_equal(surd_of_cf(CF{6, {1}, {1, 1, 2}}), Surd(r(6, 0), r(6, 2), r(6, 2))));
}

TEST_CASE("reduced numbers") {
    CHECK(is_reduced(Surd(r(4, 1), r(4, 1), r(4, 2))));
    CHECK_FALSE(is_reduced(Surd(r(4, 0), r(4, 2), r(4, 4))));
    CHECK_FALSE(is_reduced(Surd(r(3, 1), r(3, 2), r(3, 5))));
    for (int p = 3; p <= 7; ++p)
        for (int n = 1; n <= 3; ++n)
            for (const GenWord& w : enumerate_words(p, n)) {
                const Surd b = surd_of_cf(CF{p, {}, word_to_period(w)});
                CHECK(is_reduced(b));
                CHECK(reduced_by_inequality(b));
                const Surd s = shift(b, -1);
                CHECK_FALSE(is_reduced(s));
                CHECK_FALSE(reduced_by_inequality(s));
            }
}

TEST_CASE("reduced test agrees with the inequality chain on orbit points") {
    std::mt19937 rng(17);
    for (int p = 3; p <= 7; ++p) {
        int reduced_seen = 0, total = 0;
        for (int t = 0; t < 200; ++t) {
            Surd b = random_orbit_point(p, rng).alpha;
            // walk half the points into their cycle so both outcomes occur
            if (t % 2) b = surd_of_cf(CF{p, {}, cf_expand(b).period});
            const bool red = is_reduced(b);
            reduced_seen += red;
            ++total;
            CHECK(red == reduced_by_inequality(b));
        }
        CHECK(reduced_seen >= total / 2);
    }
}

TEST_CASE("cycle detection bound") { CHECK_THROWS_AS(cf_expand(Surd(r(7, 1), r(7, 3), r(7, 1000003)), 3), NotPeriodic); }
