#include <doctest.h>

#include <random>

#include "hecke/quadforms.hpp"

using namespace hecke;

namespace {

RingElem r(int p, long v) { return RingElem(p, v); }

GenWord random_hyperbolic_word(int p, std::mt19937& rng) {
    std::uniform_int_distribution<int> len(1, 6), letter(1, p - 1);
    for (;;) {
        std::vector<int> ls(static_cast<std::size_t>(len(rng)));
        for (auto& l : ls) l = letter(rng);
        const GenWord w = GenWord::make(p, ls);
        if (!w.parabolic()) return w;
    }
}

Mat random_group_element(int p, std::mt19937& rng) {
    std::uniform_int_distribution<int> steps(1, 6), power(-3, 3);
    Mat g = Mat::identity(p);
    for (int i = steps(rng); i > 0; --i) {
        const int e = power(rng);
        g = g * (e >= 0 ? generator_S(p).pow(static_cast<unsigned>(e)) : generator_S(p).pow(static_cast<unsigned>(-e)).inverse());
        g = g * generator_T(p);
    }
    return g;
}

}  // namespace

TEST_CASE("forms of matrices") {
    CHECK(form_of_matrix(generator_V(4, 2)) == QForm{r(4, 1), r(4, 0), r(4, -1)});
    CHECK(form_of_matrix(word_to_matrix(GenWord::make(3, {1, 2}))) == QForm{r(3, 1), r(3, -1), r(3, -1)});
    CHECK(form_of_matrix(generator_V(4, 2)).disc() == r(4, 4));
    CHECK_THROWS_AS(form_of_matrix(generator_S(4)), DomainError);
}

TEST_CASE("fixed points") {
    const auto [a, b] = fixed_points(generator_V(4, 2));
    CHECK(surd_equal(a, Surd(r(4, 1), r(4, 1), r(4, 0))));
    CHECK(surd_equal(b, Surd(r(4, -1), r(4, 1), r(4, 0))));
    const auto [g, gc] = fixed_points(word_to_matrix(GenWord::make(3, {1, 2})));
    CHECK(surd_equal(g, Surd(r(3, 1), r(3, 2), r(3, 5))));
    CHECK(surd_equal(gc, Surd(r(3, 1), r(3, 2), r(3, 5)).conjugate()));
}

TEST_CASE("simplicity") {
    CHECK(is_simple(QForm{r(4, 1), r(4, 0), r(4, -1)}));
    CHECK(is_simple(form_of_matrix(word_to_matrix(GenWord::make(3, {1, 2})))));
    // roots (3 ± √5)/2 are both positive
    CHECK_FALSE(is_simple(QForm{r(3, 1), r(3, -3), r(3, 1)}));
    CHECK(negate(QForm{r(4, 1), r(4, 0), r(4, -1)}) == QForm{r(4, -1), r(4, 0), r(4, 1)});
}

TEST_CASE("form action preserves the discriminant and the root transforms") {
    std::mt19937 rng(2);
    for (int p = 3; p <= 7; ++p)
        for (int t = 0; t < 20; ++t) {
            const Mat m = word_to_matrix(random_hyperbolic_word(p, rng));
            const Mat g = random_group_element(p, rng);
            const QForm q = form_of_matrix(m);
            const QForm q2 = act(q, g.inverse());
            CHECK(q2.disc() == q.disc());
            CHECK(q2 == form_of_matrix(g * m * g.inverse()));
            CHECK(surd_equal(surd_of_form(q2), act(g, surd_of_form(q))));
        }
}

TEST_CASE("matrix of a surd") {
    const Surd golden(r(3, 1), r(3, 2), r(3, 5));
    const Mat m = matrix_of_surd(golden);
    CHECK(word_of_matrix(m) == GenWord::make(3, {1, 2}));
    CHECK(surd_equal(fixed_points(m).first, golden));
    CHECK_THROWS_AS(matrix_of_surd(Surd(r(4, 0), r(4, 1), r(4, 0))), DomainError);
}

TEST_CASE("transpose identities on random hyperbolic words") {
    std::mt19937 rng(9);
    for (int p = 3; p <= 8; ++p)
        for (int t = 0; t < 40; ++t) CHECK(transpose_form_identity_check(word_to_matrix(random_hyperbolic_word(p, rng))));
}
