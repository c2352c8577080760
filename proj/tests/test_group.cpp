#include <doctest.h>

#include "hecke/group.hpp"
#include "hecke/isp.hpp"

using namespace hecke;

namespace {

RingElem r(int p, long v) { return RingElem(p, v); }

Mat power_of(const Mat& m, int e) {
    Mat acc = Mat::identity(m.p());
    for (int i = 0; i < e; ++i) acc = acc * m;
    return acc;
}

}  // namespace

TEST_CASE("generators") {
    const int p = 5;
    const RingElem l = RingElem::lambda(p);
    CHECK(generator_S(p) == Mat(r(p, 1), l, r(p, 0), r(p, 1)));
    CHECK(generator_T(p) == Mat(r(p, 0), r(p, -1), r(p, 1), r(p, 0)));
    CHECK(generator_U(p) == generator_S(p) * generator_T(p));
    CHECK_THROWS_AS(Mat(r(p, 1), r(p, 1), r(p, 1), r(p, 1)), DomainError);
}

TEST_CASE("U has order p and T has order 2 projectively") {
    for (int p = 3; p <= 12; ++p) {
        CHECK(power_of(generator_U(p), p) == Mat::identity(p));
        for (int e = 1; e < p; ++e) CHECK_FALSE(power_of(generator_U(p), e) == Mat::identity(p));
        CHECK(generator_T(p) * generator_T(p) == Mat::identity(p));
    }
}

TEST_CASE("V_j = U^{j-1} S with Chebyshev entries") {
    for (int p = 3; p <= 10; ++p) {
        for (int j = 1; j < p; ++j) {
            const Mat V = generator_V(p, j);
            CHECK(V == power_of(generator_U(p), j - 1) * generator_S(p));
            CHECK(V == Mat(chebyshev_a(p, j), chebyshev_a(p, j + 1), chebyshev_a(p, j - 1), chebyshev_a(p, j)));
        }
        CHECK(chebyshev_a(p, 0).is_zero());
        CHECK(chebyshev_a(p, p).is_zero());
    }
    CHECK_THROWS_AS(generator_V(5, 0), DomainError);
    CHECK_THROWS_AS(generator_V(5, 5), DomainError);
}

TEST_CASE("V_j transposes to V_{p-j}") {
    for (int p = 3; p <= 12; ++p)
        for (int j = 1; j < p; ++j) CHECK(generator_V(p, j).transpose() == generator_V(p, p - j));
}

TEST_CASE("classification") {
    CHECK(classify(generator_S(5)) == MatClass::parabolic);
    CHECK(classify(generator_T(5)) == MatClass::elliptic);
    CHECK(classify(generator_V(4, 2)) == MatClass::hyperbolic);
    CHECK(classify(generator_V(5, 1)) == MatClass::parabolic);
    CHECK(classify(generator_V(5, 4)) == MatClass::parabolic);
    CHECK(classify(word_to_matrix(GenWord::make(3, {1, 2}))) == MatClass::hyperbolic);
    CHECK(word_to_matrix(GenWord::make(3, {1, 2})) == Mat(r(3, 2), r(3, 1), r(3, 1), r(3, 1)));
}

TEST_CASE("words") {
    const GenWord w = GenWord::make(6, {5, 1, 3});
    CHECK(w.letters == std::vector<int>{1, 3, 5});
    CHECK(w.to_string() == "1,3,5");
    CHECK(GenWord::make(5, {1, 1}).parabolic());
    CHECK(GenWord::make(5, {4}).parabolic());
    CHECK_FALSE(GenWord::make(5, {1, 4}).parabolic());
    CHECK_THROWS_AS(GenWord::make(5, {5}), DomainError);
    CHECK_THROWS_AS(GenWord::make(5, {}), DomainError);

    CHECK(primitive_root({1, 2, 1, 2}) == std::pair<std::vector<int>, int>{{1, 2}, 2});
    CHECK(is_primitive_word({1, 2, 2}));
    CHECK_FALSE(is_primitive_word({3, 3}));

    CHECK(transpose_word(GenWord::make(6, {1, 2, 5})) == GenWord::make(6, {1, 4, 5}));
    CHECK(transpose_word(GenWord::make(6, {1, 3, 5})) == GenWord::make(6, {1, 3, 5}));
    CHECK(transpose_word(GenWord::make(5, {2})) == GenWord::make(5, {3}));
}

TEST_CASE("transpose of a word product is the product of transposed letters reversed") {
    for (int p = 3; p <= 7; ++p)
        for (int n = 1; n <= 3; ++n)
            for (const GenWord& w : enumerate_words(p, n)) {
                const Mat mt = word_to_matrix(w).transpose();
                const Mat other = word_to_matrix(transpose_word(w));
                // conjugate matrices share their trace
                CHECK(mt.trace() == other.trace());
            }
}

TEST_CASE("enumeration matches the necklace count") {
    CHECK(enumerate_words(3, 1).empty());
    CHECK(enumerate_words(6, 1).size() == 3);
    for (int p = 3; p <= 6; ++p)
        for (int n = 1; n <= 5; ++n) {
            const auto words = enumerate_words(p, n);
            CHECK(mpz_class(words.size()) == count_isps(p, n));
            for (std::size_t i = 1; i < words.size(); ++i) CHECK(words[i - 1] < words[i]);
            for (const auto& w : words) {
                CHECK(w.primitive());
                CHECK_FALSE(w.parabolic());
                CHECK(w.letters == canonical_rotation(w.letters));
            }
        }
}

TEST_CASE("word of a matrix recovers conjugacy classes") {
    for (int p = 3; p <= 6; ++p)
        for (int n = 1; n <= 3; ++n)
            for (const GenWord& w : enumerate_words(p, n)) {
                const Mat m = word_to_matrix(w);
                CHECK(word_of_matrix(m) == w);
                const Mat g = generator_S(p) * generator_T(p) * generator_S(p).pow(2);
                CHECK(word_of_matrix(g * m * g.inverse()) == w);
            }
}

TEST_CASE("a proper power reports its root and exponent") {
    try {
        (void)word_of_matrix(generator_V(4, 2).pow(2));
        FAIL("expected NonPrimitive");
    } catch (const NonPrimitive& e) {
        CHECK(e.exponent() == 2);
        CHECK(e.root_letters() == std::vector<int>{2});
    }
    CHECK_THROWS_AS(word_of_matrix(generator_S(4)), DomainError);
}

TEST_CASE("Moebius action") {
    const int p = 4;
    CHECK(generator_T(p).apply(FieldElem(p, 2L)) == FieldElem(RingElem(p, -1L), 2));
    CHECK_THROWS_AS(generator_T(p).apply(FieldElem(p, 0L)), DomainError);
}
