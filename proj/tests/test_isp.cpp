#include <doctest.h>

#include "hecke/isp.hpp"
#include "hecke/quadforms.hpp"

using namespace hecke;

namespace {

RingElem r(int p, long v) { return RingElem(p, v); }
RingElem lam(int p) { return RingElem::lambda(p); }

bool same_set(const std::vector<Surd>& got, const std::vector<Surd>& want) {
    if (got.size() != want.size()) return false;
    std::vector<bool> used(want.size(), false);
    for (const Surd& g : got) {
        bool found = false;
        for (std::size_t i = 0; i < want.size() && !found; ++i)
            if (!used[i] && surd_equal(g, want[i])) used[i] = found = true;
        if (!found) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("ISPs with one or two positive poles") {
    CHECK(same_set(isp_of_word(GenWord::make(3, {1, 2})).positives,
                   {Surd(r(3, 1), r(3, 2), r(3, 5)), Surd(r(3, -1), r(3, 2), r(3, 5))}));
    CHECK(same_set(isp_of_word(GenWord::make(4, {2})).positives, {Surd(r(4, 1), r(4, 1), r(4, 0))}));
    CHECK(same_set(isp_of_word(GenWord::make(5, {2})).positives, {Surd(r(5, 0), r(5, 1), lam(5))}));
    // 1/√λ = √λ/λ
    CHECK(same_set(isp_of_word(GenWord::make(5, {3})).positives, {Surd(r(5, 0), lam(5), lam(5))}));
    CHECK(same_set(isp_of_word(GenWord::make(6, {2})).positives, {Surd(r(6, 0), r(6, 1), r(6, 2))}));
    CHECK(same_set(isp_of_word(GenWord::make(6, {3})).positives, {Surd(r(6, 1), r(6, 1), r(6, 0))}));
    CHECK(same_set(isp_of_word(GenWord::make(6, {4})).positives, {Surd(r(6, 0), r(6, 2), r(6, 2))}));
}

TEST_CASE("three-pole ISPs in G_6") {
    const RingElem l = lam(6);  // √3
    // (2+√7)/√3, (−1+√7)/√3, (−1+√7)/(2√3), multiplied through by √3
    CHECK(same_set(isp_of_word(GenWord::make(6, {1, 3, 5})).positives,
                   {Surd(l * 2L, r(6, 3), r(6, 21)), Surd(-l, r(6, 3), r(6, 21)), Surd(-l, r(6, 6), r(6, 21))}));
    CHECK(same_set(isp_of_word(GenWord::make(6, {1, 2, 5})).positives,
                   {Surd(l * 3L, r(6, 4), r(6, 47)), Surd(-l, r(6, 4), r(6, 47)), Surd(l * -2L, r(6, 7), r(6, 47))}));
    CHECK(same_set(isp_of_word(GenWord::make(6, {1, 4, 5})).positives,
                   {Surd(l * 3L, r(6, 5), r(6, 47)), Surd(l * -2L, r(6, 5), r(6, 47)), Surd(-l, r(6, 11), r(6, 47))}));
}

TEST_CASE("ISP structure") {
    for (int p = 3; p <= 7; ++p)
        for (int n = 1; n <= 3; ++n)
            for (const ISP& isp : enumerate_isps(p, n)) {
                CHECK(isp.positives.size() == static_cast<std::size_t>(n));
                int total = 0;
                for (int b : isp.block_sizes) total += b;
                CHECK(total == n);
                const Mat m = word_to_matrix(isp.word);
                CHECK(isp.D == m.trace() * m.trace() - r(p, 4));
                for (const Surd& a : isp.positives) {
                    CHECK(sign(a) > 0);
                    CHECK(sign(a.conjugate()) < 0);
                    CHECK(word_of_matrix(matrix_of_surd(a)) == isp.word);
                    // one step of the expansion lands on a reduced number
                    const CF cf = cf_expand(a);
                    CHECK(cf.preperiod.size() == 1);
                    const Mat step(r(p, 0), r(p, 1), r(p, -1), lam(p) * static_cast<long>(cf.preperiod[0]));
                    CHECK(is_reduced(act(step, a)));
                }
                CHECK(isp.word == GenWord::make(p, isp.word.letters));
            }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(isp_of_word(GenWord::make(5, {1})), ParabolicError);
    CHECK_THROWS_AS(isp_of_word(GenWord::make(5, {4, 4})), ParabolicError);
    CHECK_THROWS_AS(isp_of_word(GenWord::make(5, {2, 2})), NonPrimitive);
    CHECK_THROWS_AS(count_isps(2, 1), DomainError);
    CHECK_THROWS_AS(count_isps(5, 0), DomainError);
}

TEST_CASE("counts") {
    CHECK(count_isps(3, 1) == 0);
    CHECK(count_isps(4, 3) == 8);
    CHECK(count_isps(5, 8) == 8160);
    CHECK(count_isps(7, 8) == 209790);
    CHECK(necklace_count(2, 6) == 9);
    const CountTable t = count_table(4, 3);
    CHECK(t.rows.at(1) == 1);
    CHECK(t.rows.at(2) == 3);
    CHECK(t.rows.at(3) == 8);
}

TEST_CASE("Hecke symmetry") {
    CHECK(is_hecke_symmetric(GenWord::make(3, {1, 2})));
    CHECK(is_hecke_symmetric(GenWord::make(4, {2})));
    CHECK_FALSE(is_hecke_symmetric(GenWord::make(5, {2})));
    CHECK(conjugate_isp(GenWord::make(5, {2})) == GenWord::make(5, {3}));
    CHECK_FALSE(is_hecke_symmetric(GenWord::make(6, {2})));
    CHECK(is_hecke_symmetric(GenWord::make(6, {3})));
    CHECK(is_hecke_symmetric(GenWord::make(6, {1, 3, 5})));
    CHECK(conjugate_isp(GenWord::make(6, {1, 2, 5})) == GenWord::make(6, {1, 4, 5}));
    for (int p = 3; p <= 6; ++p)
        for (int n = 1; n <= 3; ++n)
            for (const ISP& isp : enumerate_isps(p, n)) CHECK(symmetry_via_numbers(isp) == isp.symmetric);
}

TEST_CASE("conjugate ISP poles are the Hecke conjugates of the T-images") {
    for (int p = 4; p <= 6; ++p)
        for (int n = 1; n <= 3; ++n)
            for (const ISP& isp : enumerate_isps(p, n)) {
                const ISP other = isp_of_word(isp.conjugate_word);
                std::vector<Surd> expected;
                for (const Surd& a : isp.positives) expected.push_back(act(generator_T(p), a).conjugate());
                CHECK(same_set(other.positives, expected));
            }
}
