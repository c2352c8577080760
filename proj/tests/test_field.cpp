#include <doctest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <random>

#include "hecke/field.hpp"

using namespace hecke;
using Dec = boost::multiprecision::cpp_dec_float_50;

namespace {

Dec lambda_dec(int p) { return 2 * cos(boost::math::constants::pi<Dec>() / p); }

Dec value_dec(const RingElem& x) {
    const Dec l = lambda_dec(x.p());
    Dec acc = 0, pw = 1;
    for (const auto& c : x.coeffs()) {
        acc += Dec(c.get_str()) * pw;
        pw *= l;
    }
    return acc;
}

Dec value_dec(const FieldElem& x) { return value_dec(x.num()) / Dec(x.den().get_str()); }

Dec value_dec(const ExtElem& x) { return value_dec(x.u()) + value_dec(x.v()) * sqrt(value_dec(x.D())); }

RingElem random_ring(int p, std::mt19937& rng, int bound = 6) {
    std::uniform_int_distribution<int> d(-bound, bound);
    std::vector<mpz_class> cs;
    for (int i = 0; i < HeckeField::get(p).degree(); ++i) cs.emplace_back(d(rng));
    return RingElem(p, cs);
}

}  // namespace

TEST_CASE("minimal polynomials of small p") {
    CHECK(minimal_polynomial(3).to_string() == "x - 1");
    CHECK(minimal_polynomial(4).to_string() == "x^2 - 2");
    CHECK(minimal_polynomial(5).to_string() == "x^2 - x - 1");
    CHECK(minimal_polynomial(6).to_string() == "x^2 - 3");
    CHECK(minimal_polynomial(7).to_string() == "x^3 - x^2 - 2x + 1");
    CHECK(minimal_polynomial(8).to_string() == "x^4 - 4x^2 + 2");
    CHECK_THROWS_AS(minimal_polynomial(2), DomainError);
}

TEST_CASE("minimal polynomial vanishes at 2cos(pi/p) and has degree phi(2p)/2") {
    for (int p = 3; p <= 30; ++p) {
        const MinPoly m = minimal_polynomial(p);
        CHECK(m.degree() == euler_phi(2 * p) / 2);
        CHECK(m.coeffs.back() == 1);
        Dec acc = 0, pw = 1;
        for (const auto& c : m.coeffs) {
            acc += Dec(c.get_str()) * pw;
            pw *= lambda_dec(p);
        }
        CHECK(abs(acc) < Dec("1e-40"));
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
}

TEST_CASE("ring arithmetic reduces modulo the minimal polynomial") {
    const RingElem l = RingElem::lambda(6);
    CHECK(l * l == RingElem(6, 3L));
    const RingElem l5 = RingElem::lambda(5);
    CHECK(l5 * l5 == l5 + RingElem(5, 1L));
    CHECK(RingElem::lambda(3) == RingElem(3, 1L));
}

TEST_CASE("field inverse") {
    const FieldElem x(RingElem::lambda(5) + RingElem(5, 2L));
    CHECK(x.inverse() == FieldElem(RingElem(5, std::vector<mpz_class>{3, -1}), 5));
    CHECK_THROWS(FieldElem(5, 0L).inverse());

    std::mt19937 rng(7);
    for (int p = 3; p <= 12; ++p) {
        for (int t = 0; t < 20; ++t) {
            const FieldElem a(random_ring(p, rng), 1 + t % 5);
            if (a.is_zero()) continue;
            CHECK(a * a.inverse() == FieldElem(p, 1L));
        }
    }
}

TEST_CASE("signs agree with a 50-digit evaluation") {
    std::mt19937 rng(11);
    for (int p = 3; p <= 14; ++p) {
        for (int t = 0; t < 30; ++t) {
            const RingElem x = random_ring(p, rng, 20);
            const Dec v = value_dec(x);
            const int expected = abs(v) < Dec("1e-30") ? 0 : (v > 0 ? 1 : -1);
            CHECK(sign(x) == expected);
        }
    }
}

TEST_CASE("sign of an exact zero that is not formally zero") {
    // λ² − 2 in G_4
    const RingElem l = RingElem::lambda(4);
    CHECK(sign(l * l - RingElem(4, 2L)) == 0);
    // 1 + √5 − 2φ with φ = λ_5
    const ExtElem e(FieldElem(5, 1L) - FieldElem(RingElem::lambda(5) * 2L), FieldElem(5, 1L), RingElem(5, 5L));
    CHECK(sign(e) == 0);
}

TEST_CASE("extension signs agree with a 50-digit evaluation") {
    std::mt19937 rng(3);
    for (int p = 3; p <= 9; ++p) {
        for (int t = 0; t < 40; ++t) {
            RingElem D = random_ring(p, rng);
            if (sign(D) < 0) D = -D;
            const ExtElem x(FieldElem(random_ring(p, rng)), FieldElem(random_ring(p, rng)), D);
            const Dec v = value_dec(x);
            const int expected = abs(v) < Dec("1e-30") ? 0 : (v > 0 ? 1 : -1);
            CHECK(sign(x) == expected);
        }
    }
}

TEST_CASE("zero divisor carries the square root witness") {
    const RingElem D(4, 4L);
    const ExtElem x(FieldElem(4, -2L), FieldElem(4, 1L), D);  // −2 + √4 = 0
    CHECK(sign(x) == 0);
    const ExtElem y(FieldElem(4, 2L), FieldElem(4, 1L), D);  // 2 + √4, norm 0
    try {
        (void)y.inverse();
        FAIL("expected a zero divisor");
    } catch (const ZeroDivisor& e) {
        CHECK(e.witness() == FieldElem(4, 2L));
        CHECK(y.fold(e.witness()) == ExtElem(FieldElem(4, 4L), D));
    }
}

TEST_CASE("extension inverse and conjugate") {
    const RingElem D(6, 7L);
    const ExtElem x(FieldElem(RingElem::lambda(6)), FieldElem(6, 2L), D);
    CHECK(x * x.inverse() == ExtElem(FieldElem(6, 1L), D));
    CHECK(x * x.conj() == ExtElem(x.norm(), D));
    CHECK(x.pow(-2) * x.pow(2) == ExtElem(FieldElem(6, 1L), D));
}

TEST_CASE("decimal rendering") {
    CHECK(to_decimal(FieldElem(RingElem::lambda(4)), 10) == "1.4142135624");
    CHECK(to_decimal(ExtElem::sqrt_of(RingElem(3, 2L)), 5) == "1.41421");
    CHECK(to_decimal(FieldElem(3, -1L), 3) == "-1.000");
}

TEST_CASE("lambda enclosure is certified") {
    for (int p = 3; p <= 20; ++p) {
        const RealInterval I = HeckeField::get(p).lambda_enclosure(200);
        CHECK(I.certain_sign() == 1);
        CHECK(I.width() < 1e-50);
    }
}
