#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coverdecomp/errors.hpp"
#include "coverdecomp/rat.hpp"

using covdec::Rat;

TEST_CASE("canonical form") {
    CHECK(Rat(3, 6).str() == "1/2");
    CHECK(Rat(-3, 6).str() == "-1/2");
    CHECK(Rat(3, -6).str() == "-1/2");
    CHECK(Rat(0, 5).str() == "0");
    CHECK(Rat(4, 2).str() == "2");
    CHECK(Rat(2, 2).den() == 1);
    CHECK_THROWS_AS(Rat(1, 0), covdec::ParseError);
}

TEST_CASE("parse and round-trip") {
    CHECK(Rat::parse("1/2") == Rat(1, 2));
    CHECK(Rat::parse("-7") == Rat(-7));
    CHECK(Rat::parse("+3/9") == Rat(1, 3));
    CHECK(Rat::parse(Rat(22, 7).str()) == Rat(22, 7));
    CHECK_THROWS_AS(Rat::parse(""), covdec::ParseError);
    CHECK_THROWS_AS(Rat::parse("1/0"), covdec::ParseError);
    CHECK_THROWS_AS(Rat::parse("a/2"), covdec::ParseError);
    CHECK_THROWS_AS(Rat::parse("1.5"), covdec::ParseError);
    CHECK_THROWS_AS(Rat::parse("1/2/3"), covdec::ParseError);
}

TEST_CASE("arithmetic and order") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
    CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(1, 3));
    CHECK(Rat(7, 3).floor() == 2);
    CHECK(Rat(7, 3).ceil() == 3);
    CHECK(Rat(-7, 3).floor() == -3);
    CHECK(Rat(-7, 3).ceil() == -2);
    CHECK_THROWS_AS(Rat(1) / Rat(0), covdec::ParseError);
}

TEST_CASE("random field identities") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> d(-50, 50);
    for (int k = 0; k < 500; ++k) {
        long long bd = d(rng), cd = d(rng);
        const Rat a(d(rng), 1 + std::abs(d(rng)));
        const Rat b(bd == 0 ? 1 : bd, 1 + std::abs(d(rng)));
        const Rat c(cd == 0 ? 1 : cd, 1 + std::abs(d(rng)));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
        CHECK((a / b) * b == a);
        CHECK(a.den() > 0);
        CHECK(gcd(covdec::Rat::abs(a).num(), a.den()) == 1);
    }
}
