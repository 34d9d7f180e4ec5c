#include "sbc/core_params.hpp"

#include <doctest.h>

#include <random>

using namespace sbc;

TEST_CASE("rational arithmetic stays reduced") {
    const Rational a{6, -4};
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(a + Rational{3, 2} == Rational{0});
    CHECK(Rational{1, 3} * Rational{3} == Rational{1});
    CHECK(Rational{1, 2} - Rational{1} == Rational{-1, 2});
    CHECK(Rational{-1, 2} < Rational{0});
    CHECK(Rational{5, 2} > Rational{2});
    CHECK(Rational{4} == 4);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational{INT64_MAX} + Rational{1}, std::overflow_error);
}

TEST_CASE("rational text") {
    CHECK(to_string(Rational{-4, 6}) == "-2/3");
    CHECK(to_string(Rational{7}) == "7");
    CHECK(parse_rational("3/2") == Rational{3, 2});
    CHECK(parse_rational("-10/4") == Rational{-5, 2});
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("sign group of order two") {
    const Sign both[] = {Sign::plus, Sign::minus};
    for (Sign a : both) {
        CHECK(Sign::plus * a == a);
        CHECK(a * a == Sign::plus);
        CHECK(-(-a) == a);
        for (Sign b : both) {
            CHECK(a * b == b * a);
            for (Sign c : both) CHECK((a * b) * c == a * (b * c));
        }
    }
    CHECK(Sign::minus * Sign::plus == Sign::minus);
    CHECK(sign_pow(0) == Sign::plus);
    CHECK(sign_pow(3) == Sign::minus);
    CHECK(sign_pow(-3) == Sign::minus);
    CHECK(sign_pow(-4) == Sign::plus);
    CHECK(parse_sign("-") == Sign::minus);
    CHECK(parse_sign("+1") == Sign::plus);
    CHECK_THROWS_AS(parse_sign("0"), ParseError);
}

TEST_CASE("scalar integrality") {
    CHECK(scalar_is_integer(ScalarParam{-3}));
    CHECK_FALSE(scalar_is_integer(ScalarParam{Rational{1, 2}}));
    CHECK_FALSE(scalar_is_integer(ScalarParam::generic()));
    CHECK_FALSE(scalar_is_integer(ScalarParam{Rational{2}, Rational{1}}));
    CHECK(scalar_equals_integer(ScalarParam{3}, 3));
    CHECK_FALSE(scalar_equals_integer(ScalarParam{Rational{3}, Rational{1}}, 3));
    CHECK_FALSE(scalar_equals_integer(ScalarParam::generic(), 0));
    CHECK_FALSE(scalar_equals_integer(ScalarParam{2}, 3));
    CHECK(ScalarParam{} == ScalarParam{0});
}

TEST_CASE("generic differs from every exact scalar") {
    const auto g = ScalarParam::generic();
    CHECK(g == ScalarParam::generic());
    for (int k = -5; k <= 5; ++k) CHECK_FALSE(g == ScalarParam{k});
    CHECK_THROWS_AS(g.exact(), UnsupportedScalarError);
    CHECK_THROWS_AS(g.real(), UnsupportedScalarError);
    CHECK_THROWS_AS(ScalarParam(Rational{1}, Rational{1}).real(), UnsupportedScalarError);
    CHECK_FALSE(g.is_real());
}

TEST_CASE("scalar text format") {
    CHECK(to_string(parse_scalar("1/2-3/4*i")) == "1/2-3/4*i");
    CHECK(to_string(parse_scalar("-4/6")) == "-2/3");
    CHECK(to_string(parse_scalar("3+0*i")) == "3");
    CHECK(parse_scalar("3+1*i") == ScalarParam{Rational{3}, Rational{1}});
    CHECK(parse_scalar("generic").is_generic());
    CHECK_THROWS_AS(parse_scalar("1+i"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1+2"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1*2"), ParseError);
    CHECK_THROWS_AS(parse_scalar("Generic"), ParseError);
}

TEST_CASE("property: exact scalars round-trip through text") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000);
    std::uniform_int_distribution<std::int64_t> den(1, 1000);
    for (int trial = 0; trial < 2000; ++trial) {
        const ScalarParam s{Rational{num(rng), den(rng)}, trial % 3 == 0 ? Rational{0} : Rational{num(rng), den(rng)}};
        const std::string text = to_string(s);
        CHECK(parse_scalar(text) == s);
        CHECK(to_string(parse_scalar(text)) == text);
        if (scalar_equals_integer(s, s.as_integer().value_or(0))) CHECK(scalar_is_integer(s));
    }
}

TEST_CASE("group descriptors") {
    CHECK(to_string(GroupDescriptor::so(5, 1)) == "SO(5,1)");
    CHECK(to_string(GroupDescriptor::so(2, 0)) == "SO(2)");
    CHECK(GroupDescriptor::so(1, 4).swapped() == GroupDescriptor{4, 1});
    CHECK(GroupDescriptor::so(0, 1).dimension_of_form() == 1);
    CHECK_THROWS_AS(GroupDescriptor::so(0, 0), DomainError);
    CHECK_THROWS_AS(GroupDescriptor::so(-1, 3), DomainError);
}
