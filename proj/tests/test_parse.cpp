#include <random>

#include "doctest.h"
#include "padic/parse.hpp"

using namespace padic;

TEST_CASE("basic polynomials") {
    CHECK(parse_poly("x^2 - 2") == Poly({-2, 0, 1}));
    CHECK(parse_poly("x^2 + x + 2") == Poly({2, 1, 1}));
    CHECK(parse_poly("2x - x - x").is_zero());
    CHECK(parse_poly("-x") == Poly({0, -1}));
    CHECK(parse_poly("3*x^4-2*x+7") == Poly({7, -2, 0, 0, 3}));
    CHECK(parse_poly("  42 ") == Poly({42}));
    CHECK(parse_poly("x") == Poly({0, 1}));
    CHECK(parse_poly("x + x") == Poly({0, 2}));
    CHECK(parse_poly("+x - 1") == Poly({-1, 1}));
}

TEST_CASE("syntax errors carry positions") {
    auto pos_of = [](const char* s) {
        try {
            parse_poly(s);
        } catch (const SyntaxError& e) {
            return e.pos;
        }
        return static_cast<std::size_t>(-1);
    };
    CHECK(pos_of("") == 0);
    CHECK(pos_of("x^2 + y") == 6);
    CHECK(pos_of("2.5x") == 1);
    CHECK(pos_of("x^") == 2);
    CHECK(pos_of("x + + 2") != static_cast<std::size_t>(-1));
    CHECK(pos_of("x *") == 2);
    CHECK(pos_of("x^1048577") == 2);
    CHECK_THROWS_AS(parse_poly("x^2 -"), SyntaxError);
    CHECK_THROWS_AS(parse_poly("(x+1)"), SyntaxError);
}

TEST_CASE("render round-trip") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> coeff(-99, 99);
    for (int i = 0; i < 200; ++i) {
        std::vector<mpz_class> c(1 + rng() % 9);
        for (auto& ci : c) ci = coeff(rng);
        Poly f(std::move(c));
        if (f.is_zero()) continue;
        CHECK(parse_poly(render_poly(f)) == f);
    }
}

TEST_CASE("render digits") {
    CHECK(render_digits({3, 1, 2}, 7, DigitStyle::series) == "3 + 1·7 + 2·7^2");
    CHECK(render_digits({0}, 7, DigitStyle::lsd_list) == "[0]");
    CHECK(render_digits({5, 6}, 7, DigitStyle::series) == "5 + 6·7");
    CHECK(render_digits({0, 0}, 5, DigitStyle::series) == "0");
    CHECK(render_digits({3, 1, 2}, 7, DigitStyle::lsd_list) == "[3, 1, 2]");
    CHECK(render_digits({1, 0, 2}, 3, DigitStyle::series, /*ascii=*/true) == "1 + 2*3^2");
    CHECK_THROWS_AS(render_digits({7}, 7, DigitStyle::series), DigitOutOfRangeError);
}
