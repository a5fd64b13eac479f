#include <random>

#include "doctest.h"
#include "padic/oracle.hpp"

using namespace padic;

TEST_CASE("brute force roots") {
    Poly f({2, 1, 1});  // x^2 + x + 2
    auto rep = brute_force_roots(f, 2, 4);
    CHECK(rep.roots == std::vector<std::uint64_t>{5, 10});
    CHECK(rep.modulus == 16);
    REQUIRE(rep.valuations.size() == 2);
    CHECK(rep.valuations[0] == Valuation(5));  // f(5) = 32 = 2^5
    CHECK(rep.valuations[1] == Valuation(4));  // f(10) = 112 = 2^4 * 7

    Poly g({-2, 0, 1});
    CHECK(brute_force_roots(g, 7, 3).roots == std::vector<std::uint64_t>{108, 235});

    Poly lin({0, 1});
    CHECK(brute_force_roots(lin, 5, 3).roots == std::vector<std::uint64_t>{0});
    CHECK_FALSE(brute_force_roots(lin, 5, 3).valuations[0].is_finite());

    CHECK_THROWS_AS(brute_force_roots(g, 7, 10), BudgetExceededError);
    CHECK_NOTHROW(brute_force_roots(g, 7, 9, /*budget=*/50000000ull));
}

TEST_CASE("parallel scan matches the serial reference") {
    std::mt19937_64 rng(314159);
    for (int i = 0; i < 30; ++i) {
        std::uint64_t modulus = 2 + rng() % 40000;
        std::vector<std::uint64_t> coeffs(2 + rng() % 5);
        for (auto& c : coeffs) c = rng() % modulus;
        coeffs.back() = 1 + rng() % (modulus - 1);
        CHECK(detail::scan_roots_parallel(coeffs, modulus) ==
              detail::scan_roots_serial(coeffs, modulus));
    }
}

TEST_CASE("digit-by-digit lifting") {
    Poly f({-2, 0, 1});
    Seed s{3, 0, 6};
    CHECK(lift_digit_by_digit(f, s, 7, 3) == 108);

    Poly lin({-9, 1});  // x - 9
    Seed sl{2, 0, 1};   // 9 mod 7
    CHECK(lift_digit_by_digit(lin, sl, 7, 4) == 9);

    Poly g({2, 1, 1});
    Seed s2{0, 0, 1};
    CHECK(lift_digit_by_digit(g, s2, 2, 4) == 10);

    Poly sq({0, 0, 1});
    Seed bad{0, 0, 0};
    CHECK_THROWS_AS(lift_digit_by_digit(sq, bad, 2, 4), SingularSeedError);
}

TEST_CASE("the two oracles agree on random polynomials") {
    std::mt19937_64 rng(2718);
    const std::vector<int> primes = {2, 3, 5, 7};
    int cases = 0;
    while (cases < 40) {
        int p = primes[rng() % primes.size()];
        std::uniform_int_distribution<int> coeff(-50, 50);
        std::vector<mpz_class> c(3 + rng() % 4);
        for (auto& ci : c) ci = coeff(rng);
        if (c.back() == 0) continue;
        Poly f(std::move(c));
        unsigned m = 4;
        auto rep = brute_force_roots(f, p, m);
        Poly fp = f.derivative();
        for (std::uint64_t r0 = 0; r0 < static_cast<std::uint64_t>(p); ++r0) {
            mpz_class x0(static_cast<unsigned long>(r0));
            mpz_class fv = f.eval_integer(x0) % p, dv = fp.eval_integer(x0) % p;
            mpz_fdiv_r(fv.get_mpz_t(), fv.get_mpz_t(), mpz_class(p).get_mpz_t());
            mpz_fdiv_r(dv.get_mpz_t(), dv.get_mpz_t(), mpz_class(p).get_mpz_t());
            if (fv != 0 || dv == 0) continue;
            mpz_class lifted = lift_digit_by_digit(f, Seed{x0, fv, dv}, p, m);
            // the lift must appear in the exhaustive list, uniquely for this seed
            int matches = 0;
            bool present = false;
            for (std::uint64_t r : rep.roots) {
                if ((mpz_class(static_cast<unsigned long>(r)) - x0) % p == 0) ++matches;
                if (lifted == r) present = true;
            }
            CHECK(present);
            CHECK(matches == 1);
            ++cases;
        }
    }
}
