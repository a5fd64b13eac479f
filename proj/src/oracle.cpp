#include "padic/oracle.hpp"

#include <algorithm>
#include <chrono>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace padic {
namespace detail {

namespace {

inline std::uint64_t horner_mod(const std::vector<std::uint64_t>& coeffs, std::uint64_t x,
                                std::uint64_t modulus) {
    unsigned __int128 acc = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = (acc * x + coeffs[i]) % modulus;
    return static_cast<std::uint64_t>(acc);
}

}  // namespace

std::vector<std::uint64_t> scan_roots_serial(const std::vector<std::uint64_t>& coeffs,
                                             std::uint64_t modulus) {
    std::vector<std::uint64_t> roots;
    for (std::uint64_t r = 0; r < modulus; ++r)
        if (horner_mod(coeffs, r, modulus) == 0) roots.push_back(r);
    return roots;
}

std::vector<std::uint64_t> scan_roots_parallel(const std::vector<std::uint64_t>& coeffs,
                                               std::uint64_t modulus) {
    std::vector<std::uint64_t> roots;
#pragma omp parallel
    {
        std::vector<std::uint64_t> local;
#pragma omp for schedule(static) nowait
        for (std::int64_t r = 0; r < static_cast<std::int64_t>(modulus); ++r)
            if (horner_mod(coeffs, static_cast<std::uint64_t>(r), modulus) == 0)
                local.push_back(static_cast<std::uint64_t>(r));
#pragma omp critical
        roots.insert(roots.end(), local.begin(), local.end());
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace detail

OracleReport brute_force_roots(const Poly& f, const mpz_class& p, unsigned m, std::uint64_t budget) {
    if (f.is_zero()) throw EmptyPolynomialError("cannot enumerate roots of the zero polynomial");
    mpz_class modulus;
    mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), m);
    if (modulus > budget)
        throw BudgetExceededError("p^m = " + modulus.get_str() + " exceeds the enumeration budget");

    const std::uint64_t mod_u = modulus.get_ui();
    std::vector<std::uint64_t> reduced(f.coeffs().size());
    mpz_class tmp;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        mpz_fdiv_r(tmp.get_mpz_t(), f.coeffs()[i].get_mpz_t(), modulus.get_mpz_t());
        reduced[i] = tmp.get_ui();
    }

    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::uint64_t> roots = detail::scan_roots_parallel(reduced, mod_u);
    auto t1 = std::chrono::steady_clock::now();

    OracleReport report;
    report.exponent = m;
    report.modulus = modulus;
    report.elapsed_s = std::chrono::duration<double>(t1 - t0).count();
    report.roots = std::move(roots);
    report.valuations.reserve(report.roots.size());
    for (std::uint64_t r : report.roots) {
        mpz_class v = f.eval_integer(mpz_class(static_cast<unsigned long>(r)));
        if (!mpz_divisible_p(v.get_mpz_t(), modulus.get_mpz_t()))
            throw Error("oracle self-check failed: reported root does not divide out");
        if (v == 0) {
            report.valuations.push_back(Valuation::infinite());
        } else {
            mpz_class cofactor;
            unsigned long val = mpz_remove(cofactor.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
            report.valuations.push_back(Valuation(val));
        }
    }
    return report;
}

mpz_class lift_digit_by_digit(const Poly& f, const Seed& seed, const mpz_class& p, unsigned m) {
    if (f.is_zero()) throw EmptyPolynomialError("cannot lift a root of the zero polynomial");
    Poly fp = f.derivative();
    mpz_class d0 = fp.is_zero() ? mpz_class(0) : fp.eval_integer(seed.x0) % p;
    mpz_fdiv_r(d0.get_mpz_t(), d0.get_mpz_t(), p.get_mpz_t());
    if (d0 == 0) throw SingularSeedError("f'(x0) == 0 mod p");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), d0.get_mpz_t(), p.get_mpz_t());

    // At digit i, pick d so f(x + d p^i) == 0 mod p^{i+1}; by the linear
    // expansion that is d = -(f(x)/p^i) * f'(x0)^{-1} mod p.
    mpz_class x = seed.x0;
    mpz_class pi(1);  // p^i
    for (unsigned i = 1; i < m; ++i) {
        pi *= p;
        mpz_class fx = f.eval_integer(x);
        if (!mpz_divisible_p(fx.get_mpz_t(), pi.get_mpz_t()))
            throw InvalidSeedError("f(x0) != 0 mod p; cannot lift");
        mpz_class quo;
        mpz_divexact(quo.get_mpz_t(), fx.get_mpz_t(), pi.get_mpz_t());
        mpz_class d = (-quo * inv);
        mpz_fdiv_r(d.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
        x += d * pi;
    }
    return x;
}

}  // namespace padic
