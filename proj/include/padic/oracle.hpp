#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "padic/poly.hpp"
#include "padic/solve.hpp"

namespace padic {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

/// Exhaustive ground truth: every root of f mod p^m, found by direct
/// evaluation of all residues and re-checked on construction.
struct OracleReport {
    unsigned exponent;                  // m
    mpz_class modulus;                  // p^m
    std::vector<std::uint64_t> roots;   // ascending
    std::vector<Valuation> valuations;  // v_p(f(r)) per root, infinite when f(r) = 0 in Z
    double elapsed_s;
};

OracleReport brute_force_roots(const Poly& f, const mpz_class& p, unsigned m,
                               std::uint64_t budget = kDefaultOracleBudget);

/// The unique root of f mod p^m congruent to the seed, built one digit at a
/// time by solving a linear congruence per digit. Deliberately shares no
/// algebra with the solver steps.
mpz_class lift_digit_by_digit(const Poly& f, const Seed& seed, const mpz_class& p, unsigned m);

namespace detail {

// Scan kernels over reduced coefficients (least-significant first, already in
// [0, modulus)). The serial one is the reference; the parallel one must return
// the identical sorted list.
std::vector<std::uint64_t> scan_roots_serial(const std::vector<std::uint64_t>& coeffs,
                                             std::uint64_t modulus);
std::vector<std::uint64_t> scan_roots_parallel(const std::vector<std::uint64_t>& coeffs,
                                               std::uint64_t modulus);

}  // namespace detail

}  // namespace padic
