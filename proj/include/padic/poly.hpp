#pragma once

#include <gmpxx.h>

#include <vector>

#include "padic/padic_int.hpp"

namespace padic {

/// Univariate polynomial with integer coefficients, index i holding the
/// coefficient of x^i. Context-free: reduction mod p^K happens at
/// evaluation time. The zero polynomial is the empty coefficient list.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<mpz_class> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const;  // throws EmptyPolynomialError on the zero polynomial
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& coeff(std::size_t i) const;  // 0 beyond degree

    Poly derivative() const;

    /// Horner evaluation mod p^K.
    PadicInt eval(const PadicInt& x) const;

    /// Exact integer Horner evaluation (no reduction).
    mpz_class eval_integer(const mpz_class& x) const;

    bool operator==(const Poly&) const = default;

private:
    std::vector<mpz_class> coeffs_;
};

/// Coefficients of f(a + y) as a polynomial in y: entry j is f^(j)(a)/j!,
/// computed by repeated synthetic division so the quotients stay integral
/// even when p <= j.
struct TaylorCoeffs {
    PadicInt center;
    std::vector<PadicInt> coeffs;  // degree(f) + 1 entries
};

TaylorCoeffs taylor_coeffs(const Poly& f, const PadicInt& a);

}  // namespace padic
