#include "padic/poly.hpp"

namespace padic {

Poly::Poly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t Poly::degree() const {
    if (coeffs_.empty()) throw EmptyPolynomialError("the zero polynomial has no degree");
    return coeffs_.size() - 1;
}

const mpz_class& Poly::coeff(std::size_t i) const {
    static const mpz_class zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly{};
    std::vector<mpz_class> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = mpz_class(i) * coeffs_[i];
    return Poly(std::move(d));
}

PadicInt Poly::eval(const PadicInt& x) const {
    if (coeffs_.empty()) throw EmptyPolynomialError("cannot evaluate the zero polynomial");
    const mpz_class& m = x.context()->modulus();
    mpz_class acc = coeffs_.back() % m;
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = (acc * x.value() + coeffs_[i]) % m;
    return PadicInt(acc, x.context());
}

mpz_class Poly::eval_integer(const mpz_class& x) const {
    mpz_class acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

TaylorCoeffs taylor_coeffs(const Poly& f, const PadicInt& a) {
    if (f.is_zero()) throw EmptyPolynomialError("cannot shift the zero polynomial");
    const ContextPtr& ctx = a.context();
    const mpz_class& m = ctx->modulus();
    std::vector<mpz_class> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) mpz_fdiv_r(c[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), m.get_mpz_t());

    // Repeated synthetic division by (y - a); after pass k, c[k] holds the
    // coefficient of y^k of f(a + y), i.e. f^(k)(a)/k! as an exact residue.
    const std::size_t n = c.size();
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t j = n - 1; j-- > k;) c[j] = (c[j] + a.value() * c[j + 1]) % m;

    std::vector<PadicInt> out;
    out.reserve(n);
    for (auto& ci : c) out.emplace_back(ci, ctx);
    return TaylorCoeffs{a, std::move(out)};
}

}  // namespace padic
