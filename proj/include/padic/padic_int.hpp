#pragma once

#include <gmpxx.h>

#include <compare>
#include <vector>

#include "padic/context.hpp"
#include "padic/errors.hpp"

namespace padic {

/// p-adic valuation of a residue mod p^K: either a finite exponent in
/// [0, K) or "infinite", meaning the residue is 0 and the true valuation
/// is only known to be >= K. Infinite compares greater than any finite value.
class Valuation {
public:
    static Valuation infinite() { return Valuation(true, 0); }
    explicit Valuation(unsigned long v) : Valuation(false, v) {}

    bool is_finite() const { return !infinite_; }
    unsigned long value() const;

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.infinite_ != b.infinite_) return a.infinite_ ? std::strong_ordering::greater
                                                           : std::strong_ordering::less;
        return a.v_ <=> b.v_;
    }
    bool at_least(unsigned long m) const { return infinite_ || v_ >= m; }

private:
    Valuation(bool inf, unsigned long v) : infinite_(inf), v_(v) {}
    bool infinite_;
    unsigned long v_;
};

/// |a|_p = p^(-v) as an exact rational. For the zero residue the norm is
/// reported as 0 with is_floor set: the true norm is only known <= p^(-K).
struct Norm {
    mpq_class value;
    bool is_floor = false;
};

/// Canonical residue in [0, p^K) under a shared context. Immutable.
class PadicInt {
public:
    PadicInt(const mpz_class& n, ContextPtr ctx);

    const mpz_class& value() const { return value_; }
    const ContextPtr& context() const { return ctx_; }
    bool is_zero() const { return value_ == 0; }

    Valuation valuation() const;
    Norm norm() const;
    bool is_unit() const;

    /// Multiplicative inverse mod p^K; requires valuation 0.
    PadicInt invert_unit() const;

    /// Least-significant-first digit expansion mod p^count.
    std::vector<mpz_class> digits(unsigned count) const;

    PadicInt operator+(const PadicInt& o) const;
    PadicInt operator-(const PadicInt& o) const;
    PadicInt operator*(const PadicInt& o) const;
    PadicInt operator-() const;
    bool operator==(const PadicInt& o) const;

private:
    void require_same_context(const PadicInt& o) const;
    mpz_class value_;
    ContextPtr ctx_;
};

/// Exact quotient q with q*den == num mod p^K. Requires
/// valuation(num) >= valuation(den). Knocks valuation(den) digits off the
/// precision of the result; the loss is added to *precision_loss when given.
PadicInt exact_div(const PadicInt& num, const PadicInt& den, unsigned long* precision_loss = nullptr);

/// a == b mod p^m, equivalently valuation(a - b) >= m.
bool congruent(const PadicInt& a, const PadicInt& b, unsigned long m);

}  // namespace padic
