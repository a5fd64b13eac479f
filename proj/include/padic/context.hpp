#pragma once

#include <gmpxx.h>

#include <memory>

#include "padic/errors.hpp"

namespace padic {

/// Deterministic primality test. Miller-Rabin with the witness set
/// {2,...,37}, which is exact below 3.317e24; BPSW above that.
bool is_prime(const mpz_class& n);

/// Fixed-modulus arithmetic context: a prime p and a working precision
/// K = N + G digits, i.e. all arithmetic happens in Z/p^K.
class PadicContext {
public:
    PadicContext(mpz_class p, unsigned target_precision, unsigned guard_digits);

    const mpz_class& prime() const { return p_; }
    unsigned target_precision() const { return target_; }
    unsigned guard_digits() const { return guard_; }
    unsigned working_precision() const { return target_ + guard_; }
    const mpz_class& modulus() const { return modulus_; }

    bool compatible_with(const PadicContext& other) const {
        return p_ == other.p_ && working_precision() == other.working_precision();
    }

private:
    mpz_class p_;
    unsigned target_;
    unsigned guard_;
    mpz_class modulus_;  // p^(N+G), cached
};

using ContextPtr = std::shared_ptr<const PadicContext>;

ContextPtr make_context(const mpz_class& p, unsigned target_precision, unsigned guard_digits = 2);

}  // namespace padic
