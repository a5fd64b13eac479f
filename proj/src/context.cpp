#include "padic/context.hpp"

#include <array>

namespace padic {
namespace {

// Miller-Rabin round for one witness; n odd, n - 1 = d * 2^s.
bool witness_passes(const mpz_class& n, const mpz_class& a, const mpz_class& d, unsigned long s) {
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    static const std::array<unsigned long, 12> small = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned long q : small) {
        if (n == q) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), q)) return false;
    }

    // Witness set {2..37} is a proven deterministic test below 3.317e24.
    static const mpz_class deterministic_bound("3317044064679887385961981");
    if (n < deterministic_bound) {
        mpz_class d = n - 1;
        unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
        mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
        for (unsigned long a : small)
            if (!witness_passes(n, mpz_class(a), d, s)) return false;
        return true;
    }
    // BPSW above the deterministic range (no counterexample known).
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

PadicContext::PadicContext(mpz_class p, unsigned target_precision, unsigned guard_digits)
    : p_(std::move(p)), target_(target_precision), guard_(guard_digits) {
    if (target_ < 1) throw InvalidPrecisionError("target precision must be >= 1");
    if (!is_prime(p_)) throw NonPrimeError("p = " + p_.get_str() + " is not prime");
    mpz_pow_ui(modulus_.get_mpz_t(), p_.get_mpz_t(), working_precision());
}

ContextPtr make_context(const mpz_class& p, unsigned target_precision, unsigned guard_digits) {
    return std::make_shared<const PadicContext>(p, target_precision, guard_digits);
}

}  // namespace padic
