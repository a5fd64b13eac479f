#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padic/poly.hpp"

namespace padic {

enum class Method { olver, newton, halley, steffensen };

const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

/// A residue x0 mod p with f(x0) == 0 and f'(x0) != 0 mod p: the simple-root
/// hypothesis under which lifting is guaranteed.
struct Seed {
    mpz_class x0;
    mpz_class f_mod_p;       // always 0 for a valid seed
    mpz_class fprime_mod_p;  // nonzero mod p
};

struct SeedScan {
    std::vector<Seed> simple;
    std::vector<mpz_class> singular;  // f == f' == 0 mod p; not liftable here
};

/// Exhaustive scan of [0, p) for simple and singular seeds. Requires p < 2^20.
SeedScan find_seeds(const Poly& f, const mpz_class& p);

/// Check a user-supplied residue against the simple-root hypothesis.
Seed validate_seed(const Poly& f, const mpz_class& p, const mpz_class& x0);

struct TraceEntry {
    unsigned n;
    PadicInt x;
    Valuation fval_valuation;
    std::optional<Valuation> step_valuation;  // of x_{n+1} - x_n; absent on the last entry
};

struct SolveTrace {
    Method method;
    ContextPtr ctx;
    std::vector<TraceEntry> entries;
};

struct RootResult {
    PadicInt root;
    std::vector<mpz_class> digits;  // first N digits
    Valuation achieved_valuation;   // of f(root)
    unsigned iterations;
    SolveTrace trace;
    Seed seed;
    bool converged;
    std::string failure;  // empty on success
};

/// One iteration of each method, all mod p^K. Exact roots are fixed points.
/// Requires f'(x) to be a unit (SingularPointError otherwise). Any precision
/// consumed by non-unit divisions is added to *precision_loss.
PadicInt olver_step(const Poly& f, const PadicInt& x, unsigned long* precision_loss = nullptr);
PadicInt newton_step(const Poly& f, const PadicInt& x, unsigned long* precision_loss = nullptr);
PadicInt halley_step(const Poly& f, const PadicInt& x, unsigned long* precision_loss = nullptr);
PadicInt steffensen_step(const Poly& f, const PadicInt& x, unsigned long* precision_loss = nullptr);

/// Iterations guaranteed to reach valuation N, plus two for slack:
/// ceil(log_c N) + 2 with c = 4 for olver at p = 2, 3 for olver/halley,
/// 2 for newton/steffensen.
unsigned iteration_cap(unsigned target_precision, const mpz_class& p, Method m);

/// Iterate the chosen step from the seed until valuation(f(x_n)) >= N or the
/// cap is hit. Never throws for a valid seed; failure is flagged on the result.
RootResult solve(const Poly& f, const Seed& seed, ContextPtr ctx, Method m);

/// Least-squares slope of v_{n+1} against v_n over the trace's strictly
/// increasing finite valuations below K. Order c shows up as slope ~c since
/// log|f(x_n)|_p is linear in the valuation.
struct OrderEstimate {
    mpq_class slope;
    std::vector<std::pair<unsigned long, unsigned long>> pairs;
};

OrderEstimate convergence_order(const SolveTrace& trace);

}  // namespace padic
