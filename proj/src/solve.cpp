#include "padic/solve.hpp"

#include <cstdint>

namespace padic {
namespace {

constexpr std::uint64_t kSeedEnumerationBound = 1u << 20;

struct StepData {
    PadicInt f0;       // f(x)
    PadicInt f1;       // f'(x)
    PadicInt half_f2;  // f''(x)/2, exact from the synthetic-division shift
};

// One Taylor shift replaces the three evaluations a step needs; entry 2 of
// the shift is f''/2 exactly, so no division by 2 ever happens (essential at
// p = 2, where 2 is not a unit).
StepData step_data(const Poly& f, const PadicInt& x) {
    TaylorCoeffs tc = taylor_coeffs(f, x);
    PadicInt zero(0, x.context());
    return StepData{tc.coeffs[0],
                    tc.coeffs.size() > 1 ? tc.coeffs[1] : zero,
                    tc.coeffs.size() > 2 ? tc.coeffs[2] : zero};
}

void require_unit_derivative(const PadicInt& f1) {
    if (!f1.is_unit()) throw SingularPointError("f'(x) is not a unit");
}

unsigned ceil_log(unsigned base, unsigned n) {
    unsigned t = 0;
    std::uint64_t pw = 1;
    while (pw < n) {
        pw *= base;
        ++t;
    }
    return t;
}

mpz_class eval_mod(const Poly& f, const mpz_class& x, const mpz_class& m) {
    mpz_class acc = 0;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = (acc * x + f.coeffs()[i]) % m;
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    return acc;
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::olver: return "olver";
        case Method::newton: return "newton";
        case Method::halley: return "halley";
        case Method::steffensen: return "steffensen";
    }
    return "?";
}

std::optional<Method> method_from_name(const std::string& name) {
    if (name == "olver") return Method::olver;
    if (name == "newton") return Method::newton;
    if (name == "halley") return Method::halley;
    if (name == "steffensen") return Method::steffensen;
    return std::nullopt;
}

SeedScan find_seeds(const Poly& f, const mpz_class& p) {
    if (p >= kSeedEnumerationBound)
        throw PrimeTooLargeError("p too large for exhaustive seed search; supply a seed");
    if (f.is_zero()) throw EmptyPolynomialError("cannot search seeds of the zero polynomial");

    bool all_zero = true;
    for (const auto& c : f.coeffs())
        if (!mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t())) {
            all_zero = false;
            break;
        }
    if (all_zero) throw ZeroPolynomialModPError("f vanishes identically mod p");

    Poly fp = f.derivative();
    SeedScan scan;
    const std::uint64_t pi = p.get_ui();
    for (std::uint64_t r = 0; r < pi; ++r) {
        mpz_class x(static_cast<unsigned long>(r));
        mpz_class fv = eval_mod(f, x, p);
        if (fv != 0) continue;
        mpz_class dv = fp.is_zero() ? mpz_class(0) : eval_mod(fp, x, p);
        if (dv != 0)
            scan.simple.push_back(Seed{x, fv, dv});
        else
            scan.singular.push_back(x);
    }
    return scan;
}

Seed validate_seed(const Poly& f, const mpz_class& p, const mpz_class& x0) {
    if (f.is_zero()) throw EmptyPolynomialError("cannot seed the zero polynomial");
    mpz_class x;
    mpz_fdiv_r(x.get_mpz_t(), x0.get_mpz_t(), p.get_mpz_t());
    mpz_class fv = eval_mod(f, x, p);
    if (fv != 0) throw InvalidSeedError("f(x0) != 0 mod p");
    Poly fp = f.derivative();
    mpz_class dv = fp.is_zero() ? mpz_class(0) : eval_mod(fp, x, p);
    if (dv == 0) throw SingularSeedError("f'(x0) == 0 mod p; Hensel's hypothesis fails");
    return Seed{x, fv, dv};
}

PadicInt olver_step(const Poly& f, const PadicInt& x, unsigned long* precision_loss) {
    StepData d = step_data(f, x);
    require_unit_derivative(d.f1);
    if (d.f0.is_zero()) return x;
    PadicInt inv = d.f1.invert_unit();
    PadicInt newton = exact_div(d.f0, d.f1, precision_loss);
    PadicInt correction = d.f0 * d.f0 * d.half_f2 * inv * inv * inv;
    return x - newton - correction;
}

PadicInt newton_step(const Poly& f, const PadicInt& x, unsigned long* precision_loss) {
    StepData d = step_data(f, x);
    require_unit_derivative(d.f1);
    if (d.f0.is_zero()) return x;
    return x - exact_div(d.f0, d.f1, precision_loss);
}

PadicInt halley_step(const Poly& f, const PadicInt& x, unsigned long* precision_loss) {
    StepData d = step_data(f, x);
    require_unit_derivative(d.f1);
    if (d.f0.is_zero()) return x;
    // x - 2ff'/(2f'^2 - ff'') with the 2 cancelled against f''/2, keeping the
    // denominator a unit even at p = 2.
    PadicInt denom = d.f1 * d.f1 - d.f0 * d.half_f2;
    if (!denom.is_unit()) throw SingularPointError("Halley denominator is not a unit");
    return x - exact_div(d.f0 * d.f1, denom, precision_loss);
}

PadicInt steffensen_step(const Poly& f, const PadicInt& x, unsigned long* precision_loss) {
    if (f.is_zero()) throw EmptyPolynomialError("cannot step the zero polynomial");
    PadicInt fx = f.eval(x);
    if (fx.is_zero()) return x;
    // Divided difference g = (f(x + f(x)) - f(x)) / f(x) on canonical integer
    // representatives; the quotient is an exact integer and well defined mod
    // p^K, so no precision is shed extracting it. g == f'(x) mod p at a seed.
    mpz_class num = f.eval_integer(x.value() + fx.value()) - f.eval_integer(x.value());
    mpz_class g_int;
    mpz_divexact(g_int.get_mpz_t(), num.get_mpz_t(), fx.value().get_mpz_t());
    PadicInt g(g_int, x.context());
    if (!g.is_unit()) throw SingularPointError("Steffensen divided difference is not a unit");
    return x - exact_div(fx, g, precision_loss);
}

unsigned iteration_cap(unsigned target_precision, const mpz_class& p, Method m) {
    unsigned base = 2;
    if (m == Method::olver)
        base = (p == 2) ? 4 : 3;
    else if (m == Method::halley)
        base = 3;
    return ceil_log(base, target_precision) + 2;
}

RootResult solve(const Poly& f, const Seed& seed, ContextPtr ctx, Method m) {
    const unsigned target = ctx->target_precision();
    const unsigned cap = iteration_cap(target, ctx->prime(), m);

    SolveTrace trace{m, ctx, {}};
    PadicInt x(seed.x0, ctx);
    bool converged = false;
    std::string failure;
    unsigned long loss = 0;
    unsigned steps = 0;

    for (unsigned n = 0;; ++n) {
        Valuation fv = f.eval(x).valuation();
        trace.entries.push_back(TraceEntry{n, x, fv, std::nullopt});
        if (fv.at_least(target)) {
            converged = true;
            break;
        }
        if (n >= cap) {
            failure = "iteration cap reached without convergence";
            break;
        }
        PadicInt next = [&] {
            switch (m) {
                case Method::olver: return olver_step(f, x, &loss);
                case Method::newton: return newton_step(f, x, &loss);
                case Method::halley: return halley_step(f, x, &loss);
                case Method::steffensen: return steffensen_step(f, x, &loss);
            }
            return x;
        }();
        if (loss > ctx->guard_digits()) {
            failure = "precision exhausted: divisions consumed more than the guard digits";
            break;
        }
        trace.entries.back().step_valuation = (next - x).valuation();
        x = next;
        ++steps;
    }

    RootResult res{x,
                   x.digits(std::min(target, ctx->working_precision())),
                   f.eval(x).valuation(),
                   steps > 0 ? steps : 1,
                   std::move(trace),
                   seed,
                   converged,
                   std::move(failure)};
    return res;
}

OrderEstimate convergence_order(const SolveTrace& trace) {
    const unsigned long K = trace.ctx->working_precision();
    std::vector<unsigned long> vals;
    for (const auto& e : trace.entries) {
        if (!e.fval_valuation.is_finite()) break;
        unsigned long v = e.fval_valuation.value();
        if (v >= K) break;
        if (!vals.empty() && v <= vals.back()) break;
        vals.push_back(v);
    }
    if (vals.size() < 3)
        throw InsufficientTraceError("need at least 3 strictly increasing finite valuations");

    // v behaves like -log_p |f(x_n)|_p, so order c is the slope of the
    // regression of v_{n+1} on v_n. Exact rational least squares.
    OrderEstimate est;
    mpz_class sx = 0, sy = 0, sxy = 0, sxx = 0;
    mpz_class count(static_cast<unsigned long>(vals.size() - 1));
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
        mpz_class xi(vals[i]), yi(vals[i + 1]);
        sx += xi;
        sy += yi;
        sxy += xi * yi;
        sxx += xi * xi;
        est.pairs.emplace_back(vals[i], vals[i + 1]);
    }
    mpq_class num(count * sxy - sx * sy), den(count * sxx - sx * sx);
    est.slope = num / den;
    est.slope.canonicalize();
    return est;
}

}  // namespace padic
