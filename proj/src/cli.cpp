#include "padic/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "padic/parse.hpp"

namespace padic::cli {
namespace {

using json = nlohmann::ordered_json;

struct RunRecord {
    Seed seed;
    Method method;
    std::optional<RootResult> result;
    std::optional<OrderEstimate> order;
    std::optional<bool> verified;
    std::string error;
};

json valuation_json(const Valuation& v) {
    if (!v.is_finite()) return json("inf");
    return json(v.value());
}

std::string valuation_text(const Valuation& v, unsigned K) {
    if (!v.is_finite()) return ">= " + std::to_string(K);
    return std::to_string(v.value());
}

std::string order_text(const std::optional<OrderEstimate>& o) {
    if (!o) return "-";
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << mpq_get_d(o->slope.get_mpq_t());
    return os.str();
}

bool verify_against_oracle(const Poly& f, const RunRecord& rec, const OracleReport& report,
                           const mpz_class& p, unsigned m) {
    mpz_class pm = report.modulus;
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), rec.result->root.value().get_mpz_t(), pm.get_mpz_t());

    bool found = false;
    unsigned congruent_count = 0;
    for (std::uint64_t root : report.roots) {
        mpz_class rt(static_cast<unsigned long>(root));
        if ((rt - rec.seed.x0) % p == 0) ++congruent_count;
        if (rt == r) found = true;
    }
    if (!found || congruent_count != 1) return false;
    return lift_digit_by_digit(f, rec.seed, p, m) == r;
}

void print_solve_table(std::ostream& out, const RunConfig& cfg, const Poly& f, unsigned K,
                       const std::vector<RunRecord>& records) {
    out << "f(x) = " << render_poly(f) << "\n";
    out << "p = " << cfg.prime << ", digits = " << cfg.digits << ", guard = " << cfg.guard
        << ", method = " << cfg.method << "\n";
    DigitStyle style = cfg.digit_style == "lsd_list" ? DigitStyle::lsd_list : DigitStyle::series;
    for (const auto& rec : records) {
        out << "\nseed " << rec.seed.x0;
        if (cfg.method == "all") out << " [" << method_name(rec.method) << "]";
        out << "\n";
        if (!rec.error.empty()) {
            out << "  status: ERROR (" << rec.error << ")\n";
            continue;
        }
        const RootResult& res = *rec.result;
        out << "  root: " << render_digits(res.digits, cfg.prime, style, cfg.ascii) << "\n";
        out << "  valuation: " << valuation_text(res.achieved_valuation, K) << "\n";
        out << "  iterations: " << res.iterations << "\n";
        if (!res.converged) out << "  status: NOT CONVERGED (" << res.failure << ")\n";
        if (rec.verified.has_value()) {
            if (*rec.verified)
                out << "  oracle: OK (unique root mod " << cfg.prime << "^" << *cfg.verify_m
                    << ")\n";
            else
                out << "  oracle: DISAGREEMENT DETECTED -- solver output contradicts brute force\n";
        }
    }
}

void print_compare_table(std::ostream& out, const RunConfig& cfg, const Poly& f, unsigned K,
                         const std::vector<RunRecord>& records) {
    out << "f(x) = " << render_poly(f) << "\n";
    out << "p = " << cfg.prime << ", digits = " << cfg.digits << ", guard = " << cfg.guard << "\n\n";
    out << std::left << std::setw(8) << "seed" << std::setw(12) << "method" << std::setw(12)
        << "iterations" << std::setw(11) << "valuation" << "order\n";
    for (const auto& rec : records) {
        std::ostringstream seed_s;
        seed_s << rec.seed.x0;
        out << std::left << std::setw(8) << seed_s.str() << std::setw(12)
            << method_name(rec.method);
        if (!rec.error.empty()) {
            out << "ERROR (" << rec.error << ")\n";
            continue;
        }
        const RootResult& res = *rec.result;
        out << std::setw(12) << res.iterations << std::setw(11)
            << valuation_text(res.achieved_valuation, K) << order_text(rec.order);
        if (!res.converged) out << "  NOT CONVERGED";
        if (rec.verified.has_value()) out << (*rec.verified ? "  oracle: OK" : "  oracle: DISAGREEMENT");
        out << "\n";
    }
}

json report_json(const RunConfig& cfg, const std::vector<RunRecord>& records, unsigned K,
                 double elapsed_ms, const std::string& note) {
    json j;
    j["schema"] = 1;
    json cfg_j;
    cfg_j["poly"] = cfg.poly_text;
    cfg_j["prime"] = cfg.prime.get_str();
    cfg_j["digits"] = cfg.digits;
    cfg_j["guard"] = cfg.guard;
    cfg_j["method"] = cfg.method;
    cfg_j["seed"] = cfg.seed ? json(cfg.seed->get_str()) : json(nullptr);
    cfg_j["verify"] = cfg.verify_m ? json(*cfg.verify_m) : json(nullptr);
    cfg_j["format"] = cfg.format;
    cfg_j["digit_style"] = cfg.digit_style;
    cfg_j["budget"] = cfg.budget;
    j["config"] = cfg_j;
    if (!note.empty()) j["note"] = note;

    json runs = json::array();
    for (const auto& rec : records) {
        json r;
        std::ostringstream seed_s;
        seed_s << rec.seed.x0;
        r["seed"] = seed_s.str();
        r["method"] = method_name(rec.method);
        if (!rec.error.empty()) {
            r["error"] = rec.error;
            runs.push_back(r);
            continue;
        }
        const RootResult& res = *rec.result;
        json digits = json::array();
        for (const auto& d : res.digits) {
            if (d.fits_ulong_p())
                digits.push_back(d.get_ui());
            else
                digits.push_back(d.get_str());
        }
        r["digits"] = digits;
        r["valuation"] = valuation_json(res.achieved_valuation);
        r["iterations"] = res.iterations;
        r["order_estimate"] =
            rec.order ? json(mpq_get_d(rec.order->slope.get_mpq_t())) : json(nullptr);
        json trace = json::array();
        for (const auto& e : res.trace.entries) {
            json t;
            t["n"] = e.n;
            t["fval_valuation"] = valuation_json(e.fval_valuation);
            t["step_valuation"] = e.step_valuation ? valuation_json(*e.step_valuation) : json(nullptr);
            trace.push_back(t);
        }
        r["trace"] = trace;
        r["verified"] = rec.verified ? json(*rec.verified) : json(nullptr);
        r["converged"] = res.converged;
        if (!res.converged) r["failure"] = res.failure;
        runs.push_back(r);
    }
    j["runs"] = runs;
    j["elapsed_ms"] = elapsed_ms;  // nondeterministic; report consumers ignore it
    (void)K;
    return j;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto t_start = std::chrono::steady_clock::now();

    Poly f;
    try {
        f = parse_poly(cfg.poly_text);
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    if (f.is_zero()) {
        err << "error: polynomial is identically zero\n";
        return kExitConfigError;
    }

    std::vector<Method> methods;
    if (cfg.method == "all") {
        methods = {Method::halley, Method::newton, Method::olver, Method::steffensen};
    } else if (auto m = method_from_name(cfg.method)) {
        methods = {*m};
    } else {
        err << "error: unknown method '" << cfg.method << "'\n";
        return kExitConfigError;
    }
    if (cfg.format != "table" && cfg.format != "json") {
        err << "error: unknown format '" << cfg.format << "'\n";
        return kExitConfigError;
    }
    if (cfg.digit_style != "series" && cfg.digit_style != "lsd_list") {
        err << "error: unknown digit style '" << cfg.digit_style << "'\n";
        return kExitConfigError;
    }

    ContextPtr ctx;
    try {
        ctx = make_context(cfg.prime, cfg.digits, cfg.guard);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    if (f.degree() > 64)
        err << "warning: degree " << f.degree() << " polynomial; seed search and shifts are O(q^2)\n";

    std::vector<Seed> seeds;
    std::vector<mpz_class> singular;
    try {
        if (cfg.seed) {
            seeds.push_back(validate_seed(f, cfg.prime, *cfg.seed));
        } else {
            SeedScan scan = find_seeds(f, cfg.prime);
            seeds = std::move(scan.simple);
            singular = std::move(scan.singular);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    for (const auto& s : singular)
        err << "note: singular residue " << s << " mod " << cfg.prime
            << " (f and f' both vanish; not lifted)\n";

    if (seeds.empty()) {
        std::string note = "no simple roots mod " + cfg.prime.get_str();
        if (cfg.format == "json")
            out << report_json(cfg, {}, ctx->working_precision(), 0.0, note).dump(2) << "\n";
        else
            out << note << "\n";
        return kExitNoSeeds;
    }

    // The oracle scan is shared across all runs at the same exponent.
    std::optional<OracleReport> oracle;
    if (cfg.verify_m) {
        try {
            oracle = brute_force_roots(f, cfg.prime, *cfg.verify_m, cfg.budget);
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return kExitConfigError;
        }
    }

    std::vector<RunRecord> records;
    for (const auto& s : seeds)
        for (Method m : methods) records.push_back(RunRecord{s, m, {}, {}, {}, {}});

    // Runs are independent: pure step functions, immutable context.
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < records.size(); ++i) {
        RunRecord& rec = records[i];
        try {
            rec.result = solve(f, rec.seed, ctx, rec.method);
            try {
                rec.order = convergence_order(rec.result->trace);
            } catch (const InsufficientTraceError&) {
            }
            if (oracle) rec.verified = verify_against_oracle(f, rec, *oracle, cfg.prime, *cfg.verify_m);
        } catch (const Error& e) {
            rec.error = e.what();
        }
    }

    double elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t_start)
                            .count();

    if (cfg.format == "json") {
        out << report_json(cfg, records, ctx->working_precision(), elapsed_ms, "").dump(2) << "\n";
    } else if (cfg.method == "all") {
        print_compare_table(out, cfg, f, ctx->working_precision(), records);
    } else {
        print_solve_table(out, cfg, f, ctx->working_precision(), records);
    }

    bool defect = false, failed = false;
    for (const auto& rec : records) {
        if (!rec.error.empty() || (rec.result && !rec.result->converged)) failed = true;
        if (rec.verified && !*rec.verified) defect = true;
    }
    if (defect) {
        out << "\n*** ORACLE DISAGREEMENT: solver and brute-force ground truth differ ***\n";
        return kExitNotConverged;
    }
    return failed ? kExitNotConverged : kExitOk;
}

}  // namespace padic::cli
