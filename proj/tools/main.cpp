#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "padic/cli.hpp"

namespace {

void add_common_flags(CLI::App* cmd, padic::cli::RunConfig& cfg, std::string& prime,
                      std::string& seed) {
    cmd->add_option("--poly", cfg.poly_text, "polynomial in x, e.g. \"x^2 - 2\"")->required();
    cmd->add_option("--prime", prime, "the prime p")->required();
    cmd->add_option("--digits", cfg.digits, "target precision N (p-adic digits)")->required();
    cmd->add_option("--guard", cfg.guard, "extra working digits")->capture_default_str();
    cmd->add_option("--seed", seed, "seed residue x0 mod p (skips the exhaustive search)");
    cmd->add_option("--verify", cfg.verify_m, "cross-check roots against brute force mod p^m");
    cmd->add_option("--format", cfg.format, "table|json")->capture_default_str();
    cmd->add_option("--digit-style", cfg.digit_style, "series|lsd_list")->capture_default_str();
    cmd->add_flag("--ascii", cfg.ascii, "ASCII-only series rendering");
    cmd->add_option("--budget", cfg.budget, "oracle enumeration budget (candidates)")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic polynomial root finding via higher-order Hensel-style iterations"};
    app.require_subcommand(1);

    padic::cli::RunConfig cfg;
    std::string prime_text, seed_text;

    CLI::App* solve = app.add_subcommand("solve", "find roots with one method");
    add_common_flags(solve, cfg, prime_text, seed_text);
    solve->add_option("--method", cfg.method, "olver|newton|halley|steffensen|all")->capture_default_str();

    CLI::App* compare = app.add_subcommand("compare", "run every method and tabulate");
    add_common_flags(compare, cfg, prime_text, seed_text);

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.prime = mpz_class(prime_text, 10);
        if (!seed_text.empty()) cfg.seed = mpz_class(seed_text, 10);
    } catch (const std::invalid_argument&) {
        std::cerr << "error: --prime/--seed must be decimal integers\n";
        return padic::cli::kExitConfigError;
    }
    if (compare->parsed()) cfg.method = "all";

    return padic::cli::run(cfg, std::cout, std::cerr);
}
