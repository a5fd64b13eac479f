#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "padic/oracle.hpp"

namespace padic::cli {

struct RunConfig {
    std::string poly_text;
    mpz_class prime;
    unsigned digits = 0;  // target precision N
    unsigned guard = 2;
    std::string method = "olver";  // olver|newton|halley|steffensen|all
    std::optional<mpz_class> seed;
    std::optional<unsigned> verify_m;
    std::string format = "table";       // table|json
    std::string digit_style = "series";  // series|lsd_list
    bool ascii = false;
    std::uint64_t budget = kDefaultOracleBudget;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitNoSeeds = 2;
inline constexpr int kExitNotConverged = 3;  // also oracle disagreement

/// Run one solve/compare job and write the report. Returns the exit code.
/// method "all" produces the per-method comparison table.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace padic::cli
