#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "padic/poly.hpp"

namespace padic {

/// Parse "a*x^k +- ..." into a Poly. Integer coefficients only, single
/// variable x, '^' for powers, '*' optional, whitespace ignored, like terms
/// combined. Throws SyntaxError with the byte offset of the problem.
Poly parse_poly(std::string_view text);

/// Canonical rendering, highest power first, e.g. "x^2 - 2".
/// parse_poly(render_poly(f)) == f.
std::string render_poly(const Poly& f);

enum class DigitStyle { lsd_list, series };

/// Render a least-significant-first digit list either as "[3, 1, 2]" or as
/// the series "3 + 1·7 + 2·7^2" (ascii swaps the middle dot for '*').
/// Zero digits are skipped in series style; all-zero renders as "0".
std::string render_digits(const std::vector<mpz_class>& digits, const mpz_class& p,
                          DigitStyle style, bool ascii = false);

}  // namespace padic
