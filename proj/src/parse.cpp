#include "padic/parse.hpp"

#include <cctype>
#include <map>

#include "padic/errors.hpp"

namespace padic {
namespace {

constexpr std::size_t kMaxExponent = 1u << 20;

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    mpz_class read_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw SyntaxError("expected a number", pos);
        if (pos < s.size() && s[pos] == '.')
            throw SyntaxError("non-integer coefficients are not allowed", pos);
        return mpz_class(std::string(s.substr(start, pos - start)), 10);
    }
};

// term := coeff? ('*'? 'x' ('^' uint)?)?   with at least one of coeff or x
void parse_term(Cursor& cur, bool negative, std::map<std::size_t, mpz_class>& terms) {
    mpz_class coeff(1);
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        coeff = cur.read_uint();
        saw_coeff = true;
    }
    std::size_t star_pos = cur.pos;
    bool saw_star = cur.accept('*');
    std::size_t exponent = 0;
    if (cur.accept('x')) {
        exponent = 1;
        if (cur.accept('^')) {
            std::size_t epos = cur.pos;
            mpz_class e = cur.read_uint();
            if (e > kMaxExponent) throw SyntaxError("exponent too large", epos);
            exponent = e.get_ui();
        }
    } else {
        if (saw_star) throw SyntaxError("expected 'x' after '*'", star_pos);
        if (!saw_coeff) throw SyntaxError("expected a coefficient or 'x'", cur.pos);
    }
    if (negative) coeff = -coeff;
    terms[exponent] += coeff;
}

}  // namespace

Poly parse_poly(std::string_view text) {
    Cursor cur{text};
    std::map<std::size_t, mpz_class> terms;

    if (cur.done()) throw SyntaxError("empty input", 0);
    bool negative = false;
    if (cur.accept('-'))
        negative = true;
    else
        cur.accept('+');
    parse_term(cur, negative, terms);

    while (!cur.done()) {
        std::size_t op_pos = cur.pos;
        if (cur.accept('+'))
            negative = false;
        else if (cur.accept('-'))
            negative = true;
        else
            throw SyntaxError("expected '+' or '-'", op_pos);
        parse_term(cur, negative, terms);
    }

    std::size_t deg = 0;
    for (auto& [e, c] : terms)
        if (c != 0) deg = std::max(deg, e);
    std::vector<mpz_class> coeffs(deg + 1);
    for (auto& [e, c] : terms)
        if (c != 0) coeffs[e] = c;
    return Poly(std::move(coeffs));
}

std::string render_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const mpz_class& c = f.coeffs()[i];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        if (i == 0) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::string render_digits(const std::vector<mpz_class>& digits, const mpz_class& p,
                          DigitStyle style, bool ascii) {
    for (const auto& d : digits)
        if (d < 0 || d >= p) throw DigitOutOfRangeError("digit outside [0, p)");

    if (style == DigitStyle::lsd_list) {
        std::string out = "[";
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (i) out += ", ";
            out += digits[i].get_str();
        }
        return out + "]";
    }

    const std::string dot = ascii ? "*" : "·";
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += digits[i].get_str();
        if (i >= 1) out += dot + p.get_str();
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace padic
