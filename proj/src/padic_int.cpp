#include "padic/padic_int.hpp"

namespace padic {

unsigned long Valuation::value() const {
    if (infinite_) throw Error("infinite valuation has no finite value");
    return v_;
}

PadicInt::PadicInt(const mpz_class& n, ContextPtr ctx) : ctx_(std::move(ctx)) {
    // Floor remainder canonicalizes negatives in one reduction.
    mpz_fdiv_r(value_.get_mpz_t(), n.get_mpz_t(), ctx_->modulus().get_mpz_t());
}

void PadicInt::require_same_context(const PadicInt& o) const {
    if (ctx_ != o.ctx_ && !ctx_->compatible_with(*o.ctx_))
        throw ContextMismatchError("operands belong to different contexts");
}

Valuation PadicInt::valuation() const {
    if (value_ == 0) return Valuation::infinite();
    mpz_class cofactor;
    unsigned long v = mpz_remove(cofactor.get_mpz_t(), value_.get_mpz_t(), ctx_->prime().get_mpz_t());
    return Valuation(v);
}

Norm PadicInt::norm() const {
    Valuation v = valuation();
    if (!v.is_finite()) return Norm{mpq_class(0), true};
    mpz_class pv;
    mpz_pow_ui(pv.get_mpz_t(), ctx_->prime().get_mpz_t(), v.value());
    mpq_class q(1);
    q /= mpq_class(pv);
    return Norm{q, false};
}

bool PadicInt::is_unit() const {
    return value_ != 0 && !mpz_divisible_p(value_.get_mpz_t(), ctx_->prime().get_mpz_t());
}

PadicInt PadicInt::invert_unit() const {
    if (!is_unit()) throw NotAUnitError("residue has positive valuation, not invertible");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), value_.get_mpz_t(), ctx_->modulus().get_mpz_t());
    return PadicInt(inv, ctx_);
}

std::vector<mpz_class> PadicInt::digits(unsigned count) const {
    if (count > ctx_->working_precision())
        throw PrecisionExceededError("requested more digits than the working precision");
    std::vector<mpz_class> out;
    out.reserve(count);
    mpz_class rest = value_, d;
    for (unsigned i = 0; i < count; ++i) {
        mpz_fdiv_qr(rest.get_mpz_t(), d.get_mpz_t(), rest.get_mpz_t(), ctx_->prime().get_mpz_t());
        out.push_back(d);
    }
    return out;
}

PadicInt PadicInt::operator+(const PadicInt& o) const {
    require_same_context(o);
    return PadicInt(value_ + o.value_, ctx_);
}

PadicInt PadicInt::operator-(const PadicInt& o) const {
    require_same_context(o);
    return PadicInt(value_ - o.value_, ctx_);
}

PadicInt PadicInt::operator*(const PadicInt& o) const {
    require_same_context(o);
    return PadicInt(value_ * o.value_, ctx_);
}

PadicInt PadicInt::operator-() const { return PadicInt(-value_, ctx_); }

bool PadicInt::operator==(const PadicInt& o) const {
    require_same_context(o);
    return value_ == o.value_;
}

PadicInt exact_div(const PadicInt& num, const PadicInt& den, unsigned long* precision_loss) {
    if (den.is_zero()) throw DivisionByZeroResidueError("division by the zero residue");
    const unsigned long v_den = den.valuation().value();
    if (precision_loss) *precision_loss += v_den;
    const ContextPtr& ctx = num.context();
    if (num.is_zero()) return PadicInt(0, ctx);
    Valuation v_num = num.valuation();
    if (v_num.value() < v_den)
        throw ValuationUnderflowError("numerator valuation below denominator valuation");

    mpz_class nu, du;
    mpz_divexact(nu.get_mpz_t(), num.value().get_mpz_t(), [&] {
        mpz_class pv;
        mpz_pow_ui(pv.get_mpz_t(), ctx->prime().get_mpz_t(), v_num.value());
        return pv;
    }().get_mpz_t());
    mpz_divexact(du.get_mpz_t(), den.value().get_mpz_t(), [&] {
        mpz_class pv;
        mpz_pow_ui(pv.get_mpz_t(), ctx->prime().get_mpz_t(), v_den);
        return pv;
    }().get_mpz_t());

    mpz_class shift;
    mpz_pow_ui(shift.get_mpz_t(), ctx->prime().get_mpz_t(), v_num.value() - v_den);
    return PadicInt(shift * nu, ctx) * PadicInt(du, ctx).invert_unit();
}

bool congruent(const PadicInt& a, const PadicInt& b, unsigned long m) {
    if (m > a.context()->working_precision())
        throw PrecisionExceededError("congruence modulus exceeds working precision");
    // direct divisibility, deliberately not routed through valuation()
    mpz_class pm;
    mpz_pow_ui(pm.get_mpz_t(), a.context()->prime().get_mpz_t(), m);
    mpz_class diff = a.value() - b.value();
    return mpz_divisible_p(diff.get_mpz_t(), pm.get_mpz_t()) != 0;
}

}  // namespace padic
