#include "magnitude/interval.hpp"

#include "magnitude/error.hpp"

namespace magnitude {

Interval::Interval(PosRat lo, PosRat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) fail(ErrorKind::invalid_argument, "interval endpoints out of order: " + to_string());
}

bool Interval::width_within(unsigned p) const {
    mpq_class scaled;
    mpq_mul_2exp(scaled.get_mpq_t(), width().get_mpq_t(), p);
    return scaled <= 1;
}

std::string Interval::to_string() const { return "[" + lo_.to_string() + ", " + hi_.to_string() + "]"; }

mpq_class dyadic_unit(unsigned p) {
    mpq_class out(1);
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), p);
    return out;
}

Interval round_outward(const Interval& iv, unsigned bits) {
    auto scaled = [bits](const mpq_class& v) {
        mpq_class out = v;
        mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), bits);
        return out;
    };
    auto unscaled = [bits](const mpz_class& v) {
        mpq_class out(v);
        mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), bits);
        return out;
    };
    const mpq_class lo = scaled(iv.lo().value());
    const mpq_class hi = scaled(iv.hi().value());
    mpz_class down;
    mpz_class up;
    mpz_fdiv_q(down.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    mpz_cdiv_q(up.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
    PosRat new_lo = sgn(down) > 0 ? PosRat::from_mpq(unscaled(down)) : iv.lo();
    return Interval(std::move(new_lo), PosRat::from_mpq(unscaled(up)));
}

} // namespace magnitude
