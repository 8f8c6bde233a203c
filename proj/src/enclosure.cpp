#include "tropvol/enclosure.hpp"

#include <mpfr.h>

#include <algorithm>

namespace tropvol {

namespace {

Rat from_mpfr(mpfr_t v) {
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, v);
    Rat r(q);
    mpq_clear(q);
    return r;
}

}  // namespace

Enclosure::Enclosure(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw input_error("enclosure: lo > hi");
}

Enclosure Enclosure::pi(unsigned prec) {
    mpfr_t v;
    mpfr_init2(v, prec);
    mpfr_const_pi(v, MPFR_RNDD);
    Rat lo = from_mpfr(v);
    mpfr_const_pi(v, MPFR_RNDU);
    Rat hi = from_mpfr(v);
    mpfr_clear(v);
    return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::sqrt_of(const Rat& v, unsigned prec) {
    if (v < 0) throw input_error("enclosure: sqrt of negative value");
    mpfr_t x, r;
    mpfr_init2(x, prec);
    mpfr_init2(r, prec);
    mpfr_set_q(x, v.get_mpq_t(), MPFR_RNDD);
    mpfr_sqrt(r, x, MPFR_RNDD);
    Rat lo = from_mpfr(r);
    mpfr_set_q(x, v.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(r, x, MPFR_RNDU);
    Rat hi = from_mpfr(r);
    mpfr_clear(x);
    mpfr_clear(r);
    if (lo < 0) lo = 0;
    return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::operator+(const Enclosure& o) const {
    return Enclosure(lo_ + o.lo_, hi_ + o.hi_);
}

Enclosure Enclosure::operator-(const Enclosure& o) const {
    return Enclosure(lo_ - o.hi_, hi_ - o.lo_);
}

Enclosure Enclosure::operator*(const Enclosure& o) const {
    Rat a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
    return Enclosure(std::min(std::min(a, b), std::min(c, d)),
                     std::max(std::max(a, b), std::max(c, d)));
}

Enclosure Enclosure::reciprocal() const {
    if (lo_ <= 0 && hi_ >= 0) throw input_error("enclosure: reciprocal across zero");
    return Enclosure(1 / hi_, 1 / lo_);
}

Enclosure Enclosure::operator/(const Enclosure& o) const {
    return *this * o.reciprocal();
}

Enclosure Enclosure::pow(unsigned long e) const {
    Enclosure r = Enclosure::exact(1);
    Enclosure base = *this;
    for (; e; e >>= 1) {
        if (e & 1) r = r * base;
        base = base * base;
    }
    return r;
}

Enclosure Enclosure::sqrt(unsigned prec) const {
    if (lo_ < 0) throw input_error("enclosure: sqrt of possibly negative value");
    return Enclosure(sqrt_of(lo_, prec).lo(), sqrt_of(hi_, prec).hi());
}

Enclosure gamma_half_plus_one(unsigned q, unsigned prec) {
    if (q % 2 == 0) return Enclosure::exact(Rat(factorial(q / 2)));
    // Gamma(q/2 + 1) = q!! * sqrt(pi) / 2^((q+1)/2) for odd q
    Int dfac = 1;
    for (unsigned t = q; t >= 1; t -= 2) {
        dfac *= t;
        if (t < 2) break;
    }
    Rat coeff = Rat(dfac) / Rat(pow_int(Int(2), (q + 1) / 2));
    return Enclosure::exact(coeff) * Enclosure::pi(prec).sqrt(prec);
}

Enclosure unit_ball_volume(unsigned d, unsigned prec) {
    if (d == 0) return Enclosure::exact(1);
    Enclosure pi = Enclosure::pi(prec);
    if (d % 2 == 0)
        return pi.pow(d / 2) * Enclosure::exact(Rat(1) / Rat(factorial(d / 2)));
    // odd: 2^((d+1)/2) * pi^((d-1)/2) / d!!
    Int dfac = 1;
    for (unsigned t = d; t >= 1; t -= 2) {
        dfac *= t;
        if (t < 2) break;
    }
    Rat coeff = Rat(pow_int(Int(2), (d + 1) / 2)) / Rat(dfac);
    return pi.pow((d - 1) / 2) * Enclosure::exact(coeff);
}

Enclosure sqrt2_pow(unsigned long e, unsigned prec) {
    Enclosure whole = Enclosure::exact(Rat(pow_int(Int(2), e / 2)));
    if (e % 2 == 0) return whole;
    return whole * Enclosure::sqrt_of(Rat(2), prec);
}

}  // namespace tropvol
