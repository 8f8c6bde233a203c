#ifndef TROPVOL_ENCLOSURE_HPP
#define TROPVOL_ENCLOSURE_HPP

#include "tropvol/rational.hpp"

namespace tropvol {

/// Rational interval [lo, hi] certified to contain a real value.
/// Irrational ingredients (pi, square roots) enter through directed
/// rounding at a caller-chosen precision; all other operations are
/// exact rational interval arithmetic.
class Enclosure {
  public:
    Enclosure() : lo_(0), hi_(0) {}
    Enclosure(Rat lo, Rat hi);
    static Enclosure exact(const Rat& v) { return Enclosure(v, v); }
    static Enclosure pi(unsigned prec);
    static Enclosure sqrt_of(const Rat& v, unsigned prec);

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat width() const { return hi_ - lo_; }

    Enclosure operator+(const Enclosure& o) const;
    Enclosure operator-(const Enclosure& o) const;
    Enclosure operator*(const Enclosure& o) const;
    Enclosure reciprocal() const;  // requires 0 outside [lo, hi]
    Enclosure operator/(const Enclosure& o) const;
    Enclosure pow(unsigned long e) const;
    Enclosure sqrt(unsigned prec) const;  // requires lo >= 0

    bool provably_less(const Enclosure& o) const { return hi_ < o.lo_; }
    bool provably_greater_equal(const Enclosure& o) const { return lo_ >= o.hi_; }
    bool contains(const Rat& v) const { return lo_ <= v && v <= hi_; }

  private:
    Rat lo_, hi_;
};

/// Volume of the Euclidean unit ball in dimension d,
/// kappa_d = pi^(d/2) / Gamma(d/2 + 1).
Enclosure unit_ball_volume(unsigned d, unsigned prec);

/// 2^(e/2) for integer e >= 0.
Enclosure sqrt2_pow(unsigned long e, unsigned prec);

/// Gamma(q/2 + 1) for integer q >= 0 (half-integer Gamma values).
Enclosure gamma_half_plus_one(unsigned q, unsigned prec);

}  // namespace tropvol

#endif
