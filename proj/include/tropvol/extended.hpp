#ifndef TROPVOL_EXTENDED_HPP
#define TROPVOL_EXTENDED_HPP

#include <compare>
#include <string>

#include "tropvol/rational.hpp"

namespace tropvol {

/// Rational extended with +inf, the neutral element of min-plus addition.
/// +inf absorbs tropical multiplication; inf - inf never arises because
/// finite subtraction is only defined on finite values.
class Ext {
  public:
    Ext() : finite_(true), v_(0) {}
    Ext(Rat v) : finite_(true), v_(std::move(v)) {}
    Ext(long v) : finite_(true), v_(v) {}

    static Ext inf() {
        Ext e;
        e.finite_ = false;
        e.v_ = 0;
        return e;
    }

    bool is_inf() const { return !finite_; }
    bool is_finite() const { return finite_; }

    const Rat& value() const {
        if (!finite_) throw input_error("finite value required, got inf");
        return v_;
    }

    /// min-plus addition (min).
    friend Ext operator&(const Ext& a, const Ext& b) {
        if (a.is_inf()) return b;
        if (b.is_inf()) return a;
        return a.v_ <= b.v_ ? a : b;
    }

    /// min-plus multiplication (classical +); inf absorbs.
    friend Ext operator*(const Ext& a, const Ext& b) {
        if (a.is_inf() || b.is_inf()) return inf();
        return Ext(a.v_ + b.v_);
    }

    friend bool operator==(const Ext& a, const Ext& b) {
        if (a.finite_ != b.finite_) return false;
        return a.is_inf() || a.v_ == b.v_;
    }
    friend bool operator!=(const Ext& a, const Ext& b) { return !(a == b); }

    /// Order with inf as the largest element.
    friend bool operator<(const Ext& a, const Ext& b) {
        if (b.is_inf()) return a.is_finite();
        if (a.is_inf()) return false;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const Ext& a, const Ext& b) { return a < b || a == b; }
    friend bool operator>(const Ext& a, const Ext& b) { return b < a; }
    friend bool operator>=(const Ext& a, const Ext& b) { return b <= a; }

    std::string str() const { return finite_ ? rat_str(v_) : "inf"; }

  private:
    bool finite_;
    Rat v_;
};

}  // namespace tropvol

#endif
