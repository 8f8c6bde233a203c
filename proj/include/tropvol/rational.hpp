#ifndef TROPVOL_RATIONAL_HPP
#define TROPVOL_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tropvol {

/// Exact rational scalar. Always canonical: reduced, denominator > 0.
using Rat = mpq_class;
using Int = mpz_class;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses "p", "p/q" or a decimal like "-1.25" into an exact rational.
Rat parse_rat(const std::string& s);

/// Serializes as "p" or "p/q".
std::string rat_str(const Rat& x);

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline Int ceil_rat(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    r.canonicalize();
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Rat make_rat(long long num, long long den = 1) {
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

inline long to_long(const Int& x) {
    if (!x.fits_slong_p()) throw input_error("integer out of range: " + x.get_str());
    return x.get_si();
}

}  // namespace tropvol

#endif
