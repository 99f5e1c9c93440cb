#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace anho {

// Working precision in decimal digits. Order-15 hierarchies at couplings up
// to mu = 3200 cancel catastrophically in double precision; 50 digits covers
// the largest supported order (40) with headroom and costs the same as 40
// (both fit in three 64-bit limbs).
#ifndef ANHO_DIGITS
#define ANHO_DIGITS 50
#endif

using real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<ANHO_DIGITS,
        boost::multiprecision::allocate_stack>>;

inline constexpr int real_digits = ANHO_DIGITS;

inline real pi() { return boost::multiprecision::default_ops::get_constant_pi<real::backend_type>(); }

/// Integer power by repeated squaring; exact for exactly representable bases.
inline real pow_int(const real& x, int k) {
    if (k < 0) return 1 / pow_int(x, -k);
    real acc = 1, base = x;
    for (; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        base *= base;
    }
    return acc;
}

inline double to_double(const real& x) { return x.convert_to<double>(); }

inline real from_string(const std::string& s) { return real(s); }

}  // namespace anho
