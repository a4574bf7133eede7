#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bellrand {

using Rational = mpq_class;
using BigInt = mpz_class;

/// 2^e as an exact rational; e may be negative.
inline Rational pow2(int e) {
    Rational r;
    if (e >= 0) {
        mpz_ui_pow_ui(r.get_num_mpz_t(), 2, static_cast<unsigned long>(e));
    } else {
        mpz_set_ui(r.get_num_mpz_t(), 1);
        mpz_ui_pow_ui(r.get_den_mpz_t(), 2, static_cast<unsigned long>(-e));
    }
    return r;
}

inline BigInt pow2_int(int e) {
    BigInt z;
    mpz_ui_pow_ui(z.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return z;
}

/// "num/den" (or plain "num") serialization used by all JSON/CSV surfaces.
inline std::string to_fraction_string(const Rational& r) {
    return r.get_str();
}

inline Rational rational_from_string(std::string_view s) {
    Rational r;
    if (r.set_str(std::string(s), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + std::string(s));
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
    return r;
}

}  // namespace bellrand
