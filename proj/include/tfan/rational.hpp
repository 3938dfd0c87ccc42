#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tfan {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p", "p/q" or "-p/q" into an exact rational.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

// Canonical "p/q" form (q >= 1, gcd(p,q) = 1), e.g. "3/1", "-1/2".
inline std::string rat_to_machine(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Human form: integers without the "/1".
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return rat_to_machine(q);
}

inline Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace tfan
