#pragma once

#include <optional>
#include <vector>

#include "tfan/rational.hpp"

namespace tfan {

// Exact vectors over Q and Z. QVec lives in N_Q or M_Q, ZVec is used for
// lattice points, ray generators and inequality normals.
using QVec = std::vector<Rat>;
using ZVec = std::vector<Int>;

inline QVec to_qvec(const ZVec& z) {
    QVec v(z.size());
    for (size_t i = 0; i < z.size(); ++i) v[i] = Rat(z[i]);
    return v;
}

inline bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline bool is_zero(const ZVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const QVec& a, const ZVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

inline Rat dot(const ZVec& a, const QVec& b) { return dot(b, a); }

inline Int dot(const ZVec& a, const ZVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline QVec add(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVec sub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVec scale(const Rat& c, const QVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline QVec neg(const QVec& a) { return scale(-1, a); }

inline ZVec neg(const ZVec& a) {
    ZVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

// Lexicographic order; sizes must match.
inline bool lex_less(const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

inline bool lex_less(const ZVec& a, const ZVec& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

// Smallest positive rescaling of a nonzero rational vector with integer
// coprime entries. Direction is preserved.
inline ZVec primitive(const QVec& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, x.get_den());
    ZVec w(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        Rat t = v[i] * Rat(l);
        w[i] = t.get_num();
        g = gcd(g, w[i]);
    }
    if (g == 0) throw std::invalid_argument("primitive() of zero vector");
    for (auto& x : w) x /= g;
    return w;
}

inline ZVec primitive(const ZVec& v) { return primitive(to_qvec(v)); }

// Flips sign so the first nonzero entry is positive (for normal vectors of
// hyperplanes, where orientation is irrelevant).
inline ZVec sign_normalize(ZVec v) {
    for (const auto& x : v) {
        if (x > 0) return v;
        if (x < 0) return neg(v);
    }
    return v;
}

// mu(v) v = eps(v) n_v with n_v primitive, mu minimal >= 1 with mu v integral.
struct VertexArith {
    Rat v_first;  // kept only for error messages
    Int mu;
    // eps / primitive part are undefined for v = 0.
    std::optional<Int> eps;
    std::optional<ZVec> n_v;
};

inline VertexArith vertex_arith(const QVec& v) {
    VertexArith r;
    r.v_first = v.empty() ? Rat(0) : v[0];
    Int l = 1;
    for (const auto& x : v) l = lcm(l, x.get_den());
    r.mu = l;
    if (is_zero(v)) return r;  // mu = 1, no primitive direction
    ZVec w(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = Rat(v[i] * Rat(l)).get_num();
        g = gcd(g, w[i]);
    }
    r.eps = g;
    for (auto& x : w) x /= g;
    r.n_v = w;
    return r;
}

inline Int mu_of(const QVec& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, x.get_den());
    return l;
}

inline std::string vec_to_string(const QVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rat_to_string(v[i]);
    }
    return s + ")";
}

inline std::string vec_to_string(const ZVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

}  // namespace tfan
