#include "tfan/curve.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tfan {

std::string to_string(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        default: return "unknown";
    }
}

bool Curve::is_marked(const std::string& p) const {
    return std::find(marked_points.begin(), marked_points.end(), p) != marked_points.end();
}

void Curve::check() const {
    std::set<std::string> seen;
    for (const auto& p : marked_points) {
        if (p.empty()) throw std::invalid_argument("empty point name");
        if (!seen.insert(p).second) throw std::invalid_argument("duplicate point name: " + p);
    }
}

CurveDivisor::CurveDivisor(std::map<std::string, Rat> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
}

CurveDivisor CurveDivisor::single(const std::string& p, const Rat& c) {
    CurveDivisor d;
    if (c != 0) d.coeffs_[p] = c;
    return d;
}

Rat CurveDivisor::coeff(const std::string& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

bool CurveDivisor::is_integral() const {
    for (const auto& [p, c] : coeffs_)
        if (!tfan::is_integral(c)) return false;
    return true;
}

CurveDivisor CurveDivisor::operator+(const CurveDivisor& o) const {
    std::map<std::string, Rat> m = coeffs_;
    for (const auto& [p, c] : o.coeffs_) m[p] += c;
    return CurveDivisor(std::move(m));
}

CurveDivisor CurveDivisor::operator-(const CurveDivisor& o) const {
    std::map<std::string, Rat> m = coeffs_;
    for (const auto& [p, c] : o.coeffs_) m[p] -= c;
    return CurveDivisor(std::move(m));
}

CurveDivisor CurveDivisor::operator*(const Rat& c) const {
    std::map<std::string, Rat> m;
    for (const auto& [p, x] : coeffs_) m[p] = c * x;
    return CurveDivisor(std::move(m));
}

Rat CurveDivisor::degree() const {
    Rat s = 0;
    for (const auto& [p, c] : coeffs_) s += c;
    return s;
}

CurveDivisor CurveDivisor::floor() const {
    std::map<std::string, Rat> m;
    for (const auto& [p, c] : coeffs_) m[p] = Rat(floor_rat(c));
    return CurveDivisor(std::move(m));
}

std::string CurveDivisor::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : coeffs_) {
        if (!s.empty()) s += " + ";
        s += rat_to_string(c) + "*{" + p + "}";
    }
    return s;
}

std::optional<Int> h0(const Curve& y, const CurveDivisor& d) {
    if (!y.projective)
        throw std::invalid_argument("h0 requires a projective curve");
    Rat deg = d.floor().degree();
    Int n = deg.get_num();  // integral by construction
    if (y.genus == 0) return n >= 0 ? n + 1 : Int(0);
    if (n < 0) return Int(0);
    if (n > 2 * (long)y.genus - 2) return n - y.genus + 1;
    return std::nullopt;  // needs curve-specific data
}

Tri is_principal(const Curve& y, const CurveDivisor& d) {
    if (d.is_zero()) return Tri::Yes;
    if (!d.is_integral()) return Tri::No;
    if (y.genus == 0) {
        if (!y.projective) return Tri::Yes;  // every integral divisor on an affine rational curve
        return d.degree() == 0 ? Tri::Yes : Tri::No;
    }
    if (y.projective && d.degree() != 0) return Tri::No;
    return Tri::Unknown;  // Jacobian torsion is not modeled
}

CurveDivisor canonical_rep(const Curve& y, const std::string& anchor) {
    if (!y.projective)
        throw std::invalid_argument("canonical_rep requires a projective curve");
    long d = 2 * (long)y.genus - 2;
    return CurveDivisor::single(anchor, Rat(d));
}

}  // namespace tfan
