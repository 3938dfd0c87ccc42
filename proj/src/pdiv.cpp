#include "tfan/pdiv.hpp"

#include <stdexcept>

namespace tfan {

PolyhedralDivisor::PolyhedralDivisor(std::string name, Curve curve, Cone tail,
                                     std::map<std::string, Polyhedron> coeffs)
    : name_(std::move(name)), curve_(std::move(curve)), tail_(std::move(tail)),
      coeffs_(std::move(coeffs)) {
    curve_.check();
    for (const auto& [p, poly] : coeffs_) {
        if (poly.is_empty()) continue;
        if (poly.ambient_dim() != tail_.ambient_dim())
            throw std::invalid_argument(name_ + ": coefficient at " + p + " has wrong dimension");
        if (poly.tailcone() != tail_)
            throw std::invalid_argument(name_ + ": coefficient at " + p +
                                        " does not have the divisor's tailcone");
    }
}

Polyhedron PolyhedralDivisor::fiber(const std::string& p) const {
    auto it = coeffs_.find(p);
    if (it != coeffs_.end()) return it->second;
    return Polyhedron::from_cone(tail_);
}

Locus PolyhedralDivisor::locus() const {
    Locus l;
    for (const auto& [p, poly] : coeffs_)
        if (poly.is_empty()) l.removed.push_back(p);
    l.complete = curve_.projective && l.removed.empty();
    return l;
}

CurveDivisor PolyhedralDivisor::evaluate(const QVec& u) const {
    if (!tail_.in_dual(u))
        throw std::invalid_argument(name_ + ": evaluation weight outside the dual tailcone");
    std::map<std::string, Rat> m;
    for (const auto& [p, poly] : coeffs_) {
        if (poly.is_empty()) continue;  // evaluation lives on the locus
        auto v = poly.min_support(u);
        if (!v) throw std::logic_error("coefficient unbounded against a dual weight");
        m[p] = *v;
    }
    return CurveDivisor(std::move(m));
}

Polyhedron PolyhedralDivisor::degree() const {
    if (!curve_.projective)
        throw std::invalid_argument("degree of a polyhedral divisor needs a projective curve");
    Polyhedron acc = Polyhedron::from_cone(tail_);
    for (const auto& [p, poly] : coeffs_) acc = acc.minkowski(poly);
    return acc;
}

PolyhedralDivisor PolyhedralDivisor::restrict_away(const std::set<std::string>& removed) const {
    std::map<std::string, Polyhedron> m = coeffs_;
    for (const auto& p : removed) {
        auto it = m.find(p);
        if (it != m.end())
            it->second = Polyhedron::empty(tail_.ambient_dim());
        else
            m.emplace(p, Polyhedron::empty(tail_.ambient_dim()));
    }
    return PolyhedralDivisor(name_, curve_, tail_, std::move(m));
}

PolyhedralDivisor PolyhedralDivisor::intersect(const PolyhedralDivisor& other) const {
    if (tail_.ambient_dim() != other.tail_.ambient_dim())
        throw std::invalid_argument("intersection of divisors over different lattices");
    Cone tail = Cone::from_generators([&] {
        // generators of the intersected tailcone via a polyhedral meet
        Polyhedron t = Polyhedron::from_cone(tail_).intersect(Polyhedron::from_cone(other.tail_));
        return t.rays();
    }(), tail_.ambient_dim());

    std::set<std::string> pts;
    for (const auto& [p, _] : coeffs_) pts.insert(p);
    for (const auto& [p, _] : other.coeffs_) pts.insert(p);
    std::map<std::string, Polyhedron> m;
    for (const auto& p : pts) m.emplace(p, fiber(p).intersect(other.fiber(p)));
    return PolyhedralDivisor(name_ + "&" + other.name_, curve_, tail, std::move(m));
}

ProperReport PolyhedralDivisor::is_proper() const {
    ProperReport rep;
    Locus l = locus();
    if (!l.complete) {
        rep.proper = Tri::Yes;
        rep.reason = "affine locus, properness is automatic";
        return rep;
    }
    Polyhedron deg = degree();
    Polyhedron tail_poly = Polyhedron::from_cone(tail_);
    if (!tail_poly.contains_poly(deg)) {
        rep.proper = Tri::No;
        rep.reason = "degree not contained in the tailcone";
        return rep;
    }
    if (deg.contains_poly(tail_poly)) {
        rep.proper = Tri::No;
        rep.reason = "degree equals the tailcone (containment is not strict)";
        return rep;
    }
    // Boundary weights: rays u of the dual tailcone whose minimum over the
    // degree polyhedron is zero force a principal multiple of the evaluation.
    if (curve_.genus == 0) {
        rep.reason = "degree strictly contained in tailcone; boundary evaluations have degree 0";
        return rep;
    }
    ConeDesc dual = tail_.dual_rays();
    std::vector<ZVec> boundary = dual.rays;
    for (const auto& l2 : dual.lines) {
        boundary.push_back(l2);
        boundary.push_back(neg(l2));
    }
    for (const auto& u : boundary) {
        auto m = deg.min_support(to_qvec(u));
        if (!m || *m != 0) continue;
        // Some multiple of the evaluation must be principal. Clearing
        // denominators reduces this to an integral degree-zero divisor, which
        // only genus zero can decide.
        CurveDivisor ev = evaluate(to_qvec(u));
        QVec cs;
        for (const auto& [p, c] : ev.coeffs()) cs.push_back(c);
        CurveDivisor ev_int = cs.empty() ? ev : ev * Rat(mu_of(cs));
        if (is_principal(curve_, ev_int) != Tri::Yes) {
            rep.proper = Tri::Unknown;
            rep.reason = "boundary evaluation at " + vec_to_string(u) +
                         " needs a principal multiple; undecidable at genus >= 1";
            return rep;
        }
    }
    rep.reason = "degree strictly contained; boundary evaluations have principal multiples";
    return rep;
}

bool PolyhedralDivisor::contained_in(const PolyhedralDivisor& other) const {
    std::set<std::string> pts;
    for (const auto& [p, _] : coeffs_) pts.insert(p);
    for (const auto& [p, _] : other.coeffs_) pts.insert(p);
    for (const auto& p : pts)
        if (!other.fiber(p).contains_poly(fiber(p))) return false;
    return other.tail_.contains_cone(tail_);
}

bool PolyhedralDivisor::is_face_of(const PolyhedralDivisor& other) const {
    if (!contained_in(other))
        throw std::invalid_argument(name_ + " is not contained in " + other.name_);
    std::set<std::string> pts;
    for (const auto& [p, _] : coeffs_) pts.insert(p);
    for (const auto& [p, _] : other.coeffs_) pts.insert(p);
    for (const auto& p : pts)
        if (!other.fiber(p).is_face_of_me(fiber(p))) return false;
    // Generic fibers are the tailcones.
    if (!other.tail_.has_face(tail_)) return false;
    if (!curve_.projective) return true;

    // deg(other) ∩ tail(this) == deg(this), with the empty-degree convention.
    Polyhedron deg_other = other.degree();
    Polyhedron deg_this = degree();
    if (deg_other.is_empty()) return deg_this.is_empty();
    Polyhedron meet = deg_other.intersect(Polyhedron::from_cone(tail_));
    return meet == deg_this;
}

std::vector<std::string> PolyhedralDivisor::points() const {
    std::vector<std::string> out;
    for (const auto& [p, _] : coeffs_) out.push_back(p);
    return out;
}

bool PolyhedralDivisor::same_shape(const PolyhedralDivisor& o) const {
    if (!(tail_ == o.tail_)) return false;
    std::set<std::string> pts;
    for (const auto& [p, _] : coeffs_) pts.insert(p);
    for (const auto& [p, _] : o.coeffs_) pts.insert(p);
    for (const auto& p : pts)
        if (fiber(p) != o.fiber(p)) return false;
    return true;
}

}  // namespace tfan
