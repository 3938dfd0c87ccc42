#pragma once

#include <map>
#include <set>

#include "tfan/curve.hpp"
#include "tfan/polyhedron.hpp"

namespace tfan {

// Locus of a polyhedral divisor: the whole curve, or the curve minus the
// points carrying an empty coefficient (always affine on an affine curve).
struct Locus {
    bool complete = true;
    std::vector<std::string> removed;
};

struct ProperReport {
    Tri proper = Tri::Yes;
    std::string reason;
};

// A polyhedral divisor on a curve: finitely many stored coefficients, all
// sharing one pointed tailcone; unstored points implicitly carry the
// tailcone itself (the neutral element). Empty coefficients cut the locus.
class PolyhedralDivisor {
public:
    PolyhedralDivisor(std::string name, Curve curve, Cone tail,
                      std::map<std::string, Polyhedron> coeffs);

    const std::string& name() const { return name_; }
    const Curve& curve() const { return curve_; }
    const Cone& tail() const { return tail_; }
    size_t lattice_rank() const { return tail_.ambient_dim(); }
    const std::map<std::string, Polyhedron>& stored_coeffs() const { return coeffs_; }

    // Fiber polyhedron at a point; the tailcone at unstored points.
    Polyhedron fiber(const std::string& p) const;

    Locus locus() const;

    // Evaluation at u in the dual of the tailcone; coefficients only over
    // the locus.
    CurveDivisor evaluate(const QVec& u) const;

    // Minkowski sum of all coefficients (projective curve only); the empty
    // value as soon as one coefficient is empty.
    Polyhedron degree() const;

    PolyhedralDivisor restrict_away(const std::set<std::string>& removed) const;
    PolyhedralDivisor intersect(const PolyhedralDivisor& other) const;

    ProperReport is_proper() const;

    // Coefficientwise containment (implicit tail coefficients included).
    bool contained_in(const PolyhedralDivisor& other) const;

    // Face criterion on a curve: coefficientwise faces plus the degree
    // condition deg(other) ∩ tail(*this) == deg(*this). `other` must be
    // proper and contain *this.
    bool is_face_of(const PolyhedralDivisor& other) const;

    // Marked points of this divisor (points with stored coefficients).
    std::vector<std::string> points() const;

    bool same_shape(const PolyhedralDivisor& o) const;  // equal tail and coefficients

private:
    std::string name_;
    Curve curve_;
    Cone tail_;
    std::map<std::string, Polyhedron> coeffs_;
};

}  // namespace tfan
