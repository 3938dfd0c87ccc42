#pragma once

#include <string>
#include <vector>

#include "tfan/linalg.hpp"

namespace tfan {

// A finitely generated cone, written as cone(rays) + span(lines). The same
// struct doubles as a facet description: rays are inequality normals
// (<a,x> >= 0), lines are equation normals (<a,x> = 0).
struct ConeDesc {
    std::vector<ZVec> rays;
    std::vector<ZVec> lines;
};

// Extremal description of the dual cone
//     { y : <y,g> >= 0 for g in ineq_gens, <y,e> = 0 for e in eq_gens }.
// rays come out primitive, deduplicated and lex-sorted; lines form a basis of
// the lineality space. This single routine drives every H <-> V conversion.
ConeDesc dual_cone(const std::vector<ZVec>& ineq_gens, const std::vector<ZVec>& eq_gens,
                   size_t dim);

// A pointed rational polyhedral cone in canonical form: extremal primitive
// generators, lex-sorted, with the facet/equation description cached.
// Construction rejects cones containing a line.
class Cone {
public:
    // cone(0) in the given ambient dimension
    explicit Cone(size_t dim) : dim_(dim) {}
    static Cone from_generators(std::vector<ZVec> gens, size_t dim);

    size_t ambient_dim() const { return dim_; }
    const std::vector<ZVec>& generators() const { return gens_; }
    const std::vector<ZVec>& facet_normals() const { return facets_; }
    const std::vector<ZVec>& equations() const { return eqs_; }

    bool is_zero() const { return gens_.empty(); }
    size_t dim() const;  // dimension of the cone itself

    bool contains(const QVec& x) const;
    bool contains(const ZVec& x) const { return contains(to_qvec(x)); }
    bool contains_cone(const Cone& other) const;

    // u must lie in the dual cone; returns the subcone where <u,.> vanishes.
    Cone face_in_direction(const QVec& u) const;

    bool in_dual(const QVec& u) const;  // <u,g> >= 0 for all generators

    // true iff f equals the minimizing set of some linear functional on *this
    // (f = *this included, and the zero cone counts via its generators).
    bool has_face(const Cone& f) const;

    // Extremal rays and lineality of the dual cone; lines show up exactly
    // when the cone is not full-dimensional.
    ConeDesc dual() const { return {facets_, eqs_}; }
    ConeDesc dual_rays() const;

    bool operator==(const Cone& o) const { return dim_ == o.dim_ && gens_ == o.gens_; }
    bool operator<(const Cone& o) const;

    std::string to_string() const;

private:
    size_t dim_;
    std::vector<ZVec> gens_;
    std::vector<ZVec> facets_;
    std::vector<ZVec> eqs_;
};

}  // namespace tfan
