#pragma once

#include "tfan/dfan.hpp"

namespace tfan {

// One affine piece x |-> <weight, x> + offset of a divisorial support
// function over one cell of a slice.
struct AffinePiece {
    ZVec weight;
    Rat offset;
    bool operator==(const AffinePiece& o) const { return weight == o.weight && offset == o.offset; }
};

struct SectionTable {
    std::vector<std::pair<ZVec, std::optional<Int>>> dims;  // weight -> h^0, lex order
    std::optional<Int> total;
};

struct VolumeTable {
    std::vector<std::pair<std::string, Rat>> per_point;
    Rat total;
};

// A divisorial support function: one linear part on the tailfan plus, for
// finitely many points, an affine piece per maximal cell of the slice there.
// Points without stored pieces carry the linear part.
class SupportFunction {
public:
    SupportFunction(const DivisorialFan* fan, std::string name, std::map<Cone, ZVec> tail_weights,
                    std::map<std::string, std::vector<AffinePiece>> pieces);

    static SupportFunction zero(const DivisorialFan* fan);
    static SupportFunction principal(const DivisorialFan* fan, const ZVec& u,
                                     const CurveDivisor& d);

    const DivisorialFan* fan() const { return fan_; }
    const std::string& name() const { return name_; }
    const std::map<Cone, ZVec>& tail_weights() const { return tail_weights_; }
    const std::map<std::string, std::vector<AffinePiece>>& pieces() const { return pieces_; }

    // Points at which the function may differ from its linear part.
    std::vector<std::string> support_points() const;

    Rat value(const std::string& p, const QVec& v) const;
    Rat linear_value(const QVec& v) const;      // h_t
    Rat linear_value_ray(const ZVec& r) const;  // h_t on a tailfan ray

    ValidationReport validate() const;

    Tri is_cartier() const;

    WeilDivisor weil() const;

    // Offset divisor per maximal tailcone (needs complete slices).
    std::map<Cone, CurveDivisor> sigma_zero() const;
    CurveDivisor sigma_zero(const Cone& sigma) const;

    // Weight polytope in M_Q.
    Polyhedron box() const;
    bool in_box(const QVec& u) const;

    CurveDivisor dual(const QVec& u) const;      // requires u in box
    CurveDivisor dual_raw(const QVec& u) const;  // same formula, no box check
    bool extremal_ray_conditions(const QVec& u) const;

    SectionTable sections() const;

    Tri is_nef() const;
    Tri is_semiample() const;
    Tri is_ample() const;

    VolumeTable volume() const;

    SupportFunction operator+(const SupportFunction& o) const;
    SupportFunction operator*(const Int& m) const;
    bool operator==(const SupportFunction& o) const;

private:
    const Slice& cached_slice(const std::string& p) const;
    std::vector<AffinePiece> pieces_from_linear_part(const std::string& p) const;
    AffinePiece restriction_piece(const std::string& p, const Polyhedron& fiber) const;
    Tri concave(bool strict) const;
    Tri concave_on_slice(const Slice& s, const std::vector<AffinePiece>& pieces, bool strict) const;

    const DivisorialFan* fan_;
    std::string name_;
    std::map<Cone, ZVec> tail_weights_;
    std::map<std::string, std::vector<AffinePiece>> pieces_;
    mutable std::map<std::string, Slice> slice_cache_;
};

Rat mixed_volume(const std::vector<const SupportFunction*>& hs);

struct IntersectionResult {
    Rat value;
    std::vector<std::string> warnings;  // non-semiample inputs
};

IntersectionResult intersection_number(const std::vector<const SupportFunction*>& hs);

// The inclusion-exclusion expression as printed in the source material
// (subset reading); reported alongside for comparison, the polarization
// above is the normative one.
Rat mixed_volume_inclusion_exclusion(const std::vector<const SupportFunction*>& hs);

// Exact integral of the polytope-min function; shared with the volume code
// and exposed for tests.
Rat integrate_min_over_polytope(const Polyhedron& box, const std::vector<QVec>& points,
                                const std::vector<Rat>& values);

}  // namespace tfan
