#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfan/cone.hpp"

namespace tfan {

// An inequality <normal, x> >= offset (equation when used in `eqs`).
// Stored with integral primitive (normal, offset).
struct HalfSpace {
    ZVec normal;
    Rat offset;
};

// A rational polyhedron conv(vertices) + cone(rays), canonicalized so that
// structural equality is set equality, plus the distinguished empty value.
// Polyhedra containing a line are rejected: every nonempty value has at
// least one vertex.
class Polyhedron {
public:
    static Polyhedron empty(size_t dim);
    static Polyhedron make(std::vector<QVec> vertices, std::vector<ZVec> rays, size_t dim);
    static Polyhedron point(const QVec& v);
    static Polyhedron from_cone(const Cone& c);  // vertex 0 + the cone's rays
    static Polyhedron from_hrep(const std::vector<HalfSpace>& ineqs,
                                const std::vector<HalfSpace>& eqs, size_t dim);

    size_t ambient_dim() const { return dim_; }
    bool is_empty() const { return empty_; }
    bool is_bounded() const { return empty_ || rays_.empty(); }
    size_t dim() const;  // affine dimension; 0 for a point; empty -> npos-like -1 avoided: query only on nonempty

    const std::vector<QVec>& vertices() const { return vertices_; }
    const std::vector<ZVec>& rays() const { return rays_; }
    const std::vector<HalfSpace>& inequalities() const { return ineqs_; }
    const std::vector<HalfSpace>& equations() const { return eqs_; }

    Cone tailcone() const { return Cone::from_generators(rays_, dim_); }

    bool contains(const QVec& x) const;
    bool contains_poly(const Polyhedron& other) const;

    Polyhedron minkowski(const Polyhedron& other) const;
    Polyhedron intersect(const Polyhedron& other) const;
    Polyhedron translate(const QVec& t) const;

    // min over the polyhedron of <u, .>; nullopt encodes minus infinity.
    std::optional<Rat> min_support(const QVec& u) const;
    Polyhedron min_face(const QVec& u) const;  // requires a finite minimum

    // Face test by supporting functionals; empty is a face of everything,
    // as is the polyhedron itself. Throws if f is not contained in *this.
    bool is_face_of_me(const Polyhedron& f) const;

    std::vector<Polyhedron> facets() const;  // proper maximal faces

    // All lattice points of a bounded polyhedron, lex-sorted.
    std::vector<ZVec> lattice_points() const;

    // Image under a linear map given by row-major matrix (rows x dim_).
    Polyhedron linear_image(const QMat& map_rows) const;

    bool operator==(const Polyhedron& o) const {
        return dim_ == o.dim_ && empty_ == o.empty_ && vertices_ == o.vertices_ && rays_ == o.rays_;
    }
    bool operator!=(const Polyhedron& o) const { return !(*this == o); }
    bool operator<(const Polyhedron& o) const;

    std::string to_string() const;

private:
    explicit Polyhedron(size_t dim) : dim_(dim), empty_(true) {}

    size_t dim_ = 0;
    bool empty_ = true;
    std::vector<QVec> vertices_;
    std::vector<ZVec> rays_;
    std::vector<HalfSpace> ineqs_;
    std::vector<HalfSpace> eqs_;
};

}  // namespace tfan
