#include "tfan/polyhedron.hpp"

#include <algorithm>

namespace tfan {

namespace {

// Homogenizing coordinate sits in slot 0: a point v becomes (1, v), a ray r
// becomes (0, r), the inequality <a,x> >= b becomes the ray (-b, a) of the
// dual cone.
ZVec homogenize_row(const Rat& first, const QVec& rest) {
    QVec q(rest.size() + 1);
    q[0] = first;
    for (size_t i = 0; i < rest.size(); ++i) q[i + 1] = rest[i];
    return primitive(q);
}

struct SplitGens {
    std::vector<QVec> vertices;
    std::vector<ZVec> rays;
};

SplitGens dehomogenize(const std::vector<ZVec>& gens) {
    SplitGens out;
    for (const auto& g : gens) {
        if (g[0] < 0) throw std::logic_error("homogenization produced negative level");
        if (g[0] == 0) {
            ZVec r(g.begin() + 1, g.end());
            out.rays.push_back(primitive(r));
        } else {
            QVec v(g.size() - 1);
            for (size_t i = 1; i < g.size(); ++i) v[i - 1] = Rat(g[i]) / Rat(g[0]);
            out.vertices.push_back(v);
        }
    }
    std::sort(out.vertices.begin(), out.vertices.end(),
              [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    std::sort(out.rays.begin(), out.rays.end(),
              [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
    return out;
}

HalfSpace halfspace_from_homog(const ZVec& h) {
    // h = (-b, a) encodes <a,x> >= b
    HalfSpace hs;
    hs.normal = ZVec(h.begin() + 1, h.end());
    hs.offset = -Rat(h[0]);
    return hs;
}

bool halfspace_less(const HalfSpace& a, const HalfSpace& b) {
    if (lex_less(a.normal, b.normal)) return true;
    if (lex_less(b.normal, a.normal)) return false;
    return a.offset < b.offset;
}

}  // namespace

Polyhedron Polyhedron::empty(size_t dim) { return Polyhedron(dim); }

Polyhedron Polyhedron::make(std::vector<QVec> vertices, std::vector<ZVec> rays, size_t dim) {
    if (vertices.empty()) return Polyhedron(dim);
    for (const auto& v : vertices)
        if (v.size() != dim) throw std::invalid_argument("vertex dimension mismatch");
    for (const auto& r : rays)
        if (r.size() != dim) throw std::invalid_argument("ray dimension mismatch");

    std::vector<ZVec> gens;
    for (const auto& v : vertices) gens.push_back(homogenize_row(1, v));
    for (const auto& r : rays) {
        if (is_zero(r)) continue;
        gens.push_back(homogenize_row(0, to_qvec(r)));
    }

    ConeDesc hrep = dual_cone(gens, {}, dim + 1);
    std::vector<ZVec> back_ineqs = hrep.rays;
    ZVec e0(dim + 1, Int(0));
    e0[0] = 1;
    back_ineqs.push_back(e0);
    ConeDesc vrep = dual_cone(back_ineqs, hrep.lines, dim + 1);
    if (!vrep.lines.empty())
        throw std::invalid_argument("polyhedron contains a line");

    Polyhedron p(dim);
    SplitGens split = dehomogenize(vrep.rays);
    if (split.vertices.empty()) return Polyhedron(dim);
    p.empty_ = false;
    p.vertices_ = std::move(split.vertices);
    p.rays_ = std::move(split.rays);
    for (const auto& h : hrep.rays) {
        ZVec a(h.begin() + 1, h.end());
        if (is_zero(a)) continue;  // the x0 >= 0 row carries no affine content
        p.ineqs_.push_back(halfspace_from_homog(h));
    }
    for (const auto& h : hrep.lines) {
        ZVec a(h.begin() + 1, h.end());
        if (is_zero(a)) continue;
        ZVec hh = h;
        for (const auto& x : a) {
            if (x > 0) break;
            if (x < 0) { hh = neg(h); break; }
        }
        p.eqs_.push_back(halfspace_from_homog(hh));
    }
    std::sort(p.ineqs_.begin(), p.ineqs_.end(), halfspace_less);
    std::sort(p.eqs_.begin(), p.eqs_.end(), halfspace_less);
    return p;
}

Polyhedron Polyhedron::point(const QVec& v) { return make({v}, {}, v.size()); }

Polyhedron Polyhedron::from_cone(const Cone& c) {
    QVec origin(c.ambient_dim(), Rat(0));
    return make({origin}, c.generators(), c.ambient_dim());
}

Polyhedron Polyhedron::from_hrep(const std::vector<HalfSpace>& ineqs,
                                 const std::vector<HalfSpace>& eqs, size_t dim) {
    std::vector<ZVec> rows, eqrows;
    for (const auto& h : ineqs) {
        if (is_zero(h.normal)) {
            if (h.offset > 0) return Polyhedron(dim);  // 0 >= b infeasible
            continue;
        }
        rows.push_back(homogenize_row(-h.offset, to_qvec(h.normal)));
    }
    for (const auto& h : eqs) {
        if (is_zero(h.normal)) {
            if (h.offset != 0) return Polyhedron(dim);
            continue;
        }
        eqrows.push_back(homogenize_row(-h.offset, to_qvec(h.normal)));
    }
    ZVec e0(dim + 1, Int(0));
    e0[0] = 1;
    rows.push_back(e0);

    ConeDesc vrep = dual_cone(rows, eqrows, dim + 1);
    if (!vrep.lines.empty()) {
        // A line entirely at level x0 = 0 can still mean an empty or pointed
        // polyhedron only if no vertex exists; reject otherwise.
        bool has_vertex = false;
        for (const auto& g : vrep.rays)
            if (g[0] > 0) has_vertex = true;
        for (const auto& l : vrep.lines)
            if (l[0] != 0) has_vertex = true;
        if (!has_vertex) return Polyhedron(dim);
        throw std::invalid_argument("H-representation describes a polyhedron with a line");
    }
    SplitGens split = dehomogenize(vrep.rays);
    if (split.vertices.empty()) return Polyhedron(dim);
    // Re-canonicalize to get minimal generators and a clean cached H-rep.
    return make(split.vertices, split.rays, dim);
}

size_t Polyhedron::dim() const {
    if (empty_) throw std::invalid_argument("dim() of empty polyhedron");
    QMat m;
    for (size_t i = 1; i < vertices_.size(); ++i) m.push_back(sub(vertices_[i], vertices_[0]));
    for (const auto& r : rays_) m.push_back(to_qvec(r));
    return rank(m);
}

bool Polyhedron::contains(const QVec& x) const {
    if (empty_) return false;
    for (const auto& h : ineqs_)
        if (dot(x, h.normal) < h.offset) return false;
    for (const auto& h : eqs_)
        if (dot(x, h.normal) != h.offset) return false;
    return true;
}

bool Polyhedron::contains_poly(const Polyhedron& other) const {
    if (other.empty_) return true;
    if (empty_) return false;
    for (const auto& v : other.vertices_)
        if (!contains(v)) return false;
    for (const auto& r : other.rays_) {
        for (const auto& h : ineqs_)
            if (dot(to_qvec(r), h.normal) < 0) return false;
        for (const auto& h : eqs_)
            if (dot(to_qvec(r), h.normal) != 0) return false;
    }
    return true;
}

Polyhedron Polyhedron::minkowski(const Polyhedron& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("Minkowski sum: dimension mismatch");
    if (empty_ || other.empty_) return Polyhedron(dim_);  // empty absorbs
    std::vector<QVec> verts;
    for (const auto& a : vertices_)
        for (const auto& b : other.vertices_) verts.push_back(add(a, b));
    std::vector<ZVec> rays = rays_;
    rays.insert(rays.end(), other.rays_.begin(), other.rays_.end());
    return make(std::move(verts), std::move(rays), dim_);
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("intersection: dimension mismatch");
    if (empty_ || other.empty_) return Polyhedron(dim_);
    std::vector<HalfSpace> ineqs = ineqs_, eqs = eqs_;
    ineqs.insert(ineqs.end(), other.ineqs_.begin(), other.ineqs_.end());
    eqs.insert(eqs.end(), other.eqs_.begin(), other.eqs_.end());
    return from_hrep(ineqs, eqs, dim_);
}

Polyhedron Polyhedron::translate(const QVec& t) const {
    if (empty_) return *this;
    std::vector<QVec> verts;
    for (const auto& v : vertices_) verts.push_back(add(v, t));
    return make(std::move(verts), rays_, dim_);
}

std::optional<Rat> Polyhedron::min_support(const QVec& u) const {
    if (empty_) throw std::invalid_argument("min_support of empty polyhedron");
    for (const auto& r : rays_)
        if (dot(u, r) < 0) return std::nullopt;
    Rat best = dot(u, vertices_[0]);
    for (size_t i = 1; i < vertices_.size(); ++i) best = std::min(best, dot(u, vertices_[i]));
    return best;
}

Polyhedron Polyhedron::min_face(const QVec& u) const {
    auto m = min_support(u);
    if (!m) throw std::invalid_argument("min_face: unbounded in the given direction");
    std::vector<QVec> verts;
    for (const auto& v : vertices_)
        if (dot(u, v) == *m) verts.push_back(v);
    std::vector<ZVec> rays;
    for (const auto& r : rays_)
        if (dot(u, r) == 0) rays.push_back(r);
    return make(std::move(verts), std::move(rays), dim_);
}

bool Polyhedron::is_face_of_me(const Polyhedron& f) const {
    if (f.empty_) return true;
    if (empty_) throw std::invalid_argument("face test against empty polyhedron");
    if (!contains_poly(f)) throw std::invalid_argument("face test: candidate not contained");
    // Gather the inequalities tight on all of f; the face they cut out must
    // equal f exactly.
    std::vector<QVec> verts;
    std::vector<ZVec> rays;
    std::vector<const HalfSpace*> tight;
    for (const auto& h : ineqs_) {
        bool all = true;
        for (const auto& v : f.vertices_)
            if (dot(v, h.normal) != h.offset) { all = false; break; }
        if (all)
            for (const auto& r : f.rays_)
                if (dot(to_qvec(r), h.normal) != 0) { all = false; break; }
        if (all) tight.push_back(&h);
    }
    auto on_all = [&](const QVec& x, bool ray) {
        for (const auto* h : tight)
            if (dot(x, h->normal) != (ray ? Rat(0) : h->offset)) return false;
        return true;
    };
    for (const auto& v : vertices_)
        if (on_all(v, false)) verts.push_back(v);
    for (const auto& r : rays_)
        if (on_all(to_qvec(r), true)) rays.push_back(r);
    return make(std::move(verts), std::move(rays), dim_) == f;
}

std::vector<Polyhedron> Polyhedron::facets() const {
    if (empty_) return {};
    std::vector<Polyhedron> out;
    for (const auto& h : ineqs_) {
        std::vector<QVec> verts;
        std::vector<ZVec> rays;
        for (const auto& v : vertices_)
            if (dot(v, h.normal) == h.offset) verts.push_back(v);
        for (const auto& r : rays_)
            if (dot(to_qvec(r), h.normal) == 0) rays.push_back(r);
        if (!verts.empty()) out.push_back(make(std::move(verts), std::move(rays), dim_));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ZVec> Polyhedron::lattice_points() const {
    if (empty_) return {};
    if (!rays_.empty()) throw std::invalid_argument("lattice_points of unbounded polyhedron");
    std::vector<Int> lo(dim_), hi(dim_);
    for (size_t c = 0; c < dim_; ++c) {
        Rat mn = vertices_[0][c], mx = vertices_[0][c];
        for (const auto& v : vertices_) {
            mn = std::min(mn, v[c]);
            mx = std::max(mx, v[c]);
        }
        lo[c] = ceil_rat(mn);
        hi[c] = floor_rat(mx);
    }
    std::vector<ZVec> out;
    ZVec cur(dim_);
    auto scan = [&](auto&& self, size_t c) -> void {
        if (c == dim_) {
            if (contains(to_qvec(cur))) out.push_back(cur);
            return;
        }
        for (Int x = lo[c]; x <= hi[c]; ++x) {
            cur[c] = x;
            self(self, c + 1);
        }
    };
    scan(scan, 0);
    return out;  // lex order by construction
}

Polyhedron Polyhedron::linear_image(const QMat& map_rows) const {
    size_t out_dim = map_rows.size();
    if (empty_) return Polyhedron(out_dim);
    auto apply = [&](const QVec& x) {
        QVec y(out_dim);
        for (size_t i = 0; i < out_dim; ++i) y[i] = dot(map_rows[i], x);
        return y;
    };
    std::vector<QVec> verts;
    for (const auto& v : vertices_) verts.push_back(apply(v));
    std::vector<ZVec> rays;
    for (const auto& r : rays_) {
        QVec img = apply(to_qvec(r));
        if (!is_zero(img)) rays.push_back(primitive(img));
    }
    return make(std::move(verts), std::move(rays), out_dim);
}

bool Polyhedron::operator<(const Polyhedron& o) const {
    if (empty_ != o.empty_) return empty_ < o.empty_;
    if (vertices_ != o.vertices_) {
        return std::lexicographical_compare(vertices_.begin(), vertices_.end(), o.vertices_.begin(),
                                            o.vertices_.end(),
                                            [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    }
    return std::lexicographical_compare(rays_.begin(), rays_.end(), o.rays_.begin(), o.rays_.end(),
                                        [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
}

std::string Polyhedron::to_string() const {
    if (empty_) return "{}";
    std::string s = "conv{";
    for (size_t i = 0; i < vertices_.size(); ++i) {
        if (i) s += ", ";
        s += vec_to_string(vertices_[i]);
    }
    s += "}";
    if (!rays_.empty()) {
        s += " + cone{";
        for (size_t i = 0; i < rays_.size(); ++i) {
            if (i) s += ", ";
            s += vec_to_string(rays_[i]);
        }
        s += "}";
    }
    return s;
}

}  // namespace tfan
