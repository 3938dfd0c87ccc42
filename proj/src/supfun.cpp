#include "tfan/supfun.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tfan {

namespace {

// Fan triangulation of a bounded polytope of the given dimension: recurse
// over facets away from the lex-first vertex. Returns vertex tuples of
// d-simplices (d+1 points each).
void triangulate_rec(const Polyhedron& poly, size_t d,
                     std::vector<std::vector<QVec>>& out) {
    const auto& verts = poly.vertices();
    if (verts.size() == d + 1) {
        out.push_back(verts);
        return;
    }
    const QVec& apex = verts[0];
    for (const auto& f : poly.facets()) {
        if (f.contains(apex)) continue;
        std::vector<std::vector<QVec>> sub;
        triangulate_rec(f, d - 1, sub);
        for (auto& s : sub) {
            s.push_back(apex);
            out.push_back(std::move(s));
        }
    }
}

Rat simplex_volume(const std::vector<QVec>& pts) {
    size_t n = pts.size() - 1;
    QMat m;
    for (size_t i = 1; i <= n; ++i) m.push_back(sub(pts[i], pts[0]));
    Rat d = det(m);
    if (d < 0) d = -d;
    Int fact = 1;
    for (size_t i = 2; i <= n; ++i) fact *= i;
    return d / Rat(fact);
}

}  // namespace

Rat integrate_min_over_polytope(const Polyhedron& box, const std::vector<QVec>& points,
                                const std::vector<Rat>& values) {
    if (box.is_empty()) return 0;
    if (!box.is_bounded()) throw std::invalid_argument("integration domain is unbounded");
    size_t n = box.ambient_dim();
    if (box.dim() < n) return 0;  // measure zero

    Rat total = 0;
    for (size_t i = 0; i < points.size(); ++i) {
        // Region where piece i attains the minimum.
        std::vector<HalfSpace> ineqs(box.inequalities());
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            HalfSpace h;
            QVec diff = sub(points[j], points[i]);
            if (is_zero(diff)) {
                if (values[j] < values[i]) { ineqs.clear(); break; }  // i never minimal
                continue;
            }
            h.normal = primitive(diff);
            // <u, p_j - p_i> >= c_j - c_i, rescaled along with the normal
            Rat scale_factor = Rat(h.normal[0]);
            for (size_t k = 0; k < diff.size(); ++k)
                if (diff[k] != 0) { scale_factor = Rat(h.normal[k]) / diff[k]; break; }
            h.offset = (values[j] - values[i]) * scale_factor;
            ineqs.push_back(h);
        }
        if (ineqs.empty()) continue;
        Polyhedron region = Polyhedron::from_hrep(ineqs, box.equations(), n);
        if (region.is_empty() || region.dim() < n) continue;

        std::vector<std::vector<QVec>> simplices;
        triangulate_rec(region, n, simplices);
        for (const auto& s : simplices) {
            Rat vol = simplex_volume(s);
            if (vol == 0) continue;
            Rat mean = 0;
            for (const auto& v : s) mean += dot(v, points[i]) - values[i];
            mean /= Rat(s.size());
            total += vol * mean;
        }
    }
    return total;
}

SupportFunction::SupportFunction(const DivisorialFan* fan, std::string name,
                                 std::map<Cone, ZVec> tail_weights,
                                 std::map<std::string, std::vector<AffinePiece>> pieces)
    : fan_(fan), name_(std::move(name)), tail_weights_(std::move(tail_weights)),
      pieces_(std::move(pieces)) {
    if (!fan_) throw std::invalid_argument("support function needs a fan");
}

const Slice& SupportFunction::cached_slice(const std::string& p) const {
    auto it = slice_cache_.find(p);
    if (it == slice_cache_.end()) it = slice_cache_.emplace(p, fan_->slice(p)).first;
    return it->second;
}

SupportFunction SupportFunction::zero(const DivisorialFan* fan) {
    std::map<Cone, ZVec> tw;
    for (const auto& c : fan->maximal_tailcones()) tw[c] = ZVec(fan->lattice_rank(), Int(0));
    std::map<std::string, std::vector<AffinePiece>> pieces;
    for (const auto& p : fan->marked_points()) {
        Slice s = fan->slice(p);
        pieces[p] = std::vector<AffinePiece>(s.max_cells.size(),
                                             AffinePiece{ZVec(fan->lattice_rank(), Int(0)), Rat(0)});
    }
    return SupportFunction(fan, "0", std::move(tw), std::move(pieces));
}

SupportFunction SupportFunction::principal(const DivisorialFan* fan, const ZVec& u,
                                           const CurveDivisor& d) {
    if (is_principal(fan->curve(), d) != Tri::Yes)
        throw std::invalid_argument("principal support function needs a principal divisor");
    std::map<Cone, ZVec> tw;
    for (const auto& c : fan->maximal_tailcones()) tw[c] = u;
    std::set<std::string> pts(fan->marked_points().begin(), fan->marked_points().end());
    for (const auto& [p, c] : d.coeffs()) pts.insert(p);
    std::map<std::string, std::vector<AffinePiece>> pieces;
    for (const auto& p : pts) {
        Slice s = fan->slice(p);
        std::vector<AffinePiece> ps(s.max_cells.size(), AffinePiece{u, d.coeff(p)});
        pieces[p] = std::move(ps);
    }
    std::string nm = "(" + vec_to_string(u) + " + div(" + d.to_string() + "))";
    return SupportFunction(fan, nm, std::move(tw), std::move(pieces));
}

std::vector<std::string> SupportFunction::support_points() const {
    std::vector<std::string> out;
    for (const auto& p : fan_->marked_points())
        out.push_back(p);
    for (const auto& [p, ps] : pieces_)
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    return out;
}

std::vector<AffinePiece> SupportFunction::pieces_from_linear_part(const std::string& p) const {
    const Slice& s = cached_slice(p);
    std::vector<AffinePiece> out;
    for (const auto& cell : s.max_cells) {
        bool found = false;
        for (const auto& [sigma, u] : tail_weights_) {
            Polyhedron cp = Polyhedron::from_cone(sigma);
            if (cp.contains_poly(cell)) {
                out.push_back(AffinePiece{u, Rat(0)});
                found = true;
                break;
            }
        }
        if (!found)
            throw std::invalid_argument(name_ + ": linear part is not affine on a cell of the slice at " + p);
    }
    return out;
}

Rat SupportFunction::value(const std::string& p, const QVec& v) const {
    auto it = pieces_.find(p);
    if (it == pieces_.end()) return linear_value(v);
    const Slice& s = cached_slice(p);
    auto idx = s.cell_containing(v);
    if (!idx) throw std::invalid_argument("point " + vec_to_string(v) + " outside the slice at " + p);
    const AffinePiece& pc = it->second.at(*idx);
    return dot(v, pc.weight) + pc.offset;
}

Rat SupportFunction::linear_value(const QVec& v) const {
    for (const auto& [sigma, u] : tail_weights_)
        if (sigma.contains(v)) return dot(v, u);
    throw std::invalid_argument("vector outside the tailfan support");
}

Rat SupportFunction::linear_value_ray(const ZVec& r) const { return linear_value(to_qvec(r)); }

ValidationReport SupportFunction::validate() const {
    ValidationReport rep;
    auto fail = [&](const std::string& w) { rep.issues.push_back({w, Tri::No}); };

    std::vector<Cone> maximal = fan_->maximal_tailcones();
    for (const auto& sigma : maximal)
        if (!tail_weights_.count(sigma))
            fail("missing linear-part weight on a maximal tailcone " + sigma.to_string());
    // Continuity of the linear part across tailfan intersections.
    for (auto it = tail_weights_.begin(); it != tail_weights_.end(); ++it)
        for (auto jt = std::next(it); jt != tail_weights_.end(); ++jt) {
            Polyhedron meet =
                Polyhedron::from_cone(it->first).intersect(Polyhedron::from_cone(jt->first));
            for (const auto& g : meet.rays())
                if (dot(g, it->second) != dot(g, jt->second))
                    fail("linear part discontinuous across " + it->first.to_string() + " / " +
                         jt->first.to_string());
        }

    for (const auto& [p, ps] : pieces_) {
        const Slice& s = cached_slice(p);
        if (ps.size() != s.max_cells.size()) {
            fail("piece count at " + p + " does not match the slice (" +
                 std::to_string(ps.size()) + " vs " + std::to_string(s.max_cells.size()) + ")");
            continue;
        }
        for (size_t i = 0; i < ps.size(); ++i) {
            // Shared linear part: the piece weight agrees with h_t on the tail.
            Cone tail = s.max_cells[i].tailcone();
            for (const auto& [sigma, u] : tail_weights_)
                if (sigma.contains_cone(tail))
                    for (const auto& g : tail.generators())
                        if (dot(g, ps[i].weight) != dot(g, u))
                            fail("piece at " + p + " cell " + std::to_string(i) +
                                 " has a different linear part than the tailfan");
            // Integrality at the vertices.
            for (const auto& v : s.max_cells[i].vertices()) {
                Rat hv = dot(v, ps[i].weight) + ps[i].offset;
                if (!is_integral(hv * Rat(mu_of(v))))
                    fail("integrality fails at " + p + " vertex " + vec_to_string(v));
            }
        }
        // Continuity inside the slice.
        for (size_t i = 0; i < ps.size(); ++i)
            for (size_t j = i + 1; j < ps.size(); ++j) {
                Polyhedron meet = s.max_cells[i].intersect(s.max_cells[j]);
                if (meet.is_empty()) continue;
                for (const auto& v : meet.vertices()) {
                    Rat a = dot(v, ps[i].weight) + ps[i].offset;
                    Rat b = dot(v, ps[j].weight) + ps[j].offset;
                    if (a != b)
                        fail("discontinuity at " + p + " between cells " + std::to_string(i) +
                             " and " + std::to_string(j));
                }
                for (const auto& r : meet.rays())
                    if (dot(r, ps[i].weight) != dot(r, ps[j].weight))
                        fail("discontinuity at infinity at " + p + " between cells " +
                             std::to_string(i) + " and " + std::to_string(j));
            }
    }
    // Marked points without stored pieces fall back to the linear part; that
    // needs the linear part to be affine on every cell of the slice there.
    for (const auto& p : fan_->marked_points()) {
        if (pieces_.count(p)) continue;
        try {
            pieces_from_linear_part(p);
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }
    return rep;
}

AffinePiece SupportFunction::restriction_piece(const std::string& p, const Polyhedron& fiber) const {
    auto it = pieces_.find(p);
    if (it == pieces_.end()) {
        for (const auto& [sigma, u] : tail_weights_)
            if (Polyhedron::from_cone(sigma).contains_poly(fiber)) return AffinePiece{u, Rat(0)};
        throw std::invalid_argument("linear part not affine on a fiber at " + p);
    }
    const Slice& s = cached_slice(p);
    for (size_t i = 0; i < s.max_cells.size(); ++i)
        if (s.max_cells[i].contains_poly(fiber)) return it->second.at(i);
    throw std::invalid_argument("fiber not contained in a slice cell at " + p);
}

Tri SupportFunction::is_cartier() const {
    Tri result = Tri::Yes;
    for (const auto& d : fan_->divisors()) {
        if (!d.locus().complete) continue;
        // Restriction data over every support point.
        std::vector<std::string> pts = support_points();
        std::vector<AffinePiece> rp;
        std::vector<Polyhedron> fibers;
        for (const auto& p : pts) {
            Polyhedron f = d.fiber(p);
            fibers.push_back(f);
            rp.push_back(restriction_piece(p, f));
        }
        // Candidate global weights; the restriction must be one affine
        // function <u,.> + D with D principal.
        std::set<ZVec> candidates;
        for (const auto& piece : rp) candidates.insert(piece.weight);
        Tri best = Tri::No;
        for (const auto& u : candidates) {
            bool ok = true;
            std::map<std::string, Rat> offsets;
            for (size_t i = 0; i < pts.size() && ok; ++i) {
                const Polyhedron& f = fibers[i];
                Rat a = rp[i].offset + dot(f.vertices()[0], rp[i].weight) -
                        dot(f.vertices()[0], u);
                for (const auto& v : f.vertices())
                    if (dot(v, u) + a != dot(v, rp[i].weight) + rp[i].offset) { ok = false; break; }
                for (const auto& r : f.rays())
                    if (ok && dot(r, u) != dot(r, rp[i].weight)) { ok = false; break; }
                if (ok && a != 0) offsets[pts[i]] = a;
            }
            if (!ok) continue;
            // Generic points carry the linear part; the candidate must agree
            // with it on the tailcone so their offsets vanish.
            for (const auto& g : d.tail().generators())
                if (dot(g, u) != linear_value_ray(g)) { ok = false; break; }
            if (!ok) continue;
            Tri pr = is_principal(fan_->curve(), CurveDivisor(offsets));
            if (pr == Tri::Yes) { best = Tri::Yes; break; }
            if (pr == Tri::Unknown) best = Tri::Unknown;
        }
        if (best == Tri::No) return Tri::No;
        if (best == Tri::Unknown) result = Tri::Unknown;
    }
    return result;
}

WeilDivisor SupportFunction::weil() const {
    if (is_cartier() == Tri::No)
        throw std::invalid_argument(name_ + " is not Cartier");
    WeilDivisor w;
    for (const auto& r : fan_->extremal_rays())
        w.add(PrimeDivisor::horizontal(r), -linear_value_ray(r));
    for (const auto& p : support_points()) {
        const Slice& s = cached_slice(p);
        for (const auto& v : s.vertices)
            w.add(PrimeDivisor::vertical(p, v), -Rat(mu_of(v)) * value(p, v));
    }
    return w;
}

std::map<Cone, CurveDivisor> SupportFunction::sigma_zero() const {
    std::map<Cone, CurveDivisor> out;
    for (const auto& sigma : fan_->maximal_tailcones()) out.emplace(sigma, sigma_zero(sigma));
    return out;
}

CurveDivisor SupportFunction::sigma_zero(const Cone& sigma) const {
    std::map<std::string, Rat> m;
    for (const auto& [p, ps] : pieces_) {
        const Slice& s = cached_slice(p);
        auto idx = s.cell_with_tail(sigma);
        if (!idx)
            throw std::invalid_argument("no unique cell with the given tailcone at " + p);
        m[p] = ps.at(*idx).offset;
    }
    return CurveDivisor(std::move(m));
}

Polyhedron SupportFunction::box() const {
    std::vector<HalfSpace> ineqs;
    std::set<ZVec> rays;
    for (const auto& sigma : fan_->maximal_tailcones())
        for (const auto& g : sigma.generators()) rays.insert(g);
    for (const auto& r : rays) ineqs.push_back(HalfSpace{r, linear_value_ray(r)});
    return Polyhedron::from_hrep(ineqs, {}, fan_->lattice_rank());
}

bool SupportFunction::in_box(const QVec& u) const {
    for (const auto& sigma : fan_->maximal_tailcones())
        for (const auto& g : sigma.generators())
            if (dot(u, g) < linear_value_ray(g)) return false;
    return true;
}

CurveDivisor SupportFunction::dual_raw(const QVec& u) const {
    std::map<std::string, Rat> m;
    for (const auto& p : support_points()) {
        const Slice& s = cached_slice(p);
        bool first = true;
        Rat best = 0;
        for (const auto& v : s.vertices) {
            Rat c = dot(u, v) - value(p, v);
            if (first || c < best) best = c;
            first = false;
        }
        if (!first) m[p] = best;
    }
    return CurveDivisor(std::move(m));
}

CurveDivisor SupportFunction::dual(const QVec& u) const {
    if (!in_box(u)) throw std::invalid_argument("weight outside the associated polytope");
    return dual_raw(u);
}

bool SupportFunction::extremal_ray_conditions(const QVec& u) const {
    for (const auto& r : fan_->extremal_rays())
        if (dot(u, r) < linear_value_ray(r)) return false;
    return true;
}

SectionTable SupportFunction::sections() const {
    SectionTable t;
    Polyhedron b = box();
    if (b.is_empty()) {
        t.total = Int(0);
        return t;
    }
    if (!b.is_bounded())
        throw std::invalid_argument("weight polytope is unbounded; section table is infinite");
    Int total = 0;
    bool undetermined = false;
    for (const auto& u : b.lattice_points()) {
        auto dim = h0(fan_->curve(), dual(to_qvec(u)));
        t.dims.emplace_back(u, dim);
        if (dim)
            total += *dim;
        else
            undetermined = true;
    }
    if (!undetermined) t.total = total;
    return t;
}

Tri SupportFunction::concave_on_slice(const Slice& s, const std::vector<AffinePiece>& ps,
                                      bool strict) const {
    size_t n = fan_->lattice_rank();
    bool any_pair = false;
    for (size_t i = 0; i < s.max_cells.size(); ++i) {
        for (size_t j = 0; j < s.max_cells.size(); ++j) {
            if (i == j) continue;
            Polyhedron meet = s.max_cells[i].intersect(s.max_cells[j]);
            if (meet.is_empty() || meet.dim() + 1 != n) continue;  // facets only
            any_pair = true;
            // The extension of piece i must dominate piece j on cell j.
            bool somewhere_strict = false;
            for (const auto& v : s.max_cells[j].vertices()) {
                Rat diff = (dot(v, ps[i].weight) + ps[i].offset) -
                           (dot(v, ps[j].weight) + ps[j].offset);
                if (diff < 0) return Tri::No;
                if (diff > 0) somewhere_strict = true;
            }
            for (const auto& r : s.max_cells[j].rays()) {
                Rat diff = dot(r, ps[i].weight) - dot(r, ps[j].weight);
                if (diff < 0) return Tri::No;
                if (diff > 0) somewhere_strict = true;
            }
            if (strict && !somewhere_strict) return Tri::No;
        }
    }
    (void)any_pair;
    return Tri::Yes;
}

Tri SupportFunction::concave(bool strict) const {
    // Slices at support points, plus one generic slice for the linear part.
    for (const auto& p : support_points()) {
        const Slice& s = cached_slice(p);
        std::vector<AffinePiece> ps;
        auto it = pieces_.find(p);
        if (it != pieces_.end())
            ps = it->second;
        else
            ps = pieces_from_linear_part(p);
        if (ps.size() != s.max_cells.size())
            throw std::invalid_argument("piece/slice mismatch at " + p);
        Tri c = concave_on_slice(s, ps, strict);
        if (c != Tri::Yes) return c;
    }
    // Generic slice: cells are the maximal tailcones.
    Slice gen;
    gen.point = "(generic)";
    std::vector<AffinePiece> ps;
    for (const auto& sigma : fan_->maximal_tailcones()) {
        gen.max_cells.push_back(Polyhedron::from_cone(sigma));
        ps.push_back(AffinePiece{tail_weights_.at(sigma), Rat(0)});
    }
    // Sort cells canonically, keeping pieces aligned.
    std::vector<size_t> order(gen.max_cells.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return gen.max_cells[a] < gen.max_cells[b]; });
    Slice sorted;
    std::vector<AffinePiece> sorted_ps;
    for (size_t i : order) {
        sorted.max_cells.push_back(gen.max_cells[i]);
        sorted_ps.push_back(ps[i]);
    }
    return concave_on_slice(sorted, sorted_ps, strict);
}

Tri SupportFunction::is_nef() const {
    if (is_cartier() == Tri::No) throw std::invalid_argument(name_ + " is not Cartier");
    Tri c = concave(false);
    if (c != Tri::Yes) return c;
    for (const auto& sigma : fan_->maximal_tailcones())
        if (sigma_zero(sigma).degree() > 0) return Tri::No;
    return Tri::Yes;
}

Tri SupportFunction::is_semiample() const {
    if (is_cartier() == Tri::No) throw std::invalid_argument(name_ + " is not Cartier");
    Tri c = concave(false);
    if (c != Tri::Yes) return c;
    Tri result = Tri::Yes;
    for (const auto& sigma : fan_->maximal_tailcones()) {
        CurveDivisor d = sigma_zero(sigma);
        Rat deg = d.degree();
        if (deg < 0) continue;
        if (deg > 0) return Tri::No;
        // Degree zero: a multiple of -d must be principal; clear denominators.
        QVec cs;
        for (const auto& [p, cc] : d.coeffs()) cs.push_back(cc);
        CurveDivisor di = cs.empty() ? d : d * Rat(mu_of(cs));
        Tri pr = is_principal(fan_->curve(), di * Rat(-1));
        if (pr == Tri::No) return Tri::No;
        if (pr == Tri::Unknown) result = Tri::Unknown;
    }
    return result;
}

Tri SupportFunction::is_ample() const {
    if (is_cartier() == Tri::No) throw std::invalid_argument(name_ + " is not Cartier");
    Tri c = concave(true);
    if (c != Tri::Yes) return c;
    for (const auto& d : fan_->divisors()) {
        if (d.locus().complete) continue;
        // Only maximal tailcones carry an offset divisor.
        bool is_max = false;
        for (const auto& sigma : fan_->maximal_tailcones())
            if (sigma == d.tail()) is_max = true;
        if (!is_max) continue;
        if (sigma_zero(d.tail()).degree() >= 0) return Tri::No;
    }
    return Tri::Yes;
}

VolumeTable SupportFunction::volume() const {
    Polyhedron b = box();
    VolumeTable t;
    t.total = 0;
    if (b.is_empty()) return t;
    if (!b.is_bounded()) throw std::invalid_argument("weight polytope is unbounded");
    for (const auto& p : support_points()) {
        const Slice& s = cached_slice(p);
        std::vector<QVec> pts;
        std::vector<Rat> vals;
        for (const auto& v : s.vertices) {
            pts.push_back(v);
            vals.push_back(value(p, v));
        }
        Rat integral = integrate_min_over_polytope(b, pts, vals);
        t.per_point.emplace_back(p, integral);
        t.total += integral;
    }
    return t;
}

SupportFunction SupportFunction::operator+(const SupportFunction& o) const {
    if (fan_ != o.fan_) throw std::invalid_argument("support functions live on different fans");
    std::map<Cone, ZVec> tw;
    for (const auto& [sigma, u] : tail_weights_) {
        ZVec v = o.tail_weights_.at(sigma);
        ZVec sum(u.size());
        for (size_t i = 0; i < u.size(); ++i) sum[i] = u[i] + v[i];
        tw[sigma] = sum;
    }
    std::set<std::string> pts;
    for (const auto& [p, _] : pieces_) pts.insert(p);
    for (const auto& [p, _] : o.pieces_) pts.insert(p);
    std::map<std::string, std::vector<AffinePiece>> pieces;
    for (const auto& p : pts) {
        auto a = pieces_.count(p) ? pieces_.at(p) : pieces_from_linear_part(p);
        auto b = o.pieces_.count(p) ? o.pieces_.at(p) : o.pieces_from_linear_part(p);
        if (a.size() != b.size()) throw std::logic_error("piece misalignment at " + p);
        std::vector<AffinePiece> sum;
        for (size_t i = 0; i < a.size(); ++i) {
            ZVec w(a[i].weight.size());
            for (size_t k = 0; k < w.size(); ++k) w[k] = a[i].weight[k] + b[i].weight[k];
            sum.push_back(AffinePiece{w, a[i].offset + b[i].offset});
        }
        pieces[p] = std::move(sum);
    }
    return SupportFunction(fan_, name_ + "+" + o.name_, std::move(tw), std::move(pieces));
}

SupportFunction SupportFunction::operator*(const Int& m) const {
    std::map<Cone, ZVec> tw;
    for (const auto& [sigma, u] : tail_weights_) {
        ZVec v(u.size());
        for (size_t i = 0; i < u.size(); ++i) v[i] = m * u[i];
        tw[sigma] = v;
    }
    std::map<std::string, std::vector<AffinePiece>> pieces;
    for (const auto& [p, ps] : pieces_) {
        std::vector<AffinePiece> scaled;
        for (const auto& piece : ps) {
            ZVec w(piece.weight.size());
            for (size_t i = 0; i < w.size(); ++i) w[i] = m * piece.weight[i];
            scaled.push_back(AffinePiece{w, Rat(m) * piece.offset});
        }
        pieces[p] = std::move(scaled);
    }
    return SupportFunction(fan_, m.get_str() + "*" + name_, std::move(tw), std::move(pieces));
}

bool SupportFunction::operator==(const SupportFunction& o) const {
    if (fan_ != o.fan_ || !(tail_weights_ == o.tail_weights_)) return false;
    std::set<std::string> pts;
    for (const auto& [p, _] : pieces_) pts.insert(p);
    for (const auto& [p, _] : o.pieces_) pts.insert(p);
    for (const auto& p : pts) {
        auto a = pieces_.count(p) ? pieces_.at(p) : pieces_from_linear_part(p);
        auto b = o.pieces_.count(p) ? o.pieces_.at(p) : o.pieces_from_linear_part(p);
        if (!(a == b)) return false;
    }
    return true;
}

Rat mixed_volume(const std::vector<const SupportFunction*>& hs) {
    if (hs.empty()) throw std::invalid_argument("mixed volume of nothing");
    const DivisorialFan* fan = hs[0]->fan();
    for (const auto* h : hs)
        if (h->fan() != fan) throw std::invalid_argument("mixed volume across different fans");
    size_t k = hs.size();
    Rat sum = 0;
    for (size_t mask = 1; mask < (size_t(1) << k); ++mask) {
        SupportFunction acc = SupportFunction::zero(fan);
        size_t count = 0;
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t(1) << i)) {
                acc = acc + *hs[i];
                ++count;
            }
        Rat v = acc.volume().total;
        sum += ((k - count) % 2 == 0 ? v : -v);
    }
    Int fact = 1;
    for (size_t i = 2; i <= k; ++i) fact *= i;
    return sum / Rat(fact);
}

IntersectionResult intersection_number(const std::vector<const SupportFunction*>& hs) {
    IntersectionResult res;
    if (hs.empty()) throw std::invalid_argument("intersection number of nothing");
    size_t n = hs[0]->fan()->lattice_rank();
    if (hs.size() != n + 1)
        throw std::invalid_argument("intersection number needs exactly " + std::to_string(n + 1) +
                                    " divisors");
    for (const auto* h : hs)
        if (h->is_semiample() != Tri::Yes)
            res.warnings.push_back(h->name() + " is not known to be semiample");
    bool all_same = true;
    for (const auto* h : hs)
        if (!(*h == *hs[0])) all_same = false;
    Int fact = 1;
    for (size_t i = 2; i <= n + 1; ++i) fact *= i;
    if (all_same) {
        res.value = Rat(fact) * hs[0]->volume().total;
        return res;
    }
    res.value = Rat(fact) * mixed_volume(hs);
    return res;
}

Rat mixed_volume_inclusion_exclusion(const std::vector<const SupportFunction*>& hs) {
    if (hs.empty()) throw std::invalid_argument("mixed volume of nothing");
    const DivisorialFan* fan = hs[0]->fan();
    size_t k = hs.size();
    Rat sum = 0;
    for (size_t mask = 1; mask < (size_t(1) << k); ++mask) {
        SupportFunction acc = SupportFunction::zero(fan);
        size_t count = 0;
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t(1) << i)) {
                acc = acc + *hs[i];
                ++count;
            }
        Rat v = acc.volume().total;
        sum += (count % 2 == 1 ? v : -v);
    }
    return sum;
}

}  // namespace tfan
