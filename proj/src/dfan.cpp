#include "tfan/dfan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tfan {

PrimeDivisor PrimeDivisor::vertical(std::string p, QVec v) {
    PrimeDivisor d;
    d.kind = Kind::Vertical;
    d.point = std::move(p);
    d.vertex = std::move(v);
    return d;
}

PrimeDivisor PrimeDivisor::horizontal(ZVec r) {
    PrimeDivisor d;
    d.kind = Kind::Horizontal;
    d.ray = std::move(r);
    return d;
}

bool PrimeDivisor::operator<(const PrimeDivisor& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (kind == Kind::Vertical) {
        if (point != o.point) return point < o.point;
        return lex_less(vertex, o.vertex);
    }
    return lex_less(ray, o.ray);
}

bool PrimeDivisor::operator==(const PrimeDivisor& o) const {
    return !(*this < o) && !(o < *this);
}

std::string PrimeDivisor::to_string() const {
    if (kind == Kind::Vertical) return "D_(" + point + "," + vec_to_string(vertex) + ")";
    return "D_rho" + vec_to_string(ray);
}

void WeilDivisor::add(const PrimeDivisor& d, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Rat WeilDivisor::coeff(const PrimeDivisor& d) const {
    auto it = coeffs_.find(d);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

bool WeilDivisor::is_integral() const {
    for (const auto& [d, c] : coeffs_)
        if (!tfan::is_integral(c)) return false;
    return true;
}

WeilDivisor WeilDivisor::operator+(const WeilDivisor& o) const {
    WeilDivisor r = *this;
    for (const auto& [d, c] : o.coeffs_) r.add(d, c);
    return r;
}

WeilDivisor WeilDivisor::operator-(const WeilDivisor& o) const {
    WeilDivisor r = *this;
    for (const auto& [d, c] : o.coeffs_) r.add(d, -c);
    return r;
}

WeilDivisor WeilDivisor::operator*(const Rat& c) const {
    WeilDivisor r;
    for (const auto& [d, x] : coeffs_) r.add(d, c * x);
    return r;
}

std::string WeilDivisor::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [d, c] : coeffs_) {
        if (!s.empty()) s += " + ";
        s += rat_to_string(c) + "*" + d.to_string();
    }
    return s;
}

std::optional<size_t> Slice::cell_with_tail(const Cone& sigma) const {
    std::optional<size_t> found;
    for (size_t i = 0; i < max_cells.size(); ++i) {
        if (max_cells[i].tailcone() == sigma) {
            if (found) return std::nullopt;  // not unique
            found = i;
        }
    }
    return found;
}

std::optional<size_t> Slice::cell_containing(const QVec& v) const {
    for (size_t i = 0; i < max_cells.size(); ++i)
        if (max_cells[i].contains(v)) return i;
    return std::nullopt;
}

bool ValidationReport::valid() const {
    for (const auto& i : issues)
        if (i.severity == Tri::No) return false;
    return true;
}

bool ValidationReport::has_unknown() const {
    for (const auto& i : issues)
        if (i.severity == Tri::Unknown) return true;
    return false;
}

std::string ValidationReport::to_string() const {
    if (issues.empty()) return "valid";
    std::string s;
    for (const auto& i : issues) {
        s += (i.severity == Tri::No ? "violation: " : "unknown: ");
        s += i.what;
        s += "\n";
    }
    return s;
}

DivisorialFan::DivisorialFan(Curve curve, std::vector<PolyhedralDivisor> divisors)
    : curve_(std::move(curve)), divisors_(std::move(divisors)) {
    if (divisors_.empty()) throw std::invalid_argument("divisorial fan needs at least one divisor");
    rank_ = divisors_[0].lattice_rank();
    std::set<std::string> extra;
    std::set<std::string> seen;
    for (const auto& d : divisors_) {
        if (d.lattice_rank() != rank_)
            throw std::invalid_argument("divisors over different lattices in one fan");
        for (const auto& p : d.points()) seen.insert(p);
    }
    for (const auto& p : curve_.marked_points)
        if (seen.count(p)) marked_.push_back(p);
    for (const auto& p : seen)
        if (!curve_.is_marked(p)) extra.insert(p);
    marked_.insert(marked_.end(), extra.begin(), extra.end());

    std::set<Cone> cones;
    for (const auto& d : divisors_) cones.insert(d.tail());
    tailcones_.assign(cones.begin(), cones.end());
}

std::vector<Cone> DivisorialFan::maximal_tailcones() const {
    std::vector<Cone> out;
    for (const auto& c : tailcones_) {
        bool maximal = true;
        for (const auto& other : tailcones_)
            if (!(other == c) && other.contains_cone(c)) { maximal = false; break; }
        if (maximal) out.push_back(c);
    }
    return out;
}

std::vector<ZVec> DivisorialFan::tailfan_rays() const {
    std::set<ZVec> rays;
    for (const auto& c : tailcones_)
        for (const auto& g : c.generators()) rays.insert(g);
    std::vector<ZVec> out(rays.begin(), rays.end());
    std::sort(out.begin(), out.end(), [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
    return out;
}

Slice DivisorialFan::slice(const std::string& p) const {
    Slice s;
    s.point = p;
    std::vector<Polyhedron> cells;
    std::vector<std::vector<std::string>> labels;
    for (const auto& d : divisors_) {
        Polyhedron f = d.fiber(p);
        if (f.is_empty()) continue;
        auto it = std::find(cells.begin(), cells.end(), f);
        if (it == cells.end()) {
            cells.push_back(f);
            labels.push_back({d.name()});
        } else {
            labels[it - cells.begin()].push_back(d.name());
        }
    }
    // Keep maximal cells only; contained fibers are faces of bigger ones.
    std::vector<size_t> order(cells.size());
    for (size_t i = 0; i < cells.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return cells[a] < cells[b]; });
    for (size_t i : order) {
        bool maximal = true;
        for (size_t j = 0; j < cells.size(); ++j)
            if (i != j && cells[j].contains_poly(cells[i]) && cells[j] != cells[i]) {
                maximal = false;
                break;
            }
        if (maximal) {
            s.max_cells.push_back(cells[i]);
            s.cell_labels.push_back(labels[i]);
        }
    }
    std::set<QVec> verts;
    for (const auto& c : s.max_cells)
        for (const auto& v : c.vertices()) verts.insert(v);
    s.vertices.assign(verts.begin(), verts.end());
    std::sort(s.vertices.begin(), s.vertices.end(),
              [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    return s;
}

ValidationReport DivisorialFan::validate() const {
    ValidationReport rep;
    for (const auto& d : divisors_) {
        ProperReport pr = d.is_proper();
        if (pr.proper == Tri::No)
            rep.issues.push_back({d.name() + " is not proper: " + pr.reason, Tri::No});
        else if (pr.proper == Tri::Unknown)
            rep.issues.push_back({d.name() + " properness unknown: " + pr.reason, Tri::Unknown});
    }
    for (size_t i = 0; i < divisors_.size(); ++i) {
        for (size_t j = i + 1; j < divisors_.size(); ++j) {
            const auto& a = divisors_[i];
            const auto& b = divisors_[j];
            PolyhedralDivisor meet = a.intersect(b);
            try {
                if (!meet.is_face_of(a))
                    rep.issues.push_back(
                        {a.name() + " ∩ " + b.name() + " is not a face of " + a.name(), Tri::No});
                if (!meet.is_face_of(b))
                    rep.issues.push_back(
                        {a.name() + " ∩ " + b.name() + " is not a face of " + b.name(), Tri::No});
            } catch (const std::exception& e) {
                rep.issues.push_back({a.name() + " ∩ " + b.name() + ": " + e.what(), Tri::No});
            }
        }
    }
    return rep;
}

namespace {

// Facet pairing: every facet of every full-dimensional cell must be shared
// by exactly one other cell. With pairwise face compatibility this is the
// completeness test for a polyhedral complex.
bool tiles_whole_space(const std::vector<Polyhedron>& max_cells, size_t rank) {
    if (max_cells.empty()) return false;
    std::map<Polyhedron, int> facet_count;
    for (const auto& c : max_cells) {
        if (c.dim() != rank) return false;
        for (const auto& f : c.facets()) facet_count[f]++;
    }
    for (const auto& [f, n] : facet_count)
        if (n != 2) return false;
    return !facet_count.empty() || rank == 0;
}

}  // namespace

bool DivisorialFan::is_complete() const {
    if (!curve_.projective) return false;
    std::vector<Polyhedron> tailfan;
    for (const auto& c : maximal_tailcones()) tailfan.push_back(Polyhedron::from_cone(c));
    if (rank_ >= 1 && !tiles_whole_space(tailfan, rank_)) return false;
    for (const auto& p : marked_points()) {
        Slice s = slice(p);
        if (!tiles_whole_space(s.max_cells, rank_)) return false;
    }
    // A divisor with affine locus must not be the only owner of its cells:
    // an empty coefficient elsewhere removes nothing from the slices, so the
    // facet test above already covers the subdivision itself.
    return true;
}

std::vector<ZVec> DivisorialFan::extremal_rays() const {
    std::set<ZVec> out;
    for (const auto& d : divisors_) {
        bool affine = !d.locus().complete;
        Polyhedron deg = curve_.projective ? d.degree() : Polyhedron::empty(rank_);
        for (const auto& r : d.tail().generators()) {
            if (out.count(r)) continue;
            if (affine || deg.is_empty()) {
                out.insert(r);
                continue;
            }
            Polyhedron ray_poly = Polyhedron::from_cone(Cone::from_generators({r}, rank_));
            if (deg.intersect(ray_poly).is_empty()) out.insert(r);
        }
    }
    std::vector<ZVec> v(out.begin(), out.end());
    std::sort(v.begin(), v.end(), [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
    return v;
}

std::vector<PrimeDivisor> DivisorialFan::prime_divisors() const {
    std::vector<PrimeDivisor> out;
    for (const auto& p : marked_points()) {
        Slice s = slice(p);
        for (const auto& v : s.vertices) out.push_back(PrimeDivisor::vertical(p, v));
    }
    for (const auto& r : extremal_rays()) out.push_back(PrimeDivisor::horizontal(r));
    return out;
}

WeilDivisor DivisorialFan::principal_weil(const CurveDivisor& f_data, const QVec& u) const {
    if (!f_data.is_integral())
        throw std::invalid_argument("principal_weil: order data must be integral");
    if (is_principal(curve_, f_data) != Tri::Yes)
        throw std::invalid_argument("principal_weil: divisor on the curve is not principal");
    WeilDivisor w;
    for (const auto& r : extremal_rays())
        w.add(PrimeDivisor::horizontal(r), dot(u, r));
    std::set<std::string> pts(marked_points().begin(), marked_points().end());
    for (const auto& [p, c] : f_data.coeffs()) pts.insert(p);
    for (const auto& p : pts) {
        Slice s = slice(p);
        Rat ord = f_data.coeff(p);
        for (const auto& v : s.vertices) {
            Int mu = mu_of(v);
            w.add(PrimeDivisor::vertical(p, v), Rat(mu) * (dot(u, v) + ord));
        }
    }
    return w;
}

GroupPresentation DivisorialFan::class_group() const {
    GroupPresentation pres;
    std::vector<PrimeDivisor> verts;
    std::vector<ZVec> rays = extremal_rays();
    std::map<std::string, std::vector<QVec>> slice_verts;
    for (const auto& p : marked_points()) slice_verts[p] = slice(p).vertices;

    for (const auto& r : rays) pres.generators.push_back(PrimeDivisor::horizontal(r).to_string());
    for (const auto& p : marked_points())
        for (const auto& v : slice_verts[p]) {
            verts.push_back(PrimeDivisor::vertical(p, v));
            pres.generators.push_back(verts.back().to_string());
        }
    // Point classes on the curve: at genus zero all points are equivalent
    // ([pt] on a projective curve, principal on an affine one). Beyond genus
    // zero every marked point keeps its own abstract class and the degree
    // part of Cl(Y) stays unreduced.
    bool single_point_class = curve_.projective && curve_.genus == 0;
    bool per_point_class = curve_.genus >= 1;
    size_t n_ray = rays.size();
    size_t first_point_gen = pres.generators.size();
    if (single_point_class) pres.generators.push_back("[pt]");
    if (per_point_class)
        for (const auto& p : marked_points()) pres.generators.push_back("[" + p + "]");

    size_t n_gen = pres.generators.size();

    auto vertical_col = [&](const std::string& p, const QVec& v) -> size_t {
        size_t idx = n_ray;
        for (const auto& q : marked_points()) {
            for (const auto& w : slice_verts[q]) {
                if (q == p && w == v) return idx;
                ++idx;
            }
        }
        throw std::logic_error("vertical generator not found");
    };

    // One fiber relation per marked point: the class of a point of the curve
    // equals the mu-weighted sum of the verticals above it.
    size_t point_idx = 0;
    for (const auto& p : marked_points()) {
        ZVec row(n_gen, Int(0));
        for (const auto& v : slice_verts[p]) row[vertical_col(p, v)] = mu_of(v);
        if (single_point_class)
            row[first_point_gen] = -1;
        else if (per_point_class)
            row[first_point_gen + point_idx] = -1;
        pres.relations.push_back(row);
        ++point_idx;
    }
    // One relation per lattice basis weight.
    for (size_t k = 0; k < rank_; ++k) {
        ZVec row(n_gen, Int(0));
        for (size_t i = 0; i < n_ray; ++i) row[i] = rays[i][k];
        size_t idx = n_ray;
        for (const auto& p : marked_points())
            for (const auto& v : slice_verts[p]) {
                Rat c = Rat(mu_of(v)) * v[k];
                row[idx++] = c.get_num();  // integral since mu clears denominators
            }
        pres.relations.push_back(row);
    }
    return pres;
}

bool DivisorialFan::class_group_has_symbolic_part() const {
    return curve_.genus >= 1;
}

Int DivisorialFan::picard_rank(bool assert_q_factorial) const {
    if (!assert_q_factorial)
        throw std::invalid_argument("picard_rank needs the Q-factoriality assertion");
    if (!is_complete())
        throw std::invalid_argument("picard_rank needs a complete divisorial fan");
    Int rho = 1 + Int(extremal_rays().size()) - Int(rank_);
    for (const auto& p : marked_points()) rho += Int(slice(p).vertices.size()) - 1;
    return rho;
}

WeilDivisor DivisorialFan::canonical_divisor(const CurveDivisor& k_curve) const {
    if (!k_curve.is_integral())
        throw std::invalid_argument("canonical divisor on the curve must be integral");
    if (curve_.projective && k_curve.degree() != Rat(2 * (long)curve_.genus - 2))
        throw std::invalid_argument("canonical divisor on the curve has wrong degree");
    WeilDivisor w;
    std::set<std::string> pts(marked_points().begin(), marked_points().end());
    for (const auto& [p, c] : k_curve.coeffs()) pts.insert(p);
    for (const auto& p : pts) {
        Slice s = slice(p);
        Rat kp = k_curve.coeff(p);
        for (const auto& v : s.vertices) {
            Int mu = mu_of(v);
            w.add(PrimeDivisor::vertical(p, v), Rat(mu) * kp + Rat(mu) - 1);
        }
    }
    for (const auto& r : extremal_rays()) w.add(PrimeDivisor::horizontal(r), -1);
    return w;
}

ZVec DivisorialFan::class_coordinates(const WeilDivisor& w, const GroupPresentation& pres) const {
    if (!w.is_integral())
        throw std::invalid_argument("class coordinates need an integral Weil divisor");
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < pres.generators.size(); ++i) index[pres.generators[i]] = i;
    ZVec coords(pres.generators.size(), Int(0));
    for (const auto& [d, c] : w.coeffs()) {
        auto it = index.find(d.to_string());
        if (it != index.end()) {
            coords[it->second] += c.get_num();
            continue;
        }
        // A vertical over an unmarked point: its fiber relation identifies it
        // with the class of a point of the curve.
        if (d.kind == PrimeDivisor::Kind::Vertical && is_zero(d.vertex) &&
            index.count("[pt]")) {
            coords[index.at("[pt]")] += c.get_num();
            continue;
        }
        if (d.kind == PrimeDivisor::Kind::Vertical && is_zero(d.vertex) && !curve_.projective)
            continue;  // principal on an affine rational curve
        throw std::invalid_argument("Weil divisor uses a prime divisor outside the presentation: " +
                                    d.to_string());
    }
    return coords;
}

}  // namespace tfan
