#include "tfan/downgrade.hpp"

#include <set>
#include <stdexcept>

namespace tfan {

namespace {

QMat to_qmat(const ZMat& m) {
    QMat q;
    for (const auto& row : m) q.push_back(to_qvec(row));
    return q;
}

}  // namespace

void DowngradeData::check() const {
    if (quotient_rank() != 1)
        throw std::invalid_argument("downgrade needs a rank-one quotient lattice");
    size_t nx = ambient_dim();
    size_t n = base_rank();
    if (nx != n + 1) throw std::invalid_argument("ambient rank must be base rank + 1");
    for (const auto& r : ambient_rays)
        if (r.size() != nx) throw std::invalid_argument("ambient ray dimension mismatch");
    if (f.size() != nx || p.size() != n || p_prime.size() != 1)
        throw std::invalid_argument("splitting matrices have wrong shapes");
    // P ∘ F = id, P' ∘ F = 0
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Int s = 0;
            for (size_t k = 0; k < nx; ++k) s += p[i][k] * f[k][j];
            if (s != (i == j ? 1 : 0)) throw std::invalid_argument("P∘F is not the identity");
        }
    for (size_t j = 0; j < n; ++j) {
        Int s = 0;
        for (size_t k = 0; k < nx; ++k) s += p_prime[0][k] * f[k][j];
        if (s != 0) throw std::invalid_argument("P'∘F is not zero");
    }
    for (const auto& cone : max_cones)
        for (size_t idx : cone)
            if (idx >= ambient_rays.size())
                throw std::invalid_argument("cone refers to a missing ray");
}

DivisorialFan downgrade_fan(const DowngradeData& data) {
    data.check();
    size_t nx = data.ambient_dim();
    size_t n = data.base_rank();
    Curve curve;
    curve.genus = 0;
    curve.projective = true;
    curve.marked_points = {"0", "inf"};
    QMat proj = to_qmat(data.p);

    std::vector<PolyhedralDivisor> divisors;
    for (size_t ci = 0; ci < data.max_cones.size(); ++ci) {
        std::vector<ZVec> gens;
        for (size_t idx : data.max_cones[ci]) gens.push_back(data.ambient_rays[idx]);
        Cone sigma = Cone::from_generators(gens, nx);

        auto slab = [&](long level) {
            std::vector<HalfSpace> ineqs;
            for (const auto& fct : sigma.facet_normals()) ineqs.push_back(HalfSpace{fct, Rat(0)});
            std::vector<HalfSpace> eqs;
            for (const auto& e : sigma.equations()) eqs.push_back(HalfSpace{e, Rat(0)});
            eqs.push_back(HalfSpace{data.p_prime[0], Rat(level)});
            Polyhedron s = Polyhedron::from_hrep(ineqs, eqs, nx);
            if (s.is_empty()) return Polyhedron::empty(n);
            return s.linear_image(proj);
        };

        Polyhedron tail_slab = slab(0);
        Cone tail = Cone::from_generators(tail_slab.rays(), n);
        std::map<std::string, Polyhedron> coeffs;
        coeffs.emplace("0", slab(1));
        coeffs.emplace("inf", slab(-1));
        divisors.emplace_back("sigma" + std::to_string(ci), curve, tail, std::move(coeffs));
    }
    return DivisorialFan(curve, std::move(divisors));
}

SupportFunction downgrade_cartier(const DowngradeData& data, const DivisorialFan* fan,
                                  const std::vector<ZVec>& cone_weights) {
    data.check();
    if (cone_weights.size() != data.max_cones.size())
        throw std::invalid_argument("one weight per maximal cone required");
    size_t nx = data.ambient_dim();
    size_t n = data.base_rank();

    std::vector<Cone> cones;
    for (const auto& idxs : data.max_cones) {
        std::vector<ZVec> gens;
        for (size_t idx : idxs) gens.push_back(data.ambient_rays[idx]);
        cones.push_back(Cone::from_generators(gens, nx));
    }
    // Continuity of the toric data across shared faces.
    for (size_t i = 0; i < cones.size(); ++i)
        for (size_t j = i + 1; j < cones.size(); ++j) {
            Polyhedron meet =
                Polyhedron::from_cone(cones[i]).intersect(Polyhedron::from_cone(cones[j]));
            for (const auto& g : meet.rays())
                if (dot(g, cone_weights[i]) != dot(g, cone_weights[j]))
                    throw std::invalid_argument("toric weights are discontinuous");
        }

    // Section of the quotient: s(l) solves P x = 0, P' x = l.
    QMat sys;
    for (const auto& row : data.p) sys.push_back(to_qvec(row));
    sys.push_back(to_qvec(data.p_prime[0]));
    auto section = [&](long level) {
        QVec rhs(nx, Rat(0));
        rhs[nx - 1] = level;
        return solve_square(sys, rhs);
    };

    auto pulled_weight = [&](size_t ci) {
        ZVec w(n, Int(0));
        for (size_t k = 0; k < n; ++k)
            for (size_t r = 0; r < nx; ++r) w[k] += data.f[r][k] * cone_weights[ci][r];
        return w;
    };

    // Match fan divisors back to ambient cones by name ("sigma<i>").
    std::map<std::string, size_t> cone_of;
    for (size_t ci = 0; ci < cones.size(); ++ci) cone_of["sigma" + std::to_string(ci)] = ci;

    std::map<Cone, ZVec> tail_weights;
    for (const auto& d : fan->divisors()) {
        auto it = cone_of.find(d.name());
        if (it == cone_of.end())
            throw std::invalid_argument("fan does not come from this downgrade data");
        Cone tail = d.tail();
        if (!tail_weights.count(tail)) tail_weights[tail] = pulled_weight(it->second);
    }
    // Keep only the maximal tailcones.
    std::map<Cone, ZVec> max_tw;
    for (const auto& sigma : fan->maximal_tailcones()) max_tw[sigma] = tail_weights.at(sigma);

    std::map<std::string, std::vector<AffinePiece>> pieces;
    for (const auto& pt : fan->marked_points()) {
        long level = (pt == "0") ? 1 : -1;
        QVec s = section(level);
        Slice slice = fan->slice(pt);
        std::vector<AffinePiece> ps;
        for (size_t i = 0; i < slice.max_cells.size(); ++i) {
            size_t ci = cone_of.at(slice.cell_labels[i][0]);
            Rat offset = dot(s, cone_weights[ci]);
            ps.push_back(AffinePiece{pulled_weight(ci), offset});
        }
        pieces[pt] = std::move(ps);
    }
    return SupportFunction(fan, "downgraded", std::move(max_tw), std::move(pieces));
}

void DpdData::check() const {
    curve.check();
    switch (kind) {
        case Case::Elliptic:
            if (!curve.projective)
                throw std::invalid_argument("elliptic case needs a projective curve");
            if (d_plus.degree() <= 0)
                throw std::invalid_argument("elliptic case needs positive degree");
            if (!d_minus.is_zero())
                throw std::invalid_argument("elliptic case takes a single divisor");
            break;
        case Case::Parabolic:
            if (curve.projective)
                throw std::invalid_argument("parabolic case needs an affine curve");
            if (!d_minus.is_zero())
                throw std::invalid_argument("parabolic case takes a single divisor");
            break;
        case Case::Hyperbolic: {
            if (curve.projective)
                throw std::invalid_argument("hyperbolic case needs an affine curve");
            CurveDivisor sum = d_plus + d_minus;
            for (const auto& [p, c] : sum.coeffs())
                if (c > 0) throw std::invalid_argument("hyperbolic case needs D+ + D- <= 0");
            break;
        }
    }
}

PolyhedralDivisor dpd_to_pdiv(const DpdData& data) {
    data.check();
    std::map<std::string, Polyhedron> coeffs;
    if (data.kind == DpdData::Case::Hyperbolic) {
        Cone tail(1);
        std::set<std::string> pts;
        for (const auto& [p, c] : data.d_plus.coeffs()) pts.insert(p);
        for (const auto& [p, c] : data.d_minus.coeffs()) pts.insert(p);
        for (const auto& p : pts) {
            Rat lo = data.d_plus.coeff(p);
            Rat hi = -data.d_minus.coeff(p);
            coeffs.emplace(p, Polyhedron::make({{lo}, {hi}}, {}, 1));
        }
        return PolyhedralDivisor("dpd", data.curve, tail, std::move(coeffs));
    }
    Cone tail = Cone::from_generators({{Int(1)}}, 1);
    for (const auto& [p, c] : data.d_plus.coeffs())
        coeffs.emplace(p, Polyhedron::make({{c}}, {{Int(1)}}, 1));
    return PolyhedralDivisor("dpd", data.curve, tail, std::move(coeffs));
}

DpdClosedForm dpd_closed_form(const DpdData& data, const CurveDivisor& k_curve) {
    data.check();
    DpdClosedForm out;
    bool projective = data.curve.projective;

    // Vertical prime divisors per marked point, in slice order (lo before hi).
    struct Vert {
        std::string point;
        Rat v;
        Int num;  // v = num/den in lowest terms
        Int den;
    };
    std::vector<Vert> verts;
    std::set<std::string> pts;
    for (const auto& [p, c] : data.d_plus.coeffs()) pts.insert(p);
    for (const auto& [p, c] : data.d_minus.coeffs()) pts.insert(p);
    for (const auto& p : pts) {
        if (data.kind == DpdData::Case::Hyperbolic) {
            Rat lo = data.d_plus.coeff(p);
            Rat hi = -data.d_minus.coeff(p);
            verts.push_back({p, lo, lo.get_num(), lo.get_den()});
            if (hi != lo) verts.push_back({p, hi, hi.get_num(), hi.get_den()});
        } else {
            Rat v = data.d_plus.coeff(p);
            verts.push_back({p, v, v.get_num(), v.get_den()});
        }
    }

    bool horizontal = (data.kind != DpdData::Case::Hyperbolic) && !projective;
    // (elliptic: the degree polyhedron meets the ray, so no horizontal part;
    //  parabolic: the affine locus leaves the fiber-at-infinity class [C])

    GroupPresentation& pres = out.class_group;
    if (horizontal)
        pres.generators.push_back(PrimeDivisor::horizontal({Int(1)}).to_string());
    for (const auto& v : verts)
        pres.generators.push_back(PrimeDivisor::vertical(v.point, {v.v}).to_string());
    if (projective) pres.generators.push_back("[pt]");

    size_t n_gen = pres.generators.size();
    size_t base = horizontal ? 1 : 0;

    // Fiber relations pi^*(point) = sum of multiplicities.
    for (const auto& p : pts) {
        ZVec row(n_gen, Int(0));
        for (size_t i = 0; i < verts.size(); ++i)
            if (verts[i].point == p) row[base + i] = verts[i].den;
        if (projective) row[n_gen - 1] = -1;
        pres.relations.push_back(row);
    }
    // Degree relation from the grading weight.
    ZVec deg_row(n_gen, Int(0));
    if (horizontal) deg_row[0] = 1;
    for (size_t i = 0; i < verts.size(); ++i) deg_row[base + i] = verts[i].num;
    pres.relations.push_back(deg_row);

    // Canonical divisor: pi^* K_C + sum (multiplicity - 1) over verticals,
    // minus the horizontal class when present.
    WeilDivisor k;
    for (size_t i = 0; i < verts.size(); ++i) {
        Rat c = Rat(verts[i].den) * k_curve.coeff(verts[i].point) + Rat(verts[i].den) - 1;
        k.add(PrimeDivisor::vertical(verts[i].point, {verts[i].v}), c);
    }
    for (const auto& [p, c] : k_curve.coeffs())
        if (!pts.count(p)) k.add(PrimeDivisor::vertical(p, {Rat(0)}), c);
    if (horizontal) k.add(PrimeDivisor::horizontal({Int(1)}), -1);
    out.canonical = k;
    return out;
}

}  // namespace tfan
