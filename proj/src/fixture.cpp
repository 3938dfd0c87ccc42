#include "tfan/fixture.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace tfan {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::invalid_argument("fixture error at " + where + ": " + what);
}

Rat parse_rat_field(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat((long)j.get<long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    fail(where, "expected a rational as integer or \"p/q\" string");
}

QVec parse_qvec(const json& j, size_t dim, const std::string& where) {
    if (!j.is_array() || j.size() != dim)
        fail(where, "expected an array of length " + std::to_string(dim));
    QVec v;
    for (size_t i = 0; i < j.size(); ++i)
        v.push_back(parse_rat_field(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

ZVec parse_zvec(const json& j, size_t dim, const std::string& where) {
    QVec q = parse_qvec(j, dim, where);
    ZVec z;
    for (const auto& x : q) {
        if (!is_integral(x)) fail(where, "expected integers");
        z.push_back(x.get_num());
    }
    return z;
}

ZMat parse_zmat(const json& j, size_t cols, const std::string& where) {
    if (!j.is_array() || j.empty()) fail(where, "expected a nonempty matrix");
    ZMat m;
    for (size_t i = 0; i < j.size(); ++i)
        m.push_back(parse_zvec(j[i], cols, where + "[" + std::to_string(i) + "]"));
    return m;
}

Curve parse_curve(const json& j, const std::string& where) {
    Curve c;
    if (!j.is_object()) fail(where, "expected a curve object");
    c.genus = j.value("genus", 0);
    c.projective = j.value("projective", true);
    if (j.contains("points"))
        for (const auto& p : j.at("points")) c.marked_points.push_back(p.get<std::string>());
    c.check();
    return c;
}

Polyhedron parse_coefficient(const json& j, size_t rank, const std::string& where) {
    if (j.is_string() && j.get<std::string>() == "empty") return Polyhedron::empty(rank);
    if (!j.is_object()) fail(where, "expected {vertices, rays} or \"empty\"");
    std::vector<QVec> verts;
    std::vector<ZVec> rays;
    if (j.contains("vertices"))
        for (size_t i = 0; i < j.at("vertices").size(); ++i)
            verts.push_back(parse_qvec(j.at("vertices")[i], rank,
                                       where + ".vertices[" + std::to_string(i) + "]"));
    if (j.contains("rays"))
        for (size_t i = 0; i < j.at("rays").size(); ++i)
            rays.push_back(
                parse_zvec(j.at("rays")[i], rank, where + ".rays[" + std::to_string(i) + "]"));
    if (verts.empty()) fail(where, "a nonempty coefficient needs at least one vertex");
    return Polyhedron::make(std::move(verts), std::move(rays), rank);
}

json rat_json(const Rat& q) { return rat_to_machine(q); }

json qvec_json(const QVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_json(x));
    return a;
}

json zvec_json(const ZVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_si());
    return a;
}

}  // namespace

Fixture parse_fixture_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("fixture is not valid JSON: ") + e.what());
    }
    Fixture fx;
    fx.name = j.value("name", "fixture");

    size_t rank = 0;
    Curve curve;
    bool have_curve = j.contains("curve");
    if (have_curve) curve = parse_curve(j.at("curve"), "curve");
    if (j.contains("lattice_rank")) rank = j.at("lattice_rank").get<size_t>();

    if (j.contains("divisors")) {
        if (!have_curve) fail("divisors", "a fan needs a curve block");
        if (rank == 0) fail("divisors", "a fan needs lattice_rank >= 1");
        const json& jd = j.at("divisors");
        if (!jd.is_array() || jd.empty()) fail("divisors", "no divisors");
        std::vector<PolyhedralDivisor> divs;
        for (size_t i = 0; i < jd.size(); ++i) {
            std::string where = "divisors[" + std::to_string(i) + "]";
            const json& d = jd[i];
            std::string name = d.value("name", "D" + std::to_string(i));
            std::vector<ZVec> tail_rays;
            if (d.contains("tail_rays"))
                for (size_t k = 0; k < d.at("tail_rays").size(); ++k)
                    tail_rays.push_back(parse_zvec(d.at("tail_rays")[k], rank,
                                                   where + ".tail_rays[" + std::to_string(k) + "]"));
            Cone tail = Cone::from_generators(tail_rays, rank);
            std::map<std::string, Polyhedron> coeffs;
            if (d.contains("coefficients"))
                for (const auto& [pt, cj] : d.at("coefficients").items())
                    coeffs.emplace(pt,
                                   parse_coefficient(cj, rank, where + ".coefficients." + pt));
            divs.emplace_back(name, curve, tail, std::move(coeffs));
        }
        fx.fan = std::make_unique<DivisorialFan>(curve, std::move(divs));
    }

    if (j.contains("downgrade")) {
        const json& dj = j.at("downgrade");
        DowngradeData data;
        size_t nx = dj.at("ambient_rays")[0].size();
        for (size_t i = 0; i < dj.at("ambient_rays").size(); ++i)
            data.ambient_rays.push_back(
                parse_zvec(dj.at("ambient_rays")[i], nx, "downgrade.ambient_rays"));
        for (const auto& cj : dj.at("max_cones")) {
            std::vector<size_t> cone;
            for (const auto& idx : cj) cone.push_back(idx.get<size_t>());
            data.max_cones.push_back(cone);
        }
        data.f = parse_zmat(dj.at("F"), nx - 1, "downgrade.F");
        data.p = parse_zmat(dj.at("P"), nx, "downgrade.P");
        data.p_prime = parse_zmat(dj.at("P_prime"), nx, "downgrade.P_prime");
        data.check();
        if (dj.contains("weights"))
            for (const auto& wj : dj.at("weights"))
                fx.downgrade_weights.push_back(parse_zvec(wj, nx, "downgrade.weights"));
        fx.downgrade = std::move(data);
        if (!fx.fan) fx.fan = std::make_unique<DivisorialFan>(downgrade_fan(*fx.downgrade));
    }

    if (j.contains("support_functions")) {
        if (!fx.fan) fail("support_functions", "support functions need a fan");
        for (size_t i = 0; i < j.at("support_functions").size(); ++i) {
            const json& sj = j.at("support_functions")[i];
            std::string where = "support_functions[" + std::to_string(i) + "]";
            std::string name = sj.value("name", "h" + std::to_string(i));
            std::map<Cone, ZVec> tw;
            for (const auto& twj : sj.at("tail_weights")) {
                std::vector<ZVec> gens;
                for (const auto& gj : twj.at("cone_rays"))
                    gens.push_back(parse_zvec(gj, fx.fan->lattice_rank(), where + ".tail_weights"));
                Cone c = Cone::from_generators(gens, fx.fan->lattice_rank());
                tw[c] = parse_zvec(twj.at("u"), fx.fan->lattice_rank(), where + ".tail_weights.u");
            }
            std::map<std::string, std::vector<AffinePiece>> pieces;
            if (sj.contains("points"))
                for (const auto& pj : sj.at("points")) {
                    std::string pt = pj.at("point").get<std::string>();
                    Slice slice = fx.fan->slice(pt);
                    std::vector<AffinePiece> ps(slice.max_cells.size());
                    std::vector<bool> seen(slice.max_cells.size(), false);
                    for (const auto& cj : pj.at("cells")) {
                        Polyhedron cell = parse_coefficient(cj, fx.fan->lattice_rank(),
                                                            where + ".points." + pt);
                        auto it = std::find(slice.max_cells.begin(), slice.max_cells.end(), cell);
                        if (it == slice.max_cells.end())
                            fail(where + ".points." + pt, "cell is not a maximal cell of the slice");
                        size_t idx = it - slice.max_cells.begin();
                        if (seen[idx]) fail(where + ".points." + pt, "duplicate cell");
                        seen[idx] = true;
                        ps[idx].weight =
                            parse_zvec(cj.at("u"), fx.fan->lattice_rank(), where + ".u");
                        ps[idx].offset = parse_rat_field(cj.at("a"), where + ".a");
                    }
                    for (bool s : seen)
                        if (!s) fail(where + ".points." + pt, "missing cell data");
                    pieces[pt] = std::move(ps);
                }
            fx.support_functions.emplace_back(fx.fan.get(), name, std::move(tw), std::move(pieces));
        }
    }

    if (j.contains("dpd")) {
        const json& dj = j.at("dpd");
        DpdData data;
        std::string kind = dj.at("case").get<std::string>();
        if (kind == "elliptic")
            data.kind = DpdData::Case::Elliptic;
        else if (kind == "parabolic")
            data.kind = DpdData::Case::Parabolic;
        else if (kind == "hyperbolic")
            data.kind = DpdData::Case::Hyperbolic;
        else
            fail("dpd.case", "expected elliptic, parabolic or hyperbolic");
        data.curve = parse_curve(dj.at("curve"), "dpd.curve");
        std::map<std::string, Rat> dp, dm;
        if (dj.contains("d_plus"))
            for (const auto& [pt, cj] : dj.at("d_plus").items())
                dp[pt] = parse_rat_field(cj, "dpd.d_plus." + pt);
        if (dj.contains("d_minus"))
            for (const auto& [pt, cj] : dj.at("d_minus").items())
                dm[pt] = parse_rat_field(cj, "dpd.d_minus." + pt);
        data.d_plus = CurveDivisor(dp);
        data.d_minus = CurveDivisor(dm);
        data.check();
        fx.dpd = std::move(data);
    }

    if (!fx.fan && !fx.dpd) fail("fixture", "no divisors, downgrade or dpd block present");
    return fx;
}

Fixture parse_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open fixture file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fixture_text(ss.str());
}

std::string serialize_fixture(const Fixture& fx) {
    json j;
    j["name"] = fx.name;
    if (fx.fan) {
        const Curve& c = fx.fan->curve();
        j["curve"] = {{"genus", c.genus}, {"projective", c.projective}};
        json pts = json::array();
        for (const auto& p : c.marked_points) pts.push_back(p);
        j["curve"]["points"] = pts;
        j["lattice_rank"] = fx.fan->lattice_rank();
        json divs = json::array();
        for (const auto& d : fx.fan->divisors()) {
            json dj;
            dj["name"] = d.name();
            json tr = json::array();
            for (const auto& r : d.tail().generators()) tr.push_back(zvec_json(r));
            dj["tail_rays"] = tr;
            json cj;
            for (const auto& [pt, poly] : d.stored_coeffs()) {
                if (poly.is_empty()) {
                    cj[pt] = "empty";
                    continue;
                }
                json pj;
                json vs = json::array();
                for (const auto& v : poly.vertices()) vs.push_back(qvec_json(v));
                pj["vertices"] = vs;
                json rs = json::array();
                for (const auto& r : poly.rays()) rs.push_back(zvec_json(r));
                pj["rays"] = rs;
                cj[pt] = pj;
            }
            dj["coefficients"] = cj;
            divs.push_back(dj);
        }
        j["divisors"] = divs;
    }
    if (!fx.support_functions.empty()) {
        json sfs = json::array();
        for (const auto& h : fx.support_functions) {
            json sj;
            sj["name"] = h.name();
            json tws = json::array();
            for (const auto& [cone, u] : h.tail_weights()) {
                json twj;
                json gens = json::array();
                for (const auto& g : cone.generators()) gens.push_back(zvec_json(g));
                twj["cone_rays"] = gens;
                twj["u"] = zvec_json(u);
                tws.push_back(twj);
            }
            sj["tail_weights"] = tws;
            json pts = json::array();
            for (const auto& [pt, ps] : h.pieces()) {
                json pj;
                pj["point"] = pt;
                json cells = json::array();
                Slice slice = h.fan()->slice(pt);
                for (size_t i = 0; i < ps.size(); ++i) {
                    json cj;
                    json vs = json::array();
                    for (const auto& v : slice.max_cells[i].vertices()) vs.push_back(qvec_json(v));
                    cj["vertices"] = vs;
                    json rs = json::array();
                    for (const auto& r : slice.max_cells[i].rays()) rs.push_back(zvec_json(r));
                    cj["rays"] = rs;
                    cj["u"] = zvec_json(ps[i].weight);
                    cj["a"] = rat_json(ps[i].offset);
                    cells.push_back(cj);
                }
                pj["cells"] = cells;
                pts.push_back(pj);
            }
            sj["points"] = pts;
            sfs.push_back(sj);
        }
        j["support_functions"] = sfs;
    }
    if (fx.downgrade) {
        json dj;
        json rays = json::array();
        for (const auto& r : fx.downgrade->ambient_rays) rays.push_back(zvec_json(r));
        dj["ambient_rays"] = rays;
        json cones = json::array();
        for (const auto& c : fx.downgrade->max_cones) {
            json cj = json::array();
            for (size_t idx : c) cj.push_back(idx);
            cones.push_back(cj);
        }
        dj["max_cones"] = cones;
        auto mat_json = [](const ZMat& m) {
            json mj = json::array();
            for (const auto& row : m) mj.push_back(zvec_json(row));
            return mj;
        };
        dj["F"] = mat_json(fx.downgrade->f);
        dj["P"] = mat_json(fx.downgrade->p);
        dj["P_prime"] = mat_json(fx.downgrade->p_prime);
        if (!fx.downgrade_weights.empty()) {
            json ws = json::array();
            for (const auto& w : fx.downgrade_weights) ws.push_back(zvec_json(w));
            dj["weights"] = ws;
        }
        j["downgrade"] = dj;
    }
    if (fx.dpd) {
        json dj;
        dj["case"] = fx.dpd->kind == DpdData::Case::Elliptic     ? "elliptic"
                     : fx.dpd->kind == DpdData::Case::Parabolic ? "parabolic"
                                                                : "hyperbolic";
        dj["curve"] = {{"genus", fx.dpd->curve.genus}, {"projective", fx.dpd->curve.projective}};
        json pts = json::array();
        for (const auto& p : fx.dpd->curve.marked_points) pts.push_back(p);
        dj["curve"]["points"] = pts;
        json dp, dm;
        for (const auto& [p, c] : fx.dpd->d_plus.coeffs()) dp[p] = rat_json(c);
        for (const auto& [p, c] : fx.dpd->d_minus.coeffs()) dm[p] = rat_json(c);
        dj["d_plus"] = dp.is_null() ? json::object() : dp;
        dj["d_minus"] = dm.is_null() ? json::object() : dm;
        j["dpd"] = dj;
    }
    return j.dump(2) + "\n";
}

}  // namespace tfan
