#include "tfan/commands.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace tfan {

using nlohmann::json;

const std::vector<std::string> kCommands = {
    "validate", "slices",    "primes", "classgroup", "rank",      "canonical",
    "cartier",  "weil",      "box",    "sections",   "positivity", "volume",
    "intersect", "downgrade", "dpd"};

namespace {

struct Out {
    std::ostringstream text;
    json machine = json::object();
    int exit_code = 0;

    void unknown() { if (exit_code == 0) exit_code = 2; }
    void invalid() { exit_code = 1; }
};

json weil_json(const WeilDivisor& w) {
    json a = json::array();
    for (const auto& [d, c] : w.coeffs()) a.push_back({{"prime", d.to_string()}, {"coeff", rat_to_machine(c)}});
    return a;
}

json curve_div_json(const CurveDivisor& d) {
    json o = json::object();
    for (const auto& [p, c] : d.coeffs()) o[p] = rat_to_machine(c);
    return o;
}

const DivisorialFan& need_fan(const Fixture& fx) {
    if (!fx.fan) throw std::invalid_argument("this command needs a fan in the fixture");
    return *fx.fan;
}

const std::vector<SupportFunction>& need_sfs(const Fixture& fx) {
    if (fx.support_functions.empty())
        throw std::invalid_argument("this command needs a support function in the fixture");
    return fx.support_functions;
}

void cmd_validate(const Fixture& fx, Out& out) {
    const auto& fan = need_fan(fx);
    ValidationReport rep = fan.validate();
    bool complete = rep.valid() ? fan.is_complete() : false;
    out.text << "fan: " << fx.name << " (" << fan.divisors().size() << " divisors, rank "
             << fan.lattice_rank() << ")\n";
    out.text << "validation: " << (rep.valid() ? "valid" : "INVALID") << "\n";
    for (const auto& issue : rep.issues)
        out.text << "  - " << (issue.severity == Tri::No ? "violation: " : "unknown: ")
                 << issue.what << "\n";
    if (rep.valid()) out.text << "complete: " << (complete ? "yes" : "no") << "\n";
    out.machine["valid"] = rep.valid();
    out.machine["complete"] = complete;
    json issues = json::array();
    for (const auto& issue : rep.issues) issues.push_back(issue.what);
    out.machine["issues"] = issues;
    if (!rep.valid()) out.invalid();
    else if (rep.has_unknown()) out.unknown();
}

void cmd_slices(const Fixture& fx, Out& out) {
    const auto& fan = need_fan(fx);
    json slices = json::array();
    out.text << "tailfan rays:";
    for (const auto& r : fan.tailfan_rays()) out.text << " " << vec_to_string(r);
    out.text << "\n";
    for (const auto& p : fan.marked_points()) {
        Slice s = fan.slice(p);
        out.text << "slice at " << p << ":\n";
        json cells = json::array();
        for (size_t i = 0; i < s.max_cells.size(); ++i) {
            out.text << "  " << s.max_cells[i].to_string() << "  [";
            for (size_t k = 0; k < s.cell_labels[i].size(); ++k)
                out.text << (k ? "," : "") << s.cell_labels[i][k];
            out.text << "]\n";
            json cj;
            cj["cell"] = s.max_cells[i].to_string();
            cj["labels"] = s.cell_labels[i];
            cells.push_back(cj);
        }
        out.text << "  vertices:";
        json vs = json::array();
        for (const auto& v : s.vertices) {
            out.text << " " << vec_to_string(v);
            vs.push_back(vec_to_string(v));
        }
        out.text << "\n";
        slices.push_back({{"point", p}, {"cells", cells}, {"vertices", vs}});
    }
    out.machine["slices"] = slices;
}

void cmd_primes(const Fixture& fx, Out& out) {
    const auto& fan = need_fan(fx);
    json primes = json::array();
    for (const auto& d : fan.prime_divisors()) {
        Rat mu = 1;
        if (d.kind == PrimeDivisor::Kind::Vertical) mu = Rat(mu_of(d.vertex));
        out.text << d.to_string();
        if (d.kind == PrimeDivisor::Kind::Vertical) out.text << "  mu=" << rat_to_string(mu);
        out.text << "\n";
        primes.push_back({{"prime", d.to_string()}, {"mu", rat_to_machine(mu)}});
    }
    out.machine["primes"] = primes;
}

void cmd_classgroup(const Fixture& fx, Out& out) {
    const auto& fan = need_fan(fx);
    GroupPresentation pres = fan.class_group();
    out.text << "generators:";
    for (const auto& g : pres.generators) out.text << " " << g;
    out.text << "\nrelations:\n";
    for (const auto& row : pres.relations) {
        out.text << " ";
        for (const auto& x : row) out.text << " " << x.get_str();
        out.text << "\n";
    }
    out.text << "class group: " << pres.invariants_string();
    if (fan.class_group_has_symbolic_part()) {
        out.text << "  (plus Cl^0 of the genus-" << fan.curve().genus
                 << " curve, left symbolic; point classes unreduced)";
        out.unknown();
    }
    out.text << "\n";
    out.machine["generators"] = pres.generators;
    json rels = json::array();
    for (const auto& row : pres.relations) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.get_str());
        rels.push_back(r);
    }
    out.machine["relations"] = rels;
    out.machine["invariants"] = pres.invariants_string();
    out.machine["rank"] = (long)pres.free_rank();
    out.machine["symbolic_curve_part"] = fan.class_group_has_symbolic_part();
}

void cmd_rank(const Fixture& fx, const CommandOptions& opts, Out& out) {
    const auto& fan = need_fan(fx);
    Int rho = fan.picard_rank(opts.assert_q_factorial);
    out.text << "picard rank: " << rho.get_str() << "\n";
    out.machine["picard_rank"] = rho.get_str();
}

void cmd_canonical(const Fixture& fx, const CommandOptions& opts, Out& out) {
    const auto& fan = need_fan(fx);
    std::string anchor = opts.anchor;
    if (anchor.empty()) {
        if (fan.marked_points().empty()) throw std::invalid_argument("no anchor point available");
        anchor = fan.marked_points().front();
    }
    CurveDivisor k = fan.curve().projective ? canonical_rep(fan.curve(), anchor) : CurveDivisor();
    WeilDivisor kx = fan.canonical_divisor(k);
    out.text << "K_curve = " << k.to_string() << "\n";
    out.text << "K_X = " << kx.to_string() << "\n";
    out.machine["k_curve"] = curve_div_json(k);
    out.machine["k_x"] = weil_json(kx);
}

void cmd_cartier(const Fixture& fx, Out& out) {
    json sfs = json::array();
    for (const auto& h : need_sfs(fx)) {
        ValidationReport rep = h.validate();
        out.text << h.name() << ": " << (rep.valid() ? "valid support function" : "INVALID") << "\n";
        for (const auto& issue : rep.issues) out.text << "  - " << issue.what << "\n";
        json sj;
        sj["name"] = h.name();
        sj["valid"] = rep.valid();
        if (rep.valid()) {
            Tri c = h.is_cartier();
            out.text << "  cartier: " << to_string(c) << "\n";
            sj["cartier"] = to_string(c);
            if (c == Tri::Unknown) out.unknown();
        } else {
            out.invalid();
        }
        sfs.push_back(sj);
    }
    out.machine["support_functions"] = sfs;
}

void cmd_weil(const Fixture& fx, Out& out) {
    json sfs = json::array();
    for (const auto& h : need_sfs(fx)) {
        WeilDivisor w = h.weil();
        out.text << "D_" << h.name() << " = " << w.to_string() << "\n";
        sfs.push_back({{"name", h.name()}, {"weil", weil_json(w)}});
    }
    out.machine["support_functions"] = sfs;
}

void cmd_box(const Fixture& fx, Out& out) {
    json sfs = json::array();
    for (const auto& h : need_sfs(fx)) {
        Polyhedron b = h.box();
        out.text << h.name() << ": box = " << b.to_string() << "\n";
        json sj;
        sj["name"] = h.name();
        sj["box"] = b.to_string();
        if (b.is_bounded()) {
            auto pts = b.lattice_points();
            out.text << "  lattice points (" << pts.size() << "):";
            json pj = json::array();
            for (const auto& u : pts) {
                out.text << " " << vec_to_string(u);
                pj.push_back(vec_to_string(u));
            }
            out.text << "\n";
            sj["lattice_points"] = pj;
        }
        sfs.push_back(sj);
    }
    out.machine["support_functions"] = sfs;
}

void cmd_sections(const Fixture& fx, Out& out) {
    json sfs = json::array();
    for (const auto& h : need_sfs(fx)) {
        SectionTable t = h.sections();
        out.text << h.name() << " sections by weight:\n";
        json dims = json::array();
        for (const auto& [u, dim] : t.dims) {
            out.text << "  " << vec_to_string(u) << ": "
                     << (dim ? dim->get_str() : std::string("undetermined")) << "  (h*: "
                     << h.dual(to_qvec(u)).to_string() << ")\n";
            dims.push_back({{"u", vec_to_string(u)},
                            {"dim", dim ? json(dim->get_str()) : json(nullptr)}});
        }
        if (t.total)
            out.text << "  total: " << t.total->get_str() << "\n";
        else {
            out.text << "  total: undetermined\n";
            out.unknown();
        }
        sfs.push_back({{"name", h.name()},
                       {"dims", dims},
                       {"total", t.total ? json(t.total->get_str()) : json(nullptr)}});
    }
    out.machine["support_functions"] = sfs;
}

void cmd_positivity(const Fixture& fx, Out& out) {
    json sfs = json::array();
    for (const auto& h : need_sfs(fx)) {
        Tri nef = h.is_nef(), semi = h.is_semiample(), ample = h.is_ample();
        out.text << h.name() << ": nef=" << to_string(nef) << " semiample=" << to_string(semi)
                 << " ample=" << to_string(ample) << "\n";
        if (nef == Tri::Unknown || semi == Tri::Unknown || ample == Tri::Unknown) out.unknown();
        sfs.push_back({{"name", h.name()},
                       {"nef", to_string(nef)},
                       {"semiample", to_string(semi)},
                       {"ample", to_string(ample)}});
    }
    out.machine["support_functions"] = sfs;
}

void cmd_volume(const Fixture& fx, Out& out) {
    json sfs = json::array();
    for (const auto& h : need_sfs(fx)) {
        VolumeTable t = h.volume();
        out.text << h.name() << " volume:\n";
        json pp = json::array();
        for (const auto& [p, v] : t.per_point) {
            out.text << "  at " << p << ": " << rat_to_string(v) << "\n";
            pp.push_back({{"point", p}, {"integral", rat_to_machine(v)}});
        }
        out.text << "  total: " << rat_to_string(t.total) << "\n";
        sfs.push_back(
            {{"name", h.name()}, {"per_point", pp}, {"total", rat_to_machine(t.total)}});
    }
    out.machine["support_functions"] = sfs;
}

void cmd_intersect(const Fixture& fx, Out& out) {
    const auto& fan = need_fan(fx);
    const auto& sfs = need_sfs(fx);
    size_t n = fan.lattice_rank();
    std::vector<const SupportFunction*> hs;
    if (sfs.size() == 1)
        for (size_t i = 0; i <= n; ++i) hs.push_back(&sfs[0]);
    else {
        if (sfs.size() != n + 1)
            throw std::invalid_argument("intersection number needs 1 or " + std::to_string(n + 1) +
                                        " support functions");
        for (const auto& h : sfs) hs.push_back(&h);
    }
    IntersectionResult res = intersection_number(hs);
    out.text << "intersection number (" << (n + 1) << " factors): " << rat_to_string(res.value)
             << "\n";
    for (const auto& w : res.warnings) out.text << "  warning: " << w << "\n";
    Rat paper = mixed_volume_inclusion_exclusion(hs);
    out.text << "mixed volume (polarization): " << rat_to_string(mixed_volume(hs)) << "\n";
    out.text << "inclusion-exclusion value as printed in the source (for comparison): "
             << rat_to_string(paper) << "\n";
    out.machine["intersection_number"] = rat_to_machine(res.value);
    out.machine["mixed_volume"] = rat_to_machine(mixed_volume(hs));
    out.machine["inclusion_exclusion_as_printed"] = rat_to_machine(paper);
    out.machine["warnings"] = res.warnings;
}

void cmd_downgrade(const Fixture& fx, const CommandOptions& opts, Out& out) {
    if (!fx.downgrade) throw std::invalid_argument("fixture has no downgrade block");
    DivisorialFan fan = downgrade_fan(*fx.downgrade);
    ValidationReport rep = fan.validate();
    out.text << "downgraded fan with " << fan.divisors().size() << " divisors\n";
    json divs = json::array();
    for (const auto& d : fan.divisors()) {
        out.text << "  " << d.name() << ": tail " << d.tail().to_string();
        json cj;
        cj["name"] = d.name();
        cj["tail"] = d.tail().to_string();
        for (const auto& [p, poly] : d.stored_coeffs()) {
            out.text << ", " << p << " -> " << poly.to_string();
            cj[p] = poly.to_string();
        }
        out.text << "\n";
        divs.push_back(cj);
    }
    out.text << "validation: " << (rep.valid() ? "valid" : "INVALID") << "\n";
    out.text << "complete: " << (rep.valid() && fan.is_complete() ? "yes" : "no") << "\n";
    if (!rep.valid()) out.invalid();
    out.machine["divisors"] = divs;
    out.machine["valid"] = rep.valid();

    std::vector<ZVec> weights = !opts.weights.empty() ? opts.weights : fx.downgrade_weights;
    if (!weights.empty()) {
        SupportFunction h = downgrade_cartier(*fx.downgrade, &fan, weights);
        ValidationReport hr = h.validate();
        out.text << "downgraded support function: " << (hr.valid() ? "valid" : "INVALID") << "\n";
        json cells = json::array();
        for (const auto& [p, ps] : h.pieces()) {
            Slice s = fan.slice(p);
            for (size_t i = 0; i < ps.size(); ++i) {
                out.text << "  at " << p << " on " << s.max_cells[i].to_string() << ": u="
                         << vec_to_string(ps[i].weight) << " a=" << rat_to_string(ps[i].offset)
                         << "\n";
                cells.push_back({{"point", p},
                                 {"cell", s.max_cells[i].to_string()},
                                 {"u", vec_to_string(ps[i].weight)},
                                 {"a", rat_to_machine(ps[i].offset)}});
            }
        }
        if (!hr.valid()) out.invalid();
        out.machine["support_function"] = cells;
    }
}

void cmd_dpd(const Fixture& fx, const CommandOptions& opts, Out& out) {
    if (!fx.dpd) throw std::invalid_argument("fixture has no dpd block");
    PolyhedralDivisor d = dpd_to_pdiv(*fx.dpd);
    out.text << "polyhedral divisor over " << (fx.dpd->curve.projective ? "projective" : "affine")
             << " curve, tail " << d.tail().to_string() << "\n";
    json cj;
    for (const auto& [p, poly] : d.stored_coeffs()) {
        out.text << "  " << p << " -> " << poly.to_string() << "\n";
        cj[p] = poly.to_string();
    }
    out.machine["coefficients"] = cj;

    // Evaluation round trip pins the sign conventions.
    CurveDivisor plus = d.evaluate({Rat(1)});
    bool ok = (plus == fx.dpd->d_plus);
    out.text << "evaluate(+1) = " << plus.to_string() << (ok ? "  [matches]" : "  [MISMATCH]")
             << "\n";
    if (fx.dpd->kind == DpdData::Case::Hyperbolic) {
        CurveDivisor minus = d.evaluate({Rat(-1)});
        bool ok2 = (minus == fx.dpd->d_minus);
        out.text << "evaluate(-1) = " << minus.to_string() << (ok2 ? "  [matches]" : "  [MISMATCH]")
                 << "\n";
        ok = ok && ok2;
    }
    if (!ok) out.invalid();

    DivisorialFan fan(fx.dpd->curve, {d});
    GroupPresentation machine_pres = fan.class_group();
    std::string anchor = opts.anchor;
    CurveDivisor k;
    if (fx.dpd->curve.projective) {
        if (anchor.empty()) anchor = fan.marked_points().front();
        k = canonical_rep(fx.dpd->curve, anchor);
    }
    WeilDivisor machine_k = fan.canonical_divisor(k);
    DpdClosedForm closed = dpd_closed_form(*fx.dpd, k);
    bool groups_match =
        machine_pres.invariants_string() == closed.class_group.invariants_string();
    bool canonical_match = machine_k == closed.canonical;
    out.text << "class group: " << machine_pres.invariants_string()
             << (groups_match ? "  [matches closed form]" : "  [MISMATCH with closed form: " +
                                                                closed.class_group.invariants_string() + "]")
             << "\n";
    out.text << "canonical: " << machine_k.to_string()
             << (canonical_match ? "  [matches closed form]" : "  [MISMATCH]") << "\n";
    if (!groups_match || !canonical_match) out.invalid();
    out.machine["class_group"] = machine_pres.invariants_string();
    out.machine["canonical"] = weil_json(machine_k);
    out.machine["roundtrip_ok"] = ok;
    out.machine["closed_form_match"] = groups_match && canonical_match;
}

}  // namespace

CommandResult run_command(const std::string& cmd, const Fixture& fx, const CommandOptions& opts) {
    Out out;
    out.machine["fixture"] = fx.name;
    out.machine["command"] = cmd;
    if (cmd == "validate") cmd_validate(fx, out);
    else if (cmd == "slices") cmd_slices(fx, out);
    else if (cmd == "primes") cmd_primes(fx, out);
    else if (cmd == "classgroup") cmd_classgroup(fx, out);
    else if (cmd == "rank") cmd_rank(fx, opts, out);
    else if (cmd == "canonical") cmd_canonical(fx, opts, out);
    else if (cmd == "cartier") cmd_cartier(fx, out);
    else if (cmd == "weil") cmd_weil(fx, out);
    else if (cmd == "box") cmd_box(fx, out);
    else if (cmd == "sections") cmd_sections(fx, out);
    else if (cmd == "positivity") cmd_positivity(fx, out);
    else if (cmd == "volume") cmd_volume(fx, out);
    else if (cmd == "intersect") cmd_intersect(fx, out);
    else if (cmd == "downgrade") cmd_downgrade(fx, opts, out);
    else if (cmd == "dpd") cmd_dpd(fx, opts, out);
    else throw std::invalid_argument("unknown command: " + cmd);

    CommandResult res;
    res.exit_code = out.exit_code;
    res.text = out.text.str();
    out.machine["exit_code"] = out.exit_code;
    res.machine = out.machine.dump(2) + "\n";
    return res;
}

}  // namespace tfan
