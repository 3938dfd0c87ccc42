#include "tfan/cone.hpp"

#include <algorithm>
#include <set>

namespace tfan {

namespace {

// All size-k subsets of {0..m-1}, visited in lexicographic order.
template <typename F>
void for_subsets(size_t m, size_t k, F&& visit) {
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > m) return;
    while (true) {
        visit(idx);
        size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

ConeDesc dual_cone(const std::vector<ZVec>& ineq_gens, const std::vector<ZVec>& eq_gens,
                   size_t dim) {
    QMat all;
    for (const auto& g : ineq_gens) all.push_back(to_qvec(g));
    for (const auto& e : eq_gens) all.push_back(to_qvec(e));
    std::vector<ZVec> lin = nullspace(all, dim);

    // The pointed part of the dual lives in W = {y | y _|_ eq_gens, y _|_ lin}.
    QMat wcons;
    for (const auto& e : eq_gens) wcons.push_back(to_qvec(e));
    for (const auto& l : lin) wcons.push_back(to_qvec(l));
    std::vector<ZVec> wbasis = nullspace(wcons, dim);
    size_t w = wbasis.size();

    ConeDesc out;
    out.lines = lin;
    if (w == 0 || ineq_gens.empty()) return out;

    // Inequality rows expressed in W-coordinates.
    QMat a(ineq_gens.size(), QVec(w));
    for (size_t i = 0; i < ineq_gens.size(); ++i)
        for (size_t j = 0; j < w; ++j) a[i][j] = Rat(dot(ineq_gens[i], wbasis[j]));

    std::set<ZVec> found;
    auto try_candidate = [&](const ZVec& z) {
        bool ge = true, le = true;
        for (const auto& row : a) {
            Rat s = 0;
            for (size_t j = 0; j < w; ++j) s += row[j] * Rat(z[j]);
            if (s < 0) ge = false;
            if (s > 0) le = false;
            if (!ge && !le) return;
        }
        ZVec zz = ge ? z : neg(z);
        QVec y(wbasis[0].size(), Rat(0));
        for (size_t j = 0; j < w; ++j)
            for (size_t c = 0; c < y.size(); ++c) y[c] += Rat(zz[j]) * Rat(wbasis[j][c]);
        if (!is_zero(y)) found.insert(primitive(y));
    };

    if (w == 1) {
        try_candidate({Int(1)});
    } else {
        for_subsets(a.size(), w - 1, [&](const std::vector<size_t>& idx) {
            QMat sub;
            for (size_t i : idx) sub.push_back(a[i]);
            std::vector<ZVec> ns = nullspace(sub, w);
            if (ns.size() != 1) return;  // rank too low, no candidate line
            try_candidate(ns[0]);
        });
    }

    std::vector<ZVec> rays(found.begin(), found.end());
    std::sort(rays.begin(), rays.end(), [](const ZVec& x, const ZVec& y) { return lex_less(x, y); });
    out.rays = rays;
    return out;
}

Cone Cone::from_generators(std::vector<ZVec> gens, size_t dim) {
    Cone c(dim);
    std::vector<ZVec> clean;
    for (auto& g : gens)
        if (!tfan::is_zero(g)) clean.push_back(primitive(g));
    if (clean.empty()) return c;

    ConeDesc dual = dual_cone(clean, {}, dim);
    ConeDesc primal = dual_cone(dual.rays, dual.lines, dim);
    if (!primal.lines.empty())
        throw std::invalid_argument("cone is not pointed (contains a line)");
    c.gens_ = primal.rays;
    c.facets_ = dual.rays;
    c.eqs_ = dual.lines;
    return c;
}

size_t Cone::dim() const {
    QMat m;
    for (const auto& g : gens_) m.push_back(to_qvec(g));
    return rank(m);
}

bool Cone::contains(const QVec& x) const {
    for (const auto& f : facets_)
        if (dot(x, f) < 0) return false;
    for (const auto& e : eqs_)
        if (dot(x, e) != 0) return false;
    if (gens_.empty()) return tfan::is_zero(x);
    return true;
}

bool Cone::contains_cone(const Cone& other) const {
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

bool Cone::in_dual(const QVec& u) const {
    for (const auto& g : gens_)
        if (dot(u, g) < 0) return false;
    return true;
}

Cone Cone::face_in_direction(const QVec& u) const {
    if (!in_dual(u))
        throw std::invalid_argument("direction is not in the dual cone");
    // Faces of a pointed cone are generated by the extremal rays they contain.
    std::vector<ZVec> sub;
    for (const auto& g : gens_)
        if (dot(u, g) == 0) sub.push_back(g);
    return from_generators(sub, dim_);
}

bool Cone::has_face(const Cone& f) const {
    if (!contains_cone(f)) return false;
    std::vector<ZVec> tight;
    for (const auto& n : facets_) {
        bool all = true;
        for (const auto& g : f.generators())
            if (dot(n, g) != 0) { all = false; break; }
        if (all) tight.push_back(n);
    }
    std::vector<ZVec> span;
    for (const auto& g : gens_) {
        bool on = true;
        for (const auto& n : tight)
            if (dot(n, g) != 0) { on = false; break; }
        if (on) span.push_back(g);
    }
    return from_generators(span, dim_) == f;
}

ConeDesc Cone::dual_rays() const { return dual_cone(gens_, {}, dim_); }

bool Cone::operator<(const Cone& o) const {
    if (gens_.size() != o.gens_.size()) return gens_.size() < o.gens_.size();
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (lex_less(gens_[i], o.gens_[i])) return true;
        if (lex_less(o.gens_[i], gens_[i])) return false;
    }
    return false;
}

std::string Cone::to_string() const {
    if (gens_.empty()) return "cone{0}";
    std::string s = "cone{";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += vec_to_string(gens_[i]);
    }
    return s + "}";
}

}  // namespace tfan
