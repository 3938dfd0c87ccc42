#include "tfan/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace tfan {

namespace {

ZMat identity(size_t n) {
    ZMat m(n, ZVec(n, Int(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

void add_row(ZMat& m, size_t dst, size_t src, const Int& f) {
    for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += f * m[src][j];
}

void add_col(ZMat& m, size_t dst, size_t src, const Int& f) {
    for (size_t i = 0; i < m.size(); ++i) m[i][dst] += f * m[i][src];
}

void swap_cols(ZMat& m, size_t a, size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

void negate_row(ZMat& m, size_t r) {
    for (auto& x : m[r]) x = -x;
}

}  // namespace

SmithResult smith_normal_form(ZMat a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    SmithResult res;
    res.u = identity(rows);
    res.v = identity(cols);
    if (rows == 0 || cols == 0) {
        res.d = a;
        return res;
    }

    size_t t = 0;
    while (t < rows && t < cols) {
        // Pivot: smallest nonzero absolute value in the remaining block.
        size_t pi = rows, pj = cols;
        Int best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                Int v = abs(a[i][j]);
                if (best == 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break;  // block is zero
        std::swap(a[pi], a[t]);
        std::swap(res.u[pi], res.u[t]);
        swap_cols(a, pj, t);
        swap_cols(res.v, pj, t);

        bool dirty = false;
        for (size_t i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0) continue;
            Int q = a[i][t] / a[t][t];  // truncated division keeps remainders small
            add_row(a, i, t, -q);
            add_row(res.u, i, t, -q);
            if (a[i][t] != 0) dirty = true;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) continue;
            Int q = a[t][j] / a[t][t];
            add_col(a, j, t, -q);
            add_col(res.v, j, t, -q);
            if (a[t][j] != 0) dirty = true;
        }
        if (dirty) continue;  // nonzero remainders left; pick a smaller pivot

        // Pivot must divide the remaining block for the invariant-factor chain.
        bool fixed = true;
        for (size_t i = t + 1; i < rows && fixed; ++i)
            for (size_t j = t + 1; j < cols && fixed; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    add_row(a, t, i, 1);
                    add_row(res.u, t, i, 1);
                    fixed = false;
                }
        if (!fixed) continue;

        if (a[t][t] < 0) {
            negate_row(a, t);
            negate_row(res.u, t);
        }
        ++t;
    }

    res.d = a;
    for (size_t i = 0; i < std::min(rows, cols); ++i) res.diagonal.push_back(a[i][i]);
    return res;
}

bool in_column_lattice(const ZMat& a, const ZVec& target) {
    size_t rows = a.size();
    if (target.size() != rows) throw std::invalid_argument("lattice membership: size mismatch");
    SmithResult s = smith_normal_form(a);
    // target in im(A) over Z iff U*target lies in im(D).
    ZVec w(rows, Int(0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < rows; ++j) w[i] += s.u[i][j] * target[j];
    size_t cols = rows ? a[0].size() : 0;
    for (size_t i = 0; i < rows; ++i) {
        Int d = (i < std::min(rows, cols)) ? s.diagonal[i] : Int(0);
        if (d == 0) {
            if (w[i] != 0) return false;
        } else if (w[i] % d != 0) {
            return false;
        }
    }
    return true;
}

size_t GroupPresentation::free_rank() const {
    if (relations.empty()) return generators.size();
    SmithResult s = smith_normal_form(relations);
    size_t r = 0;
    for (const auto& d : s.diagonal)
        if (d != 0) ++r;
    return generators.size() - r;
}

std::vector<Int> GroupPresentation::torsion() const {
    std::vector<Int> t;
    if (relations.empty()) return t;
    SmithResult s = smith_normal_form(relations);
    for (const auto& d : s.diagonal)
        if (d > 1) t.push_back(d);
    return t;
}

std::string GroupPresentation::invariants_string() const {
    size_t r = free_rank();
    std::vector<Int> t = torsion();
    std::string s;
    if (r == 1)
        s = "Z";
    else if (r > 1)
        s = "Z^" + std::to_string(r);
    for (const auto& d : t) {
        if (!s.empty()) s += " + ";
        s += "Z/" + d.get_str();
    }
    if (s.empty()) s = "0";
    return s;
}

bool GroupPresentation::is_trivial_class(const ZVec& coeffs) const {
    if (coeffs.size() != generators.size())
        throw std::invalid_argument("class vector has wrong length");
    // Columns of relations^T span the relation lattice inside Z^generators.
    size_t g = generators.size();
    ZMat at(g, ZVec(relations.size(), Int(0)));
    for (size_t i = 0; i < relations.size(); ++i)
        for (size_t j = 0; j < g; ++j) at[j][i] = relations[i][j];
    if (relations.empty()) {
        return is_zero(coeffs);
    }
    return in_column_lattice(at, coeffs);
}

}  // namespace tfan
