#pragma once

#include <string>
#include <vector>

#include "tfan/vec.hpp"

namespace tfan {

// Integer matrices, row-major.
using ZMat = std::vector<ZVec>;

// U * A * V = D with U, V unimodular and D diagonal with d1 | d2 | ...
struct SmithResult {
    ZMat d;  // same shape as input
    ZMat u;  // rows x rows
    ZMat v;  // cols x cols
    std::vector<Int> diagonal;  // nonnegative, divisibility chain, zeros last
};

SmithResult smith_normal_form(ZMat a);

// Is the target vector in the integer column lattice of a?
bool in_column_lattice(const ZMat& a, const ZVec& target);

// A finitely generated abelian group presented by generators and integer
// relations (one relation per row). Invariants come from the Smith form.
struct GroupPresentation {
    std::vector<std::string> generators;
    ZMat relations;  // each row has generators.size() entries

    size_t free_rank() const;
    std::vector<Int> torsion() const;  // invariant factors > 1, divisibility order

    // e.g. "Z^2", "Z ⊕ Z/2", "0"
    std::string invariants_string() const;

    // True iff the given generator-coefficient vector lies in the relation
    // lattice, i.e. represents the trivial class.
    bool is_trivial_class(const ZVec& coeffs) const;
};

}  // namespace tfan
