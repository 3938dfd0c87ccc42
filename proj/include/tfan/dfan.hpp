#pragma once

#include "tfan/pdiv.hpp"
#include "tfan/snf.hpp"

namespace tfan {

// An invariant prime divisor: vertical = (point, slice vertex), horizontal =
// extremal ray of the tailfan.
struct PrimeDivisor {
    enum class Kind { Vertical, Horizontal };
    Kind kind;
    std::string point;  // vertical only
    QVec vertex;        // vertical only
    ZVec ray;           // horizontal only (primitive)

    static PrimeDivisor vertical(std::string p, QVec v);
    static PrimeDivisor horizontal(ZVec r);

    bool operator<(const PrimeDivisor& o) const;
    bool operator==(const PrimeDivisor& o) const;
    std::string to_string() const;
};

// Finitely supported Z- or Q-combination of invariant prime divisors.
class WeilDivisor {
public:
    WeilDivisor() = default;

    void add(const PrimeDivisor& d, const Rat& c);
    Rat coeff(const PrimeDivisor& d) const;
    const std::map<PrimeDivisor, Rat>& coeffs() const { return coeffs_; }
    bool is_integral() const;
    bool is_zero() const { return coeffs_.empty(); }

    WeilDivisor operator+(const WeilDivisor& o) const;
    WeilDivisor operator-(const WeilDivisor& o) const;
    WeilDivisor operator*(const Rat& c) const;
    bool operator==(const WeilDivisor& o) const { return coeffs_ == o.coeffs_; }

    std::string to_string() const;

private:
    std::map<PrimeDivisor, Rat> coeffs_;
};

// One slice of a divisorial fan: the maximal cells of the polyhedral complex
// of fibers at a point, with the divisors that own each cell.
struct Slice {
    std::string point;
    std::vector<Polyhedron> max_cells;                 // deterministic order
    std::vector<std::vector<std::string>> cell_labels; // aligned with max_cells
    std::vector<QVec> vertices;                        // union, lex-sorted

    // Index of the unique maximal cell with the given tailcone, if unique.
    std::optional<size_t> cell_with_tail(const Cone& sigma) const;
    std::optional<size_t> cell_containing(const QVec& v) const;
};

struct ValidationIssue {
    std::string what;
    Tri severity;  // No = violation, Unknown = undecidable part
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool valid() const;
    bool has_unknown() const;
    std::string to_string() const;
};

// A divisorial fan: proper polyhedral divisors over one curve, pairwise
// intersecting in common faces. Derived data (slices, tailfan, prime
// divisors) is computed on demand and cached at construction.
class DivisorialFan {
public:
    DivisorialFan(Curve curve, std::vector<PolyhedralDivisor> divisors);

    const Curve& curve() const { return curve_; }
    const std::vector<PolyhedralDivisor>& divisors() const { return divisors_; }
    size_t lattice_rank() const { return rank_; }

    // Points of the curve at which some member stores a coefficient, in
    // curve order first, extras lex-sorted after.
    const std::vector<std::string>& marked_points() const { return marked_; }

    // Tailcones of all members (no faces), deduplicated; maximal ones.
    const std::vector<Cone>& tailcones() const { return tailcones_; }
    std::vector<Cone> maximal_tailcones() const;
    std::vector<ZVec> tailfan_rays() const;

    Slice slice(const std::string& p) const;

    ValidationReport validate() const;
    bool is_complete() const;

    std::vector<ZVec> extremal_rays() const;
    std::vector<PrimeDivisor> prime_divisors() const;

    // div(f · chi^u) where div(f) = f_data on the curve.
    WeilDivisor principal_weil(const CurveDivisor& f_data, const QVec& u) const;

    GroupPresentation class_group() const;
    bool class_group_has_symbolic_part() const;  // genus >= 1 summand left abstract

    Int picard_rank(bool assert_q_factorial) const;

    WeilDivisor canonical_divisor(const CurveDivisor& k_curve) const;

    // Coefficient vector of an integral Weil divisor in class-group
    // coordinates; verticals over unmarked points land on the curve-class
    // generator through their fiber relation.
    ZVec class_coordinates(const WeilDivisor& w, const GroupPresentation& pres) const;

private:
    Curve curve_;
    std::vector<PolyhedralDivisor> divisors_;
    size_t rank_;
    std::vector<std::string> marked_;
    std::vector<Cone> tailcones_;
};

}  // namespace tfan
