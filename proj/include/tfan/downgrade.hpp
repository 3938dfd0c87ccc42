#pragma once

#include "tfan/supfun.hpp"

namespace tfan {

// A complete (or partial) toric fan in an ambient lattice, plus a splitting
// of the lattice that singles out a rank-one quotient. The quotient fan is
// the fan of P^1: level +1 maps to the point "0", level -1 to "inf".
struct DowngradeData {
    std::vector<ZVec> ambient_rays;              // primitive generators
    std::vector<std::vector<size_t>> max_cones;  // ray indices per maximal cone
    ZMat f;        // section  N -> N_X        (n_x rows, n cols)
    ZMat p;        // projection N_X -> N      (n rows, n_x cols)
    ZMat p_prime;  // projection N_X -> N' = Z (1 row, n_x cols)

    size_t ambient_dim() const { return ambient_rays.empty() ? 0 : ambient_rays[0].size(); }
    size_t quotient_rank() const { return p_prime.size(); }
    size_t base_rank() const { return p.size(); }
    void check() const;  // splitting identities P∘F = id, P'∘F = 0
};

// One polyhedral divisor per maximal cone of the ambient fan, over P^1.
DivisorialFan downgrade_fan(const DowngradeData& data);

// Downgrades toric Cartier data {u_sigma} to a support function on the
// downgraded fan: the value over a slice point is the piecewise-linear
// function of the ambient fan evaluated on the corresponding level set.
SupportFunction downgrade_cartier(const DowngradeData& data, const DivisorialFan* fan,
                                  const std::vector<ZVec>& cone_weights);

// Dolgachev-Pinkham-Demazure data for affine C*-surfaces.
struct DpdData {
    enum class Case { Elliptic, Parabolic, Hyperbolic };
    Case kind = Case::Elliptic;
    Curve curve;
    CurveDivisor d_plus;   // the divisor D (elliptic/parabolic) or D_+
    CurveDivisor d_minus;  // hyperbolic only

    void check() const;
};

PolyhedralDivisor dpd_to_pdiv(const DpdData& data);

// The closed-form class group and canonical divisor of the construction,
// assembled directly from the coefficient data (independent of the fan
// machinery; used as a cross-check).
struct DpdClosedForm {
    GroupPresentation class_group;
    WeilDivisor canonical;  // on the prime divisors of the singleton fan
};

DpdClosedForm dpd_closed_form(const DpdData& data, const CurveDivisor& k_curve);

}  // namespace tfan
