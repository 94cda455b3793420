#pragma once

#include "movcone/chern.hpp"
#include "movcone/exact.hpp"
#include "movcone/fano.hpp"

#include <optional>
#include <string>

namespace movcone {

// Cubic intersection form, c2 linear form and node count of a marked model.
struct NumericalProfile {
    std::array<Rational, 4> cubic{}; // L^3, L^2.H, L.H^2, H^3
    std::array<Rational, 2> c2{};    // c2.L, c2.H
    long long odp = 0;
    std::pair<std::string, std::string> basis{"L", "H"};

    friend bool operator==(const NumericalProfile& a, const NumericalProfile& b) {
        return a.cubic == b.cubic && a.c2 == b.c2;
    }
};

struct HodgeData {
    long long h11 = 2;
    long long h21 = 0;
    long long euler = 0; // = 2*(h11 - h21)
};

// Curve class through its pairings with L and H; kept primitive.
struct CurveClass {
    BigInt with_l;
    BigInt with_h;
};

enum class Side { F_side, E_side };

// Intersection profile of the F- or E-side determinantal model.
NumericalProfile profile(const SplitPair& pair, Side side);

// Symmetric trilinear extension of the cubic form.
QuadExt cubic_eval(const NumericalProfile& p, const DivClass& d1, const DivClass& d2,
                   const DivClass& d3);
QuadExt c2_eval(const NumericalProfile& p, const DivClass& d);

HodgeData hodge(const SplitPair& pair);

// h^0(O(D)) = D^3/6 + (c2.D)/12 for nef D (zero divisor maps to 0).
Rational rr_h0(const NumericalProfile& p, const DivClass& d);

struct SurfaceInvariants {
    DivClass exc_class; // L - (max a_i) H
    Rational ks_sq;
    std::optional<Rational> ks_dot_h;     // rank-2 contractions
    std::optional<Rational> ks_dot_fiber; // rank-3 scroll structure
    std::string surface_id;
};

SurfaceInvariants surface_invariants(const SplitPair& pair);

// Profile after flopping `count` curves of class c: cubic picks up
// -count*(D.C)^3, the c2 form +2*count*(D.C). The odp field records the wall
// just crossed.
NumericalProfile flop_update(const NumericalProfile& p, const CurveClass& c, long long count);

// Transport the profile to new coordinates: result(D) = p(basis_to_old * D).
NumericalProfile transport(const NumericalProfile& p, const Mat2& basis_to_old);

// Node count of the branch double cover through the Euler characteristic
// route: (chi(X) - (2 chi(P^3) - chi(smooth surface of degree e))) / 2.
long long double_cover_odps(long long euler_x, int branch_degree);
long long smooth_surface_chi(int degree_in_p3); // e^3 - 4e^2 + 6e

std::string profile_to_json(const NumericalProfile& p);

} // namespace movcone
