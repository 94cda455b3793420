#pragma once

#include "movcone/exact.hpp"
#include "movcone/fano.hpp"
#include "movcone/invariants.hpp"

#include <optional>
#include <vector>

namespace movcone {

enum class MapKind { determinantal_flop, small_flop, involution, composite };

// Pushforward on N^1 between two marked models; columns are the images of
// the source basis {L, H} in the target basis.
struct PushforwardMap {
    Mat2 matrix;
    std::string source_model;
    std::string target_model;
    MapKind kind = MapKind::composite;
};

PushforwardMap inverse(const PushforwardMap& m);

struct FlopSolution {
    Rational alpha;
    Rational beta; // alpha*beta < 0
};

// Solves H_E^3 b^2 - 2(L.H^2) b + (L^2.H - L_E^2.H_E) = 0 for the pushforward
// chi_*L = alpha L_E + beta H_E of the determinantal flop, picks the root with
// alpha*beta < 0, and checks the discriminant square (2 d_M c2(F-E^dual))^2 =
// (2 L_E.H_E^2)^2 coming from the recurrence relations.
PushforwardMap determinantal_flop(const NumericalProfile& pF, const NumericalProfile& pE,
                                  const FanoBase& base);

// Unique non-identity integral g with g(fixed) = fixed preserving the cubic
// monomials against the fixed class (fixed^2 . gV = fixed^2 . V and
// fixed . (gV)^2 = fixed . V^2), with g^2 = id. Returns nullopt when no such
// solution exists; throws "ambiguous symmetry" when two survive.
std::optional<PushforwardMap> symmetry_solver(const NumericalProfile& p, const DivClass& fixed,
                                              const std::string& model_id = "X");

// Matrix product of pushforwards, maps listed in application order
// (first applied first); adjacent model ids must match.
PushforwardMap compose(const std::vector<PushforwardMap>& maps);

struct AccumulationRays {
    DivClass dominant;   // eigenray of the larger eigenvalue
    DivClass secondary;
    QuadExt spectral_radius;
};

// Eigen rays of a hyperbolic pushforward matrix; "finite order or parabolic"
// when the eigenvalues do not separate in absolute value.
AccumulationRays accumulation_rays(const Mat2& m);

// Primitive integral functional vanishing on the wall, positive on the
// chamber interior.
CurveClass primitive_curve(const DivClass& wall, const DivClass& interior);

} // namespace movcone
