#pragma once

#include "movcone/birational.hpp"
#include "movcone/exact.hpp"
#include "movcone/fano.hpp"
#include "movcone/invariants.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace movcone {

enum class WallKind {
    determinantal,
    type_I,
    type_II,
    type_III,
    K3_fibration,
    elliptic_fibration,
    double_cover_small,
};

std::string to_string(WallKind k);

struct Wall {
    DivClass cls; // reference basis (N^1 of the F-model)
    WallKind kind = WallKind::type_I;
    std::map<std::string, long long> certificates;
    std::optional<DivClass> exc_ref; // exceptional-surface class, when one applies
    int owner_chamber = -1;          // chamber whose contraction this wall supports
    std::string target;              // what the wall contracts to / fibers over
};

enum class Provenance { F_side, E_side, flopped, mirrored };

// A chamber of the movable cone: a marked minimal model.
struct Model {
    std::string id;          // X_F, X_E, X_F+, psi.X_E, ...
    std::string model_class; // identifies the abstract model for dedup
    NumericalProfile own_profile;
    Mat2 marking; // own basis -> reference basis, det +-1
    std::pair<DivClass, DivClass> nef_ref; // (left ray, right ray), cross(left,right) < 0
    Provenance provenance = Provenance::F_side;
};

struct MovableCone {
    std::string case_id;
    bool finite = true;
    std::vector<Model> chambers; // ordered left to right
    std::vector<Wall> walls;     // chambers.size() + 1, ordered left to right
    // finite: walls.front()/back() generate the movable cone.
    // infinite: they generate the fundamental domain; the data below is set.
    std::optional<PushforwardMap> generator; // pullback matrix [rho^*]
    std::optional<AccumulationRays> rays;
    std::string bir_note; // reported birational-automorphism structure

    const Wall& left_boundary() const { return walls.front(); }
    const Wall& right_boundary() const { return walls.back(); }
};

// Nef cone of the F-side model: <H, L - (min a_i) H>.
std::pair<DivClass, DivClass> nef_cone(const SplitPair& pair);

// Contraction type of a nef-boundary wall by its intersection certificates,
// evaluated in the model's own coordinates.
Wall classify_wall(const Model& m, const DivClass& w_ref, const DivClass& exc_ref);

// Runs the per-family resolution script and re-verifies every certificate.
MovableCone build_movable(const SplitPair& pair);

struct VerifyReport {
    bool pass = true;
    int tiles = 0;  // distinct models in the finite case
    int chambers = 0;
    int translates_checked = 0;
    std::vector<std::string> notes;
};

VerifyReport verify_cone_conjecture(const MovableCone& mc, int depth);

} // namespace movcone
