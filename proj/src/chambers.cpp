#include "movcone/chambers.hpp"

#include <algorithm>
#include <set>

namespace movcone {

std::string to_string(WallKind k) {
    switch (k) {
    case WallKind::determinantal: return "determinantal";
    case WallKind::type_I: return "type_I";
    case WallKind::type_II: return "type_II";
    case WallKind::type_III: return "type_III";
    case WallKind::K3_fibration: return "K3_fibration";
    case WallKind::elliptic_fibration: return "elliptic_fibration";
    case WallKind::double_cover_small: return "double_cover_small";
    }
    return "?";
}

std::pair<DivClass, DivClass> nef_cone(const SplitPair& pair) {
    if (!cy_condition(pair))
        throw Error(Errc::not_calabi_yau, "not Calabi-Yau: " + pair.case_id());
    return {DivClass(0, 1), DivClass(1, -pair.min_f())};
}

namespace {

long long ival(const QuadExt& q) { return to_int64(q.rational_value()); }

[[noreturn]] void fail_wall(const DivClass& w, const std::string& why) {
    throw Error(Errc::verification_failure,
                "chamber verification failure at wall " + to_string(w) + ": " + why);
}

// Orders two rays so that cross(left, right) < 0.
std::pair<DivClass, DivClass> order_cone(const DivClass& a, const DivClass& b) {
    int s = cross(a, b).sign();
    if (s == 0)
        throw Error(Errc::verification_failure, "degenerate chamber cone");
    return s < 0 ? std::make_pair(a, b) : std::make_pair(b, a);
}

std::string default_target(WallKind k) {
    switch (k) {
    case WallKind::determinantal: return "nodal determinantal hypersurface";
    case WallKind::type_I: return "nodal Calabi-Yau threefold (flop)";
    case WallKind::double_cover_small: return "double cover of P^3";
    case WallKind::type_II: return "point (del Pezzo surface contracted)";
    case WallKind::type_III: return "curve (surface contracted to a curve)";
    case WallKind::K3_fibration: return "P^1 (K3 pencil)";
    case WallKind::elliptic_fibration: return "surface (elliptic fibration)";
    }
    return "";
}

void expect_kind(Wall& w, WallKind k) {
    if (w.kind != k)
        fail_wall(w.cls, "classified " + to_string(w.kind) + ", script expects " + to_string(k));
    if (w.target.empty())
        w.target = default_target(k);
}

struct Ctx {
    const SplitPair* pair = nullptr;
    NumericalProfile pF, pE;
    PushforwardMap chi;
    long long nodes = 0;
    Model F, E;
};

Ctx make_ctx(const SplitPair& pair) {
    Ctx c;
    c.pair = &pair;
    c.pF = profile(pair, Side::F_side);
    c.pE = profile(pair, Side::E_side);
    c.nodes = odp_count(pair);
    c.chi = determinantal_flop(c.pF, c.pE, *pair.base);

    // Determinantal-flop consistency: flopping the odp-many wall-H curves and
    // reading the result through chi reproduces the E-side profile.
    CurveClass det_curve = primitive_curve(DivClass(0, 1), DivClass(1, 0));
    NumericalProfile flopped = flop_update(c.pF, det_curve, c.nodes);
    if (!(transport(c.pE, c.chi.matrix) == flopped))
        throw Error(Errc::verification_failure,
                    "chamber verification failure at wall H: flop_update disagrees with chi");

    c.F.id = "X_F";
    c.F.model_class = "X_F";
    c.F.own_profile = c.pF;
    c.F.marking = Mat2::identity();
    c.F.nef_ref = {DivClass(0, 1), DivClass(1, -pair.min_f())};
    c.F.provenance = Provenance::F_side;

    c.E.id = "X_E";
    c.E.model_class = "X_E";
    c.E.own_profile = c.pE;
    c.E.marking = c.chi.matrix.inverse();
    c.E.nef_ref = order_cone(apply(c.E.marking, DivClass(0, 1)),
                             apply(c.E.marking, DivClass(1, -pair.min_e())));
    c.E.provenance = Provenance::E_side;
    return c;
}

DivClass f_side_exc(const SplitPair& pair) { return DivClass(1, -pair.max_f()); }

DivClass e_side_exc(const Ctx& c) {
    return apply(c.E.marking, DivClass(1, -c.pair->max_e()));
}

Wall determinantal_wall(const Ctx& c, int owner) {
    Model fm = c.F;
    Wall w = classify_wall(fm, DivClass(0, 1), f_side_exc(*c.pair));
    if (w.kind != WallKind::type_I && w.kind != WallKind::double_cover_small)
        fail_wall(w.cls, "determinantal wall is not small");
    w.kind = WallKind::determinantal;
    w.certificates["odp"] = c.nodes;
    w.owner_chamber = owner;
    w.target = default_target(WallKind::determinantal);
    return w;
}

enum class Family { rank2, rank3_a11, k3_221, bordiga, quintic, gr41 };

Family detect_family(const SplitPair& pair) {
    const auto& f = pair.f_twists;
    if (pair.base->id == "P4" && f == std::vector<int>{1, 1, 1, 1, 1})
        return Family::quintic;
    if (pair.base->id == "Gr24" && f == std::vector<int>{1, 1, 1, 1})
        return Family::gr41;
    if (pair.base->id == "P4" && f == std::vector<int>{2, 1, 1, 1} && pair.e_trivial())
        return Family::bordiga;
    if (pair.base->id == "P4" && f == std::vector<int>{2, 2, 1} && pair.e_trivial())
        return Family::k3_221;
    if (pair.rank() == 2)
        return Family::rank2;
    if (pair.rank() == 3 && f[1] == 1 && f[2] == 1)
        return Family::rank3_a11;
    throw Error(Errc::unknown_case, "no resolution script for " + pair.case_id());
}

MovableCone build_two_chambers(const SplitPair& pair) {
    Ctx c = make_ctx(pair);
    Family fam = detect_family(pair);

    MovableCone mc;
    mc.case_id = pair.case_id();
    mc.finite = true;
    mc.chambers = {c.E, c.F};

    Wall left = classify_wall(c.E, c.E.nef_ref.first, e_side_exc(c));
    Wall mid = determinantal_wall(c, 1);
    Wall right = classify_wall(c.F, c.F.nef_ref.second, f_side_exc(pair));
    left.owner_chamber = 0;
    right.owner_chamber = 1;

    if (fam == Family::rank2) {
        bool square = pair.max_f() == pair.min_f();
        if (pair.e_trivial())
            expect_kind(right, square ? WallKind::K3_fibration : WallKind::type_II);
        else
            expect_kind(right, WallKind::type_II);
        expect_kind(left, pair.e_trivial() ? WallKind::K3_fibration : WallKind::type_II);
        if (left.kind == WallKind::type_II || right.kind == WallKind::type_II) {
            // exceptional del Pezzo surfaces, cross-checked in surface_invariants
            surface_invariants(pair);
            surface_invariants(swap_normalize(pair));
        }
    } else { // rank3_a11
        int a = pair.max_f();
        expect_kind(right, a == 1 ? WallKind::elliptic_fibration : WallKind::type_III);
        bool self_mirror = pair.base->id == "P4" && pair.f_twists == std::vector<int>{2, 1, 1} &&
                           !pair.e_trivial();
        expect_kind(left, self_mirror ? WallKind::type_III
                                      : (a == 1 ? WallKind::elliptic_fibration
                                                : WallKind::elliptic_fibration));
        if (a >= 2)
            surface_invariants(pair);
    }
    mc.walls = {left, mid, right};
    return mc;
}

MovableCone build_221(const SplitPair& pair) {
    Ctx c = make_ctx(pair);

    // the small wall L-H flops exactly one curve (the (-1)-curve of the
    // once-blown-up K3 surface in |L-2H|)
    DivClass small_wall(1, -1);
    CurveClass curve = primitive_curve(small_wall, DivClass(1, 0));
    const long long count = 1;
    Model plus;
    plus.id = "X_F+";
    plus.model_class = "X_F+";
    plus.own_profile = flop_update(c.pF, curve, count);
    plus.marking = Mat2::identity();
    plus.nef_ref = {small_wall, DivClass(1, -2)};
    plus.provenance = Provenance::flopped;

    MovableCone mc;
    mc.case_id = pair.case_id();
    mc.finite = true;
    mc.chambers = {c.E, c.F, plus};

    Wall w0 = classify_wall(c.E, c.E.nef_ref.first, e_side_exc(c));
    expect_kind(w0, WallKind::elliptic_fibration);
    w0.owner_chamber = 0;
    w0.target = "P^2 (elliptic fibration)";

    Wall w1 = determinantal_wall(c, 1);

    Wall w2 = classify_wall(c.F, small_wall, f_side_exc(pair));
    expect_kind(w2, WallKind::type_I);
    w2.certificates["odp"] = count;
    w2.owner_chamber = 1;
    w2.target = "nodal Calabi-Yau threefold with one ODP";

    Wall w3 = classify_wall(plus, DivClass(1, -2), DivClass(1, -2));
    expect_kind(w3, WallKind::K3_fibration);
    w3.owner_chamber = 2;

    mc.walls = {w0, w1, w2, w3};
    return mc;
}

MovableCone build_bordiga(const SplitPair& pair) {
    Ctx c = make_ctx(pair);

    // flop of the ten (-1)-curves of the Bordiga surface at wall L-H
    DivClass small_wall(1, -1);
    CurveClass curve = primitive_curve(small_wall, DivClass(1, 0));
    const long long count = 10;
    Model plus;
    plus.id = "X_F+";
    plus.model_class = "X_F+";
    plus.own_profile = flop_update(c.pF, curve, count);
    plus.marking = Mat2::identity();
    plus.nef_ref = {small_wall, DivClass(4, -5)};
    plus.provenance = Provenance::flopped;

    auto iota = symmetry_solver(c.pE, DivClass(1, 0), "X_E");
    if (!iota)
        throw Error(Errc::solver_failure, "no flop solution: missing double-cover involution");
    PushforwardMap psi = compose({c.chi, *iota, inverse(c.chi)});
    if (!(psi.matrix * psi.matrix).is_identity())
        fail_wall(DivClass(-1, 5), "psi is not an involution");

    auto mirror_model = [&](const Model& src, const std::string& id) {
        Model m = src;
        m.id = id;
        m.marking = psi.matrix * src.marking;
        m.nef_ref = order_cone(apply(psi.matrix, src.nef_ref.first),
                               apply(psi.matrix, src.nef_ref.second));
        m.provenance = Provenance::mirrored;
        return m;
    };
    Model mE = mirror_model(c.E, "psi.X_E");
    Model mF = mirror_model(c.F, "psi.X_F");
    Model mP = mirror_model(plus, "psi.X_F+");

    MovableCone mc;
    mc.case_id = pair.case_id();
    mc.finite = true;
    mc.chambers = {mP, mF, mE, c.E, c.F, plus};
    mc.generator = psi;

    // right half
    Wall w_det = determinantal_wall(c, 4);
    Wall w_small = classify_wall(c.F, small_wall, f_side_exc(pair));
    expect_kind(w_small, WallKind::type_I);
    w_small.certificates["odp"] = count;
    w_small.owner_chamber = 4;
    w_small.target = "nodal Calabi-Yau threefold with 10 ODPs";

    Wall w_plus = classify_wall(plus, DivClass(4, -5), DivClass(1, -2));
    expect_kind(w_plus, WallKind::type_II);
    if (w_plus.certificates["KS2"] != 9)
        fail_wall(w_plus.cls, "contracted surface is not a plane");
    w_plus.owner_chamber = 5;
    w_plus.target = "1/3(1,1,1) point (plane contracted)";

    Wall w_cover = classify_wall(c.E, DivClass(-1, 5), e_side_exc(c));
    expect_kind(w_cover, WallKind::double_cover_small);
    long long cover_nodes = double_cover_odps(hodge(pair).euler, 8);
    w_cover.certificates["odp"] = cover_nodes;
    w_cover.owner_chamber = 3;
    w_cover.target = "double cover of P^3 branched in a nodal octic";

    auto mirror_wall = [&](const Wall& src, int owner) {
        Wall w = src;
        w.cls = primitive_ray(apply(psi.matrix, src.cls));
        if (src.exc_ref)
            w.exc_ref = apply(psi.matrix, *src.exc_ref);
        w.owner_chamber = owner;
        return w;
    };
    // psi fixes the double-cover wall and reflects the rest
    if (!same_ray(apply(psi.matrix, w_cover.cls), w_cover.cls))
        fail_wall(w_cover.cls, "mirror wall is not psi-fixed");
    Wall w_det_m = mirror_wall(w_det, 1);
    Wall w_small_m = mirror_wall(w_small, 1);
    Wall w_plus_m = mirror_wall(w_plus, 0);

    mc.walls = {w_plus_m, w_small_m, w_det_m, w_cover, w_det, w_small, w_plus};
    return mc;
}

// declarative re-basing data for the quintic-type matrix structures:
// on X_E the second determinantal structure reads (L'', H'') = (L_E + H_E, L_E),
// on X_F the primed structure reads (L', H') = (L, L - H).
MovableCone build_quintic(const SplitPair& pair) {
    Ctx c = make_ctx(pair);

    Mat2 P2; // columns: L'' and H'' in {L_E, H_E} coordinates
    P2.m = {{{Rational(1), Rational(1)}, {Rational(1), Rational(0)}}};
    Mat2 P1; // columns: L' and H' in {L, H} coordinates
    P1.m = {{{Rational(1), Rational(1)}, {Rational(0), Rational(-1)}}};
    Mat2 swap;
    swap.m = {{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}};

    // the re-based structures are numerically the original pair again
    if (!(transport(c.pE, P2) == c.pF))
        fail_wall(DivClass(-1, 5), "sigma'' re-basing does not reproduce the F-side profile");
    if (!(transport(c.pF, P1) == c.pF))
        fail_wall(DivClass(1, -1), "sigma' re-basing does not reproduce the F-side profile");
    PushforwardMap flop2 = determinantal_flop(transport(c.pE, P2), c.pE, *pair.base);
    PushforwardMap flop3 = determinantal_flop(transport(c.pF, P1), c.pE, *pair.base);

    // [rho^*] = [chi^-1]_* [iota_E]_* swap [iota_F^-1]_*
    Mat2 iota_e = P2 * flop2.matrix.inverse();      // X+ (sigma'' basis) -> X_E
    Mat2 iota_f_inv = flop3.matrix * P1.inverse();  // X_F -> X+ (sigma' basis)
    Mat2 rho_star = c.chi.matrix.inverse() * iota_e * swap * iota_f_inv;

    PushforwardMap gen;
    gen.matrix = rho_star;
    gen.source_model = "X_F";
    gen.target_model = "X_F";
    gen.kind = MapKind::composite;

    // flopped model X+, recognized as the sigma'-E-side determinantal model
    DivClass small_wall(1, -1);
    CurveClass curve = primitive_curve(small_wall, DivClass(1, 0));
    NumericalProfile flopped = flop_update(c.pF, curve, c.nodes);
    Model plus;
    plus.id = "X+";
    plus.model_class = "X+";
    plus.own_profile = c.pE;
    plus.own_profile.basis = {"L+", "H+"};
    plus.marking = iota_f_inv.inverse();
    plus.nef_ref = order_cone(apply(plus.marking, DivClass(0, 1)),
                              apply(plus.marking, DivClass(1, 0)));
    plus.provenance = Provenance::flopped;
    if (!(transport(plus.own_profile, iota_f_inv) == flopped))
        fail_wall(small_wall, "flop_update disagrees with the sigma' structure");

    MovableCone mc;
    mc.case_id = pair.case_id();
    mc.finite = false;
    mc.chambers = {c.E, c.F, plus};
    mc.generator = gen;
    mc.rays = accumulation_rays(rho_star);
    mc.bir_note = "Bir(X_F) is generated by the flop composite rho together with Aut(X_F)";

    Wall w0 = classify_wall(c.E, c.E.nef_ref.first, e_side_exc(c));
    expect_kind(w0, WallKind::type_I);
    w0.certificates["odp"] = c.nodes;
    w0.owner_chamber = 0;
    Wall w1 = determinantal_wall(c, 1);
    Wall w2 = classify_wall(c.F, small_wall, f_side_exc(pair));
    expect_kind(w2, WallKind::type_I);
    w2.certificates["odp"] = c.nodes;
    w2.owner_chamber = 1;
    Wall w3 = classify_wall(plus, plus.nef_ref.second, plus.nef_ref.second);
    expect_kind(w3, WallKind::type_I);
    w3.certificates["odp"] = c.nodes;
    w3.owner_chamber = 2;
    mc.walls = {w0, w1, w2, w3};
    return mc;
}

MovableCone build_gr41(const SplitPair& pair) {
    Ctx c = make_ctx(pair);

    auto iota_f = symmetry_solver(c.pF, DivClass(1, -1), "X_F");
    auto iota_e = symmetry_solver(c.pE, DivClass(1, 0), "X_E");
    if (!iota_f || !iota_e)
        throw Error(Errc::solver_failure, "no flop solution: missing double-cover involution");
    PushforwardMap theta = compose({c.chi, *iota_e, inverse(c.chi)});
    // rho = iota_F o theta, so [rho^*] = [theta]_* [iota_F]_*
    Mat2 rho_star = theta.matrix * iota_f->matrix;

    PushforwardMap gen;
    gen.matrix = rho_star;
    gen.source_model = "X_F";
    gen.target_model = "X_F";
    gen.kind = MapKind::composite;

    Model chE = c.E; // chi-marked copy of X_E
    chE.id = "X_E";
    Model mE = c.E;
    mE.id = "iota_E.X_E";
    mE.marking = c.E.marking * iota_e->matrix;
    mE.nef_ref = order_cone(apply(mE.marking, DivClass(0, 1)), apply(mE.marking, DivClass(1, 0)));
    mE.provenance = Provenance::mirrored;
    Model mF = c.F;
    mF.id = "theta.X_F";
    mF.marking = theta.matrix;
    mF.nef_ref = order_cone(apply(theta.matrix, c.F.nef_ref.first),
                            apply(theta.matrix, c.F.nef_ref.second));
    mF.provenance = Provenance::mirrored;

    MovableCone mc;
    mc.case_id = pair.case_id();
    mc.finite = false;
    mc.chambers = {mF, mE, chE, c.F};
    mc.generator = gen;
    mc.rays = accumulation_rays(rho_star);
    mc.bir_note = "Bir(X_F) = Aut(X_F).<rho, iota_F>";

    // the double-cover walls are crossed by the deck involutions; the paper
    // states no node count for these covers, so none is certified here
    Wall wf = classify_wall(c.F, DivClass(1, -1), f_side_exc(pair));
    expect_kind(wf, WallKind::double_cover_small);
    wf.owner_chamber = 3;
    Wall wdet = determinantal_wall(c, 3);
    Wall we = classify_wall(c.E, c.E.nef_ref.first, e_side_exc(c));
    expect_kind(we, WallKind::double_cover_small);
    we.owner_chamber = 2;
    Wall wdet_m = wdet;
    wdet_m.cls = primitive_ray(apply(theta.matrix, wdet.cls));
    if (wdet_m.exc_ref)
        wdet_m.exc_ref = apply(theta.matrix, *wdet.exc_ref);
    wdet_m.owner_chamber = 0;
    Wall wf_m = wf;
    wf_m.cls = primitive_ray(apply(theta.matrix, wf.cls));
    if (wf_m.exc_ref)
        wf_m.exc_ref = apply(theta.matrix, *wf.exc_ref);
    wf_m.owner_chamber = 0;

    mc.walls = {wf_m, wdet_m, we, wdet, wf};
    return mc;
}

} // namespace

Wall classify_wall(const Model& m, const DivClass& w_ref, const DivClass& exc_ref) {
    Mat2 to_own = m.marking.inverse();
    DivClass w = apply(to_own, w_ref);
    DivClass S = apply(to_own, exc_ref);
    const NumericalProfile& p = m.own_profile;
    const DivClass L(1, 0), H(0, 1);

    Wall out;
    out.cls = w_ref;
    out.exc_ref = exc_ref;
    long long g3 = ival(cubic_eval(p, w, w, w));
    out.certificates["G3"] = g3;
    if (g3 > 0) {
        long long g2s = ival(cubic_eval(p, w, w, S));
        out.certificates["G2S"] = g2s;
        if (g2s > 0) {
            out.kind = (g3 == 2) ? WallKind::double_cover_small : WallKind::type_I;
        } else if (g2s == 0) {
            long long gs2 = ival(cubic_eval(p, w, S, S));
            out.certificates["GS2"] = gs2;
            out.certificates["KS2"] = ival(cubic_eval(p, S, S, S));
            if (gs2 == 0)
                out.kind = WallKind::type_II;
            else if (gs2 < 0)
                out.kind = WallKind::type_III;
            else
                fail_wall(w_ref, "positive G.S^2 with vanishing G^2.S");
        } else {
            fail_wall(w_ref, "negative G^2.S on a big wall");
        }
    } else if (g3 == 0) {
        long long g2l = ival(cubic_eval(p, w, w, L));
        long long g2h = ival(cubic_eval(p, w, w, H));
        out.certificates["G2L"] = g2l;
        out.certificates["G2H"] = g2h;
        if (g2l == 0 && g2h == 0) {
            long long c2g = ival(c2_eval(p, w));
            out.certificates["c2G"] = c2g;
            if (c2g != 24)
                throw Error(Errc::verification_failure,
                            "unrecognized fibration at wall " + to_string(w_ref) + ": c2 pairing " +
                                std::to_string(c2g));
            out.kind = WallKind::K3_fibration;
        } else {
            out.kind = WallKind::elliptic_fibration;
        }
    } else {
        fail_wall(w_ref, "negative top self-intersection");
    }
    out.target = default_target(out.kind);
    return out;
}

MovableCone build_movable(const SplitPair& pair) {
    if (!cy_condition(pair))
        throw Error(Errc::not_calabi_yau, "not Calabi-Yau: " + pair.case_id());
    if (!is_catalog_case(pair))
        throw Error(Errc::unknown_case, "not a catalog case: " + pair.case_id());
    switch (detect_family(pair)) {
    case Family::rank2:
    case Family::rank3_a11:
        return build_two_chambers(pair);
    case Family::k3_221:
        return build_221(pair);
    case Family::bordiga:
        return build_bordiga(pair);
    case Family::quintic:
        return build_quintic(pair);
    case Family::gr41:
        return build_gr41(pair);
    }
    throw Error(Errc::unknown_case, "no resolution script for " + pair.case_id());
}

VerifyReport verify_cone_conjecture(const MovableCone& mc, int depth) {
    VerifyReport rep;
    rep.chambers = static_cast<int>(mc.chambers.size());
    auto fail = [&](const std::string& why) {
        throw Error(Errc::verification_failure, "cone conjecture check failed: " + why);
    };

    if (mc.walls.size() != mc.chambers.size() + 1)
        fail("wall/chamber count mismatch");
    for (size_t i = 0; i + 1 < mc.walls.size(); ++i)
        if (cross(mc.walls[i].cls, mc.walls[i + 1].cls).sign() >= 0)
            fail("walls out of order at index " + std::to_string(i));
    if (cross(mc.walls.front().cls, mc.walls.back().cls).sign() >= 0)
        fail("cone is not salient");
    for (size_t i = 0; i < mc.chambers.size(); ++i) {
        const Model& m = mc.chambers[i];
        if (!same_ray(m.nef_ref.first, mc.walls[i].cls) ||
            !same_ray(m.nef_ref.second, mc.walls[i + 1].cls))
            fail("chamber " + m.id + " does not match its walls");
        Rational dt = m.marking.det();
        if (boost::multiprecision::abs(numerator(dt)) != 1 || !m.marking.is_integral())
            fail("marking of " + m.id + " is not unimodular");
    }
    // markings glue over shared walls: transitions are unimodular lattice
    // maps and any round trip multiplies back to the identity
    for (size_t i = 0; i + 1 < mc.chambers.size(); ++i) {
        Mat2 forward = mc.chambers[i + 1].marking.inverse() * mc.chambers[i].marking;
        Mat2 back = mc.chambers[i].marking.inverse() * mc.chambers[i + 1].marking;
        if (!forward.is_integral() || boost::multiprecision::abs(numerator(forward.det())) != 1)
            fail("transition between chambers " + std::to_string(i) + " and " +
                 std::to_string(i + 1) + " is not unimodular");
        if (!(back * forward).is_identity())
            fail("marking round trip across wall " + to_string(mc.walls[i + 1].cls) +
                 " is not the identity");
    }
    // re-derive every certificate from the owning chamber's profile
    for (const Wall& w : mc.walls) {
        if (w.owner_chamber < 0 || !w.exc_ref)
            continue;
        Wall again = classify_wall(mc.chambers[static_cast<size_t>(w.owner_chamber)], w.cls, *w.exc_ref);
        WallKind stored = (w.kind == WallKind::determinantal) ? again.kind : w.kind;
        if (again.kind != stored)
            fail("wall " + to_string(w.cls) + " reclassified as " + to_string(again.kind));
        for (const auto& [key, value] : again.certificates) {
            auto it = w.certificates.find(key);
            if (it == w.certificates.end() || it->second != value)
                fail("certificate " + key + " at wall " + to_string(w.cls) + " does not recompute");
        }
    }

    if (mc.finite) {
        for (const Wall* w : {&mc.walls.front(), &mc.walls.back()})
            if (w->kind == WallKind::type_I || w->kind == WallKind::double_cover_small ||
                w->kind == WallKind::determinantal)
                fail("boundary wall " + to_string(w->cls) + " is small");
        std::set<std::string> keys;
        for (const Model& m : mc.chambers) {
            Mat2 to_own = m.marking.inverse();
            DivClass a = primitive_ray(apply(to_own, m.nef_ref.first));
            DivClass b = primitive_ray(apply(to_own, m.nef_ref.second));
            std::string key;
            for (const auto& v : m.own_profile.cubic)
                key += to_string(v) + ";";
            for (const auto& v : m.own_profile.c2)
                key += to_string(v) + ";";
            std::string ra = to_string(a), rb = to_string(b);
            key += (ra < rb) ? ra + "|" + rb : rb + "|" + ra;
            keys.insert(key);
        }
        rep.tiles = static_cast<int>(keys.size());
        rep.notes.push_back("finite tiling with " + std::to_string(rep.tiles) +
                            " distinct minimal models");
        return rep;
    }

    // infinite: translate the fundamental domain by the generator
    if (!mc.generator || !mc.rays)
        fail("infinite cone without generator data");
    const Mat2& g = mc.generator->matrix;
    Mat2 g_inv = g.inverse();
    if (!(mc.rays->spectral_radius > QuadExt(Rational(1))))
        fail("generator is not hyperbolic: spectral radius <= 1");
    const DivClass eplus = mc.rays->dominant;
    const DivClass eminus = mc.rays->secondary;
    if (!same_ray(apply(g, eplus), eplus) || !same_ray(apply(g, eminus), eminus))
        fail("boundary rays are not generator eigenrays");

    DivClass left = mc.walls.front().cls;
    DivClass right = mc.walls.back().cls;
    // the generator glues the fundamental domain to its neighbor
    if (!same_ray(apply(g, right), left))
        fail("generator does not glue the fundamental domain to its translate");
    if (cross(eplus, left).sign() >= 0 || cross(right, eminus).sign() >= 0)
        fail("fundamental domain leaves the eigen cone");

    DivClass wl = left;
    for (int k = 1; k <= depth; ++k) {
        DivClass next = apply(g, wl);
        if (cross(next, wl).sign() >= 0)
            fail("leftward translates stop being monotone at k=" + std::to_string(k));
        if (cross(eplus, next).sign() >= 0)
            fail("leftward translate crosses the accumulation ray at k=" + std::to_string(k));
        wl = next;
    }
    DivClass wr = right;
    for (int k = 1; k <= depth; ++k) {
        DivClass next = apply(g_inv, wr);
        if (cross(wr, next).sign() >= 0)
            fail("rightward translates stop being monotone at k=" + std::to_string(k));
        if (cross(next, eminus).sign() >= 0)
            fail("rightward translate crosses the accumulation ray at k=" + std::to_string(k));
        wr = next;
    }
    rep.translates_checked = 2 * depth;
    rep.notes.push_back("checked " + std::to_string(2 * depth) +
                        " fundamental-domain translates, slopes monotone toward the eigenrays");
    return rep;
}

} // namespace movcone
