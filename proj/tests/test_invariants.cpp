#include "movcone/invariants.hpp"

#include "movcone/birational.hpp"

#include <doctest.h>

using namespace movcone;

namespace {

std::array<long long, 4> cubic_of(const NumericalProfile& p) {
    return {to_int64(p.cubic[0]), to_int64(p.cubic[1]), to_int64(p.cubic[2]), to_int64(p.cubic[3])};
}

std::array<long long, 2> c2_of(const NumericalProfile& p) {
    return {to_int64(p.c2[0]), to_int64(p.c2[1])};
}

} // namespace

TEST_CASE("profiles reproduce the published intersection tables") {
    SplitPair bordiga = make_pair("P4", {2, 1, 1, 1}, {0, 0, 0, 0});
    NumericalProfile pf = profile(bordiga, Side::F_side);
    CHECK(cubic_of(pf) == std::array<long long, 4>{99, 42, 16, 5});
    CHECK(c2_of(pf) == std::array<long long, 2>{114, 50});
    CHECK(pf.odp == 46);

    NumericalProfile pe = profile(bordiga, Side::E_side);
    CHECK(cubic_of(pe) == std::array<long long, 4>{2, 7, 9, 5});

    SplitPair p221 = make_pair("P4", {2, 2, 1}, {0, 0, 0});
    NumericalProfile p221f = profile(p221, Side::F_side);
    CHECK(cubic_of(p221f) == std::array<long long, 4>{129, 49, 17, 5});
    CHECK(c2_of(p221f) == std::array<long long, 2>{126, 50});
    CHECK(p221f.odp == 44);

    SplitPair gr = make_pair("Gr24", {1, 1, 1, 1}, {0, 0, 0, 0});
    NumericalProfile grf = profile(gr, Side::F_side);
    CHECK(cubic_of(grf) == std::array<long long, 4>{70, 40, 20, 8});
    CHECK(c2_of(grf) == std::array<long long, 2>{100, 56});
    CHECK(grf.odp == 40);
    // Gr(2,4) E-side pairings: L_E^3 = 2, L_E^2.H = 8, L_E.H^2 = 12, H^3 = 8
    CHECK(cubic_of(profile(gr, Side::E_side)) == std::array<long long, 4>{2, 8, 12, 8});

    // rank-3 table rows
    CHECK(cubic_of(profile(make_pair("P4", {2, 1, 1}, {1, 0, 0}), Side::F_side)) ==
          std::array<long long, 4>{83, 37, 15, 5});
    CHECK(cubic_of(profile(make_pair("P4", {3, 1, 1}, {0, 0, 0}), Side::F_side)) ==
          std::array<long long, 4>{179, 58, 18, 5});
    CHECK(cubic_of(profile(make_pair("Gr24", {2, 1, 1}, {0, 0, 0}), Side::F_side)) ==
          std::array<long long, 4>{114, 52, 22, 8});

    CHECK_THROWS_AS(profile(make_pair("P4", {4, 2}, {0, 0}), Side::F_side), Error);
}

TEST_CASE("profiles are integral with H^3 = r_M d_M on the whole catalog") {
    for (const auto& c : enumerate_cases()) {
        for (Side side : {Side::F_side, Side::E_side}) {
            NumericalProfile p = profile(c, side);
            for (const auto& v : p.cubic)
                CHECK(is_integer(v));
            for (const auto& v : p.c2)
                CHECK(is_integer(v));
            CHECK(p.cubic[3] == Rational(c.base->index) * c.base->degree);
        }
    }
}

TEST_CASE("cubic evaluation") {
    NumericalProfile row1 = profile(make_pair("P4", {2, 1, 1}, {1, 0, 0}), Side::F_side);
    DivClass g(1, -1);
    CHECK(cubic_eval(row1, g, g, g).rational_value() == 12);
    CHECK(cubic_eval(row1, DivClass(0, 0), g, g).is_zero());
    NumericalProfile t3 = profile(make_pair("P4", {2, 1, 1, 1}, {0, 0, 0, 0}), Side::F_side);
    CHECK(cubic_eval(t3, g, g, g).rational_value() == 16); // 99 - 3*42 + 3*16 - 5
}

TEST_CASE("hodge numbers") {
    HodgeData q = hodge(make_pair("P4", {1, 1, 1, 1, 1}, {0, 0, 0, 0, 0}));
    CHECK(q.h21 == 52);
    CHECK(q.euler == -100);
    HodgeData m2 = hodge(make_pair("Mu2", {1, 1}, {0, 0}));
    CHECK(m2.h21 == 128);
    CHECK(m2.euler == -252);
    HodgeData nt = hodge(make_pair("P4", {3, 1}, {1, 0}));
    CHECK(nt.h21 == 78);
    CHECK(nt.euler == -152);
    // smoothing relation: euler = chi(Ytilde) + 2 |Sing|
    for (const auto& c : enumerate_cases()) {
        HodgeData h = hodge(c);
        CHECK(h.euler == 2 * (h.h11 - h.h21));
        CHECK(h.euler == c.base->chi_anticanonical + 2 * odp_count(c));
    }
}

TEST_CASE("Riemann-Roch section counts") {
    NumericalProfile t3 = profile(make_pair("P4", {2, 1, 1, 1}, {0, 0, 0, 0}), Side::F_side);
    CHECK(rr_h0(t3, DivClass(1, -1)) == 8);
    CHECK(rr_h0(t3, DivClass(2, -2)) == 32);
    CHECK(rr_h0(t3, DivClass(0, 0)) == 0);
    for (long long k = 1; k <= 5; ++k) {
        Rational v = rr_h0(t3, DivClass(k, -k));
        CHECK(is_integer(v));
        CHECK(v == Rational(8 * k * k * k + 16 * k, 3));
    }
}

TEST_CASE("exceptional surface invariants") {
    SurfaceInvariants s1 = surface_invariants(make_pair("P4", {3, 1}, {1, 0}));
    CHECK(s1.ks_sq == 8);
    CHECK(s1.surface_id == "P1xP1");
    CHECK(s1.exc_class == DivClass(1, -3));

    for (int d = 2; d <= 5; ++d) {
        SurfaceInvariants s = surface_invariants(make_pair("dP" + std::to_string(d), {2, 1}, {0, 0}));
        CHECK(s.ks_sq == d);
        CHECK(s.surface_id == "dP" + std::to_string(d));
    }

    SurfaceInvariants s3 = surface_invariants(make_pair("P4", {3, 1, 1}, {0, 0, 0}));
    CHECK(s3.ks_sq == 8);
    CHECK(s3.surface_id == "F1");
    REQUIRE(s3.ks_dot_fiber.has_value());
    CHECK(*s3.ks_dot_fiber == -2);

    SurfaceInvariants s4 = surface_invariants(make_pair("P4", {2, 1, 1, 1}, {0, 0, 0, 0}));
    CHECK(s4.ks_sq == -1);
    CHECK(s4.surface_id == "P~2(10)");

    SurfaceInvariants s5 = surface_invariants(make_pair("Gr24", {2, 1, 1}, {0, 0, 0}));
    CHECK(s5.surface_id == "P~2(7)");
    CHECK(s5.ks_sq == 2);

    CHECK(surface_invariants(make_pair("P4", {2, 2, 1}, {0, 0, 0})).ks_sq == -1);
    CHECK(surface_invariants(make_pair("P4", {4, 1}, {0, 0})).surface_id == "P2");
}

TEST_CASE("flop update") {
    SplitPair p221 = make_pair("P4", {2, 2, 1}, {0, 0, 0});
    NumericalProfile p = profile(p221, Side::F_side);
    DivClass s(1, -2);
    CHECK(cubic_eval(p, s, s, s).rational_value() == -1);
    CHECK(c2_eval(p, s).rational_value() == 26);
    NumericalProfile flopped = flop_update(p, CurveClass{1, 1}, 1);
    CHECK(cubic_eval(flopped, s, s, s).is_zero());
    CHECK(c2_eval(flopped, s).rational_value() == 24);

    SplitPair quintic = make_pair("P4", {1, 1, 1, 1, 1}, {0, 0, 0, 0, 0});
    NumericalProfile qf = profile(quintic, Side::F_side);
    CHECK(cubic_of(qf) == std::array<long long, 4>{70, 35, 15, 5});
    NumericalProfile qflop = flop_update(qf, CurveClass{1, 1}, 50);
    CHECK(qflop.cubic[0] == 20);
    // matches (5H_E - L_E)^3 on the independently computed E-side profile
    NumericalProfile qe = profile(quintic, Side::E_side);
    DivClass chi_l(-1, 5);
    CHECK(cubic_eval(qe, chi_l, chi_l, chi_l).rational_value() == 20);

    CHECK(flop_update(qf, CurveClass{1, 1}, 0) == qf);
}

TEST_CASE("determinantal flop transports every catalog profile") {
    CurveClass wall_h_curve = primitive_curve(DivClass(0, 1), DivClass(1, 0));
    CHECK(wall_h_curve.with_l == 1);
    CHECK(wall_h_curve.with_h == 0);
    for (const auto& c : enumerate_cases()) {
        NumericalProfile pf = profile(c, Side::F_side);
        NumericalProfile pe = profile(c, Side::E_side);
        PushforwardMap chi = determinantal_flop(pf, pe, *c.base);
        NumericalProfile flopped = flop_update(pf, wall_h_curve, odp_count(c));
        CHECK(transport(pe, chi.matrix) == flopped);
    }
}

TEST_CASE("swapped pair gives the E-side model in its twisted basis") {
    // L~ = L_E + H_E identifies profile(swap(pair), F) with profile(pair, E)
    Mat2 twist;
    twist.m = {{{Rational(1), Rational(0)}, {Rational(1), Rational(1)}}};
    for (const auto& c : enumerate_cases()) {
        SplitPair swapped = swap_normalize(c);
        CHECK(odp_count(swapped) == odp_count(c));
        CHECK(profile(swapped, Side::F_side) == transport(profile(c, Side::E_side), twist));
    }
}

TEST_CASE("profile JSON carries integer fields") {
    NumericalProfile p = profile(make_pair("P4", {2, 1, 1, 1}, {0, 0, 0, 0}), Side::F_side);
    std::string j = profile_to_json(p);
    CHECK(j.find("\"cubic\":[99,42,16,5]") != std::string::npos);
    CHECK(j.find("\"c2\":[114,50]") != std::string::npos);
    CHECK(j.find("\"odp\":46") != std::string::npos);
}

TEST_CASE("double cover node count via the Euler characteristic route") {
    CHECK(smooth_surface_chi(8) == 304);
    CHECK(double_cover_odps(-108, 8) == 94);
    SplitPair bordiga = make_pair("P4", {2, 1, 1, 1}, {0, 0, 0, 0});
    CHECK(hodge(bordiga).euler == -108);
    CHECK(double_cover_odps(hodge(bordiga).euler, 8) == 94);
}
