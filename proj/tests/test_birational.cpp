#include "movcone/birational.hpp"

#include <doctest.h>

using namespace movcone;

namespace {

PushforwardMap flop_of(const std::string& case_id) {
    SplitPair p = parse_case_id(case_id);
    return determinantal_flop(profile(p, Side::F_side), profile(p, Side::E_side), *p.base);
}

} // namespace

TEST_CASE("determinantal flop pushforward matrices") {
    CHECK(flop_of("P4/F=1,1,1,1,1/E=0,0,0,0,0").matrix == Mat2::from_rows({-1, 0, 5, 1}));
    CHECK(flop_of("P4/F=2,1,1,1/E=0,0,0,0").matrix == Mat2::from_rows({-1, 0, 5, 1}));
    CHECK(flop_of("Gr24/F=1,1,1,1/E=0,0,0,0").matrix == Mat2::from_rows({-1, 0, 4, 1}));
    // every catalog case satisfies the closed-form hypothesis, so
    // (alpha, beta) = (-1, r_M) throughout
    for (const auto& c : enumerate_cases()) {
        PushforwardMap chi =
            determinantal_flop(profile(c, Side::F_side), profile(c, Side::E_side), *c.base);
        CHECK(chi.matrix.m[0][0] == -1);
        CHECK(chi.matrix.m[0][1] == 0);
        CHECK(chi.matrix.m[1][0] == c.base->index);
        CHECK(chi.matrix.m[1][1] == 1);
        CHECK(boost::multiprecision::abs(numerator(chi.matrix.det())) == 1);
    }
}

TEST_CASE("determinantal flop rejects inconsistent profiles") {
    SplitPair p = parse_case_id("P4/F=2,1,1,1/E=0,0,0,0");
    NumericalProfile pf = profile(p, Side::F_side);
    NumericalProfile pe = profile(p, Side::E_side);
    NumericalProfile broken = pe;
    broken.cubic[2] = 0; // L_E.H_E^2 = 0
    CHECK_THROWS_AS(determinantal_flop(pf, broken, *p.base), Error);
    broken = pe;
    broken.cubic[1] = 100; // discriminant no longer the predicted square
    CHECK_THROWS_AS(determinantal_flop(pf, broken, *p.base), Error);
}

TEST_CASE("symmetry solver finds exactly the published involutions") {
    SplitPair bordiga = parse_case_id("P4/F=2,1,1,1/E=0,0,0,0");
    auto iota_e = symmetry_solver(profile(bordiga, Side::E_side), DivClass(1, 0), "X_E");
    REQUIRE(iota_e.has_value());
    CHECK(iota_e->matrix == Mat2::from_rows({1, 7, 0, -1}));

    SplitPair gr = parse_case_id("Gr24/F=1,1,1,1/E=0,0,0,0");
    auto iota_f = symmetry_solver(profile(gr, Side::F_side), DivClass(1, -1), "X_F");
    REQUIRE(iota_f.has_value());
    CHECK(iota_f->matrix == Mat2::from_rows({9, 8, -10, -9}));
    auto gr_iota_e = symmetry_solver(profile(gr, Side::E_side), DivClass(1, 0), "X_E");
    REQUIRE(gr_iota_e.has_value());
    CHECK(gr_iota_e->matrix == Mat2::from_rows({1, 8, 0, -1}));

    // the Bordiga F-side has no cubic-form symmetry fixing L-H
    CHECK_FALSE(symmetry_solver(profile(bordiga, Side::F_side), DivClass(1, -1)).has_value());
}

TEST_CASE("found symmetries square to the identity and fix the wall") {
    struct Probe {
        const char* case_id;
        Side side;
        DivClass fixed;
    };
    const Probe probes[] = {
        {"P4/F=2,1,1,1/E=0,0,0,0", Side::E_side, DivClass(1, 0)},
        {"Gr24/F=1,1,1,1/E=0,0,0,0", Side::F_side, DivClass(1, -1)},
        {"Gr24/F=1,1,1,1/E=0,0,0,0", Side::E_side, DivClass(1, 0)},
    };
    for (const auto& probe : probes) {
        SplitPair p = parse_case_id(probe.case_id);
        NumericalProfile prof = profile(p, probe.side);
        auto g = symmetry_solver(prof, probe.fixed);
        REQUIRE(g.has_value());
        CHECK((g->matrix * g->matrix).is_identity());
        CHECK(apply(g->matrix, probe.fixed) == probe.fixed);
        CHECK(g->matrix.det() == -1);
        // the two fixed-class cubic monomials are preserved
        DivClass gl = apply(g->matrix, DivClass(1, 0));
        DivClass gh = apply(g->matrix, DivClass(0, 1));
        CHECK(cubic_eval(prof, probe.fixed, probe.fixed, gh) ==
              cubic_eval(prof, probe.fixed, probe.fixed, DivClass(0, 1)));
        CHECK(cubic_eval(prof, probe.fixed, gh, gh) ==
              cubic_eval(prof, probe.fixed, DivClass(0, 1), DivClass(0, 1)));
        CHECK(cubic_eval(prof, probe.fixed, gl, gh) ==
              cubic_eval(prof, probe.fixed, DivClass(1, 0), DivClass(0, 1)));
    }
}

TEST_CASE("composition of pushforwards") {
    SplitPair bordiga = parse_case_id("P4/F=2,1,1,1/E=0,0,0,0");
    PushforwardMap chi = flop_of("P4/F=2,1,1,1/E=0,0,0,0");
    auto iota_e = symmetry_solver(profile(bordiga, Side::E_side), DivClass(1, 0), "X_E");
    REQUIRE(iota_e.has_value());
    PushforwardMap psi = compose({chi, *iota_e, inverse(chi)});
    CHECK(psi.matrix == Mat2::from_rows({-34, -7, 165, 34}));
    CHECK((psi.matrix * psi.matrix).is_identity());

    SplitPair gr = parse_case_id("Gr24/F=1,1,1,1/E=0,0,0,0");
    PushforwardMap grchi = flop_of("Gr24/F=1,1,1,1/E=0,0,0,0");
    auto gr_iota_e = symmetry_solver(profile(gr, Side::E_side), DivClass(1, 0), "X_E");
    auto gr_iota_f = symmetry_solver(profile(gr, Side::F_side), DivClass(1, -1), "X_F");
    REQUIRE(gr_iota_e.has_value());
    REQUIRE(gr_iota_f.has_value());
    PushforwardMap theta = compose({grchi, *gr_iota_e, inverse(grchi)});
    CHECK(theta.matrix == Mat2::from_rows({-31, -8, 120, 31}));
    // [rho^*] = [theta]_* [iota_F]_* (rho = iota_F o theta)
    PushforwardMap rho_star = compose({*gr_iota_f, theta});
    CHECK(rho_star.matrix == Mat2::from_rows({-199, -176, 770, 681}));

    PushforwardMap bad = *gr_iota_f; // X_F -> X_F cannot follow chi: F -> E
    CHECK_THROWS_WITH_AS(compose({grchi, bad}).matrix.det(),
                         "composition mismatch: X_E vs X_F", Error);
}

TEST_CASE("accumulation rays and spectral radii") {
    AccumulationRays gr = accumulation_rays(Mat2::from_rows({-199, -176, 770, 681}));
    CHECK(gr.dominant == DivClass(QuadExt(Rational(-4)), QuadExt(Rational(10), Rational(1), 30)));
    CHECK(gr.secondary == DivClass(QuadExt(Rational(4)), QuadExt(Rational(-10), Rational(1), 30)));
    CHECK(gr.spectral_radius == QuadExt(Rational(241), Rational(44), 30));

    AccumulationRays quintic = accumulation_rays(Mat2::from_rows({-19, -15, 90, 71}));
    CHECK(quintic.dominant == DivClass(QuadExt(Rational(-1)), QuadExt(Rational(3), Rational(1), 3)));
    CHECK(quintic.secondary ==
          DivClass(QuadExt(Rational(1)), QuadExt(Rational(-3), Rational(1), 3)));
    CHECK(quintic.spectral_radius == QuadExt(Rational(26), Rational(15), 3));

    CHECK_THROWS_WITH_AS(accumulation_rays(Mat2::from_rows({2, 0, 0, 2})),
                         "finite order or parabolic", Error);
}

TEST_CASE("powers of the generator converge to the dominant ray") {
    for (auto rows : {std::array<long long, 4>{-19, -15, 90, 71},
                      std::array<long long, 4>{-199, -176, 770, 681}}) {
        Mat2 m = Mat2::from_rows(rows);
        AccumulationRays rays = accumulation_rays(m);
        DivClass col(m.m[0][0], m.m[1][0]); // image of L
        int side = cross(rays.dominant, col).sign();
        int rotation = cross(col, apply(m, col)).sign();
        CHECK(side != 0);
        CHECK(rotation != 0);
        for (int k = 2; k <= 20; ++k) {
            DivClass next = apply(m, col);
            // slopes rotate monotonically and never cross the dominant ray
            CHECK(cross(col, next).sign() == rotation);
            CHECK(cross(rays.dominant, next).sign() == side);
            col = next;
        }
        // after 20 steps the column hugs the dominant ray far tighter than
        // the secondary one (normalized by the coordinate sizes)
        QuadExt dom_gap = cross(rays.dominant, col).abs();
        QuadExt sec_gap = cross(rays.secondary, col).abs();
        CHECK(sec_gap > dom_gap);
    }
}

TEST_CASE("primitive curve classes of walls") {
    CurveClass c1 = primitive_curve(DivClass(0, 1), DivClass(1, 0));
    CHECK(c1.with_l == 1);
    CHECK(c1.with_h == 0);
    CurveClass c2 = primitive_curve(DivClass(1, -1), DivClass(1, 0));
    CHECK(c2.with_l == 1);
    CHECK(c2.with_h == 1);
    CurveClass c3 = primitive_curve(DivClass(1, -2), DivClass(1, -1));
    CHECK(c3.with_l == 2);
    CHECK(c3.with_h == 1);
    CHECK_THROWS_AS(primitive_curve(DivClass(1, -1), DivClass(2, -2)), Error);
}
