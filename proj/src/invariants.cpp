#include "movcone/invariants.hpp"

#include <json.hpp>

namespace movcone {

NumericalProfile profile(const SplitPair& pair, Side side) {
    if (!cy_condition(pair))
        throw Error(Errc::not_calabi_yau, "not Calabi-Yau: " + pair.case_id());
    ChernVector vf = virtual_chern(pair, VirtualDirection::F_minus_Edual);
    ChernVector ve = virtual_chern(pair, VirtualDirection::E_minus_Fdual);
    long long nodes = odp_count(pair);
    const FanoBase& base = *pair.base;
    Rational d(base.degree), c2p(base.c2_pairing);

    // L^k pairings come from the opposite-direction virtual class
    const ChernVector& main = (side == Side::F_side) ? ve : vf;
    NumericalProfile out;
    out.cubic = {d * main[4], d * main[3], d * main[2], d * main[1]};
    out.c2 = {c2p * main[2] - nodes, c2p * Rational(base.index)};
    out.odp = nodes;
    out.basis = (side == Side::F_side) ? std::make_pair(std::string("L"), std::string("H"))
                                       : std::make_pair(std::string("L_E"), std::string("H_E"));
    if (out.cubic[3] != Rational(base.index) * d)
        throw Error(Errc::verification_failure, "profile inconsistency: H^3 != r_M d_M");
    return out;
}

QuadExt cubic_eval(const NumericalProfile& p, const DivClass& d1, const DivClass& d2,
                   const DivClass& d3) {
    const QuadExt &x1 = d1.l, &y1 = d1.h, &x2 = d2.l, &y2 = d2.h, &x3 = d3.l, &y3 = d3.h;
    QuadExt t0 = x1 * x2 * x3;
    QuadExt t1 = x1 * x2 * y3 + x1 * y2 * x3 + y1 * x2 * x3;
    QuadExt t2 = x1 * y2 * y3 + y1 * x2 * y3 + y1 * y2 * x3;
    QuadExt t3 = y1 * y2 * y3;
    return t0 * QuadExt(p.cubic[0]) + t1 * QuadExt(p.cubic[1]) + t2 * QuadExt(p.cubic[2]) +
           t3 * QuadExt(p.cubic[3]);
}

QuadExt c2_eval(const NumericalProfile& p, const DivClass& d) {
    return d.l * QuadExt(p.c2[0]) + d.h * QuadExt(p.c2[1]);
}

HodgeData hodge(const SplitPair& pair) {
    if (!cy_condition(pair))
        throw Error(Errc::not_calabi_yau, "not Calabi-Yau: " + pair.case_id());
    long long nodes = odp_count(pair);
    long long h21_smooth = 1 - pair.base->chi_anticanonical / 2;
    HodgeData h;
    h.h21 = h21_smooth - nodes + 1; // relative Picard number of the contraction is 1
    h.euler = 2 * (h.h11 - h.h21);
    return h;
}

Rational rr_h0(const NumericalProfile& p, const DivClass& d) {
    if (d.is_zero())
        return Rational(0);
    QuadExt cube = cubic_eval(p, d, d, d);
    QuadExt lin = c2_eval(p, d);
    QuadExt val = cube / QuadExt(Rational(6)) + lin / QuadExt(Rational(12));
    return val.rational_value();
}

SurfaceInvariants surface_invariants(const SplitPair& pair) {
    NumericalProfile prof = profile(pair, Side::F_side);
    int a = pair.max_f();
    int rank = pair.rank();
    SurfaceInvariants s;
    s.exc_class = DivClass(1, -a);
    s.ks_sq = cubic_eval(prof, s.exc_class, s.exc_class, s.exc_class).rational_value();
    Rational d(pair.base->degree);
    int r = pair.base->index;

    if (rank == 2) {
        int b = pair.min_f();
        int c = pair.max_e();
        Rational closed = Rational(a - b) * (a - b) *
                          (Rational(a + b) * (a + b + c) - Rational(a) * (b + r)) * d;
        if (closed != s.ks_sq)
            throw Error(Errc::verification_failure, "profile inconsistency: K_S^2 closed form");
        if (a == b) {
            s.surface_id = "K3_fiber"; // |L - aH| moves in a pencil instead
        } else {
            s.ks_dot_h = -s.ks_sq / Rational(a - b);
            if (s.ks_sq == 9)
                s.surface_id = "P2";
            else if (s.ks_sq == 8)
                s.surface_id = (a - b == 2) ? "P1xP1" : "F1";
            else
                s.surface_id = "dP" + to_string(s.ks_sq);
        }
    } else if (rank == 3 && pair.f_twists[1] == 1 && pair.f_twists[2] == 1) {
        int c1e = 0;
        for (int b : pair.e_twists)
            c1e += b;
        Rational closed = (Rational((3 * a - 5) * (a - 1)) + Rational(2 * c1e * (a - 1) * (a - 2))) * d;
        if (closed != s.ks_sq)
            throw Error(Errc::verification_failure, "profile inconsistency: K_S^2 closed form");
        s.ks_dot_fiber = Rational(1 + c1e) * Rational(1 - a) * d;
        if (a == 1)
            s.surface_id = "elliptic_fiber";
        else if (a == 2)
            s.surface_id = "P~2(" + std::to_string(9 - pair.base->degree) + ")";
        else
            s.surface_id = "F1";
    } else if (rank == 4 && pair.f_twists == std::vector<int>{2, 1, 1, 1}) {
        s.surface_id = "P~2(10)";
    } else if (rank == 3 && pair.f_twists == std::vector<int>{2, 2, 1}) {
        s.surface_id = "K3_blowup";
    } else {
        s.surface_id = "unnamed";
    }
    return s;
}

NumericalProfile flop_update(const NumericalProfile& p, const CurveClass& c, long long count) {
    Rational cl(c.with_l), ch(c.with_h), n(count);
    NumericalProfile out = p;
    out.cubic[0] -= n * cl * cl * cl;
    out.cubic[1] -= n * cl * cl * ch;
    out.cubic[2] -= n * cl * ch * ch;
    out.cubic[3] -= n * ch * ch * ch;
    out.c2[0] += 2 * n * cl;
    out.c2[1] += 2 * n * ch;
    out.odp = count;
    return out;
}

NumericalProfile transport(const NumericalProfile& p, const Mat2& basis_to_old) {
    DivClass l = apply(basis_to_old, DivClass(1, 0));
    DivClass h = apply(basis_to_old, DivClass(0, 1));
    NumericalProfile out = p;
    out.cubic[0] = cubic_eval(p, l, l, l).rational_value();
    out.cubic[1] = cubic_eval(p, l, l, h).rational_value();
    out.cubic[2] = cubic_eval(p, l, h, h).rational_value();
    out.cubic[3] = cubic_eval(p, h, h, h).rational_value();
    out.c2[0] = c2_eval(p, l).rational_value();
    out.c2[1] = c2_eval(p, h).rational_value();
    return out;
}

long long smooth_surface_chi(int e) { return 1LL * e * e * e - 4LL * e * e + 6LL * e; }

long long double_cover_odps(long long euler_x, int branch_degree) {
    long long chi_smooth_cover = 2 * 4 - smooth_surface_chi(branch_degree);
    long long twice = euler_x - chi_smooth_cover;
    if (twice < 0 || twice % 2 != 0)
        throw Error(Errc::solver_failure, "malformed case: double cover node count");
    return twice / 2;
}

std::string profile_to_json(const NumericalProfile& p) {
    nlohmann::json j;
    j["basis"] = {p.basis.first, p.basis.second};
    j["cubic"] = nlohmann::json::array();
    for (const auto& v : p.cubic)
        j["cubic"].push_back(to_int64(v));
    j["c2"] = {to_int64(p.c2[0]), to_int64(p.c2[1])};
    j["odp"] = p.odp;
    return j.dump();
}

} // namespace movcone
