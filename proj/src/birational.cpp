#include "movcone/birational.hpp"

#include <algorithm>

namespace movcone {

PushforwardMap inverse(const PushforwardMap& m) {
    PushforwardMap out;
    out.matrix = m.matrix.inverse();
    out.source_model = m.target_model;
    out.target_model = m.source_model;
    out.kind = m.kind;
    return out;
}

PushforwardMap determinantal_flop(const NumericalProfile& pF, const NumericalProfile& pE,
                                  const FanoBase& base) {
    const Rational &lh2 = pF.cubic[2], &l2h = pF.cubic[1];
    const Rational &he3 = pE.cubic[3], &le2h = pE.cubic[1], &leh2 = pE.cubic[2];
    if (leh2 == 0)
        throw Error(Errc::solver_failure, "no flop solution: L_E.H_E^2 vanishes");

    Rational qa = he3, qb = -2 * lh2, qc = l2h - le2h;
    Rational disc = qb * qb - 4 * qa * qc;
    if (disc != (2 * leh2) * (2 * leh2))
        throw Error(Errc::solver_failure, "irrational flop: discriminant " + to_string(disc) +
                                              " is not (2 L_E.H_E^2)^2");
    auto roots = solve_quadratic(qa, qb, qc);

    std::optional<FlopSolution> picked;
    for (const QuadExt& root : {roots.first, roots.second}) {
        if (!root.is_rational())
            throw Error(Errc::solver_failure, "irrational flop");
        Rational beta = root.rational_value();
        Rational alpha = (lh2 - he3 * beta) / leh2;
        if (sgn(alpha) * sgn(beta) < 0) {
            if (picked && (picked->alpha != alpha || picked->beta != beta))
                throw Error(Errc::solver_failure, "no flop solution: sign test ambiguous");
            picked = FlopSolution{alpha, beta};
        }
    }
    if (!picked)
        throw Error(Errc::solver_failure, "no flop solution");

    // (deterwallcond): c2(F-E^dual).H^2 > 0 > (c1^2 - 2 c2(E-F^dual)).H^2,
    // in profile terms L_E.H_E^2 > 0 and r^2 d < 2 L.H^2.
    Rational r(base.index), d(base.degree);
    if (leh2 > 0 && r * r * d < 2 * lh2) {
        if (picked->alpha != -1 || picked->beta != r)
            throw Error(Errc::verification_failure,
                        "flop solution violates the closed form (-1, r_M)");
    }

    PushforwardMap out;
    out.matrix.m[0][0] = picked->alpha;
    out.matrix.m[0][1] = 0;
    out.matrix.m[1][0] = picked->beta;
    out.matrix.m[1][1] = 1;
    out.matrix.domain_basis = pF.basis;
    out.matrix.codomain_basis = pE.basis;
    if (!out.matrix.is_integral() || boost::multiprecision::abs(numerator(out.matrix.det())) != 1)
        throw Error(Errc::solver_failure, "no flop solution: non-unimodular pushforward");
    out.source_model = "X_F";
    out.target_model = "X_E";
    out.kind = MapKind::determinantal_flop;
    return out;
}

std::optional<PushforwardMap> symmetry_solver(const NumericalProfile& p, const DivClass& fixed,
                                              const std::string& model_id) {
    if (!fixed.is_integral() || fixed.is_zero())
        throw Error(Errc::solver_failure, "symmetry fixed class must be a nonzero integral class");
    const DivClass L(1, 0), H(0, 1);
    bool fixed_is_h = fixed.l.is_zero();
    const DivClass V = fixed_is_h ? L : H;

    // linear: fixed^2 . (xL + yH) = fixed^2 . V
    Rational A = cubic_eval(p, fixed, fixed, L).rational_value();
    Rational B = cubic_eval(p, fixed, fixed, H).rational_value();
    Rational C = cubic_eval(p, fixed, fixed, V).rational_value();
    // quadric: fixed . (xL + yH)^2 = fixed . V^2
    Rational P = cubic_eval(p, fixed, L, L).rational_value();
    Rational Q = cubic_eval(p, fixed, L, H).rational_value();
    Rational R = cubic_eval(p, fixed, H, H).rational_value();
    Rational W = cubic_eval(p, fixed, V, V).rational_value();

    std::vector<std::pair<Rational, Rational>> candidates;
    auto push_candidate = [&](const Rational& x, const Rational& y) {
        for (const auto& c : candidates)
            if (c.first == x && c.second == y)
                return;
        candidates.emplace_back(x, y);
    };
    auto solve_branch = [&](bool substitute_x) {
        // substitute one variable from the linear equation into the quadric
        Rational lead = substitute_x ? A : B;
        if (lead == 0)
            return;
        // x = (C - B y)/A  (or y = (C - A x)/B)
        Rational qa, qb, qc;
        if (substitute_x) {
            // P x^2 + 2Q xy + R y^2 - W with x = (C - B y)/A
            qa = P * B * B - 2 * Q * A * B + R * A * A;
            qb = -2 * P * B * C + 2 * Q * A * C;
            qc = P * C * C - W * A * A;
        } else {
            qa = P * B * B - 2 * Q * A * B + R * A * A; // symmetric in the elimination
            qb = -2 * R * A * C + 2 * Q * B * C;
            qc = R * C * C - W * B * B;
        }
        if (qa == 0) {
            if (qb == 0)
                return;
            Rational t = -qc / qb;
            if (substitute_x)
                push_candidate((C - B * t) / A, t);
            else
                push_candidate(t, (C - A * t) / B);
            return;
        }
        std::pair<QuadExt, QuadExt> roots;
        try {
            roots = solve_quadratic(qa, qb, qc);
        } catch (const Error&) {
            return;
        }
        for (const QuadExt& root : {roots.first, roots.second}) {
            if (!root.is_rational())
                continue;
            Rational t = root.rational_value();
            if (substitute_x)
                push_candidate((C - B * t) / A, t);
            else
                push_candidate(t, (C - A * t) / B);
        }
    };
    solve_branch(true);
    solve_branch(false);

    std::vector<Mat2> solutions;
    for (const auto& [x, y] : candidates) {
        DivClass gv{QuadExt(x), QuadExt(y)};
        if (gv == V)
            continue; // identity
        // assemble g from g(fixed) = fixed, g(V) = (x, y)
        Mat2 g;
        Rational fl = fixed.l.rational_value(), fh = fixed.h.rational_value();
        if (fixed_is_h) { // V = L
            g.m[0][0] = x;
            g.m[1][0] = y;
            g.m[0][1] = 0;
            g.m[1][1] = 1;
        } else { // V = H, g(L) = (fixed - fh*gV)/fl
            g.m[0][1] = x;
            g.m[1][1] = y;
            g.m[0][0] = (fl - fh * x) / fl;
            g.m[1][0] = (fh - fh * y) / fl;
        }
        if (!g.is_integral())
            continue;
        Mat2 sq = g * g;
        if (!sq.is_identity())
            continue;
        bool dup = false;
        for (const auto& s : solutions)
            dup = dup || s == g;
        if (!dup)
            solutions.push_back(g);
    }
    if (solutions.empty())
        return std::nullopt;
    if (solutions.size() > 1)
        throw Error(Errc::solver_failure, "ambiguous symmetry");
    PushforwardMap out;
    out.matrix = solutions.front();
    out.matrix.domain_basis = p.basis;
    out.matrix.codomain_basis = p.basis;
    out.source_model = model_id;
    out.target_model = model_id;
    out.kind = MapKind::involution;
    return out;
}

PushforwardMap compose(const std::vector<PushforwardMap>& maps) {
    if (maps.empty())
        throw Error(Errc::solver_failure, "composition of no maps");
    for (size_t i = 0; i + 1 < maps.size(); ++i)
        if (maps[i].target_model != maps[i + 1].source_model)
            throw Error(Errc::solver_failure, "composition mismatch: " + maps[i].target_model +
                                                  " vs " + maps[i + 1].source_model);
    Mat2 acc = maps.front().matrix;
    for (size_t i = 1; i < maps.size(); ++i)
        acc = maps[i].matrix * acc; // (f o g)_* = [f][g], g applied first
    PushforwardMap out;
    out.matrix = acc;
    out.matrix.domain_basis = maps.front().matrix.domain_basis;
    out.matrix.codomain_basis = maps.back().matrix.codomain_basis;
    out.source_model = maps.front().source_model;
    out.target_model = maps.back().target_model;
    out.kind = MapKind::composite;
    return out;
}

AccumulationRays accumulation_rays(const Mat2& m) {
    std::array<EigenPair, 2> eig;
    try {
        eig = eigen2(m, RayNormalization::match_paper);
    } catch (const Error&) {
        throw Error(Errc::solver_failure, "finite order or parabolic");
    }
    QuadExt a0 = eig[0].value.abs(), a1 = eig[1].value.abs();
    if (a0 == a1)
        throw Error(Errc::solver_failure, "finite order or parabolic");
    const EigenPair& dom = (a0 > a1) ? eig[0] : eig[1];
    const EigenPair& sec = (a0 > a1) ? eig[1] : eig[0];
    return AccumulationRays{dom.ray, sec.ray, dom.value.abs()};
}

CurveClass primitive_curve(const DivClass& wall, const DivClass& interior) {
    if (!wall.is_integral() || wall.is_zero())
        throw Error(Errc::solver_failure, "wall must be a nonzero integral class");
    DivClass w = primitive_ray(wall);
    BigInt wl = numerator(w.l.rational_value());
    BigInt wh = numerator(w.h.rational_value());
    CurveClass c{wh, -wl};
    QuadExt against = interior.l * QuadExt(Rational(c.with_l)) + interior.h * QuadExt(Rational(c.with_h));
    int s = against.sign();
    if (s == 0)
        throw Error(Errc::solver_failure, "interior point lies on the wall");
    if (s < 0) {
        c.with_l = -c.with_l;
        c.with_h = -c.with_h;
    }
    return c;
}

} // namespace movcone
