#include "movcone/chern.hpp"

#include <json.hpp>

namespace movcone {

ChernVector chern_split(const std::vector<int>& twists) {
    ChernVector out;
    // expand prod_i (1 + a_i H), truncated
    for (int a : twists) {
        ChernVector next;
        next[0] = out[0];
        for (int k = 1; k <= 4; ++k)
            next[k] = out[k] + Rational(a) * out[k - 1];
        out = next;
    }
    out.kind = ChernVector::Kind::chern;
    return out;
}

ChernVector dual(const ChernVector& cv) {
    ChernVector out = cv;
    out[1] = -out[1];
    out[3] = -out[3];
    return out;
}

ChernVector convolve(const ChernVector& u, const ChernVector& v) {
    ChernVector out;
    for (int k = 0; k <= 4; ++k) {
        Rational acc(0);
        for (int i = 0; i <= k; ++i)
            acc += u[i] * v[k - i];
        out[k] = acc;
    }
    return out;
}

ChernVector series_inverse(const ChernVector& cv) {
    if (cv[0] != 1)
        throw Error(Errc::solver_failure, "series inverse needs leading coefficient 1");
    ChernVector out;
    out[0] = 1;
    for (int k = 1; k <= 4; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i)
            acc += cv[i] * out[k - i];
        out[k] = -acc;
    }
    return out;
}

ChernVector segre_dual(const ChernVector& cv) {
    if (cv.kind != ChernVector::Kind::chern)
        throw Error(Errc::solver_failure, "segre_dual expects a Chern class");
    const Rational &c1 = cv[1], &c2 = cv[2], &c3 = cv[3], &c4 = cv[4];
    ChernVector s;
    s.kind = ChernVector::Kind::segre;
    s[0] = 1;
    s[1] = c1;
    s[2] = c1 * c1 - c2;
    s[3] = c1 * c1 * c1 - 2 * c1 * c2 + c3;
    s[4] = c1 * c1 * c1 * c1 - 3 * c1 * c1 * c2 + 2 * c1 * c3 + c2 * c2 - c4;
    return s;
}

ChernVector virtual_chern(const SplitPair& pair, VirtualDirection dir) {
    ChernVector cf = chern_split(pair.f_twists);
    ChernVector ce = chern_split(pair.e_twists);
    if (dir == VirtualDirection::F_minus_Edual)
        return convolve(cf, segre_dual(ce));
    return convolve(ce, segre_dual(cf));
}

long long odp_count(const SplitPair& pair) {
    if (!cy_condition(pair))
        throw Error(Errc::not_calabi_yau, "not Calabi-Yau: " + pair.case_id());
    ChernVector v = virtual_chern(pair, VirtualDirection::F_minus_Edual);
    Rational n = Rational(pair.base->degree) * (v[2] * v[2] - v[1] * v[3]);
    if (!is_integer(n) || n < 0)
        throw Error(Errc::solver_failure, "malformed case: node count " + to_string(n));
    return to_int64(n);
}

std::string chern_to_json(const ChernVector& cv) {
    nlohmann::json j = nlohmann::json::array();
    for (int k = 0; k <= 4; ++k)
        j.push_back(to_string(cv[k]));
    return j.dump();
}

} // namespace movcone
