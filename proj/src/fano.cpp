#include "movcone/fano.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace movcone {

namespace {

std::vector<FanoBase> builtin_catalog() {
    std::vector<FanoBase> cat;
    cat.push_back({"P4", 5, 1, 10, -200, "projective space P^4"});
    cat.push_back({"Gr24", 4, 2, 14, -176, "Gr(2,4), the quadric fourfold in P^5"});
    // del Pezzo fourfolds, degree 2..5 (degree 1 excluded: fundamental divisor
    // is not base point free there)
    cat.push_back({"dP2", 3, 2, 16, -156, "M4 in P(1^5,2)"});
    cat.push_back({"dP3", 3, 3, 18, -144, "cubic fourfold M3 in P^5"});
    cat.push_back({"dP4", 3, 4, 20, -144, "M2,2 in P^6"});
    cat.push_back({"dP5", 3, 5, 22, -150, "codimension-2 linear section of Gr(2,5)"});
    // Mukai fourfolds, genus 2..10
    cat.push_back({"Mu2", 2, 2, 26, -256, "M6 in P(1^5,3)"});
    cat.push_back({"Mu3", 2, 4, 28, -176, "M4 in P^5, or the variant M2,4 in P(1^6,2)"});
    cat.push_back({"Mu4", 2, 6, 30, -144, "M2,3 in P^6"});
    cat.push_back({"Mu5", 2, 8, 32, -128, "M2,2,2 in P^7"});
    cat.push_back({"Mu6", 2, 10, 34, -120, "quadric section of the cone over Gr(2,5)"});
    cat.push_back({"Mu7", 2, 12, 36, -116, "linear section of OG+(5,10)"});
    cat.push_back({"Mu8", 2, 14, 38, -116, "linear section of Gr(2,6)"});
    cat.push_back({"Mu9", 2, 16, 40, -116, "linear section of LG(3,6)"});
    cat.push_back({"Mu10", 2, 18, 42, -120, "linear section of the G2-variety in Gr(5,7)"});
    return cat;
}

void validate_catalog(const std::vector<FanoBase>& cat) {
    for (const auto& b : cat) {
        if (b.id.empty())
            throw Error(Errc::unknown_case, "catalog entry with empty id");
        if (b.index < 2 || b.index > 5)
            throw Error(Errc::unknown_case, "catalog " + b.id + ": index out of range");
        if (b.index == 5 && b.degree != 1)
            throw Error(Errc::unknown_case, "catalog " + b.id + ": index 5 forces degree 1");
        if (b.index == 4 && b.degree != 2)
            throw Error(Errc::unknown_case, "catalog " + b.id + ": index 4 forces degree 2");
        if (b.index == 3 && (b.degree < 2 || b.degree > 5))
            throw Error(Errc::unknown_case, "catalog " + b.id + ": del Pezzo degree must be 2..5");
        if (b.index == 2) {
            if (b.degree < 2 || b.degree > 18 || b.degree % 2 != 0)
                throw Error(Errc::unknown_case, "catalog " + b.id + ": Mukai degree must be 2g-2, g=2..10");
            if (b.c2_pairing != b.degree + 24)
                throw Error(Errc::unknown_case, "catalog " + b.id + ": Mukai c2 pairing must be d+24");
        }
        if (b.index == 3 && b.c2_pairing != 2LL * b.degree + 12)
            throw Error(Errc::unknown_case, "catalog " + b.id + ": del Pezzo c2 pairing must be 2d+12");
        // c1.c3 = chi(Ytilde) + r^2 * c2 pairing must land in Z (it always is
        // for integer fields; reject absurd chi values instead)
        if (b.chi_anticanonical >= 0)
            throw Error(Errc::unknown_case, "catalog " + b.id + ": chi_top must be negative");
        if (b.chi_anticanonical % 2 != 0)
            throw Error(Errc::unknown_case, "catalog " + b.id + ": chi_top must be even");
    }
}

std::vector<FanoBase> load_active_catalog() {
    const char* env = std::getenv("MOVCONE_CATALOG");
    if (env == nullptr || *env == '\0') {
        auto cat = builtin_catalog();
        validate_catalog(cat);
        return cat;
    }
    std::ifstream in(env);
    if (!in)
        throw Error(Errc::unknown_case, std::string("cannot open catalog file ") + env);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_catalog_json(ss.str());
}

} // namespace

const std::vector<FanoBase>& catalog() {
    static const std::vector<FanoBase> cat = load_active_catalog();
    return cat;
}

const FanoBase& base_by_id(const std::string& id) {
    for (const auto& b : catalog())
        if (b.id == id)
            return b;
    throw Error(Errc::unknown_case, "unknown base " + id);
}

std::vector<FanoBase> load_catalog_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw Error(Errc::unknown_case, std::string("invalid catalog JSON: ") + e.what());
    }
    if (!j.is_array())
        throw Error(Errc::unknown_case, "catalog JSON must be an array");
    std::vector<FanoBase> cat;
    for (const auto& e : j) {
        FanoBase b;
        try {
            b.id = e.at("id").get<std::string>();
            b.index = e.at("index").get<int>();
            b.degree = e.at("degree").get<int>();
            b.c2_pairing = e.at("c2_pairing").get<long long>();
            b.chi_anticanonical = e.at("chi_anticanonical").get<long long>();
            b.description = e.value("description", std::string());
        } catch (const std::exception& ex) {
            throw Error(Errc::unknown_case, std::string("invalid catalog entry: ") + ex.what());
        }
        cat.push_back(std::move(b));
    }
    validate_catalog(cat);
    return cat;
}

std::string catalog_to_json() {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& b : catalog()) {
        j.push_back({{"id", b.id},
                     {"index", b.index},
                     {"degree", b.degree},
                     {"c2_pairing", b.c2_pairing},
                     {"chi_anticanonical", b.chi_anticanonical},
                     {"description", b.description}});
    }
    return j.dump(2);
}

bool SplitPair::e_trivial() const {
    return std::all_of(e_twists.begin(), e_twists.end(), [](int b) { return b == 0; });
}

int SplitPair::max_f() const { return *std::max_element(f_twists.begin(), f_twists.end()); }
int SplitPair::min_f() const { return *std::min_element(f_twists.begin(), f_twists.end()); }
int SplitPair::max_e() const { return *std::max_element(e_twists.begin(), e_twists.end()); }
int SplitPair::min_e() const { return *std::min_element(e_twists.begin(), e_twists.end()); }

std::string SplitPair::case_id() const {
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(v[i]);
        }
        return s;
    };
    return base->id + "/F=" + join(f_twists) + "/E=" + join(e_twists);
}

SplitPair make_pair(const std::string& base_id, std::vector<int> f, std::vector<int> e) {
    SplitPair p;
    p.base = &base_by_id(base_id);
    std::sort(f.begin(), f.end(), std::greater<int>());
    std::sort(e.begin(), e.end(), std::greater<int>());
    p.f_twists = std::move(f);
    p.e_twists = std::move(e);
    if (p.f_twists.empty())
        throw Error(Errc::unknown_case, "empty twist sequence");
    for (int b : p.e_twists)
        if (b < 0)
            throw Error(Errc::unknown_case, "negative twist in E");
    return p;
}

SplitPair parse_case_id(const std::string& text) {
    auto fail = [&]() -> SplitPair {
        throw Error(Errc::unknown_case, "cannot parse case id '" + text + "'");
    };
    auto p1 = text.find('/');
    if (p1 == std::string::npos)
        return fail();
    auto p2 = text.find('/', p1 + 1);
    std::string base = text.substr(0, p1);
    std::string fpart = text.substr(p1 + 1, (p2 == std::string::npos ? text.size() : p2) - p1 - 1);
    std::string epart = p2 == std::string::npos ? std::string() : text.substr(p2 + 1);
    if (fpart.rfind("F=", 0) != 0)
        return fail();
    auto parse_list = [&](const std::string& body) {
        std::vector<int> out;
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty())
                return std::optional<std::vector<int>>();
            try {
                size_t pos = 0;
                int v = std::stoi(tok, &pos);
                if (pos != tok.size())
                    return std::optional<std::vector<int>>();
                out.push_back(v);
            } catch (const std::exception&) {
                return std::optional<std::vector<int>>();
            }
        }
        if (out.empty())
            return std::optional<std::vector<int>>();
        return std::optional<std::vector<int>>(std::move(out));
    };
    auto f = parse_list(fpart.substr(2));
    if (!f)
        return fail();
    std::vector<int> e;
    if (epart.empty()) {
        e.assign(f->size(), 0);
    } else {
        if (epart.rfind("E=", 0) != 0)
            return fail();
        auto ev = parse_list(epart.substr(2));
        if (!ev)
            return fail();
        e = *ev;
    }
    return make_pair(base, *f, e);
}

bool cy_condition(const SplitPair& pair) {
    if (pair.f_twists.size() != pair.e_twists.size())
        return false;
    long long sum = 0;
    for (int a : pair.f_twists) {
        if (a <= 0)
            return false;
        sum += a;
    }
    for (int b : pair.e_twists)
        sum += b;
    return sum == pair.base->index;
}

SplitPair swap_normalize(const SplitPair& pair) {
    std::vector<int> f, e;
    for (int b : pair.e_twists)
        f.push_back(b + 1);
    for (int a : pair.f_twists)
        e.push_back(a - 1);
    return make_pair(pair.base->id, std::move(f), std::move(e));
}

const std::vector<SplitPair>& enumerate_cases() {
    static const std::vector<SplitPair> cases = [] {
        std::vector<SplitPair> out;
        auto add = [&](const std::string& base, std::vector<int> f, std::vector<int> e) {
            out.push_back(make_pair(base, std::move(f), std::move(e)));
        };
        const std::vector<std::vector<int>> p4 = {{4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
        for (const auto& f : p4)
            add("P4", f, std::vector<int>(f.size(), 0));
        const std::vector<std::vector<int>> gr = {{3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
        for (const auto& f : gr)
            add("Gr24", f, std::vector<int>(f.size(), 0));
        for (const std::string dp : {"dP2", "dP3", "dP4", "dP5"}) {
            add(dp, {2, 1}, {0, 0});
            add(dp, {1, 1, 1}, {0, 0, 0});
        }
        for (int g = 2; g <= 10; ++g)
            add("Mu" + std::to_string(g), {1, 1}, {0, 0});
        add("P4", {2, 1, 1}, {1, 0, 0});
        add("P4", {3, 1}, {1, 0});
        add("Gr24", {2, 1}, {1, 0});

        // stable ordering: base catalog order, then lexicographic twists
        auto base_rank = [](const std::string& id) {
            const auto& cat = catalog();
            for (size_t i = 0; i < cat.size(); ++i)
                if (cat[i].id == id)
                    return i;
            return cat.size();
        };
        std::sort(out.begin(), out.end(), [&](const SplitPair& x, const SplitPair& y) {
            size_t bx = base_rank(x.base->id), by = base_rank(y.base->id);
            if (bx != by)
                return bx < by;
            if (x.f_twists != y.f_twists)
                return x.f_twists < y.f_twists;
            return x.e_twists < y.e_twists;
        });
        return out;
    }();
    return cases;
}

bool is_catalog_case(const SplitPair& pair) {
    for (const auto& c : enumerate_cases())
        if (c.base->id == pair.base->id && c.f_twists == pair.f_twists && c.e_twists == pair.e_twists)
            return true;
    return false;
}

} // namespace movcone
