#include "movcone/report.hpp"

#include "movcone/birational.hpp"
#include "movcone/chern.hpp"
#include "movcone/invariants.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace movcone {

namespace {

using nlohmann::json;

std::string fmt_int(const Rational& r) { return to_string(r); }

std::string bundle_string(const std::vector<int>& twists) {
    // "O(1)^3+O(2)" style, nonincreasing twists grouped
    std::string out;
    size_t i = 0;
    while (i < twists.size()) {
        size_t j = i;
        while (j < twists.size() && twists[j] == twists[i])
            ++j;
        if (!out.empty())
            out += "+";
        std::string part = twists[i] == 0 ? "O" : "O(" + std::to_string(twists[i]) + ")";
        if (j - i > 1)
            part += "^" + std::to_string(j - i);
        out += part;
        i = j;
    }
    return out;
}

SplitPair catalog_pair(const std::string& base, std::vector<int> f, std::vector<int> e) {
    return make_pair(base, std::move(f), std::move(e));
}

std::vector<std::string> profile_row(const SplitPair& p) {
    NumericalProfile prof = profile(p, Side::F_side);
    std::vector<std::string> row;
    for (const auto& v : prof.cubic)
        row.push_back(fmt_int(v));
    row.push_back(fmt_int(prof.c2[0]));
    row.push_back(fmt_int(prof.c2[1]));
    row.push_back(std::to_string(prof.odp));
    return row;
}

std::vector<std::string> hodge_row(const SplitPair& p) {
    HodgeData h = hodge(p);
    return {std::to_string(h.euler), std::to_string(h.h21), std::to_string(odp_count(p))};
}

Table table_rank3() {
    Table t;
    t.title = "Intersection numbers on X_F, rank-3 cases with a >= 2";
    t.header = {"M", "E", "L^3", "L^2.H", "L.H^2", "H^3", "G^3"};
    struct Row {
        const char* base;
        std::vector<int> f, e;
    };
    const std::vector<Row> wanted = {{"P4", {2, 1, 1}, {1, 0, 0}},
                                     {"P4", {3, 1, 1}, {0, 0, 0}},
                                     {"Gr24", {2, 1, 1}, {0, 0, 0}}};
    for (const auto& r : wanted) {
        SplitPair p = catalog_pair(r.base, r.f, r.e);
        NumericalProfile prof = profile(p, Side::F_side);
        DivClass g(1, -1);
        std::vector<std::string> row{r.base, bundle_string(p.e_twists)};
        for (const auto& v : prof.cubic)
            row.push_back(fmt_int(v));
        row.push_back(fmt_int(cubic_eval(prof, g, g, g).rational_value()));
        t.rows.push_back(row);
    }
    return t;
}

Table table_profile(const std::string& title, const SplitPair& p) {
    Table t;
    t.title = title;
    t.header = {"L^3", "L^2.H", "L.H^2", "H^3", "L.c2", "H.c2", "ODPs"};
    t.rows.push_back(profile_row(p));
    return t;
}

Table table_a1() {
    Table t;
    t.title = "del Pezzo bases: computed Euler numbers, Hodge numbers, node counts";
    t.header = {"F", "d", "chi(X)", "h21(X)", "ODPs"};
    for (const std::vector<int>& f : {std::vector<int>{1, 1, 1}, std::vector<int>{2, 1}})
        for (int d = 2; d <= 5; ++d) {
            SplitPair p = catalog_pair("dP" + std::to_string(d), f, std::vector<int>(f.size(), 0));
            std::vector<std::string> row{bundle_string(f), std::to_string(d)};
            for (auto& s : hodge_row(p))
                row.push_back(s);
            t.rows.push_back(row);
        }
    return t;
}

Table table_a2() {
    Table t;
    t.title = "del Pezzo bases: smooth anticanonical hypersurface (catalog input, echoed)";
    t.header = {"d", "chi(Ytilde)", "h21(Ytilde)"};
    for (int d = 2; d <= 5; ++d) {
        const FanoBase& b = base_by_id("dP" + std::to_string(d));
        long long h21 = 1 - b.chi_anticanonical / 2;
        t.rows.push_back({std::to_string(d), std::to_string(b.chi_anticanonical), std::to_string(h21)});
    }
    return t;
}

Table table_a3() {
    Table t;
    t.title = "Mukai bases: computed Euler numbers, Hodge numbers, node counts";
    t.header = {"g", "chi(Ytilde)", "h21(Ytilde)", "chi(X)", "h21(X)", "ODPs"};
    for (int g = 2; g <= 10; ++g) {
        const FanoBase& b = base_by_id("Mu" + std::to_string(g));
        SplitPair p = catalog_pair(b.id, {1, 1}, {0, 0});
        long long h21y = 1 - b.chi_anticanonical / 2;
        std::vector<std::string> row{std::to_string(g), std::to_string(b.chi_anticanonical),
                                     std::to_string(h21y)};
        for (auto& s : hodge_row(p))
            row.push_back(s);
        t.rows.push_back(row);
    }
    return t;
}

Table table_a4() {
    Table t;
    t.title = "P4 and Gr(2,4) bases with trivial E";
    t.header = {"M", "rk", "F", "chi(X)", "h21(X)", "ODPs"};
    struct Row {
        const char* base;
        std::vector<int> f;
    };
    const std::vector<Row> wanted = {
        {"P4", {1, 1, 1, 1, 1}}, {"P4", {2, 1, 1, 1}}, {"P4", {2, 2, 1}}, {"P4", {3, 1, 1}},
        {"P4", {4, 1}},          {"P4", {3, 2}},       {"Gr24", {1, 1, 1, 1}},
        {"Gr24", {2, 1, 1}},     {"Gr24", {3, 1}},     {"Gr24", {2, 2}}};
    for (const auto& r : wanted) {
        SplitPair p = catalog_pair(r.base, r.f, std::vector<int>(r.f.size(), 0));
        std::vector<std::string> row{r.base, std::to_string(p.rank()), bundle_string(r.f)};
        for (auto& s : hodge_row(p))
            row.push_back(s);
        t.rows.push_back(row);
    }
    return t;
}

Table table_a5() {
    Table t;
    t.title = "P4 and Gr(2,4) bases with nontrivial E";
    t.header = {"M", "rk", "E", "F", "chi(X)", "h21(X)", "ODPs"};
    struct Row {
        const char* base;
        std::vector<int> f, e;
    };
    const std::vector<Row> wanted = {{"P4", {2, 1, 1}, {1, 0, 0}},
                                     {"P4", {3, 1}, {1, 0}},
                                     {"Gr24", {2, 1}, {1, 0}}};
    for (const auto& r : wanted) {
        SplitPair p = catalog_pair(r.base, r.f, r.e);
        std::vector<std::string> row{r.base, std::to_string(p.rank()), bundle_string(r.e),
                                     bundle_string(r.f)};
        for (auto& s : hodge_row(p))
            row.push_back(s);
        t.rows.push_back(row);
    }
    return t;
}

json quadext_json(const QuadExt& q) {
    return json{{"a", to_string(q.a)}, {"b", to_string(q.b)}, {"d", q.d.convert_to<long long>()}};
}

json divclass_json(const DivClass& d) {
    if (d.is_integral())
        return json::array({to_int64(d.l.rational_value()), to_int64(d.h.rational_value())});
    return json::array({quadext_json(d.l), quadext_json(d.h)});
}

json wall_json(const Wall& w) {
    json cert(json::value_t::object);
    for (const auto& [k, v] : w.certificates)
        cert[k] = v;
    json out{{"class", divclass_json(w.cls)},
             {"kind", to_string(w.kind)},
             {"certificates", cert},
             {"target", w.target}};
    return out;
}

json mat_json(const Mat2& m) {
    json out = json::array();
    for (int i = 0; i < 2; ++i)
        out.push_back(json::array({to_int64(m.m[i][0]), to_int64(m.m[i][1])}));
    return out;
}

double ray_angle(const DivClass& d) {
    double x = static_cast<double>(d.l.a) + static_cast<double>(d.l.b) * std::sqrt(static_cast<double>(d.l.d));
    double y = static_cast<double>(d.h.a) + static_cast<double>(d.h.b) * std::sqrt(static_cast<double>(d.h.d));
    return std::atan2(y, x);
}

} // namespace

Table make_table(const std::string& label) {
    if (label == "T1")
        return table_rank3();
    if (label == "T2")
        return table_profile("Intersection numbers on X_F for (P4, O(2)^2+O(1))",
                             catalog_pair("P4", {2, 2, 1}, {0, 0, 0}));
    if (label == "T3")
        return table_profile("Intersection numbers on X_F for (P4, O(2)+O(1)^3)",
                             catalog_pair("P4", {2, 1, 1, 1}, {0, 0, 0, 0}));
    if (label == "T4")
        return table_profile("Intersection numbers on X_F for (Gr(2,4), O(1)^4)",
                             catalog_pair("Gr24", {1, 1, 1, 1}, {0, 0, 0, 0}));
    if (label == "A1")
        return table_a1();
    if (label == "A2")
        return table_a2();
    if (label == "A3")
        return table_a3();
    if (label == "A4")
        return table_a4();
    if (label == "A5")
        return table_a5();
    throw Error(Errc::unknown_case, "unknown table label " + label);
}

std::string render_table(const Table& t, TableFormat fmt) {
    std::ostringstream os;
    if (fmt == TableFormat::csv) {
        auto emit = [&](const std::vector<std::string>& row) {
            for (size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << row[i];
            os << "\n";
        };
        emit(t.header);
        for (const auto& r : t.rows)
            emit(r);
        return os.str();
    }
    os << "### " << t.title << "\n\n";
    auto emit = [&](const std::vector<std::string>& row) {
        os << "|";
        for (const auto& cell : row)
            os << " " << cell << " |";
        os << "\n";
    };
    emit(t.header);
    os << "|";
    for (size_t i = 0; i < t.header.size(); ++i)
        os << "---|";
    os << "\n";
    for (const auto& r : t.rows)
        emit(r);
    return os.str();
}

Table case_list(const std::string& base_filter) {
    Table t;
    t.title = "catalog cases";
    t.header = {"case", "r_M", "d_M", "rank", "ODPs", "h21", "description"};
    for (const SplitPair& p : enumerate_cases()) {
        if (!base_filter.empty() && p.base->id != base_filter)
            continue;
        HodgeData h = hodge(p);
        t.rows.push_back({p.case_id(), std::to_string(p.base->index), std::to_string(p.base->degree),
                          std::to_string(p.rank()), std::to_string(odp_count(p)),
                          std::to_string(h.h21), p.base->description});
    }
    if (t.rows.empty() && !base_filter.empty())
        throw Error(Errc::unknown_case, "unknown base " + base_filter);
    return t;
}

std::string case_list_json(const std::string& base_filter) {
    Table t = case_list(base_filter);
    json out = json::array();
    for (const auto& r : t.rows) {
        out.push_back({{"case", r[0]},
                       {"r_M", std::stoll(r[1])},
                       {"d_M", std::stoll(r[2])},
                       {"rank", std::stoll(r[3])},
                       {"odp", std::stoll(r[4])},
                       {"h21", std::stoll(r[5])},
                       {"description", r[6]}});
    }
    return out.dump(2);
}

std::string movable_to_json(const MovableCone& mc, const VerifyReport& rep) {
    json out;
    out["case"] = mc.case_id;
    out["finiteness"] = mc.finite ? "finite" : "infinite";
    out["basis"] = {"L", "H"}; // reference basis; matrices are row-major in it
    json chambers = json::array();
    for (size_t i = 0; i < mc.chambers.size(); ++i) {
        const Model& m = mc.chambers[i];
        json jm;
        jm["model"] = m.id;
        jm["model_class"] = m.model_class;
        jm["nef"] = json::array({divclass_json(m.nef_ref.first), divclass_json(m.nef_ref.second)});
        jm["marking"] = mat_json(m.marking);
        jm["walls"] = json::array({wall_json(mc.walls[i]), wall_json(mc.walls[i + 1])});
        chambers.push_back(jm);
    }
    out["chambers"] = chambers;
    json walls = json::array();
    for (const Wall& w : mc.walls)
        walls.push_back(wall_json(w));
    out["walls"] = walls;
    if (mc.finite) {
        out["boundary"] =
            json::array({divclass_json(mc.walls.front().cls), divclass_json(mc.walls.back().cls)});
        if (mc.generator)
            out["symmetry"] = mat_json(mc.generator->matrix);
    } else {
        out["fundamental_domain"] =
            json::array({divclass_json(mc.walls.front().cls), divclass_json(mc.walls.back().cls)});
        out["generator"] = mat_json(mc.generator->matrix);
        out["boundary_rays"] =
            json::array({divclass_json(mc.rays->dominant), divclass_json(mc.rays->secondary)});
        out["spectral_radius"] = quadext_json(mc.rays->spectral_radius);
        out["birational_automorphisms"] = mc.bir_note;
    }
    json jv;
    jv["pass"] = rep.pass;
    jv["chambers"] = rep.chambers;
    if (mc.finite)
        jv["tiles"] = rep.tiles;
    else
        jv["translates_checked"] = rep.translates_checked;
    jv["notes"] = rep.notes;
    out["verification"] = jv;
    return out.dump(2);
}

std::string movable_to_markdown(const MovableCone& mc, const VerifyReport& rep) {
    std::ostringstream os;
    os << "case: " << mc.case_id << "\n";
    os << "finiteness: " << (mc.finite ? "finite" : "infinite") << "\n";
    if (mc.finite) {
        os << "movable cone: <" << to_string(mc.walls.back().cls) << ", "
           << to_string(mc.walls.front().cls) << ">\n";
    } else {
        os << "fundamental domain: <" << to_string(mc.walls.front().cls) << ", "
           << to_string(mc.walls.back().cls) << ">\n";
        os << "boundary rays: " << to_string(mc.rays->dominant) << ", "
           << to_string(mc.rays->secondary) << "\n";
        os << "spectral radius: " << to_string(mc.rays->spectral_radius) << "\n";
        os << "generator [rho^*]:\n" << to_string(mc.generator->matrix) << "\n";
        if (!mc.bir_note.empty())
            os << "birational automorphisms: " << mc.bir_note << "\n";
    }
    if (mc.finite && mc.generator)
        os << "symmetry [psi_*]:\n" << to_string(mc.generator->matrix) << "\n";
    os << "\nchambers (left to right):\n";
    for (const Model& m : mc.chambers) {
        os << "  " << m.id << ": nef <" << to_string(m.nef_ref.first) << ", "
           << to_string(m.nef_ref.second) << ">\n";
    }
    os << "\nwalls (left to right):\n";
    for (const Wall& w : mc.walls) {
        os << "  " << to_string(w.cls) << "  " << to_string(w.kind) << "  {";
        bool first = true;
        for (const auto& [k, v] : w.certificates) {
            os << (first ? "" : ", ") << k << "=" << v;
            first = false;
        }
        os << "}  -> " << w.target << "\n";
    }
    os << "\nverification: " << (rep.pass ? "PASS" : "FAIL");
    for (const auto& n : rep.notes)
        os << " (" << n << ")";
    os << "\n";
    return os.str();
}

std::string movable_to_svg(const MovableCone& mc) {
    // one-dimensional slice of the cone, walls as ticks
    std::vector<std::pair<double, std::string>> ticks;
    double a0, a1;
    if (mc.finite) {
        a0 = ray_angle(mc.walls.front().cls);
        a1 = ray_angle(mc.walls.back().cls);
    } else {
        a0 = ray_angle(mc.rays->dominant);
        a1 = ray_angle(mc.rays->secondary);
    }
    const double width = 760.0, x0 = 60.0, y = 70.0;
    auto xpos = [&](const DivClass& d) {
        double t = (ray_angle(d) - a0) / (a1 - a0);
        return x0 + t * width;
    };
    std::ostringstream os;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='880' height='160' "
          "font-family='monospace' font-size='11'>\n";
    os << "<line x1='" << x0 << "' y1='" << y << "' x2='" << x0 + width << "' y2='" << y
       << "' stroke='black'/>\n";
    bool stagger = false;
    for (const Wall& w : mc.walls) {
        double x = xpos(w.cls);
        os << "<line x1='" << x << "' y1='" << y - 8 << "' x2='" << x << "' y2='" << y + 8
           << "' stroke='teal' stroke-width='2'/>\n";
        os << "<text x='" << x << "' y='" << y - 14 << "' text-anchor='middle'>" << to_string(w.cls)
           << "</text>\n";
        os << "<text x='" << x << "' y='" << y + (stagger ? 50 : 36)
           << "' text-anchor='middle' fill='gray'>" << to_string(w.kind) << ": " << w.target
           << "</text>\n";
        stagger = !stagger;
    }
    for (size_t i = 0; i < mc.chambers.size(); ++i) {
        double x = (xpos(mc.walls[i].cls) + xpos(mc.walls[i + 1].cls)) / 2;
        os << "<text x='" << x << "' y='" << y + 22 << "' text-anchor='middle'>"
           << mc.chambers[i].id << "</text>\n";
    }
    if (!mc.finite) {
        os << "<text x='" << x0 << "' y='" << y + 60 << "'>accumulation rays: "
           << to_string(mc.rays->dominant) << " and " << to_string(mc.rays->secondary)
           << "</text>\n";
    }
    os << "<text x='" << x0 << "' y='20'>" << mc.case_id << "  ("
       << (mc.finite ? "finite" : "infinite") << ")</text>\n";
    os << "</svg>\n";
    return os.str();
}

std::vector<std::string> validate_movable_json(const std::string& json_text) {
    std::vector<std::string> errs;
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        return {std::string("parse error: ") + e.what()};
    }
    auto need = [&](const json& node, const char* key, json::value_t type, const std::string& at) {
        if (!node.contains(key)) {
            errs.push_back(at + ": missing " + key);
            return false;
        }
        if (type != json::value_t::discarded && node.at(key).type() != type &&
            !(type == json::value_t::number_integer && node.at(key).is_number())) {
            errs.push_back(at + ": wrong type for " + key);
            return false;
        }
        return true;
    };
    need(j, "case", json::value_t::string, "root");
    need(j, "finiteness", json::value_t::string, "root");
    bool finite = j.value("finiteness", "finite") == std::string("finite");
    if (need(j, "chambers", json::value_t::array, "root")) {
        int i = 0;
        for (const auto& c : j["chambers"]) {
            std::string at = "chambers[" + std::to_string(i++) + "]";
            need(c, "model", json::value_t::string, at);
            need(c, "nef", json::value_t::array, at);
            need(c, "marking", json::value_t::array, at);
            if (need(c, "walls", json::value_t::array, at)) {
                if (c["walls"].size() != 2)
                    errs.push_back(at + ": chamber must carry its two walls");
                for (const auto& w : c["walls"]) {
                    need(w, "class", json::value_t::discarded, at + ".wall");
                    need(w, "kind", json::value_t::string, at + ".wall");
                    need(w, "certificates", json::value_t::object, at + ".wall");
                }
            }
        }
    }
    if (finite) {
        need(j, "boundary", json::value_t::array, "root");
    } else {
        need(j, "fundamental_domain", json::value_t::array, "root");
        need(j, "generator", json::value_t::array, "root");
        if (need(j, "boundary_rays", json::value_t::array, "root")) {
            for (const auto& ray : j["boundary_rays"])
                for (const auto& coord : ray)
                    if (coord.is_object())
                        for (const char* k : {"a", "b", "d"})
                            if (!coord.contains(k))
                                errs.push_back(std::string("boundary ray misses ") + k);
        }
        need(j, "spectral_radius", json::value_t::object, "root");
    }
    need(j, "verification", json::value_t::object, "root");
    return errs;
}

} // namespace movcone
