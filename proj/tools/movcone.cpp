#include "movcone/chambers.hpp"
#include "movcone/fano.hpp"
#include "movcone/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace movcone;

namespace {

TableFormat parse_table_format(const std::string& fmt) {
    if (fmt == "md")
        return TableFormat::md;
    if (fmt == "csv")
        return TableFormat::csv;
    throw Error(Errc::unknown_case, "unsupported format " + fmt + " (want md or csv)");
}

int run(int argc, char** argv) {
    CLI::App app{"movcone: birational geometry of determinantal Calabi-Yau threefolds"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "enumerate the catalog cases");
    std::string list_base, list_fmt = "md";
    list_cmd->add_option("--base", list_base, "restrict to one base (P4, Gr24, dP2..dP5, Mu2..Mu10)");
    list_cmd->add_option("--format", list_fmt, "md, csv or json")->default_str("md");

    auto* table_cmd = app.add_subcommand("table", "reproduce a table (T1..T4, A1..A5)");
    std::string table_label, table_fmt = "md";
    table_cmd->add_option("label", table_label, "table label")->required();
    table_cmd->add_option("--format", table_fmt, "md or csv")->default_str("md");

    auto* mov_cmd = app.add_subcommand("movable", "build and verify the movable cone of a case");
    std::string case_text, mov_fmt = "md", svg_path;
    int depth = 10;
    mov_cmd->add_option("case", case_text, "case id, e.g. P4/F=2,1,1,1/E=0,0,0,0")->required();
    mov_cmd->add_option("--depth", depth, "translates checked on each side (infinite cones)")
        ->default_val(10);
    mov_cmd->add_option("--svg", svg_path, "write a cone-slice diagram to this path");
    mov_cmd->add_option("--format", mov_fmt, "md or json")->default_str("md");

    auto* cat_cmd = app.add_subcommand("catalog", "print the base catalog as JSON (fano.json)");
    std::string cat_out;
    cat_cmd->add_option("--out", cat_out, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (list_cmd->parsed()) {
        if (list_fmt == "json")
            std::cout << case_list_json(list_base) << "\n";
        else
            std::cout << render_table(case_list(list_base), parse_table_format(list_fmt));
        return 0;
    }
    if (table_cmd->parsed()) {
        std::cout << render_table(make_table(table_label), parse_table_format(table_fmt));
        return 0;
    }
    if (cat_cmd->parsed()) {
        std::string payload = catalog_to_json();
        if (cat_out.empty()) {
            std::cout << payload << "\n";
        } else {
            std::ofstream out(cat_out);
            if (!out)
                throw Error(Errc::unknown_case, "cannot write " + cat_out);
            out << payload << "\n";
        }
        return 0;
    }
    if (mov_cmd->parsed()) {
        SplitPair pair = parse_case_id(case_text);
        MovableCone mc = build_movable(pair);
        VerifyReport rep = verify_cone_conjecture(mc, depth);
        if (!svg_path.empty()) {
            std::ofstream out(svg_path);
            if (!out)
                throw Error(Errc::unknown_case, "cannot write " + svg_path);
            out << movable_to_svg(mc);
        }
        if (mov_fmt == "json")
            std::cout << movable_to_json(mc, rep) << "\n";
        else
            std::cout << movable_to_markdown(mc, rep);
        return rep.pass ? 0 : 5;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "movcone: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "movcone: " << e.what() << "\n";
        return 4;
    }
}
