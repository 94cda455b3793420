#pragma once

#include "movcone/chambers.hpp"
#include "movcone/fano.hpp"

#include <string>
#include <vector>

namespace movcone {

enum class TableFormat { md, csv };

struct Table {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// T1..T4 and A1..A5; values computed (A2 echoes the catalog and says so).
Table make_table(const std::string& label);
std::string render_table(const Table& t, TableFormat fmt);

// One row per case: case id, r_M, d_M, rank, ODPs, h21, description.
Table case_list(const std::string& base_filter = "");
std::string case_list_json(const std::string& base_filter = "");

// Report of a built movable cone.
std::string movable_to_json(const MovableCone& mc, const VerifyReport& rep);
std::string movable_to_markdown(const MovableCone& mc, const VerifyReport& rep);
std::string movable_to_svg(const MovableCone& mc);

// Structural validation against the shipped schema (empty result = valid).
std::vector<std::string> validate_movable_json(const std::string& json_text);

} // namespace movcone
