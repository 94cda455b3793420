#pragma once

#include "movcone/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace movcone {

// A Picard-rank-1 Fano fourfold reduced to its four numeric invariants.
struct FanoBase {
    std::string id;             // P4, Gr24, dP2..dP5, Mu2..Mu10
    int index = 0;              // r_M
    int degree = 0;             // d_M = H_M^4
    long long c2_pairing = 0;   // int_M c2(T_M).H_M^2
    long long chi_anticanonical = 0; // chi_top of a smooth anticanonical hypersurface
    std::string description;
};

// The builtin catalog, or the one named by MOVCONE_CATALOG (validated on load).
const std::vector<FanoBase>& catalog();
const FanoBase& base_by_id(const std::string& id); // throws unknown_case

// Loads and validates a catalog; used for MOVCONE_CATALOG and by tests.
std::vector<FanoBase> load_catalog_json(const std::string& json_text);
std::string catalog_to_json(); // fano.json payload

// A Calabi-Yau case: base plus the two nonincreasing twist sequences.
struct SplitPair {
    const FanoBase* base = nullptr;
    std::vector<int> f_twists; // (a_i), positive, nonincreasing
    std::vector<int> e_twists; // (b_i), nonnegative, nonincreasing

    int rank() const { return static_cast<int>(f_twists.size()); }
    bool e_trivial() const;
    int max_f() const;
    int min_f() const;
    int max_e() const;
    int min_e() const;
    std::string case_id() const; // "P4/F=2,1,1,1/E=0,0,0,0"
};

SplitPair make_pair(const std::string& base_id, std::vector<int> f, std::vector<int> e);
SplitPair parse_case_id(const std::string& text); // throws unknown_case

bool cy_condition(const SplitPair& pair);

// The twist-normalized swap (E(1), F(-1)); identifies the E-side model of a
// case with the F-side model of the swapped case.
SplitPair swap_normalize(const SplitPair& pair);

// Exactly the classification's admissible cases, deterministic order.
const std::vector<SplitPair>& enumerate_cases();

// True when `pair` matches a catalog case exactly (same base and twists).
bool is_catalog_case(const SplitPair& pair);

} // namespace movcone
