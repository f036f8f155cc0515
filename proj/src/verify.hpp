#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace pebblelab {

// One checklist item of the published-results verification run.
struct VerifyItem {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyItem> items;
    bool all_pass = false;
};

// Re-derives the key published values this library reproduces, from scratch:
//  1. a six-pebble distribution on K3 x K3 x K5 (two pebbles on each of three
//     diagonal vertices of one K3 x K3 layer) is solvable under pebbling
//  2. gamma_{k-1}(hamming(m,k)) = m for (m,k) in {(2,2),(3,2),(4,2),(5,2),(3,3)}
//  3. gamma_2(K3 x K3 x K5) = 3 and gamma_1 >= 5 (every 4-subset rejected)
//  4. thm6 bound at k = 3 evaluates to 6 on K3 x K3 x K5
//  5. optimal pebbling number of K3 x K3 = 4, by enumeration
//  6. optimal rubbling number of K4 x K4 = 4, by enumeration
//  7. 6 < 8 = 2^diam on K3 x K3 x K5: the doubling construction's claimed
//     value is refuted
// `use_filters` toggles the enumeration filters in items 5 and 6; verdicts
// are identical either way.
VerifyReport verify_paper(bool use_filters = true);

nlohmann::ordered_json verify_report_to_json(const VerifyReport& report);

} // namespace pebblelab
