#pragma once

#include <string>

#include "json.hpp"
#include "padic/gibbs.hpp"

namespace padic::report {

using json = nlohmann::ordered_json;

json to_json(const PAdicNumber& x);
json to_json(const NormValue& n);
json to_json(const cubic::RuleId& r);
json to_json(const dynamics::PointReport& r);
json to_json(const gibbs::PValue& v);

// One table-vs-oracle disagreement from a validation run.  `instance` holds
// the sampled input as rational text: {"theta": ...} or {"a": ..., "b": ...}.
struct DiscrepancyRecord {
    long p = 0;
    json instance;
    std::string table_id;
    int table_count = 0;
    int oracle_count = 0;
    int fired_row = 0;
    // The same instance evaluated with the other D0 exponent, where the table
    // depends on it; records both readings side by side.
    std::optional<int> table_count_other_mode;
};

json to_json(const DiscrepancyRecord& r);

}  // namespace padic::report
