#include "padic/report.hpp"

namespace padic::report {

json to_json(const PAdicNumber& x) {
    json j;
    j["prime"] = x.prime().to_long();
    if (x.is_zero()) {
        j["valuation"] = nullptr;
        j["digits"] = json::array();
        j["precision"] = x.absolute_precision();
        j["is_zero"] = true;
        return j;
    }
    j["valuation"] = x.valuation();
    j["digits"] = x.digits();
    j["precision"] = x.precision();
    j["is_zero"] = false;
    return j;
}

json to_json(const NormValue& n) {
    json j;
    j["prime"] = n.prime().to_long();
    if (n.is_zero()) {
        j["zero"] = true;
    } else {
        j["zero"] = false;
        j["exponent"] = n.exponent();  // |x| = p^-exponent
    }
    j["text"] = n.to_string();
    return j;
}

json to_json(const cubic::RuleId& r) {
    return json{{"table", cubic::table_name(r.table)}, {"row", r.row}};
}

json to_json(const dynamics::PointReport& r) {
    json j;
    j["kind"] = r.kind == dynamics::PointKind::fixed ? "fixed" : "periodic2";
    j["table_count"] = r.table_count ? json(*r.table_count) : json(nullptr);
    j["oracle_count"] = r.oracle_count;
    j["rule"] = r.rule ? to_json(*r.rule) : json(nullptr);
    j["consistent"] = r.consistent;
    json roots = json::array();
    for (const auto& z : r.roots) roots.push_back(to_json(z));
    j["roots"] = roots;
    return j;
}

json to_json(const gibbs::PValue& v) {
    if (v.is_rational()) return json{{"rational", v.rat().get_str()}};
    return to_json(v.padic());
}

json to_json(const DiscrepancyRecord& r) {
    json j;
    j["p"] = r.p;
    j["instance"] = r.instance;
    j["table"] = r.table_id;
    j["table_count"] = r.table_count;
    j["oracle_count"] = r.oracle_count;
    j["fired_row"] = r.fired_row;
    if (r.table_count_other_mode) j["table_count_other_mode"] = *r.table_count_other_mode;
    return j;
}

}  // namespace padic::report
