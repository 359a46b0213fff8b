#pragma once

#include <string>

#include <json.hpp>

#include "qv/families.hpp"
#include "qv/scan.hpp"
#include "qv/search.hpp"

namespace qv {

using json = nlohmann::json;

// Family file: {"q":..,"n":..,"k":..,"members":["100;010",...]} with members
// in canonical order.
json family_to_json(const Family& fam);
Family family_from_json(const json& j);
Family load_family(const std::string& path);
void save_family(const Family& fam, const std::string& path);

// Scan report rows carry exact rationals as "numerator/denominator" strings.
json scan_report_to_json(const ScanReport& rep);
std::string scan_report_to_csv(const ScanReport& rep);

json cover_report_to_json(const CoverReport& rep);
json structure_report_to_json(const StructureReport& rep);

json search_record_to_json(const SearchRecord& rec);
SearchRecord search_record_from_json(const json& j);
SearchRecord load_search_record(const std::string& path); // re-verifies
void save_search_record(const SearchRecord& rec, const std::string& path);

json comparison_report_to_json(const ComparisonReport& rep);

json load_json(const std::string& path);
void save_json(const json& j, const std::string& path);

} // namespace qv
