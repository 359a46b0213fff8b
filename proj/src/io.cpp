#include "qv/io.hpp"

#include <fstream>
#include <sstream>

namespace qv {

json family_to_json(const Family& fam) {
    json members = json::array();
    for (const auto& s : fam.members()) members.push_back(s.to_text());
    return json{{"q", fam.field().q()},
                {"n", fam.ambient_dim()},
                {"k", fam.member_dim()},
                {"members", std::move(members)}};
}

Family family_from_json(const json& j) {
    // accept both a bare family object and a CLI output envelope
    if (j.is_object() && !j.contains("q") && j.contains("result"))
        return family_from_json(j.at("result"));
    if (!j.is_object() || !j.contains("q") || !j.contains("n") || !j.contains("k"))
        throw ParseError("family file needs a {q, n, k, members} object");
    const FieldSpec& f = field(j.at("q").get<int>());
    int n = j.at("n").get<int>();
    int k = j.at("k").get<int>();
    std::vector<Subspace> members;
    for (const auto& m : j.value("members", json::array()))
        members.push_back(Subspace::from_text(f, m.get<std::string>()));
    return Family(f, n, k, std::move(members));
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << '\n';
}

Family load_family(const std::string& path) { return family_from_json(load_json(path)); }

void save_family(const Family& fam, const std::string& path) {
    save_json(family_to_json(fam), path);
}

namespace {

json row_to_json(const ScanRow& r) {
    return json{{"lemma_id", r.lemma_id}, {"grid_point", r.grid_point},
                {"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)},
                {"relation", r.relation},  {"status", r.status}};
}

} // namespace

json scan_report_to_json(const ScanReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows) rows.push_back(row_to_json(r));
    return json{{"rows", std::move(rows)},
                {"summary",
                 {{"checked", rep.checked},
                  {"violations", rep.violations},
                  {"not_applicable", rep.not_applicable}}}};
}

std::string scan_report_to_csv(const ScanReport& rep) {
    std::ostringstream out;
    out << "lemma_id,grid_point,lhs,rhs,relation,status\n";
    for (const auto& r : rep.rows)
        out << r.lemma_id << ',' << r.grid_point << ',' << to_string(r.lhs) << ','
            << to_string(r.rhs) << ',' << r.relation << ',' << r.status << '\n';
    return out.str();
}

json cover_report_to_json(const CoverReport& rep) {
    json covers = json::array();
    for (const auto& s : rep.cover_set.members()) covers.push_back(s.to_text());
    return json{{"tau", rep.tau},
                {"witness", rep.witness.to_text()},
                {"cover_set", std::move(covers)},
                {"spanned", rep.spanned.to_text()}};
}

json structure_report_to_json(const StructureReport& rep) {
    json clauses = json::array();
    for (const auto& c : rep.clauses)
        clauses.push_back(
            json{{"clause", c.clause}, {"status", c.status}, {"detail", c.detail}});
    return json{{"clauses", std::move(clauses)}, {"any_fail", rep.any_fail()}};
}

json search_record_to_json(const SearchRecord& rec) {
    json fams = json::array();
    for (const auto& f : rec.families) fams.push_back(family_to_json(f));
    json j{{"config",
            {{"q", rec.config.q},
             {"n", rec.config.n},
             {"k", rec.config.k},
             {"t", rec.config.t},
             {"r", rec.config.r},
             {"mode", to_string(rec.config.mode)},
             {"seed_size", rec.config.seed_size},
             {"iteration_budget", rec.config.iteration_budget}}},
           {"best_product", rec.best_product.str()},
           {"families", std::move(fams)},
           {"certificates",
            {{"cross_intersecting", rec.certificates.cross_intersecting},
             {"nontriviality_dims", rec.certificates.nontriviality_dims},
             {"maximality", rec.certificates.maximality}}},
           {"provenance",
            {{"mode", to_string(rec.config.mode)},
             {"rng_seed", rec.config.rng_seed},
             {"iterations", rec.iterations}}}};
    if (rec.num_optimal_pairs >= 0) {
        j["num_optimal_pairs"] = rec.num_optimal_pairs;
        j["all_optimal_trivial"] = rec.all_optimal_trivial;
    }
    return j;
}

SearchRecord search_record_from_json(const json& j) {
    if (j.is_object() && !j.contains("config") && j.contains("result"))
        return search_record_from_json(j.at("result"));
    SearchRecord rec;
    const json& c = j.at("config");
    rec.config.q = c.at("q").get<int>();
    rec.config.n = c.at("n").get<int>();
    rec.config.k = c.at("k").get<int>();
    rec.config.t = c.at("t").get<int>();
    rec.config.r = c.at("r").get<int>();
    rec.config.mode = search_mode_from_string(c.at("mode").get<std::string>());
    rec.config.seed_size = c.value("seed_size", 0);
    rec.config.iteration_budget = c.value("iteration_budget", 0LL);
    rec.best_product = ExactInt(j.at("best_product").get<std::string>());
    for (const auto& f : j.at("families")) rec.families.push_back(family_from_json(f));
    const json& cert = j.at("certificates");
    rec.certificates.cross_intersecting = cert.at("cross_intersecting").get<bool>();
    rec.certificates.nontriviality_dims =
        cert.at("nontriviality_dims").get<std::vector<int>>();
    rec.certificates.maximality = cert.at("maximality").get<bool>();
    const json& prov = j.at("provenance");
    rec.config.rng_seed = prov.at("rng_seed").get<uint64_t>();
    rec.iterations = prov.at("iterations").get<long long>();
    rec.num_optimal_pairs = j.value("num_optimal_pairs", -1LL);
    rec.all_optimal_trivial = j.value("all_optimal_trivial", false);
    return rec;
}

SearchRecord load_search_record(const std::string& path) {
    SearchRecord rec = search_record_from_json(load_json(path));
    reverify_record(rec);
    return rec;
}

void save_search_record(const SearchRecord& rec, const std::string& path) {
    save_json(search_record_to_json(rec), path);
}

json comparison_report_to_json(const ComparisonReport& rep) {
    json j{{"claim", rep.claim},
           {"claimed_value", rep.claimed_value.str()},
           {"best_product", rep.best_product.str()},
           {"relation", rep.relation},
           {"hypotheses_met", rep.hypotheses_met},
           {"exploratory_note", rep.exploratory_note}};
    if (rep.structural_match) j["structural_match"] = *rep.structural_match;
    return j;
}

} // namespace qv
