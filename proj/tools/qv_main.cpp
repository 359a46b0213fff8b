#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qv/io.hpp"
#include "qv/qbinom.hpp"

namespace {

constexpr const char* kToolVersion = "1.0.0";

using qv::json;

struct Output {
    std::string format = "json"; // json|csv|text
    std::string path;            // empty: stdout
    uint64_t seed = 1;
    int workers = 1;

    void emit(const std::string& subcommand, const json& result,
              const std::string& csv_body = "", const std::string& text_body = "") {
        std::ostringstream body;
        auto now = std::chrono::system_clock::now().time_since_epoch();
        long long ts = std::chrono::duration_cast<std::chrono::seconds>(now).count();
        if (format == "json") {
            json doc{{"provenance",
                      {{"tool", "qv"},
                       {"version", kToolVersion},
                       {"subcommand", subcommand},
                       {"seed", seed},
                       {"workers", workers},
                       {"timestamp", ts}}},
                     {"result", result}};
            body << doc.dump(2) << '\n';
        } else if (format == "csv") {
            body << "# qv " << kToolVersion << " " << subcommand << " seed=" << seed
                 << " timestamp=" << ts << '\n';
            body << (csv_body.empty() ? result.dump() + "\n" : csv_body);
        } else {
            body << "qv " << kToolVersion << " | " << subcommand << " | seed " << seed
                 << " | timestamp " << ts << '\n';
            body << (text_body.empty() ? result.dump(2) + "\n" : text_body);
        }
        if (path.empty()) {
            std::cout << body.str();
        } else {
            std::ofstream out(path);
            if (!out) throw qv::Error("cannot write " + path);
            out << body.str();
        }
    }
};

qv::Subspace parse_subspace(int q, const std::string& text) {
    return qv::Subspace::from_text(qv::field(q), text);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for cross t-intersecting subspace families"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--out", out.path, "write output to this path instead of stdout");
    app.add_option("--seed", out.seed, "seed for all randomness")->capture_default_str();
    app.add_option("--workers", out.workers, "worker thread count")
        ->capture_default_str();

    int exit_code = 0;

    // qbinom
    long qb_n = 0, qb_k = 0, qb_q = 2;
    auto* qbinom = app.add_subcommand("qbinom", "Gaussian binomial [n k]_q");
    qbinom->add_option("-n", qb_n)->required();
    qbinom->add_option("-k", qb_k)->required();
    qbinom->add_option("-q", qb_q)->capture_default_str();
    qbinom->callback([&] {
        qv::ExactInt v = qv::gauss_binom(qb_n, qb_k, qb_q);
        if (out.format == "text" && out.path.empty()) {
            std::cout << v.str() << '\n';
            return;
        }
        out.emit("qbinom",
                 json{{"n", qb_n}, {"k", qb_k}, {"q", qb_q}, {"value", v.str()}}, "",
                 v.str() + "\n");
    });

    // scan
    std::string scan_lemmas = "2.1,2.4,2.5,2.6,h1h2,eq1,4.1";
    std::string scan_qs = "2,3,4,5";
    qv::ScanGrid grid;
    auto* scan = app.add_subcommand("scan", "numeric lemma scans over a grid");
    scan->add_option("--lemmas", scan_lemmas, "comma-separated lemma ids")
        ->capture_default_str();
    scan->add_option("--q", scan_qs, "comma-separated field orders")
        ->capture_default_str();
    scan->add_option("--k-max", grid.k_max)->capture_default_str();
    scan->add_option("--m-max", grid.m_max)->capture_default_str();
    scan->add_option("--n-span", grid.n_span)->capture_default_str();
    scan->callback([&] {
        grid.qs.clear();
        for (const auto& s : split(scan_qs, ',')) grid.qs.push_back(std::stol(s));
        grid.workers = out.workers;
        qv::ScanReport rep = qv::scan_numeric_lemmas(split(scan_lemmas, ','), grid);
        std::ostringstream text;
        text << "checked " << rep.checked << ", violations " << rep.violations
             << ", not applicable " << rep.not_applicable << '\n';
        out.emit("scan", qv::scan_report_to_json(rep), qv::scan_report_to_csv(rep),
                 text.str());
        if (rep.violations > 0) exit_code = 1;
    });

    // enum
    int en_n = 0, en_k = 0, en_q = 2;
    long long en_limit = -1;
    auto* enum_cmd = app.add_subcommand("enum", "enumerate the k-subspaces of F_q^n");
    enum_cmd->add_option("-n", en_n)->required();
    enum_cmd->add_option("-k", en_k)->required();
    enum_cmd->add_option("-q", en_q)->capture_default_str();
    enum_cmd->add_option("--limit", en_limit, "stop after this many (-1: all)")
        ->capture_default_str();
    enum_cmd->callback([&] {
        json members = json::array();
        std::ostringstream text;
        long long count = 0;
        qv::for_each_subspace(qv::field(en_q), en_n, en_k, [&](const qv::Subspace& s) {
            if (en_limit >= 0 && count >= en_limit) return false;
            members.push_back(s.to_text());
            text << s.to_text() << '\n';
            ++count;
            return true;
        });
        out.emit("enum",
                 json{{"q", en_q}, {"n", en_n}, {"k", en_k},
                      {"count", count}, {"members", std::move(members)}},
                 "", text.str());
    });

    // construct
    std::string con_kind, con_T, con_M, con_L, con_Z, con_out_file;
    int con_q = 2, con_n = 0, con_k = 0, con_t = 1, con_threshold = -1;
    auto* con = app.add_subcommand("construct", "build trivial / h1 / h2 families");
    con->add_option("kind", con_kind)->required()->check(CLI::IsMember({"trivial", "h1", "h2"}));
    con->add_option("-q", con_q)->capture_default_str();
    con->add_option("-n", con_n)->required();
    con->add_option("-k", con_k)->required();
    con->add_option("-t", con_t)->capture_default_str();
    con->add_option("--T", con_T, "t-subspace literal, e.g. 100;010");
    con->add_option("--M", con_M, "(k+1)-subspace literal");
    con->add_option("--L", con_L, "(k+1)-subspace literal (defaults to M)");
    con->add_option("--Z", con_Z, "generating subspace literal for h2");
    con->add_option("--threshold", con_threshold,
                    "h2 intersection threshold (default dim Z - 1)");
    con->callback([&] {
        qv::Family fam(qv::field(con_q), con_n, con_k);
        if (con_kind == "trivial") {
            if (con_T.empty()) throw CLI::ValidationError("construct", "--T is required");
            fam = qv::trivial_family(parse_subspace(con_q, con_T), con_k);
        } else if (con_kind == "h1") {
            if (con_T.empty() || con_M.empty())
                throw CLI::ValidationError("construct", "--T and --M are required");
            qv::Subspace M = parse_subspace(con_q, con_M);
            qv::Subspace L = con_L.empty() ? M : parse_subspace(con_q, con_L);
            fam = qv::construct_h1(L, M, parse_subspace(con_q, con_T), con_k, con_t);
        } else {
            if (con_Z.empty()) throw CLI::ValidationError("construct", "--Z is required");
            qv::Subspace Z = parse_subspace(con_q, con_Z);
            int thr = con_threshold >= 0 ? con_threshold : Z.dim() - 1;
            fam = qv::construct_h2(Z, con_k, thr);
        }
        json j = qv::family_to_json(fam);
        std::ostringstream text;
        for (const auto& s : fam.members()) text << s.to_text() << '\n';
        out.emit("construct", j, "", text.str());
    });

    // verify
    std::string ver_pred;
    std::vector<std::string> ver_files;
    int ver_t = 1, ver_r = 2;
    long long ver_budget = 10000000;
    auto* ver = app.add_subcommand("verify", "check predicates on family files");
    ver->add_option("predicate", ver_pred)
        ->required()
        ->check(CLI::IsMember({"cross-t", "r-wise-t", "size-bound", "structure"}));
    ver->add_option("files", ver_files, "family files")->required()->expected(-1);
    ver->add_option("--t", ver_t)->capture_default_str();
    ver->add_option("--r", ver_r)->capture_default_str();
    ver->add_option("--budget", ver_budget, "exact tuple budget for r-wise checks")
        ->capture_default_str();
    ver->callback([&] {
        std::vector<qv::Family> fams;
        for (const auto& p : ver_files) fams.push_back(qv::load_family(p));
        json result;
        bool ok = true;
        if (ver_pred == "cross-t") {
            if (fams.size() != 2)
                throw CLI::ValidationError("verify", "cross-t needs exactly two files");
            std::pair<qv::Subspace, qv::Subspace> w{fams[0].members().front(),
                                                    fams[1].members().front()};
            ok = qv::cross_t_intersecting(fams[0], fams[1], ver_t, &w);
            result = json{{"predicate", "cross-t"}, {"t", ver_t},
                          {"status", ok ? "pass" : "fail"}};
            if (!ok)
                result["witness"] = json::array({w.first.to_text(), w.second.to_text()});
        } else if (ver_pred == "r-wise-t") {
            auto rw = qv::min_r_wise_intersection(fams, ver_budget, out.seed);
            ok = rw.min_dim >= ver_t;
            result = json{{"predicate", "r-wise-t"},
                          {"t", ver_t},
                          {"min_dim", rw.min_dim},
                          {"exact", rw.exact},
                          {"tuples_checked", rw.tuples_checked},
                          {"status", ok ? "pass" : "fail"}};
            if (!ok) {
                json w = json::array();
                for (const auto& s : rw.witness) w.push_back(s.to_text());
                result["witness"] = std::move(w);
            }
        } else if (ver_pred == "size-bound") {
            if (fams.size() != 2)
                throw CLI::ValidationError("verify", "size-bound needs exactly two files");
            ok = qv::verify_size_bound(fams[0], fams[1], ver_t);
            result = json{{"predicate", "size-bound"}, {"t", ver_t},
                          {"status", ok ? "pass" : "fail"}};
        } else { // structure
            if (fams.size() != 2)
                throw CLI::ValidationError("verify", "structure needs exactly two files");
            qv::StructureReport rep = qv::check_cover_structure(fams[0], fams[1], ver_t);
            ok = !rep.any_fail();
            result = qv::structure_report_to_json(rep);
        }
        out.emit("verify", result);
        if (!ok) exit_code = 1;
    });

    // covers
    std::string cov_file;
    int cov_t = 1, cov_max = -1;
    auto* cov = app.add_subcommand("covers", "covering number with certificate");
    cov->add_option("file", cov_file)->required();
    cov->add_option("--t", cov_t)->capture_default_str();
    cov->add_option("--max-dim", cov_max, "search bound (default: ambient dim)");
    cov->callback([&] {
        qv::Family fam = qv::load_family(cov_file);
        int bound = cov_max >= 0 ? cov_max : fam.ambient_dim();
        qv::CoverReport rep = qv::covering_number(fam, cov_t, bound);
        std::ostringstream text;
        text << "tau_" << cov_t << " = " << rep.tau << " witness " << rep.witness.to_text()
             << '\n';
        out.emit("covers", qv::cover_report_to_json(rep), "", text.str());
    });

    // search
    qv::SearchConfig cfg;
    std::string search_alg = "exhaustive", search_mode = "unconstrained", resume;
    auto* sea = app.add_subcommand("search", "closure-based optimum / falsification search");
    sea->add_option("-q", cfg.q)->capture_default_str();
    sea->add_option("-n", cfg.n)->required();
    sea->add_option("-k", cfg.k)->required();
    sea->add_option("-t", cfg.t)->capture_default_str();
    sea->add_option("--mode", search_mode)
        ->check(CLI::IsMember({"unconstrained", "nontrivial-each", "nontrivial-union"}))
        ->capture_default_str();
    sea->add_option("--algorithm", search_alg)
        ->check(CLI::IsMember({"exhaustive", "stochastic"}))
        ->capture_default_str();
    sea->add_option("--seed-size", cfg.seed_size)->capture_default_str();
    sea->add_option("--budget", cfg.iteration_budget)->capture_default_str();
    sea->add_option("--resume", resume, "warm-start a stochastic run from a record file");
    sea->callback([&] {
        cfg.mode = qv::search_mode_from_string(search_mode);
        cfg.rng_seed = out.seed;
        qv::SearchRecord rec;
        if (search_alg == "exhaustive") {
            rec = qv::exhaustive_closed_pairs(cfg);
        } else {
            std::optional<std::pair<qv::Family, qv::Family>> start;
            if (!resume.empty()) {
                qv::SearchRecord prev = qv::load_search_record(resume);
                start = std::pair(prev.families.at(0), prev.families.at(1));
            }
            rec = qv::stochastic_improve(cfg, start);
        }
        std::ostringstream text;
        text << "best product " << rec.best_product.str() << " over "
             << rec.iterations << " iterations\n";
        out.emit("search", qv::search_record_to_json(rec), "", text.str());
    });

    // report
    std::string rep_file, rep_claim;
    auto* rep_cmd = app.add_subcommand("report", "compare a search record to a claim");
    rep_cmd->add_option("file", rep_file)->required();
    rep_cmd->add_option("claim", rep_claim)
        ->required()
        ->check(CLI::IsMember({"EKR", "HM-pair", "HM-r"}));
    rep_cmd->callback([&] {
        qv::SearchRecord rec = qv::load_search_record(rep_file);
        qv::ComparisonReport cmp = qv::compare_to_theorem(rec, rep_claim);
        std::ostringstream text;
        text << cmp.claim << ": best " << cmp.best_product.str() << ' ' << cmp.relation
             << " claimed " << cmp.claimed_value.str()
             << (cmp.hypotheses_met ? "" : " (exploratory: " + cmp.exploratory_note + ")")
             << '\n';
        out.emit("report", qv::comparison_report_to_json(cmp), "", text.str());
        // a strict exceedance under the theorem's hypotheses is a falsification
        if (cmp.relation == ">" && cmp.hypotheses_met) exit_code = 1;
    });

    // let --format/--out/--seed/--workers appear after the subcommand too
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const qv::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const qv::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
