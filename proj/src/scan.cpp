#include "qv/scan.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "qv/errors.hpp"
#include "qv/qbinom.hpp"

namespace qv {

namespace {

bool relation_holds(const ExactRat& lhs, const std::string& rel, const ExactRat& rhs) {
    if (rel == "<") return lhs < rhs;
    if (rel == "<=") return lhs <= rhs;
    if (rel == ">") return lhs > rhs;
    if (rel == ">=") return lhs >= rhs;
    if (rel == "==") return lhs == rhs;
    throw Error("unknown relation " + rel);
}

struct Task {
    std::string lemma_id;
    std::string grid_point;
    std::function<std::pair<ExactRat, ExactRat>()> eval;
    std::string relation;
};

// Always name the pair type: with expression templates, std::pair's CTAD
// would deduce a lazy expression referencing locals that die at scope exit.
using RatPair = std::pair<ExactRat, ExactRat>;

std::string pt(std::initializer_list<std::pair<const char*, long>> kv) {
    std::string s;
    for (auto& [k, v] : kv) {
        if (!s.empty()) s += ';';
        s += k;
        s += '=';
        s += std::to_string(v);
    }
    return s;
}

void gen_21(const ScanGrid& g, std::vector<Task>& out) {
    for (long q : g.qs)
        for (long m = 2; m <= g.m_max; ++m)
            for (long i = 1; i < m; ++i) {
                out.push_back({"2.1", pt({{"q", q}, {"m", m}, {"i", i}}),
                               [q, m, i] {
                                   return RatPair(pow_rat(q, m - i),
                                                    ExactRat(pow_int(ExactInt(q), m) - 1,
                                                             pow_int(ExactInt(q), i) - 1));
                               },
                               "<"});
                out.push_back({"2.1", pt({{"q", q}, {"m", m}, {"i", i}}),
                               [q, m, i] {
                                   return RatPair(ExactRat(pow_int(ExactInt(q), m) - 1,
                                                             pow_int(ExactInt(q), i) - 1),
                                                    pow_rat(q, m - i + 1));
                               },
                               "<"});
            }
}

void gen_24(const ScanGrid& g, std::vector<Task>& out) {
    for (long q : g.qs)
        for (long k = 2; k <= g.k_max; ++k)
            for (long t = 1; t < k; ++t)
                for (long n = 2 * k + 2; n < 2 * k + 2 + g.n_span; ++n)
                    for (long x = t; x <= k - 1; ++x)
                        out.push_back(
                            {"2.4", pt({{"q", q}, {"n", n}, {"k", k}, {"t", t}, {"x", x}}),
                             [=] {
                                 return RatPair(h_bound(n, k, t, x, q),
                                                  h_bound(n, k, t, x + 1, q));
                             },
                             ">="});
}

void gen_25(const ScanGrid& g, std::vector<Task>& out) {
    for (long q : g.qs)
        for (long k = 2; k <= g.k_max; ++k)
            for (long t = 1; t < k; ++t)
                for (long n = 4 * k + 6; n < 4 * k + 6 + g.n_span; ++n)
                    for (long x1 = t + 1; x1 <= k; ++x1)
                        for (long x2 = x1; x2 <= k; ++x2) {
                            if (x1 == t + 1 && x2 == t + 1) continue;
                            out.push_back(
                                {"2.5",
                                 pt({{"q", q}, {"n", n}, {"k", k}, {"t", t},
                                     {"x1", x1}, {"x2", x2}}),
                                 [=] {
                                     return RatPair(h_bound(n, k, t, x1, q) *
                                                          h_bound(n, k, t, x2, q),
                                                      f_bound(n, k, t, q));
                                 },
                                 "<"});
                        }
}

void gen_26(const ScanGrid& g, std::vector<Task>& out) {
    for (long q : g.qs)
        for (long k = 2; k <= g.k_max; ++k)
            for (long t = 1; t < k; ++t)
                for (long n = 4 * k + 6; n < 4 * k + 6 + g.n_span; ++n) {
                    auto point = pt({{"q", q}, {"n", n}, {"k", k}, {"t", t}});
                    out.push_back({"2.6", point,
                                   [=] {
                                       ExactRat h1(h1_size(n, k, t, q));
                                       return RatPair(h1 * h1, f_bound(n, k, t, q));
                                   },
                                   ">"});
                    out.push_back({"2.6", point,
                                   [=] {
                                       ExactRat h2(h2_size(n, k, t, q));
                                       return RatPair(h2 * h2, g_bound(n, k, t, q));
                                   },
                                   ">"});
                }
}

void gen_h1h2(const ScanGrid& g, std::vector<Task>& out) {
    // t <= k-2: at k = t+1 both families degenerate to the full set of
    // k-subspaces of a (k+1)-space, so the sizes coincide for every q.
    for (long q : g.qs)
        for (long k = 3; k <= g.k_max; ++k)
            for (long t = 1; t <= k - 2; ++t)
                for (long n = 4 * k + 6; n < 4 * k + 6 + g.n_span; ++n) {
                    std::string rel = k > 2 * t + 1 ? ">"
                                      : (k == 3 && t == 1) ? "=="
                                                           : "<";
                    out.push_back({"h1h2", pt({{"q", q}, {"n", n}, {"k", k}, {"t", t}}),
                                   [=] {
                                       ExactRat h1(h1_size(n, k, t, q));
                                       ExactRat h2(h2_size(n, k, t, q));
                                       return RatPair(h1 * h1, h2 * h2);
                                   },
                                   rel});
                }
}

void gen_eq1(const ScanGrid& g, std::vector<Task>& out) {
    for (long q : g.qs)
        for (long k = 1; k <= g.k_max; ++k)
            for (long t = 1; t <= k; ++t)
                for (long n = 2 * k - t + 1; n < 2 * k - t + 1 + g.n_span; ++n)
                    for (long a = 0; a <= k - 1; ++a)
                        out.push_back(
                            {"eq1",
                             pt({{"q", q}, {"n", n}, {"k", k}, {"t", t}, {"a", a}}),
                             [=] {
                                 return RatPair(
                                     ExactRat(pow_int(ExactInt(q), n - a) - 1,
                                              pow_int(ExactInt(q), k - a) - 1),
                                     pow_rat(q, n - k));
                             },
                             ">="});
}

void gen_41(const ScanGrid& g, std::vector<Task>& out) {
    for (long q : g.qs)
        for (long k = 2; k <= g.k_max; ++k)
            for (long t = 1; t < k; ++t)
                for (long n = 4 * k + 6; n < 4 * k + 6 + g.n_span; ++n)
                    out.push_back(
                        {"4.1", pt({{"q", q}, {"n", n}, {"k", k}, {"t", t}}),
                         [=] {
                             ExactRat lhs(gauss_binom(t + 1, 1, q) *
                                          gauss_binom(k - t + 2, 1, q) *
                                          gauss_binom(k - t + 1, 1, q) *
                                          gauss_binom(n - t - 2, k - t - 2, q));
                             ExactRat rhs = pow_rat(q, -k - t - 2) *
                                            ExactRat(gauss_binom(n - t - 1, k - t - 1, q));
                             return RatPair(lhs, rhs);
                         },
                         "<="});
}

} // namespace

ScanReport scan_numeric_lemmas(const std::vector<std::string>& lemmas,
                               const ScanGrid& grid) {
    std::vector<Task> tasks;
    for (const auto& id : lemmas) {
        if (id == "2.1") gen_21(grid, tasks);
        else if (id == "2.4") gen_24(grid, tasks);
        else if (id == "2.5") gen_25(grid, tasks);
        else if (id == "2.6") gen_26(grid, tasks);
        else if (id == "h1h2") gen_h1h2(grid, tasks);
        else if (id == "eq1") gen_eq1(grid, tasks);
        else if (id == "4.1") gen_41(grid, tasks);
        else throw Error("unknown lemma id: " + id);
    }
    if (tasks.empty())
        throw InfeasibleGrid("grid is empty after hypothesis filtering");

    ScanReport rep;
    rep.rows.resize(tasks.size());
    int workers = std::max(1, grid.workers);
    auto run = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            auto [lhs, rhs] = tasks[i].eval();
            bool ok = relation_holds(lhs, tasks[i].relation, rhs);
            rep.rows[i] = {tasks[i].lemma_id, tasks[i].grid_point, lhs, rhs,
                           tasks[i].relation, ok ? "pass" : "fail"};
        }
    };
    if (workers == 1) {
        run(0, tasks.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (tasks.size() + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            size_t lo = std::min(tasks.size(), w * chunk);
            size_t hi = std::min(tasks.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(run, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    for (const auto& row : rep.rows) {
        if (row.status == "pass") ++rep.checked;
        else if (row.status == "fail") { ++rep.checked; ++rep.violations; }
        else ++rep.not_applicable;
    }
    return rep;
}

} // namespace qv
