#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qv/errors.hpp"
#include "qv/scan.hpp"

using namespace qv;

namespace {

ScanGrid small_grid() {
    ScanGrid g;
    g.qs = {2, 3};
    g.k_max = 4;
    g.m_max = 10;
    g.n_span = 3;
    return g;
}

} // namespace

TEST_CASE("every lemma scans clean on a small grid") {
    for (const char* id : {"2.1", "2.4", "2.5", "2.6", "h1h2", "eq1", "4.1"}) {
        CAPTURE(id);
        ScanReport rep = scan_numeric_lemmas({id}, small_grid());
        CHECK(rep.violations == 0);
        CHECK(rep.checked > 0);
        CHECK(rep.rows.size() ==
              static_cast<size_t>(rep.checked + rep.not_applicable));
    }
}

TEST_CASE("rows carry the evaluated bounds") {
    ScanGrid g = small_grid();
    g.qs = {2};
    g.m_max = 3;
    ScanReport rep = scan_numeric_lemmas({"2.1"}, g);
    // q=2, m=2, i=1: 2 < 3 < 4 split into two strict comparisons
    REQUIRE(rep.rows.size() >= 2);
    CHECK(rep.rows[0].lemma_id == "2.1");
    CHECK(rep.rows[0].grid_point == "q=2;m=2;i=1");
    CHECK(rep.rows[0].lhs == ExactRat(2));
    CHECK(rep.rows[0].rhs == ExactRat(3));
    CHECK(rep.rows[0].relation == "<");
    CHECK(rep.rows[0].status == "pass");
    CHECK(rep.rows[1].lhs == ExactRat(3));
    CHECK(rep.rows[1].rhs == ExactRat(4));
}

TEST_CASE("unknown lemma ids are rejected") {
    CHECK_THROWS_AS(scan_numeric_lemmas({"9.9"}, small_grid()), Error);
}

TEST_CASE("an empty grid is infeasible") {
    ScanGrid g = small_grid();
    g.qs.clear();
    CHECK_THROWS_AS(scan_numeric_lemmas({"2.1"}, g), InfeasibleGrid);
}

TEST_CASE("worker count does not change the report") {
    ScanGrid g1 = small_grid();
    ScanGrid g4 = small_grid();
    g4.workers = 4;
    ScanReport a = scan_numeric_lemmas({"2.4", "2.6", "h1h2"}, g1);
    ScanReport b = scan_numeric_lemmas({"2.4", "2.6", "h1h2"}, g4);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].grid_point == b.rows[i].grid_point);
        CHECK(a.rows[i].lhs == b.rows[i].lhs);
        CHECK(a.rows[i].rhs == b.rows[i].rhs);
        CHECK(a.rows[i].status == b.rows[i].status);
    }
    CHECK(a.checked == b.checked);
    CHECK(a.violations == b.violations);
}

TEST_CASE("the h1/h2 comparison grid skips the degenerate k = t+1 stripe") {
    ScanGrid g = small_grid();
    ScanReport rep = scan_numeric_lemmas({"h1h2"}, g);
    for (const auto& row : rep.rows) {
        // grid points look like q=..;n=..;k=K;t=T with T <= K-2
        auto kpos = row.grid_point.find(";k=");
        auto tpos = row.grid_point.find(";t=");
        int k = std::stoi(row.grid_point.substr(kpos + 3));
        int t = std::stoi(row.grid_point.substr(tpos + 3));
        CHECK(t <= k - 2);
    }
}
