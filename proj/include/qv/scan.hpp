#pragma once

#include <string>
#include <vector>

#include "qv/exact.hpp"

namespace qv {

/// One checked (or filtered) grid point of a numeric-lemma scan.
struct ScanRow {
    std::string lemma_id;
    std::string grid_point; // "q=2;k=3;t=1;n=18" style, fixed key order
    ExactRat lhs, rhs;
    std::string relation; // "<", "<=", ">", ">=", "=="
    std::string status;   // "pass", "fail", "not_applicable"
};

struct ScanReport {
    std::vector<ScanRow> rows;
    long checked = 0;
    long violations = 0;
    long not_applicable = 0;
};

/// Grid bounds for scan_numeric_lemmas. Each lemma derives its n range from
/// its own hypothesis threshold: n runs over [n_lo, n_lo + n_span - 1].
struct ScanGrid {
    std::vector<long> qs{2, 3, 4, 5};
    long k_max = 8;
    long m_max = 40;  // lemma 2.1: 1 <= i < m <= m_max
    long n_span = 15;
    int workers = 1;
};

/// Known lemma ids: "2.1" (Gaussian ratio sandwich), "2.4" (h monotone in x),
/// "2.5" (h(x1)h(x2) < f off the (t+1,t+1) corner), "2.6" (h1^2 > f and
/// h2^2 > g), "h1h2" (h1^2 vs h2^2 with equality exactly at (k,t)=(3,1)),
/// "eq1" (binomial ratio >= q^{n-k}), "4.1" (the cover-free remainder bound).
ScanReport scan_numeric_lemmas(const std::vector<std::string>& lemmas,
                               const ScanGrid& grid);

} // namespace qv
