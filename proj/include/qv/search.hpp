#pragma once

#include <optional>

#include "qv/families.hpp"

namespace qv {

enum class SearchMode { Unconstrained, NontrivialEach, NontrivialUnion };

std::string to_string(SearchMode m);
SearchMode search_mode_from_string(const std::string& s);

struct SearchConfig {
    int q = 2, n = 6, k = 2, t = 1, r = 2;
    SearchMode mode = SearchMode::Unconstrained;
    int seed_size = 2;          // exhaustive: max generator-set size
    uint64_t rng_seed = 1;
    long long iteration_budget = 1000000;
};

struct SearchCertificates {
    bool cross_intersecting = false;
    std::vector<int> nontriviality_dims; // dim of common intersection per family
    bool maximality = false;             // two-sided closure stability
};

struct SearchRecord {
    SearchConfig config;
    ExactInt best_product = 0;
    std::vector<Family> families;
    SearchCertificates certificates;
    long long iterations = 0;
    // Exhaustive runs additionally report optimum coverage; -1 when unknown.
    long long num_optimal_pairs = -1;
    bool all_optimal_trivial = false;
};

/// {G in [V k] : dim(G∩F) >= t for every F in fam}. A pair (F,G) is maximal
/// cross t-intersecting iff G = closure(F) and F = closure(G).
Family closure(const Family& fam, int t, int k);

/// Enumerates every generator set of size <= seed_size, maps it through the
/// double closure to a maximal pair, filters by mode, and returns the pair
/// with the maximum size product (lexicographically least among ties).
/// Deterministic. Throws BudgetExceeded when the seed space does not fit
/// iteration_budget or seed_size < 1.
SearchRecord exhaustive_closed_pairs(const SearchConfig& config);

/// Seeded hill climbing over generator sets (add / remove / swap moves with
/// reclosure). Never claims optimality; fully reproducible from rng_seed.
SearchRecord stochastic_improve(const SearchConfig& config,
                                const std::optional<std::pair<Family, Family>>& start);

/// Re-derives every certificate of a record from scratch and throws Error
/// on any mismatch. Used when loading serialized records.
void reverify_record(const SearchRecord& record);

struct ComparisonReport {
    std::string claim;
    ExactInt claimed_value = 0;
    ExactInt best_product = 0;
    std::string relation;          // "<", "==", ">"
    bool hypotheses_met = false;   // false => exploratory, never asserted
    std::string exploratory_note;
    std::optional<bool> structural_match; // set when products are equal
};

/// Claims: "EKR" ([n-t k-t]^r), "HM-pair" (max(h1^2,h2^2)), "HM-r"
/// (max(h1^r,h2^r) at the shifted intersection parameter t+r-2).
ComparisonReport compare_to_theorem(const SearchRecord& record,
                                    const std::string& claim);

} // namespace qv
