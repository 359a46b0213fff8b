#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qv/qbinom.hpp"
#include "qv/search.hpp"

using namespace qv;

namespace {

Subspace line(const FieldSpec& f, int n, int axis) {
    std::vector<uint8_t> v(n, 0);
    v[axis] = 1;
    return Subspace::span(f, n, {v});
}

Family random_family(const FieldSpec& f, int n, int k, int size,
                     std::mt19937_64& rng) {
    auto subs = all_subspaces(f, n, k);
    std::vector<Subspace> members;
    for (int i = 0; i < size; ++i) members.push_back(subs[rng() % subs.size()]);
    return Family(f, n, k, std::move(members));
}

} // namespace

TEST_CASE("closure contains the trivial family and fixes it") {
    const FieldSpec& f = field(2);
    Family star = trivial_family(line(f, 6, 0), 2);
    Family closed = closure(star, 1, 2);
    CHECK(closed == star); // the star is maximal at these parameters
}

TEST_CASE("closure of a single subspace counts intersecting k-spaces") {
    const FieldSpec& f = field(2);
    Family single(f, 6, 2, {all_subspaces(f, 6, 2).front()});
    Family closed = closure(single, 1, 2);
    // 2-spaces meeting a fixed 2-space: [6 2] - q^4 [4 2]
    CHECK(ExactInt(closed.size()) ==
          gauss_binom(6, 2, 2) - pow_int(ExactInt(2), 4) * gauss_binom(4, 2, 2));
    CHECK(closed.has(single.members().front()));
}

TEST_CASE("closure is antitone and the double closure is extensive") {
    std::mt19937_64 rng(5);
    const FieldSpec& f = field(2);
    for (int trial = 0; trial < 5; ++trial) {
        Family small = random_family(f, 6, 2, 2, rng);
        std::vector<Subspace> extended = small.members();
        Family big_src = random_family(f, 6, 2, 2, rng);
        for (const auto& s : big_src.members()) extended.push_back(s);
        Family big(f, 6, 2, std::move(extended));

        Family c_small = closure(small, 1, 2);
        Family c_big = closure(big, 1, 2);
        for (const auto& s : c_big.members()) CHECK(c_small.has(s)); // antitone
        Family cc = closure(c_small, 1, 2);
        for (const auto& s : small.members()) CHECK(cc.has(s)); // extensive
        // one more alternation is stable
        CHECK(closure(cc, 1, 2) == c_small);
    }
    CHECK_THROWS_AS(closure(Family(f, 6, 2), 1, 2), EmptyFamily);
}

TEST_CASE("exhaustive search solves the desk-scale optimum") {
    SearchConfig cfg;
    cfg.q = 2; cfg.n = 6; cfg.k = 2; cfg.t = 1;
    cfg.seed_size = 1; // single generators already reach the trivial pairs
    cfg.iteration_budget = 10000;
    SearchRecord rec = exhaustive_closed_pairs(cfg);
    CHECK(rec.best_product == ExactInt(31) * 31);
    CHECK(rec.certificates.cross_intersecting);
    CHECK(rec.certificates.maximality);
    CHECK(rec.num_optimal_pairs == gauss_binom(6, 1, 2)); // one per choice of T
    CHECK(rec.all_optimal_trivial);
    CHECK(rec.families[0] == rec.families[1]);

    // the non-trivial-union constraint removes every trivial pair
    cfg.mode = SearchMode::NontrivialUnion;
    SearchRecord constrained = exhaustive_closed_pairs(cfg);
    CHECK(constrained.best_product < rec.best_product);
    CHECK(!constrained.all_optimal_trivial);
}

TEST_CASE("exhaustive search budget and seed-size guards") {
    SearchConfig cfg;
    cfg.q = 2; cfg.n = 6; cfg.k = 2; cfg.t = 1;
    cfg.seed_size = 0;
    CHECK_THROWS_AS(exhaustive_closed_pairs(cfg), BudgetExceeded);
    cfg.seed_size = 2;
    cfg.iteration_budget = 100; // far below the pair count
    CHECK_THROWS_AS(exhaustive_closed_pairs(cfg), BudgetExceeded);
}

TEST_CASE("stochastic search is reproducible and respects budget 0") {
    SearchConfig cfg;
    cfg.q = 2; cfg.n = 6; cfg.k = 2; cfg.t = 1;
    cfg.rng_seed = 123;
    cfg.iteration_budget = 200;
    SearchRecord a = stochastic_improve(cfg, std::nullopt);
    SearchRecord b = stochastic_improve(cfg, std::nullopt);
    CHECK(a.best_product == b.best_product);
    REQUIRE(a.families.size() == b.families.size());
    for (size_t i = 0; i < a.families.size(); ++i)
        CHECK(a.families[i] == b.families[i]);

    const FieldSpec& f = field(2);
    Family star = trivial_family(line(f, 6, 0), 2);
    cfg.iteration_budget = 0;
    SearchRecord frozen = stochastic_improve(cfg, std::pair(star, star));
    CHECK(frozen.families[0] == star);
    CHECK(frozen.families[1] == star);
    CHECK(frozen.best_product == ExactInt(31) * 31);
    CHECK(frozen.iterations == 0);
}

TEST_CASE("records re-verify, and tampering is caught") {
    SearchConfig cfg;
    cfg.q = 2; cfg.n = 6; cfg.k = 2; cfg.t = 1;
    cfg.rng_seed = 4;
    cfg.iteration_budget = 100;
    SearchRecord rec = stochastic_improve(cfg, std::nullopt);
    reverify_record(rec);

    SearchRecord bad = rec;
    bad.best_product += 1;
    CHECK_THROWS_AS(reverify_record(bad), Error);
    bad = rec;
    bad.certificates.maximality = !bad.certificates.maximality;
    CHECK_THROWS_AS(reverify_record(bad), Error);
}

TEST_CASE("theorem comparison: exact match at the enumerable point") {
    SearchConfig cfg;
    cfg.q = 2; cfg.n = 6; cfg.k = 2; cfg.t = 1;
    cfg.seed_size = 1;
    SearchRecord rec = exhaustive_closed_pairs(cfg);
    ComparisonReport rep = compare_to_theorem(rec, "EKR");
    CHECK(rep.claimed_value == ExactInt(961));
    CHECK(rep.relation == "==");
    CHECK(rep.hypotheses_met); // 6 >= 2k + t + 1
    REQUIRE(rep.structural_match.has_value());
    CHECK(*rep.structural_match);
    CHECK_THROWS_AS(compare_to_theorem(rec, "nonsense"), UnknownClaim);
}

TEST_CASE("theorem comparison labels sub-threshold parameters exploratory") {
    SearchConfig cfg;
    cfg.q = 2; cfg.n = 6; cfg.k = 2; cfg.t = 1;
    cfg.mode = SearchMode::NontrivialEach;
    cfg.rng_seed = 9;
    cfg.iteration_budget = 100;
    SearchRecord rec = stochastic_improve(cfg, std::nullopt);
    ComparisonReport rep = compare_to_theorem(rec, "HM-pair");
    CHECK(!rep.hypotheses_met); // 6 < 4k + 6
    CHECK(!rep.exploratory_note.empty());
}
