#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qv/families.hpp"
#include "qv/qbinom.hpp"
#include "qv/search.hpp"

using namespace qv;

namespace {

Subspace line(const FieldSpec& f, int n, int axis) {
    std::vector<uint8_t> v(n, 0);
    v[axis] = 1;
    return Subspace::span(f, n, {v});
}

Subspace coord_space(const FieldSpec& f, int n, std::initializer_list<int> axes) {
    std::vector<std::vector<uint8_t>> vecs;
    for (int a : axes) {
        std::vector<uint8_t> v(n, 0);
        v[a] = 1;
        vecs.push_back(std::move(v));
    }
    return Subspace::span(f, n, vecs);
}

} // namespace

TEST_CASE("family construction: canonical order, dedup, validation") {
    const FieldSpec& f = field(2);
    auto subs = all_subspaces(f, 4, 2);
    Family fam(f, 4, 2, {subs[3], subs[1], subs[3], subs[0]});
    CHECK(fam.size() == 3);
    CHECK(fam.members()[0] < fam.members()[1]);
    CHECK(fam.has(subs[1]));
    CHECK(!fam.has(subs[2]));
    CHECK_THROWS_AS(Family(f, 4, 2, {all_subspaces(f, 4, 1)[0]}), DimensionMismatch);
    CHECK_THROWS_AS(Family(f, 5, 2, {subs[0]}), AmbientMismatch);
}

TEST_CASE("trivial family size and membership") {
    const FieldSpec& f = field(2);
    Subspace T = line(f, 6, 0);
    Family star = trivial_family(T, 2);
    CHECK(ExactInt(star.size()) == gauss_binom(5, 1, 2));
    for (const auto& s : star.members()) CHECK(contains(s, T));
    CHECK(common_intersection(star) == T);
    CHECK(is_t_intersecting(star, 1));
}

TEST_CASE("h2 sizes match the closed form at three points") {
    struct Point { int q, n, k, t; };
    for (Point p : {Point{2, 6, 2, 1}, Point{2, 7, 3, 1}, Point{3, 5, 2, 1}}) {
        const FieldSpec& f = field(p.q);
        Subspace Z = coord_space(f, p.n, {0, 1, 2});
        REQUIRE(Z.dim() == p.t + 2);
        Family h2 = construct_h2(Z, p.k, p.t + 1);
        CAPTURE(p.q); CAPTURE(p.n); CAPTURE(p.k);
        CHECK(ExactInt(h2.size()) == h2_size(p.n, p.k, p.t, p.q));
    }
}

TEST_CASE("h1 sizes match the profile-sum formula and are choice-invariant") {
    struct Point { int q, n, k, t; };
    for (Point p : {Point{2, 5, 2, 1}, Point{2, 7, 3, 1}, Point{3, 5, 2, 1}}) {
        const FieldSpec& f = field(p.q);
        Subspace T = line(f, p.n, 0);
        std::vector<int> axes(p.k + 1);
        for (int i = 0; i <= p.k; ++i) axes[i] = i;
        Subspace M = Subspace::span(f, p.n, [&] {
            std::vector<std::vector<uint8_t>> vecs;
            for (int a : axes) {
                std::vector<uint8_t> v(p.n, 0);
                v[a] = 1;
                vecs.push_back(std::move(v));
            }
            return vecs;
        }());
        Family h1 = construct_h1(M, M, T, p.k, p.t);
        CAPTURE(p.q); CAPTURE(p.n); CAPTURE(p.k);
        CHECK(ExactInt(h1.size()) == h1_size(p.n, p.k, p.t, p.q));
    }
    // size does not depend on which (M, T) is picked
    const FieldSpec& f = field(2);
    Subspace M1 = coord_space(f, 7, {0, 1, 2, 3});
    Subspace M2 = coord_space(f, 7, {1, 3, 5, 6});
    Subspace M3 = Subspace::span(f, 7, {{1, 1, 0, 0, 0, 0, 1},
                                        {0, 1, 1, 0, 1, 0, 0},
                                        {0, 0, 0, 1, 1, 0, 0},
                                        {0, 0, 0, 0, 0, 1, 1}});
    size_t sz = 0;
    for (const auto& M : {M1, M2, M3}) {
        Subspace T = subspaces_of(M, 1).front();
        Family h1 = construct_h1(M, M, T, 3, 1);
        if (sz == 0) sz = h1.size();
        CHECK(h1.size() == sz);
    }
}

TEST_CASE("h1 preconditions") {
    const FieldSpec& f = field(2);
    Subspace T = line(f, 6, 0);
    Subspace M = coord_space(f, 6, {0, 1, 2});
    Subspace bad_T = line(f, 6, 5); // not inside M
    CHECK_THROWS_AS(construct_h1(M, M, bad_T, 2, 1), PreconditionViolated);
    CHECK_THROWS_AS(construct_h1(M, M, T, 3, 1), PreconditionViolated); // dim M != k+1
}

TEST_CASE("cross and r-wise intersection checks with witnesses") {
    const FieldSpec& f = field(2);
    Family star0 = trivial_family(line(f, 6, 0), 2);
    Family star1 = trivial_family(line(f, 6, 1), 2);
    CHECK(cross_t_intersecting(star0, star0, 1));
    std::pair<Subspace, Subspace> w{star0.members()[0], star0.members()[0]};
    CHECK(!cross_t_intersecting(star0, star1, 1, &w));
    CHECK(meet_dim(w.first, w.second) < 1);
    CHECK_THROWS_AS(cross_t_intersecting(Family(f, 6, 2), star0, 1), EmptyFamily);

    auto rw = min_r_wise_intersection({star0, star0, star0}, 1000000);
    CHECK(rw.exact);
    CHECK(rw.min_dim == 1);
}

TEST_CASE("r-wise check degrades to a deterministic sample over budget") {
    const FieldSpec& f = field(2);
    Family star = trivial_family(line(f, 6, 0), 2);
    auto a = min_r_wise_intersection({star, star, star}, 50, 9);
    auto b = min_r_wise_intersection({star, star, star}, 50, 9);
    CHECK(!a.exact);
    CHECK(a.tuples_checked == 50);
    CHECK(a.min_dim == b.min_dim);
    for (size_t i = 0; i < a.witness.size(); ++i)
        CHECK(a.witness[i] == b.witness[i]);
}

TEST_CASE("covering number of a trivial family is dim T with witness T") {
    const FieldSpec& f = field(2);
    Subspace T = line(f, 6, 2);
    Family star = trivial_family(T, 2);
    CoverReport rep = covering_number(star, 1, 6);
    CHECK(rep.tau == 1);
    CHECK(rep.witness == T);
    CHECK(rep.cover_set.size() == 1);
    CHECK(rep.spanned == T);
}

TEST_CASE("covering number of the Hilton-Milner-type family is t+1") {
    const FieldSpec& f = field(2);
    Subspace Z = coord_space(f, 6, {0, 1, 2});
    Family h2 = construct_h2(Z, 3, 2);
    CoverReport rep = covering_number(h2, 1, 6);
    CHECK(rep.tau == 2);
    for (const auto& c : rep.cover_set.members()) CHECK(is_t_cover(c, h2, 1));
    CHECK(rep.spanned == Z);
    CHECK_THROWS_AS(covering_number(h2, 1, 1), NoCoverWithinBound);
}

TEST_CASE("size bound holds on a maximal trivial pair") {
    const FieldSpec& f = field(2);
    Family star = trivial_family(line(f, 6, 0), 2);
    CHECK(verify_size_bound(star, star, 1));
    Family other = trivial_family(line(f, 6, 1), 2);
    CHECK_THROWS_AS(verify_size_bound(star, other, 1), HypothesisViolated);
}

TEST_CASE("push-up argument finds a witness on a trivial family") {
    const FieldSpec& f = field(2);
    Subspace T = line(f, 6, 0);
    Family star = trivial_family(T, 2);
    Subspace S = line(f, 6, 1); // dim(T∩S) = 0 < t
    PushupResult res = verify_pushup(star, T, S, 1);
    CHECK(res.ratio_ok);
    CHECK(res.witness_r.dim() == 2); // s + t - y = 1 + 1 - 0
    CHECK_THROWS_AS(verify_pushup(star, T, T, 1), PreconditionViolated);
}

TEST_CASE("b_family drops exactly the members avoiding every cover") {
    const FieldSpec& f = field(2);
    Subspace Z = coord_space(f, 6, {0, 1, 2});
    Family h2 = construct_h2(Z, 3, 2);
    Family b = b_family(h2, h2, 1);
    // members of H2 contain a 2-subspace of Z by construction, and every
    // 2-subspace of Z is a 1-cover, so nothing survives
    CHECK(b.empty());
}

TEST_CASE("intersection profile matches the closed form") {
    const FieldSpec& f = field(2);
    Subspace M = coord_space(f, 6, {0, 1, 2, 3});
    Subspace T = line(f, 6, 0);
    auto counts = intersection_profile(M, T, 3);
    for (long j = 1; j <= 3; ++j)
        CHECK(ExactInt(counts[j - 1]) == profile_count(6, 3, 1, 4, j, 2));
}

TEST_CASE("structure suite passes on the maximal trivial pair") {
    const FieldSpec& f = field(2);
    Family star = trivial_family(line(f, 6, 0), 2);
    StructureReport rep = check_cover_structure(star, star, 1);
    CHECK(!rep.any_fail());
    Family other = trivial_family(line(f, 6, 1), 2);
    CHECK_THROWS_AS(check_cover_structure(star, other, 1), NotMaximal);
}
