#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qv/grassmann.hpp"
#include "qv/qbinom.hpp"

using namespace qv;

namespace {

Subspace random_subspace(const FieldSpec& f, int n, int k, std::mt19937_64& rng) {
    std::vector<std::vector<uint8_t>> vecs;
    for (int i = 0; i < k + 1; ++i) {
        std::vector<uint8_t> v(n);
        for (auto& x : v) x = static_cast<uint8_t>(rng() % f.q());
        vecs.push_back(std::move(v));
    }
    return Subspace::span(f, n, vecs);
}

} // namespace

TEST_CASE("enumeration count matches the Gaussian binomial") {
    for (int q : {2, 3}) {
        const FieldSpec& f = field(q);
        for (int n = 0; n <= 5; ++n)
            for (int k = 0; k <= n; ++k) {
                long long count = 0;
                std::set<std::string> seen;
                for_each_subspace(f, n, k, [&](const Subspace& s) {
                    ++count;
                    CHECK(s.dim() == k);
                    seen.insert(s.to_text());
                    return true;
                });
                CAPTURE(q); CAPTURE(n); CAPTURE(k);
                CHECK(ExactInt(count) == gauss_binom(n, k, q));
                CHECK(seen.size() == static_cast<size_t>(count)); // all distinct
            }
    }
}

TEST_CASE("frozen counts: [3 1]_2 = 7 and [4 2]_2 = 35") {
    CHECK(all_subspaces(field(2), 3, 1).size() == 7);
    CHECK(all_subspaces(field(2), 4, 2).size() == 35);
}

TEST_CASE("span produces the canonical RREF basis") {
    const FieldSpec& f = field(2);
    Subspace a = Subspace::span(f, 4, {{1, 1, 0, 0}, {0, 1, 1, 0}});
    Subspace b = Subspace::span(f, 4, {{1, 0, 1, 0}, {1, 1, 0, 0}});
    CHECK(a == b); // same row space, same canonical form
    CHECK(a.dim() == 2);
}

TEST_CASE("meet and join satisfy the dimension formula") {
    std::mt19937_64 rng(3);
    for (int q : {2, 3, 4}) {
        const FieldSpec& f = field(q);
        for (int trial = 0; trial < 30; ++trial) {
            Subspace a = random_subspace(f, 5, 2, rng);
            Subspace b = random_subspace(f, 5, 2, rng);
            Subspace m = meet(a, b);
            Subspace j = join(a, b);
            CHECK(a.dim() + b.dim() == m.dim() + j.dim());
            CHECK(meet_dim(a, b) == m.dim());
            CHECK(contains(a, m));
            CHECK(contains(b, m));
            CHECK(contains(j, a));
            CHECK(contains(j, b));
        }
    }
}

TEST_CASE("zero and full space behave as lattice bounds") {
    const FieldSpec& f = field(3);
    Subspace z = Subspace::zero(f, 4);
    Subspace v = Subspace::full(f, 4);
    Subspace a = Subspace::span(f, 4, {{1, 0, 2, 0}});
    CHECK(meet(a, z) == z);
    CHECK(join(a, z) == a);
    CHECK(meet(a, v) == a);
    CHECK(join(a, v) == v);
    CHECK(contains(v, a));
    CHECK(contains(a, z));
}

TEST_CASE("text round trip, including the zero subspace") {
    const FieldSpec& f = field(2);
    for (const auto& s : all_subspaces(f, 4, 2))
        CHECK(Subspace::from_text(f, s.to_text()) == s);
    Subspace z = Subspace::zero(f, 4);
    CHECK(z.to_text() == "----");
    CHECK(Subspace::from_text(f, "----") == z);
    CHECK(Subspace::from_text(f, "100;010").dim() == 2);
    CHECK_THROWS_AS(Subspace::from_text(f, "100;01"), ParseError);
    CHECK_THROWS_AS(Subspace::from_text(f, "1x0"), ParseError);
}

TEST_CASE("hex digits cover fields beyond order 10") {
    const FieldSpec& f = field(16);
    Subspace s = Subspace::span(f, 3, {{0, 1, 15}});
    CHECK(s.to_text() == "01f");
    CHECK(Subspace::from_text(f, "01f") == s);
}

TEST_CASE("superspaces: count, containment and dimension") {
    const FieldSpec& f = field(2);
    Subspace t = Subspace::span(f, 5, {{1, 0, 0, 0, 0}});
    auto sup = superspaces(t, 2);
    CHECK(ExactInt(sup.size()) == gauss_binom(4, 1, 2)); // quotient count
    std::set<std::string> seen;
    for (const auto& s : sup) {
        CHECK(s.dim() == 2);
        CHECK(contains(s, t));
        seen.insert(s.to_text());
    }
    CHECK(seen.size() == sup.size());
}

TEST_CASE("subspaces_of: count, containment and dimension") {
    const FieldSpec& f = field(3);
    Subspace w = Subspace::span(f, 5, {{1, 0, 0, 1, 0}, {0, 1, 0, 0, 2}, {0, 0, 1, 0, 0}});
    auto subs = subspaces_of(w, 2);
    CHECK(ExactInt(subs.size()) == gauss_binom(3, 2, 3));
    std::set<std::string> seen;
    for (const auto& s : subs) {
        CHECK(s.dim() == 2);
        CHECK(contains(w, s));
        seen.insert(s.to_text());
    }
    CHECK(seen.size() == subs.size());
}

TEST_CASE("canonical order is a strict total order") {
    auto subs = all_subspaces(field(2), 4, 2);
    std::set<Subspace> sorted(subs.begin(), subs.end());
    CHECK(sorted.size() == subs.size());
    for (const auto& s : subs) CHECK(!(s < s));
}

TEST_CASE("enumeration stops early when the visitor returns false") {
    int count = 0;
    for_each_subspace(field(2), 5, 2, [&](const Subspace&) {
        return ++count < 10;
    });
    CHECK(count == 10);
}
