#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qv/exact.hpp"
#include "qv/grassmann.hpp"

namespace qv {

/// Finite set of equal-dimension subspaces in deterministic canonical order.
/// Immutable after construction; duplicates collapse.
class Family {
public:
    Family(const FieldSpec& f, int n, int k) : f_(&f), n_(n), k_(k) {}
    Family(const FieldSpec& f, int n, int k, std::vector<Subspace> members);

    const FieldSpec& field() const { return *f_; }
    int ambient_dim() const { return n_; }
    int member_dim() const { return k_; }
    size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<Subspace>& members() const { return members_; }
    bool has(const Subspace& s) const;

    bool operator==(const Family& o) const {
        return f_->q() == o.f_->q() && n_ == o.n_ && k_ == o.k_ && members_ == o.members_;
    }
    bool operator<(const Family& o) const { return members_ < o.members_; }

private:
    const FieldSpec* f_;
    int n_, k_;
    std::vector<Subspace> members_;
};

/// All k-dim superspaces of T (the trivial family of Erdos-Ko-Rado type).
Family trivial_family(const Subspace& T, int k);

/// {F : T ⊂ F, dim(F∩L) >= t+1} ∪ {F ⊆ M, dim F = k : T ⊄ F}.
/// Requires dim M = dim L = k+1, dim T = t <= k, T ⊆ M∩L. The r-family
/// variant passes L = M and the shifted parameter t+r-2 as t.
Family construct_h1(const Subspace& L, const Subspace& M, const Subspace& T,
                    int k, int t);

/// {F : dim(F∩Z) >= threshold}. The Hilton-Milner-type family uses
/// threshold = dim Z - 1.
Family construct_h2(const Subspace& Z, int k, int threshold);

/// True iff dim(S∩F) >= t for every member F.
bool is_t_cover(const Subspace& S, const Family& fam, int t);

bool is_t_intersecting(const Family& fam, int t);

/// Pairwise cross check; on failure the witness pair is reported.
bool cross_t_intersecting(const Family& F, const Family& G, int t,
                          std::pair<Subspace, Subspace>* witness = nullptr);

/// Meet of all members. Throws EmptyFamily.
Subspace common_intersection(const Family& fam);

struct RWiseResult {
    int min_dim;
    std::vector<Subspace> witness; // one member per family attaining min_dim
    bool exact;                    // false: seeded sample (PartialResult)
    uint64_t seed;
    long long tuples_checked;
};

/// Minimum dim of r-wise intersections over all member tuples. Exact when
/// the tuple count fits the budget, otherwise a deterministic seeded sample.
RWiseResult min_r_wise_intersection(const std::vector<Family>& families,
                                    long long sample_budget, uint64_t seed = 1);

struct CoverReport {
    int tau;
    Subspace witness;
    Family cover_set; // every t-cover of dimension tau
    Subspace spanned; // join of all covers in cover_set
};

/// Smallest d in [t, max_dim] admitting a t-cover, by iterative deepening
/// with exhaustive certification that no smaller cover exists.
CoverReport covering_number(const Family& fam, int t, int max_dim);

struct ClauseResult {
    std::string clause;
    std::string status; // "pass", "fail", "not_applicable"
    std::string detail;
};

struct StructureReport {
    std::vector<ClauseResult> clauses;
    bool any_fail() const {
        for (const auto& c : clauses)
            if (c.status == "fail") return true;
        return false;
    }
};

/// Checks the cover-set structure statements on a maximal cross
/// t-intersecting pair: cover sets cross-intersect, the span of the covers
/// through a fixed t-space nearly contains every member missing it, and the
/// cover-set size bounds. Throws NotMaximal when the pair is not two-sided
/// closure stable.
StructureReport check_cover_structure(const Family& F, const Family& G, int t);

struct PushupResult {
    Subspace witness_r;
    bool ratio_ok;
};

/// Exhaustively searches all (s+t-y)-superspaces R of S for one with
/// |fam_S| <= [x-t+1 1]^{t-y} |fam_R|; absence is a lemma falsification
/// and throws NoWitness.
PushupResult verify_pushup(const Family& fam, const Subspace& X,
                           const Subspace& S, int t);

/// |F| <= [tau_t(F) t] [k-t+1 1]^{tau_t(G)-t} [n-tau_t(G) k-tau_t(G)].
bool verify_size_bound(const Family& F, const Family& G, int t);

/// Members of G containing no (t+1)-dimensional t-cover of F.
/// Requires tau_t(F) = tau_t(G) = t+1.
Family b_family(const Family& F, const Family& G, int t);

/// Join of every member of both families.
Subspace common_join(const Family& a, const Family& b);

/// counts[j - t] = #{F : T ⊂ F, dim F = k, dim(F∩M) = j} for j = t..k,
/// by direct enumeration over the k-superspaces of T.
std::vector<long long> intersection_profile(const Subspace& M, const Subspace& T,
                                            int k);

} // namespace qv
