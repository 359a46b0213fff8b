#include "qv/families.hpp"

#include <algorithm>
#include <random>

#include "qv/qbinom.hpp"
#include "qv/search.hpp"

namespace qv {

Family::Family(const FieldSpec& f, int n, int k, std::vector<Subspace> members)
    : f_(&f), n_(n), k_(k), members_(std::move(members)) {
    for (const auto& s : members_) {
        if (s.field().q() != f.q() || s.ambient_dim() != n)
            throw AmbientMismatch("family member in wrong ambient space");
        if (s.dim() != k)
            throw DimensionMismatch("family member has dimension " +
                                    std::to_string(s.dim()) + ", expected " +
                                    std::to_string(k));
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Family::has(const Subspace& s) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), s);
    return it != members_.end() && *it == s;
}

Family trivial_family(const Subspace& T, int k) {
    if (T.dim() > k) throw PreconditionViolated("trivial_family requires dim T <= k");
    return Family(T.field(), T.ambient_dim(), k, superspaces(T, k));
}

Family construct_h1(const Subspace& L, const Subspace& M, const Subspace& T,
                    int k, int t) {
    const FieldSpec& f = T.field();
    int n = T.ambient_dim();
    if (M.dim() != k + 1 || L.dim() != k + 1)
        throw PreconditionViolated("construct_h1 requires dim M = dim L = k+1");
    if (T.dim() != t || t > k)
        throw PreconditionViolated("construct_h1 requires dim T = t <= k");
    if (!contains(M, T) || !contains(L, T))
        throw PreconditionViolated("construct_h1 requires T ⊆ M∩L");
    std::vector<Subspace> members;
    for (const auto& F : superspaces(T, k))
        if (meet_dim(F, L) >= t + 1) members.push_back(F);
    for (const auto& F : subspaces_of(M, k))
        if (!contains(F, T)) members.push_back(F);
    return Family(f, n, k, std::move(members));
}

Family construct_h2(const Subspace& Z, int k, int threshold) {
    const FieldSpec& f = Z.field();
    int n = Z.ambient_dim();
    if (threshold < 0 || threshold > Z.dim() || threshold > k)
        throw PreconditionViolated("construct_h2 requires threshold <= min(dim Z, k)");
    // Union over threshold-dim subspaces I of Z of the k-superspaces of I;
    // dedup happens in the Family constructor.
    std::vector<Subspace> members;
    for (const auto& I : subspaces_of(Z, threshold))
        for (auto& F : superspaces(I, k)) members.push_back(std::move(F));
    return Family(f, n, k, std::move(members));
}

bool is_t_cover(const Subspace& S, const Family& fam, int t) {
    if (S.field().q() != fam.field().q() || S.ambient_dim() != fam.ambient_dim())
        throw AmbientMismatch("cover candidate in wrong ambient space");
    for (const auto& F : fam.members())
        if (meet_dim(S, F) < t) return false;
    return true;
}

bool is_t_intersecting(const Family& fam, int t) {
    const auto& m = fam.members();
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j)
            if (meet_dim(m[i], m[j]) < t) return false;
    return true;
}

bool cross_t_intersecting(const Family& F, const Family& G, int t,
                          std::pair<Subspace, Subspace>* witness) {
    if (F.empty() || G.empty()) throw EmptyFamily("cross check over empty family");
    for (const auto& a : F.members())
        for (const auto& b : G.members())
            if (meet_dim(a, b) < t) {
                if (witness) *witness = {a, b};
                return false;
            }
    return true;
}

Subspace common_intersection(const Family& fam) {
    if (fam.empty()) throw EmptyFamily("common_intersection of empty family");
    Subspace acc = fam.members().front();
    for (size_t i = 1; i < fam.size() && acc.dim() > 0; ++i)
        acc = meet(acc, fam.members()[i]);
    return acc;
}

RWiseResult min_r_wise_intersection(const std::vector<Family>& families,
                                    long long sample_budget, uint64_t seed) {
    if (families.size() < 2)
        throw PreconditionViolated("min_r_wise_intersection requires r >= 2");
    for (const auto& f : families)
        if (f.empty()) throw EmptyFamily("min_r_wise_intersection over empty family");
    const size_t r = families.size();
    ExactInt total = 1;
    for (const auto& f : families) total *= ExactInt(f.size());

    RWiseResult out{families[0].ambient_dim() + 1, {}, true, seed, 0};
    auto consider = [&](const std::vector<size_t>& idx) {
        Subspace acc = families[0].members()[idx[0]];
        for (size_t i = 1; i < r && acc.dim() > 0; ++i)
            acc = meet(acc, families[i].members()[idx[i]]);
        ++out.tuples_checked;
        if (acc.dim() < out.min_dim) {
            out.min_dim = acc.dim();
            out.witness.clear();
            for (size_t i = 0; i < r; ++i)
                out.witness.push_back(families[i].members()[idx[i]]);
        }
    };

    std::vector<size_t> idx(r, 0);
    if (total <= ExactInt(sample_budget)) {
        // full odometer over the tuple space
        while (true) {
            consider(idx);
            size_t i = r;
            while (i > 0) {
                --i;
                if (++idx[i] < families[i].size()) break;
                idx[i] = 0;
                if (i == 0) return out;
            }
        }
    }
    out.exact = false;
    std::mt19937_64 rng(seed);
    for (long long s = 0; s < sample_budget; ++s) {
        for (size_t i = 0; i < r; ++i)
            idx[i] = static_cast<size_t>(rng() % families[i].size());
        consider(idx);
    }
    return out;
}

namespace {

// Fail-fast cover test: remember which member rejected the previous
// candidate and try it first. Ordering only affects speed.
struct CoverTester {
    const Family& fam;
    int t;
    size_t last_fail = 0;
    bool operator()(const Subspace& S) {
        const auto& m = fam.members();
        if (meet_dim(S, m[last_fail]) < t) return false;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == last_fail) continue;
            if (meet_dim(S, m[i]) < t) {
                last_fail = i;
                return false;
            }
        }
        return true;
    }
};

} // namespace

CoverReport covering_number(const Family& fam, int t, int max_dim) {
    if (fam.empty()) throw EmptyFamily("covering_number of empty family");
    if (t > max_dim || max_dim > fam.ambient_dim())
        throw PreconditionViolated("covering_number requires t <= max_dim <= n");
    const FieldSpec& f = fam.field();
    int n = fam.ambient_dim();
    for (int d = t; d <= max_dim; ++d) {
        CoverTester test{fam, t};
        std::vector<Subspace> covers;
        for_each_subspace(f, n, d, [&](const Subspace& S) {
            if (test(S)) covers.push_back(S);
            return true;
        });
        if (!covers.empty()) {
            Subspace spanned = covers.front();
            for (size_t i = 1; i < covers.size(); ++i)
                spanned = join(spanned, covers[i]);
            Subspace witness = covers.front();
            return CoverReport{d, witness, Family(f, n, d, std::move(covers)),
                               std::move(spanned)};
        }
    }
    throw NoCoverWithinBound("no t-cover of dimension <= " + std::to_string(max_dim));
}

namespace {

std::string sz(const ExactInt& v) { return v.str(); }

void clause_32(const Family& fam, const Family& covers, int t, int k,
               const std::string& label, std::vector<ClauseResult>& out) {
    // covers = all (t+1)-dim t-covers of fam. For each t-space T met by a
    // cover, M = span of the covers through T; every member missing T must
    // satisfy dim(M ∩ F) = dim M - 1, and the covers through T number at
    // most [dim M - t, 1] <= [k-t+1, 1].
    const FieldSpec& f = fam.field();
    long q = f.q();
    int n = fam.ambient_dim();
    bool ok = true;
    std::string detail;
    for_each_subspace(f, n, t, [&](const Subspace& T) {
        std::vector<Subspace> through;
        for (const auto& S : covers.members())
            if (contains(S, T)) through.push_back(S);
        if (through.empty()) return true;
        Subspace M = through.front();
        for (size_t i = 1; i < through.size(); ++i) M = join(M, through[i]);
        if (M.dim() < t + 1 || M.dim() > k + 1) {
            ok = false;
            detail = "span dim " + std::to_string(M.dim()) + " outside [t+1,k+1]";
            return false;
        }
        if (ExactInt(through.size()) > gauss_binom(M.dim() - t, 1, q) ||
            gauss_binom(M.dim() - t, 1, q) > gauss_binom(k - t + 1, 1, q)) {
            ok = false;
            detail = "cover count exceeds [dim M - t, 1]";
            return false;
        }
        for (const auto& F : fam.members()) {
            if (contains(F, T)) continue;
            if (meet_dim(M, F) != M.dim() - 1) {
                ok = false;
                detail = "member " + F.to_text() + " at T=" + T.to_text();
                return false;
            }
        }
        return true;
    });
    out.push_back({label, ok ? "pass" : "fail", detail});
}

} // namespace

StructureReport check_cover_structure(const Family& F, const Family& G, int t) {
    if (F.empty() || G.empty()) throw EmptyFamily("structure check on empty family");
    const FieldSpec& f = F.field();
    long q = f.q();
    int n = F.ambient_dim(), k = F.member_dim();

    if (!(closure(G, t, k) == F) || !(closure(F, t, k) == G))
        throw NotMaximal("pair is not two-sided closure stable");

    CoverReport covF = covering_number(F, t, n);
    CoverReport covG = covering_number(G, t, n);

    StructureReport rep;
    bool base_hyp = n >= 2 * k && k >= t;

    // cover sets of a maximal pair cross t-intersect
    if (!base_hyp) {
        rep.clauses.push_back({"3.1", "not_applicable", "needs n >= 2k >= 2t"});
    } else {
        std::pair<Subspace, Subspace> w{covF.witness, covG.witness};
        bool ok = cross_t_intersecting(covF.cover_set, covG.cover_set, t, &w);
        rep.clauses.push_back({"3.1", ok ? "pass" : "fail",
                               ok ? "" : w.first.to_text() + " | " + w.second.to_text()});
    }

    using Side = std::tuple<const Family*, const CoverReport*, const char*>;
    for (const auto& [fam, cov, label] :
         {Side{&F, &covF, "3.2:F"}, Side{&G, &covG, "3.2:G"}}) {
        if (!base_hyp || cov->tau != t + 1) {
            rep.clauses.push_back({label, "not_applicable",
                                   "needs n >= 2k >= 2t and tau_t = t+1"});
            continue;
        }
        clause_32(*fam, cov->cover_set, t, k, label, rep.clauses);
    }

    // 3.3: orient so that the first cover set has covering number t+1
    bool hyp33 = n >= 2 * k && k >= t + 1 && covF.tau == t + 1 && covG.tau == t + 1;
    if (!hyp33) {
        for (const char* c : {"3.3.i", "3.3.ii", "3.3.iii"})
            rep.clauses.push_back({c, "not_applicable",
                                   "needs n >= 2k >= 2t+2 and tau_t(F) = tau_t(G) = t+1"});
        return rep;
    }
    const Family* T1 = &covF.cover_set;
    const Family* T2 = &covG.cover_set;
    int tauT1 = covering_number(*T1, t, n).tau;
    int tauT2 = covering_number(*T2, t, n).tau;
    if (tauT1 != t + 1 && tauT2 == t + 1) {
        std::swap(T1, T2);
        std::swap(tauT1, tauT2);
    }
    if (tauT1 != t + 1) {
        for (const char* c : {"3.3.i", "3.3.ii", "3.3.iii"})
            rep.clauses.push_back({c, "not_applicable", "needs tau_t of a cover set = t+1"});
        return rep;
    }

    if (tauT2 == t && T2->size() >= 2) {
        ExactInt b1 = gauss_binom(k - t + 1, 1, q) + q * q * gauss_binom(t, 1, q);
        bool ok = ExactInt(T1->size()) <= b1 &&
                  ExactInt(T2->size()) <= gauss_binom(2, 1, q);
        rep.clauses.push_back({"3.3.i", ok ? "pass" : "fail",
                               "|T1|=" + std::to_string(T1->size()) +
                                   " |T2|=" + std::to_string(T2->size()) +
                                   " bound=" + sz(b1)});
    } else {
        rep.clauses.push_back({"3.3.i", "not_applicable",
                               "needs tau_t(T2) = t and |T2| >= 2"});
    }

    bool t1_tint = is_t_intersecting(*T1, t);
    if (tauT2 == t + 1 && t1_tint) {
        Subspace all = common_join(*T1, *T2);
        bool ok = is_t_intersecting(*T2, t) && all.dim() <= t + 2;
        rep.clauses.push_back({"3.3.ii", ok ? "pass" : "fail",
                               "joint span dim " + std::to_string(all.dim())});
    } else {
        rep.clauses.push_back({"3.3.ii", "not_applicable",
                               "needs tau_t(T2) = t+1 and T1 t-intersecting"});
    }

    if (tauT2 == t + 1 && !t1_tint) {
        ExactInt cap = gauss_binom(2, 1, q) * gauss_binom(2, 1, q);
        ExactInt prod = ExactInt(T1->size() + 1) * ExactInt(T2->size() + 1);
        ExactInt lim = gauss_binom(t + 2, 1, q) * gauss_binom(t + 2, 1, q);
        bool ok = ExactInt(T1->size()) <= cap && ExactInt(T2->size()) <= cap &&
                  prod < lim;
        rep.clauses.push_back({"3.3.iii", ok ? "pass" : "fail",
                               "(|T1|+1)(|T2|+1)=" + sz(prod) + " vs " + sz(lim)});
    } else {
        rep.clauses.push_back({"3.3.iii", "not_applicable",
                               "needs tau_t(T2) = t+1 and T1 not t-intersecting"});
    }
    return rep;
}

PushupResult verify_pushup(const Family& fam, const Subspace& X,
                           const Subspace& S, int t) {
    const FieldSpec& f = fam.field();
    long q = f.q();
    int n = fam.ambient_dim(), k = fam.member_dim();
    int x = X.dim(), s = S.dim();
    if (x < t || k < t) throw PreconditionViolated("verify_pushup requires x, k >= t");
    if (!is_t_cover(X, fam, t))
        throw PreconditionViolated("X is not a t-cover of the family");
    int y = meet_dim(X, S);
    if (y >= t) throw PreconditionViolated("verify_pushup requires dim(X∩S) < t");
    if (n < k + x) throw HypothesisViolated("verify_pushup requires n >= k+x");

    long long fam_s = 0;
    for (const auto& F : fam.members())
        if (contains(F, S)) ++fam_s;
    ExactInt factor = pow_int(gauss_binom(x - t + 1, 1, q), t - y);

    for (const auto& R : superspaces(S, s + t - y)) {
        long long fam_r = 0;
        for (const auto& F : fam.members())
            if (contains(F, R)) ++fam_r;
        if (ExactInt(fam_s) <= factor * ExactInt(fam_r))
            return PushupResult{R, true};
    }
    throw NoWitness("no push-up witness exists: lemma falsified at this instance");
}

bool verify_size_bound(const Family& F, const Family& G, int t) {
    long q = F.field().q();
    int n = F.ambient_dim(), k = F.member_dim();
    if (!(n >= 2 * k - t + 1 && 2 * k - t + 1 >= t + 3))
        throw HypothesisViolated("verify_size_bound requires n >= 2k-t+1 >= t+3");
    if (!cross_t_intersecting(F, G, t))
        throw HypothesisViolated("families are not cross t-intersecting");
    int tauF = covering_number(F, t, n).tau;
    int tauG = covering_number(G, t, n).tau;
    ExactInt bound = gauss_binom(tauF, t, q) *
                     pow_int(gauss_binom(k - t + 1, 1, q), tauG - t) *
                     gauss_binom(n - tauG, k - tauG, q);
    return ExactInt(F.size()) <= bound;
}

Family b_family(const Family& F, const Family& G, int t) {
    if (F.empty() || G.empty())
        return Family(F.field(), F.ambient_dim(), F.member_dim());
    int n = F.ambient_dim();
    CoverReport covF = covering_number(F, t, n);
    CoverReport covG = covering_number(G, t, n);
    if (covF.tau != t + 1 || covG.tau != t + 1)
        throw HypothesisViolated("b_family requires tau_t(F) = tau_t(G) = t+1");
    std::vector<Subspace> members;
    for (const auto& g : G.members()) {
        bool covered = false;
        for (const auto& S : covF.cover_set.members())
            if (contains(g, S)) { covered = true; break; }
        if (!covered) members.push_back(g);
    }
    return Family(G.field(), G.ambient_dim(), G.member_dim(), std::move(members));
}

std::vector<long long> intersection_profile(const Subspace& M, const Subspace& T,
                                            int k) {
    if (!contains(M, T)) throw PreconditionViolated("intersection_profile requires T ⊆ M");
    int t = T.dim();
    std::vector<long long> counts(static_cast<size_t>(k - t + 1), 0);
    for (const auto& F : superspaces(T, k)) {
        int j = meet_dim(F, M);
        ++counts[static_cast<size_t>(j - t)];
    }
    return counts;
}

Subspace common_join(const Family& a, const Family& b) {
    if (a.empty() && b.empty()) throw EmptyFamily("common_join of empty pair");
    Subspace acc = a.empty() ? b.members().front() : a.members().front();
    for (const auto& s : a.members()) acc = join(acc, s);
    for (const auto& s : b.members()) acc = join(acc, s);
    return acc;
}

} // namespace qv
