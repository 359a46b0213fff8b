#include "qv/search.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <mutex>
#include <random>
#include <unordered_map>

#include "qv/qbinom.hpp"

namespace qv {

std::string to_string(SearchMode m) {
    switch (m) {
        case SearchMode::Unconstrained: return "unconstrained";
        case SearchMode::NontrivialEach: return "nontrivial-each";
        case SearchMode::NontrivialUnion: return "nontrivial-union";
    }
    return "unconstrained";
}

SearchMode search_mode_from_string(const std::string& s) {
    if (s == "unconstrained") return SearchMode::Unconstrained;
    if (s == "nontrivial-each") return SearchMode::NontrivialEach;
    if (s == "nontrivial-union") return SearchMode::NontrivialUnion;
    throw ParseError("unknown search mode: " + s);
}

Family closure(const Family& fam, int t, int k) {
    if (fam.empty()) throw EmptyFamily("closure of empty family");
    const FieldSpec& f = fam.field();
    int n = fam.ambient_dim();
    std::vector<Subspace> out;
    size_t last_fail = 0;
    for_each_subspace(f, n, k, [&](const Subspace& g) {
        const auto& m = fam.members();
        if (meet_dim(g, m[last_fail]) < t) return true;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == last_fail) continue;
            if (meet_dim(g, m[i]) < t) {
                last_fail = i;
                return true;
            }
        }
        out.push_back(g);
        return true;
    });
    return Family(f, n, k, std::move(out));
}

namespace {

using Bits = std::vector<uint64_t>;

struct BitsHash {
    size_t operator()(const Bits& b) const {
        size_t h = 1469598103934665603ull;
        for (uint64_t w : b) h = (h ^ w) * 1099511628211ull;
        return h;
    }
};

size_t popcount(const Bits& b) {
    size_t c = 0;
    for (uint64_t w : b) c += static_cast<size_t>(std::popcount(w));
    return c;
}

// Generator universe + closure bit matrix. Generators are all subspaces of
// dimension t..k (a single t-space generates a trivial family, so the EKR
// optimum is reachable from one generator); the k-dimensional block sits at
// the tail and doubles as the column space. Bits vectors index k-subspaces;
// row(g) bit j is set iff dim(gens[g] ∩ ksub(j)) >= t.
struct PairIndex {
    std::vector<Subspace> gens;
    size_t koffset = 0; // gens[koffset..] are the k-subspaces
    std::unordered_map<Subspace, int, SubspaceHash> pos;
    size_t words = 0;
    std::vector<uint64_t> matrix;
    int t = 0;

    size_t nk() const { return gens.size() - koffset; }
    const Subspace& ksub(size_t j) const { return gens[koffset + j]; }
    const uint64_t* row(size_t g) const { return matrix.data() + g * words; }

    Bits and_of(const std::vector<int>& generators) const {
        Bits acc(words, ~0ull);
        trim(acc);
        for (int g : generators)
            for (size_t w = 0; w < words; ++w) acc[w] &= row(g)[w];
        return acc;
    }

    Bits close(const Bits& b) const {
        Bits acc(words, ~0ull);
        trim(acc);
        for (size_t i = 0; i < nk(); ++i)
            if (b[i >> 6] & (1ull << (i & 63)))
                for (size_t w = 0; w < words; ++w) acc[w] &= row(koffset + i)[w];
        return acc;
    }

    void trim(Bits& b) const {
        if (nk() % 64) b.back() &= (1ull << (nk() % 64)) - 1;
    }

    std::vector<int> indices(const Bits& b) const {
        std::vector<int> out;
        for (size_t i = 0; i < nk(); ++i)
            if (b[i >> 6] & (1ull << (i & 63))) out.push_back(static_cast<int>(i));
        return out;
    }

    Family to_family(const Bits& b, const FieldSpec& f, int n, int k) const {
        std::vector<Subspace> members;
        for (int i : indices(b)) members.push_back(ksub(i));
        return Family(f, n, k, std::move(members));
    }
};

// XOR-basis rank of packed F_2 rows.
int f2_rank(const uint32_t* rows, int cnt) {
    uint32_t lead[32] = {0};
    int rank = 0;
    for (int i = 0; i < cnt; ++i) {
        uint32_t v = rows[i];
        while (v) {
            int b = 31 - std::countl_zero(v);
            if (!lead[b]) {
                lead[b] = v;
                ++rank;
                break;
            }
            v ^= lead[b];
        }
    }
    return rank;
}

PairIndex build_index(const FieldSpec& f, int n, int k, int t) {
    PairIndex idx;
    idx.t = t;
    for (int d = t; d <= k; ++d) {
        if (d == k) idx.koffset = idx.gens.size();
        for (auto& s : all_subspaces(f, n, d)) idx.gens.push_back(std::move(s));
    }
    idx.pos.reserve(idx.gens.size());
    for (size_t i = 0; i < idx.gens.size(); ++i)
        idx.pos.emplace(idx.gens[i], static_cast<int>(i));
    size_t m = idx.gens.size();
    idx.words = (idx.nk() + 63) / 64;
    idx.matrix.assign(m * idx.words, 0);

    auto set_bit = [&](size_t g, size_t j) {
        idx.matrix[g * idx.words + (j >> 6)] |= 1ull << (j & 63);
    };

    if (f.q() == 2 && n <= 32) {
        // packed fast path: the matrix build dominates everything downstream
        std::vector<uint32_t> packed;
        std::vector<size_t> offs(m + 1, 0);
        for (size_t g = 0; g < m; ++g) {
            const MatrixGF& b = idx.gens[g].basis();
            for (int r = 0; r < b.rows(); ++r) {
                uint32_t w = 0;
                for (int c = 0; c < n; ++c)
                    if (b.at(r, c)) w |= 1u << c;
                packed.push_back(w);
            }
            offs[g + 1] = packed.size();
        }
        std::vector<uint32_t> scratch(2 * static_cast<size_t>(k));
        for (size_t g = 0; g < m; ++g) {
            int dg = idx.gens[g].dim();
            std::copy(&packed[offs[g]], &packed[offs[g + 1]], scratch.data());
            for (size_t j = 0; j < idx.nk(); ++j) {
                size_t gj = idx.koffset + j;
                if (gj == g) {
                    set_bit(g, j);
                    continue;
                }
                std::copy(&packed[offs[gj]], &packed[offs[gj + 1]],
                          scratch.data() + dg);
                int rank = f2_rank(scratch.data(), dg + k);
                if (dg + k - rank >= t) set_bit(g, j);
            }
        }
    } else {
        for (size_t g = 0; g < m; ++g)
            for (size_t j = 0; j < idx.nk(); ++j)
                if (meet_dim(idx.gens[g], idx.ksub(j)) >= t) set_bit(g, j);
    }
    return idx;
}

// Single-slot cache: repeated runs at one parameter point (restarts,
// harness sweeps) reuse the index instead of rebuilding the bit matrix.
const PairIndex& get_index(const FieldSpec& f, int n, int k, int t) {
    static std::mutex mu;
    static std::tuple<int, int, int, int> key{-1, -1, -1, -1};
    static PairIndex cached;
    std::lock_guard<std::mutex> lock(mu);
    std::tuple<int, int, int, int> want{f.q(), n, k, t};
    if (key != want) {
        cached = build_index(f, n, k, t);
        key = want;
    }
    return cached;
}

int common_dim(const PairIndex& idx, const Bits& b) {
    std::vector<int> members = idx.indices(b);
    Subspace acc = idx.ksub(members.front());
    for (size_t i = 1; i < members.size() && acc.dim() > 0; ++i)
        acc = meet(acc, idx.ksub(members[i]));
    return acc.dim();
}

int union_common_dim(const PairIndex& idx, const Bits& a, const Bits& b) {
    Bits u(a);
    for (size_t w = 0; w < u.size(); ++w) u[w] |= b[w];
    return common_dim(idx, u);
}

bool mode_ok(const PairIndex& idx, SearchMode mode, int t, const Bits& f,
             const Bits& g, std::vector<int>* dims = nullptr) {
    int df = common_dim(idx, f);
    int dg = common_dim(idx, g);
    if (dims) *dims = {df, dg};
    switch (mode) {
        case SearchMode::Unconstrained: return true;
        case SearchMode::NontrivialEach: return df < t && dg < t;
        case SearchMode::NontrivialUnion: return union_common_dim(idx, f, g) < t;
    }
    return true;
}

struct ClosureCache {
    const PairIndex& idx;
    std::unordered_map<Bits, Bits, BitsHash> memo;
    const Bits& close(const Bits& b) {
        auto it = memo.find(b);
        if (it == memo.end()) it = memo.emplace(b, idx.close(b)).first;
        return it->second;
    }
};

SearchCertificates make_certificates(const PairIndex& idx, const Bits& f,
                                     const Bits& g) {
    SearchCertificates c;
    c.nontriviality_dims = {common_dim(idx, f), common_dim(idx, g)};
    // cross-intersecting: g within close(f) by construction, verify anyway
    Bits cf = idx.close(f);
    Bits cg = idx.close(g);
    bool cross = true;
    for (size_t w = 0; w < idx.words; ++w)
        if ((g[w] & ~cf[w]) != 0) cross = false;
    c.cross_intersecting = cross;
    c.maximality = (cf == g) && (cg == f);
    return c;
}

} // namespace

SearchRecord exhaustive_closed_pairs(const SearchConfig& config) {
    if (config.seed_size < 1)
        throw BudgetExceeded("seed_size must be at least 1");
    if (config.r != 2)
        throw PreconditionViolated("exhaustive_closed_pairs searches pairs (r = 2)");
    const FieldSpec& f = field(config.q);
    const PairIndex& idx = get_index(f, config.n, config.k, config.t);
    const size_t m = idx.gens.size();

    ExactInt seed_count = 0;
    for (int s = 1; s <= config.seed_size; ++s) {
        ExactInt c = 1;
        for (int i = 0; i < s; ++i) c = c * ExactInt(m - i) / ExactInt(i + 1);
        seed_count += c;
    }
    if (seed_count > ExactInt(config.iteration_budget))
        throw BudgetExceeded("seed enumeration needs " + seed_count.str() +
                             " iterations, budget is " +
                             std::to_string(config.iteration_budget));

    ClosureCache cache{idx, {}};
    unsigned long long best = 0;
    Bits best_f, best_g;
    std::vector<std::pair<Bits, Bits>> optimal;
    long long iterations = 0;

    auto consider_seed = [&](const std::vector<int>& seed) {
        ++iterations;
        Bits g1 = idx.and_of(seed);
        if (popcount(g1) == 0) return;
        const Bits& fbits = cache.close(g1);
        if (popcount(fbits) == 0) return;
        const Bits& gbits = cache.close(fbits);
        if (!mode_ok(idx, config.mode, config.t, fbits, gbits)) return;
        unsigned long long prod =
            static_cast<unsigned long long>(popcount(fbits)) * popcount(gbits);
        if (prod < best) return;
        Bits lo = fbits, hi = gbits;
        if (hi < lo) std::swap(lo, hi);
        if (prod > best) {
            best = prod;
            best_f = fbits;
            best_g = gbits;
            optimal.clear();
            optimal.emplace_back(lo, hi);
            return;
        }
        if (std::find(optimal.begin(), optimal.end(), std::pair(lo, hi)) ==
            optimal.end())
            optimal.emplace_back(lo, hi);
        // lexicographic tie-break on the canonical family pair
        auto cand_f = idx.to_family(fbits, f, config.n, config.k);
        auto cand_g = idx.to_family(gbits, f, config.n, config.k);
        auto cur_f = idx.to_family(best_f, f, config.n, config.k);
        auto cur_g = idx.to_family(best_g, f, config.n, config.k);
        if (std::pair(cand_f, cand_g) < std::pair(cur_f, cur_g)) {
            best_f = fbits;
            best_g = gbits;
        }
    };

    // enumerate each generator set exactly once (all sizes 1..seed_size)
    std::vector<int> seed;
    for (int i = 0; i < static_cast<int>(m); ++i) {
        seed = {i};
        consider_seed(seed);
        if (config.seed_size >= 2) {
            std::function<void(int, int)> grow = [&](int start, int remaining) {
                if (remaining == 0) return;
                for (int j = start; j < static_cast<int>(m); ++j) {
                    seed.push_back(j);
                    consider_seed(seed);
                    grow(j + 1, remaining - 1);
                    seed.pop_back();
                }
            };
            grow(i + 1, config.seed_size - 1);
        }
    }

    if (best == 0)
        throw NoWitness("no pair satisfies the mode constraint at these parameters");

    SearchRecord rec_out;
    rec_out.config = config;
    rec_out.best_product = ExactInt(best);
    rec_out.families = {idx.to_family(best_f, f, config.n, config.k),
                        idx.to_family(best_g, f, config.n, config.k)};
    rec_out.certificates = make_certificates(idx, best_f, best_g);
    rec_out.iterations = iterations;
    rec_out.num_optimal_pairs = static_cast<long long>(optimal.size());
    rec_out.all_optimal_trivial = true;
    for (const auto& [lo, hi] : optimal) {
        if (lo != hi) { rec_out.all_optimal_trivial = false; break; }
        Family fam = idx.to_family(lo, f, config.n, config.k);
        Subspace core = common_intersection(fam);
        if (core.dim() != config.t || !(fam == trivial_family(core, config.k))) {
            rec_out.all_optimal_trivial = false;
            break;
        }
    }
    return rec_out;
}

SearchRecord stochastic_improve(const SearchConfig& config,
                                const std::optional<std::pair<Family, Family>>& start) {
    const FieldSpec& f = field(config.q);
    if (config.r != 2)
        throw PreconditionViolated("stochastic_improve searches pairs (r = 2)");
    const PairIndex& idx = get_index(f, config.n, config.k, config.t);
    const size_t m = idx.gens.size();
    ClosureCache cache{idx, {}};
    std::mt19937_64 rng(config.rng_seed);

    std::vector<int> gens;
    if (start) {
        for (const auto& s : start->first.members()) gens.push_back(idx.pos.at(s));
    } else {
        gens.push_back(static_cast<int>(rng() % m));
    }

    struct Eval {
        bool valid = false;
        unsigned long long score = 0;
        Bits fbits, gbits;
    };
    auto evaluate = [&](const std::vector<int>& g) -> Eval {
        Eval e;
        if (g.empty()) return e;
        Bits g1 = idx.and_of(g);
        if (popcount(g1) == 0) return e;
        e.fbits = cache.close(g1);
        if (popcount(e.fbits) == 0) return e;
        e.gbits = cache.close(e.fbits);
        if (!mode_ok(idx, config.mode, config.t, e.fbits, e.gbits)) return e;
        e.valid = true;
        e.score = static_cast<unsigned long long>(popcount(e.fbits)) *
                  popcount(e.gbits);
        return e;
    };

    SearchRecord rec;
    rec.config = config;

    if (config.iteration_budget == 0 && start) {
        rec.families = {start->first, start->second};
        rec.best_product = ExactInt(start->first.size()) * ExactInt(start->second.size());
        Bits fb(idx.words, 0), gb(idx.words, 0);
        for (const auto& s : start->first.members()) {
            size_t i = idx.pos.at(s);
            fb[i >> 6] |= 1ull << (i & 63);
        }
        for (const auto& s : start->second.members()) {
            size_t i = idx.pos.at(s);
            gb[i >> 6] |= 1ull << (i & 63);
        }
        rec.certificates = make_certificates(idx, fb, gb);
        rec.iterations = 0;
        return rec;
    }

    Eval cur = evaluate(gens);
    Eval best_eval = cur;
    for (long long it = 0; it < config.iteration_budget; ++it) {
        std::vector<int> cand = gens;
        switch (rng() % 3) {
            case 0: { // add-member-then-reclose
                int add = static_cast<int>(rng() % m);
                if (std::find(cand.begin(), cand.end(), add) == cand.end())
                    cand.push_back(add);
                break;
            }
            case 1: { // remove-member
                if (cand.size() > 1) cand.erase(cand.begin() + rng() % cand.size());
                break;
            }
            default: { // swap-generator
                int add = static_cast<int>(rng() % m);
                if (!cand.empty()) cand.erase(cand.begin() + rng() % cand.size());
                if (std::find(cand.begin(), cand.end(), add) == cand.end())
                    cand.push_back(add);
                break;
            }
        }
        Eval e = evaluate(cand);
        if (e.valid && (!cur.valid || e.score > cur.score)) {
            gens = std::move(cand);
            cur = e;
            if (!best_eval.valid || cur.score > best_eval.score) best_eval = cur;
        }
    }

    if (!best_eval.valid)
        throw NoWitness("no valid state found under the mode constraint");
    rec.best_product = ExactInt(best_eval.score);
    rec.families = {idx.to_family(best_eval.fbits, f, config.n, config.k),
                    idx.to_family(best_eval.gbits, f, config.n, config.k)};
    rec.certificates = make_certificates(idx, best_eval.fbits, best_eval.gbits);
    rec.iterations = config.iteration_budget;
    return rec;
}

void reverify_record(const SearchRecord& record) {
    const auto& fams = record.families;
    if (fams.size() < 2) throw Error("record holds fewer than two families");
    ExactInt prod = 1;
    for (const auto& fam : fams) prod *= ExactInt(fam.size());
    if (prod != record.best_product)
        throw Error("recorded product does not match family sizes");

    int t = record.config.t;
    bool cross = true;
    for (size_t i = 0; i < fams.size() && cross; ++i)
        for (size_t j = i + 1; j < fams.size() && cross; ++j)
            cross = cross_t_intersecting(fams[i], fams[j], t);
    if (fams.size() > 2) {
        auto rw = min_r_wise_intersection(fams, 10000000, record.config.rng_seed);
        if (rw.exact) cross = cross && rw.min_dim >= t;
    }
    if (cross != record.certificates.cross_intersecting)
        throw Error("cross-intersecting certificate does not re-verify");

    std::vector<int> dims;
    for (const auto& fam : fams) dims.push_back(common_intersection(fam).dim());
    if (dims != record.certificates.nontriviality_dims)
        throw Error("non-triviality certificate does not re-verify");

    if (fams.size() == 2) {
        bool maximal = closure(fams[0], t, record.config.k) == fams[1] &&
                       closure(fams[1], t, record.config.k) == fams[0];
        if (maximal != record.certificates.maximality)
            throw Error("maximality certificate does not re-verify");
    }
}

namespace {

bool pair_is_trivial(const Family& F, const Family& G, int t) {
    if (!(F == G)) return false;
    Subspace core = common_intersection(F);
    return core.dim() == t && F == trivial_family(core, F.member_dim());
}

// Structural match against the extremal families, reconstructing the
// witnesses (T, M, L, Z) from the cover sets of the recorded pair.
bool matches_extremal_pair(const Family& F, const Family& G, int t) {
    int n = F.ambient_dim(), k = F.member_dim();
    try {
        CoverReport covF = covering_number(F, t, n);
        CoverReport covG = covering_number(G, t, n);
        if (covF.tau != t + 1 || covG.tau != t + 1) return false;
        // H2 candidate: Z = span of the (t+1)-dim covers
        if (covF.spanned.dim() == t + 2 && F == G) {
            if (F == construct_h2(covF.spanned, k, t + 1)) return true;
        }
        // H1 candidate: T = common core of the covers, M/L = their spans
        Subspace T = common_intersection(covF.cover_set);
        Subspace T2 = common_intersection(covG.cover_set);
        if (T.dim() == t && T == T2 && covF.spanned.dim() == k + 1 &&
            covG.spanned.dim() == k + 1) {
            if (F == construct_h1(covG.spanned, covF.spanned, T, k, t) &&
                G == construct_h1(covF.spanned, covG.spanned, T, k, t))
                return true;
        }
    } catch (const Error&) {
        return false;
    }
    return false;
}

} // namespace

ComparisonReport compare_to_theorem(const SearchRecord& record,
                                    const std::string& claim) {
    const auto& cfg = record.config;
    long q = cfg.q, n = cfg.n, k = cfg.k, t = cfg.t;
    size_t r = record.families.size();
    if (r < 2) throw Error("record holds fewer than two families");

    ComparisonReport rep;
    rep.claim = claim;
    rep.best_product = record.best_product;

    if (claim == "EKR") {
        rep.claimed_value = pow_int(gauss_binom(n - t, k - t, q), static_cast<long>(r));
        rep.hypotheses_met = n >= 2 * k + t + 1;
        if (!rep.hypotheses_met) rep.exploratory_note = "n < 2k+t+1";
    } else if (claim == "HM-pair") {
        if (r != 2) throw HypothesisViolated("HM-pair claim needs exactly two families");
        ExactInt h1 = h1_size(n, k, t, q), h2 = h2_size(n, k, t, q);
        rep.claimed_value = std::max(h1 * h1, h2 * h2);
        rep.hypotheses_met =
            n >= 4 * k + 6 && cfg.mode == SearchMode::NontrivialEach;
        if (n < 4 * k + 6) rep.exploratory_note = "n < 4k+6";
        else if (cfg.mode != SearchMode::NontrivialEach)
            rep.exploratory_note = "mode is not nontrivial-each";
    } else if (claim == "HM-r") {
        if (r < 3) throw HypothesisViolated("HM-r claim needs r >= 3 families");
        long ts = t + static_cast<long>(r) - 2;
        ExactInt h1 = h1_size(n, k, ts, q), h2 = h2_size(n, k, ts, q);
        rep.claimed_value = std::max(pow_int(h1, static_cast<long>(r)),
                                     pow_int(h2, static_cast<long>(r)));
        rep.hypotheses_met =
            n >= 4 * k + 6 && cfg.mode == SearchMode::NontrivialEach &&
            static_cast<long>(r) <= k - t + 1;
        if (n < 4 * k + 6) rep.exploratory_note = "n < 4k+6";
        else if (static_cast<long>(r) > k - t + 1)
            rep.exploratory_note = "r > k-t+1";
        else if (cfg.mode != SearchMode::NontrivialEach)
            rep.exploratory_note = "mode is not nontrivial-each";
    } else {
        throw UnknownClaim("unknown claim: " + claim);
    }

    if (rep.best_product < rep.claimed_value) rep.relation = "<";
    else if (rep.best_product == rep.claimed_value) rep.relation = "==";
    else rep.relation = ">";

    if (rep.relation == "==") {
        if (claim == "EKR") {
            if (record.num_optimal_pairs >= 0)
                rep.structural_match = record.all_optimal_trivial;
            else
                rep.structural_match =
                    pair_is_trivial(record.families[0], record.families[1], t);
        } else {
            int ts = claim == "HM-r" ? t + static_cast<int>(r) - 2 : t;
            bool all_equal = true;
            for (size_t i = 1; i < r; ++i)
                if (!(record.families[i] == record.families[0])) all_equal = false;
            bool match =
                matches_extremal_pair(record.families[0], record.families[1], ts);
            rep.structural_match = match && (r == 2 || all_equal);
        }
    }
    return rep;
}

} // namespace qv
