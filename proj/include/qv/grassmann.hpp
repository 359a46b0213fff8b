#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qv/linalg.hpp"

namespace qv {

/// A subspace of F_q^n identified by its unique RREF basis. Immutable value;
/// two subspaces are equal iff their canonical bases are entry-wise equal.
class Subspace {
public:
    /// Canonical subspace spanned by the given vectors (each of length n).
    static Subspace span(const FieldSpec& f, int n,
                         const std::vector<std::vector<uint8_t>>& vectors);

    /// Zero subspace of F_q^n.
    static Subspace zero(const FieldSpec& f, int n);

    /// Whole space F_q^n.
    static Subspace full(const FieldSpec& f, int n);

    const FieldSpec& field() const { return *f_; }
    int ambient_dim() const { return n_; }
    int dim() const { return k_; }

    /// RREF basis, k rows by n columns (k = dim).
    const MatrixGF& basis() const { return basis_; }

    bool operator==(const Subspace& o) const {
        return f_->q() == o.f_->q() && n_ == o.n_ && basis_.entries() == o.basis_.entries();
    }
    bool operator<(const Subspace& o) const; // canonical order: dim, then basis bytes

    /// Text format: RREF rows as digit strings joined by ';' ("100;010").
    /// The zero subspace of F_q^n is written as n '-' characters.
    std::string to_text() const;
    static Subspace from_text(const FieldSpec& f, const std::string& text);

    size_t hash() const;

private:
    friend class GrassmannStream;
    friend Subspace meet(const Subspace&, const Subspace&);
    // Trusted constructor: basis must already be in RREF with `dim` rows.
    Subspace(const FieldSpec& f, int n, MatrixGF basis)
        : f_(&f), n_(n), k_(basis.rows()), basis_(std::move(basis)) {}

    const FieldSpec* f_;
    int n_, k_;
    MatrixGF basis_;
};

struct SubspaceHash {
    size_t operator()(const Subspace& s) const { return s.hash(); }
};

/// Intersection. Satisfies dim A + dim B = dim meet + dim join.
Subspace meet(const Subspace& a, const Subspace& b);

/// Sum (smallest subspace containing both).
Subspace join(const Subspace& a, const Subspace& b);

/// True iff b is contained in a.
bool contains(const Subspace& a, const Subspace& b);

/// dim(a ∩ b), via rank of the stacked bases; cheaper than materializing meet.
int meet_dim(const Subspace& a, const Subspace& b);

/// Deterministic stream over all k-subspaces of F_q^n in the canonical
/// order: pivot-column k-sets in colex order, then free entries counting up
/// as a base-q odometer (row-major positions, last position fastest).
class GrassmannStream {
public:
    GrassmannStream(const FieldSpec& f, int n, int k);

    /// Produces the next subspace, or false when exhausted.
    bool next(Subspace& out);

private:
    const FieldSpec* f_;
    int n_, k_;
    bool done_;
    std::vector<int> pivots_;          // current pivot column set, ascending
    std::vector<std::pair<int, int>> free_pos_;
    std::vector<uint8_t> free_val_;
    void recompute_free();
    Subspace current() const;
    bool advance();
};

/// Visit every k-subspace in canonical order; fn returning false stops early.
void for_each_subspace(const FieldSpec& f, int n, int k,
                       const std::function<bool(const Subspace&)>& fn);

/// Materialized Grassmannian in canonical order.
std::vector<Subspace> all_subspaces(const FieldSpec& f, int n, int k);

/// All k-dim subspaces containing s, in the order induced by the canonical
/// enumeration of the quotient F_q^n / s.
std::vector<Subspace> superspaces(const Subspace& s, int k);

/// All j-dim subspaces of w, in the order induced by the canonical
/// enumeration of F_q^{dim w} through w's basis.
std::vector<Subspace> subspaces_of(const Subspace& w, int j);

} // namespace qv
