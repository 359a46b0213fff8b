#include "qv/grassmann.hpp"

#include <algorithm>

namespace qv {

namespace {

int hex_val(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw ParseError(std::string("invalid element digit '") + c + "'");
}

char hex_chr(int v) { return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10); }

} // namespace

Subspace Subspace::span(const FieldSpec& f, int n,
                        const std::vector<std::vector<uint8_t>>& vectors) {
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != n)
            throw DimensionMismatch("spanning vector length != ambient dimension");
    std::vector<uint8_t> entries;
    entries.reserve(vectors.size() * n);
    for (const auto& v : vectors) entries.insert(entries.end(), v.begin(), v.end());
    MatrixGF m(f, static_cast<int>(vectors.size()), n, std::move(entries));
    RrefResult r = rref(m);
    std::vector<uint8_t> base(r.matrix.entries().begin(),
                              r.matrix.entries().begin() + static_cast<size_t>(r.rank) * n);
    return Subspace(f, n, MatrixGF(f, r.rank, n, std::move(base)));
}

Subspace Subspace::zero(const FieldSpec& f, int n) {
    return Subspace(f, n, MatrixGF(f, 0, n));
}

Subspace Subspace::full(const FieldSpec& f, int n) {
    MatrixGF m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return Subspace(f, n, std::move(m));
}

bool Subspace::operator<(const Subspace& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (k_ != o.k_) return k_ < o.k_;
    return basis_.entries() < o.basis_.entries();
}

std::string Subspace::to_text() const {
    if (k_ == 0) return std::string(static_cast<size_t>(n_), '-');
    std::string out;
    for (int i = 0; i < k_; ++i) {
        if (i) out += ';';
        for (int j = 0; j < n_; ++j) out += hex_chr(basis_.at(i, j));
    }
    return out;
}

Subspace Subspace::from_text(const FieldSpec& f, const std::string& text) {
    if (text.empty()) throw ParseError("empty subspace literal");
    if (text.find_first_not_of('-') == std::string::npos)
        return zero(f, static_cast<int>(text.size()));
    std::vector<std::vector<uint8_t>> rows;
    std::vector<uint8_t> row;
    for (char c : text) {
        if (c == ';') {
            rows.push_back(row);
            row.clear();
        } else {
            int v = hex_val(c);
            if (!f.valid(v))
                throw ParseError("element code out of range for F_" + std::to_string(f.q()));
            row.push_back(static_cast<uint8_t>(v));
        }
    }
    rows.push_back(row);
    size_t n = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != n) throw ParseError("ragged subspace literal");
    return span(f, static_cast<int>(n), rows);
}

size_t Subspace::hash() const {
    size_t h = std::hash<int>()(n_) * 0x9e3779b97f4a7c15ull + k_;
    for (uint8_t b : basis_.entries()) h = h * 1099511628211ull ^ b;
    return h;
}

namespace {

// rank of the two bases stacked, shared scratch per thread
int stacked_rank(const Subspace& a, const Subspace& b) {
    const FieldSpec& f = a.field();
    int n = a.ambient_dim();
    int rows = a.dim() + b.dim();
    thread_local std::vector<uint8_t> scratch;
    scratch.assign(static_cast<size_t>(rows) * n, 0);
    std::copy(a.basis().entries().begin(), a.basis().entries().end(), scratch.begin());
    std::copy(b.basis().entries().begin(), b.basis().entries().end(),
              scratch.begin() + static_cast<size_t>(a.dim()) * n);
    // forward elimination only; rank does not need back substitution
    int r = 0;
    for (int c = 0; c < n && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (scratch[static_cast<size_t>(i) * n + c] != 0) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = c; j < n; ++j)
                std::swap(scratch[static_cast<size_t>(sel) * n + j],
                          scratch[static_cast<size_t>(r) * n + j]);
        int s = f.inv(scratch[static_cast<size_t>(r) * n + c]);
        for (int i = r + 1; i < rows; ++i) {
            int m = scratch[static_cast<size_t>(i) * n + c];
            if (m == 0) continue;
            int factor = f.mul(m, s);
            for (int j = c; j < n; ++j) {
                auto& e = scratch[static_cast<size_t>(i) * n + j];
                e = static_cast<uint8_t>(f.sub(
                    e, f.mul(factor, scratch[static_cast<size_t>(r) * n + j])));
            }
        }
        ++r;
    }
    return r;
}

void check_ambient(const Subspace& a, const Subspace& b) {
    if (a.field().q() != b.field().q() || a.ambient_dim() != b.ambient_dim())
        throw AmbientMismatch("subspaces live in different ambient spaces");
}

} // namespace

int meet_dim(const Subspace& a, const Subspace& b) {
    check_ambient(a, b);
    return a.dim() + b.dim() - stacked_rank(a, b);
}

Subspace join(const Subspace& a, const Subspace& b) {
    check_ambient(a, b);
    std::vector<std::vector<uint8_t>> rows;
    rows.reserve(a.dim() + b.dim());
    for (int i = 0; i < a.dim(); ++i)
        rows.emplace_back(a.basis().row(i).begin(), a.basis().row(i).end());
    for (int i = 0; i < b.dim(); ++i)
        rows.emplace_back(b.basis().row(i).begin(), b.basis().row(i).end());
    return Subspace::span(a.field(), a.ambient_dim(), rows);
}

Subspace meet(const Subspace& a, const Subspace& b) {
    check_ambient(a, b);
    // Zassenhaus: rref of [A|A; B|0]; rows with zero left half carry the
    // intersection in their right half.
    const FieldSpec& f = a.field();
    int n = a.ambient_dim();
    int rows = a.dim() + b.dim();
    MatrixGF big(f, rows, 2 * n);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < n; ++j) {
            big.set(i, j, a.basis().at(i, j));
            big.set(i, n + j, a.basis().at(i, j));
        }
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < n; ++j) big.set(a.dim() + i, j, b.basis().at(i, j));
    RrefResult r = rref(big);
    std::vector<std::vector<uint8_t>> inter;
    for (int i = 0; i < r.rank; ++i) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j)
            if (r.matrix.at(i, j) != 0) left_zero = false;
        if (!left_zero) continue;
        std::vector<uint8_t> row(n);
        for (int j = 0; j < n; ++j) row[j] = r.matrix.at(i, n + j);
        inter.push_back(std::move(row));
    }
    return Subspace::span(f, n, inter);
}

bool contains(const Subspace& a, const Subspace& b) {
    check_ambient(a, b);
    if (b.dim() > a.dim()) return false;
    return stacked_rank(a, b) == a.dim();
}

GrassmannStream::GrassmannStream(const FieldSpec& f, int n, int k)
    : f_(&f), n_(n), k_(k), done_(k < 0 || k > n) {
    if (done_) return;
    pivots_.resize(k);
    for (int i = 0; i < k; ++i) pivots_[i] = i;
    recompute_free();
}

void GrassmannStream::recompute_free() {
    free_pos_.clear();
    std::vector<bool> is_pivot(n_, false);
    for (int p : pivots_) is_pivot[p] = true;
    for (int i = 0; i < k_; ++i)
        for (int j = pivots_[i] + 1; j < n_; ++j)
            if (!is_pivot[j]) free_pos_.emplace_back(i, j);
    free_val_.assign(free_pos_.size(), 0);
}

Subspace GrassmannStream::current() const {
    MatrixGF m(*f_, k_, n_);
    for (int i = 0; i < k_; ++i) m.set(i, pivots_[i], 1);
    for (size_t t = 0; t < free_pos_.size(); ++t)
        m.set(free_pos_[t].first, free_pos_[t].second, free_val_[t]);
    return Subspace(*f_, n_, std::move(m));
}

bool GrassmannStream::advance() {
    // odometer over free entries, last position fastest
    int q = f_->q();
    for (int t = static_cast<int>(free_val_.size()) - 1; t >= 0; --t) {
        if (free_val_[t] + 1 < q) {
            ++free_val_[t];
            std::fill(free_val_.begin() + t + 1, free_val_.end(), 0);
            return true;
        }
    }
    // next pivot set in colex order
    for (int i = 0; i < k_; ++i) {
        int cap = (i + 1 < k_) ? pivots_[i + 1] : n_;
        if (pivots_[i] + 1 < cap) {
            ++pivots_[i];
            for (int j = 0; j < i; ++j) pivots_[j] = j;
            recompute_free();
            return true;
        }
    }
    return false;
}

bool GrassmannStream::next(Subspace& out) {
    if (done_) return false;
    out = current();
    if (!advance()) done_ = true;
    return true;
}

void for_each_subspace(const FieldSpec& f, int n, int k,
                       const std::function<bool(const Subspace&)>& fn) {
    GrassmannStream st(f, n, k);
    Subspace s = Subspace::zero(f, n);
    while (st.next(s))
        if (!fn(s)) return;
}

std::vector<Subspace> all_subspaces(const FieldSpec& f, int n, int k) {
    std::vector<Subspace> out;
    for_each_subspace(f, n, k, [&](const Subspace& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::vector<Subspace> superspaces(const Subspace& s, int k) {
    const FieldSpec& f = s.field();
    int n = s.ambient_dim(), d = s.dim();
    if (k < d || k > n) return {};
    if (k == d) return {s};
    // Coordinates of V/s: the non-pivot columns of s's RREF basis.
    std::vector<bool> is_pivot(n, false);
    {
        RrefResult r = rref(s.basis());
        for (int p : r.pivots) is_pivot[p] = true;
    }
    std::vector<int> quot_cols;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) quot_cols.push_back(j);
    std::vector<Subspace> out;
    for_each_subspace(f, n - d, k - d, [&](const Subspace& w) {
        std::vector<std::vector<uint8_t>> rows;
        for (int i = 0; i < s.dim(); ++i)
            rows.emplace_back(s.basis().row(i).begin(), s.basis().row(i).end());
        for (int i = 0; i < w.dim(); ++i) {
            std::vector<uint8_t> lift(n, 0);
            for (int j = 0; j < n - d; ++j) lift[quot_cols[j]] = w.basis().at(i, j);
            rows.push_back(std::move(lift));
        }
        out.push_back(Subspace::span(f, n, rows));
        return true;
    });
    return out;
}

std::vector<Subspace> subspaces_of(const Subspace& w, int j) {
    const FieldSpec& f = w.field();
    int n = w.ambient_dim(), d = w.dim();
    if (j < 0 || j > d) return {};
    std::vector<Subspace> out;
    for_each_subspace(f, d, j, [&](const Subspace& c) {
        std::vector<std::vector<uint8_t>> rows;
        for (int i = 0; i < c.dim(); ++i) {
            std::vector<uint8_t> v(n, 0);
            for (int x = 0; x < d; ++x) {
                int coef = c.basis().at(i, x);
                if (coef == 0) continue;
                for (int y = 0; y < n; ++y)
                    v[y] = static_cast<uint8_t>(
                        f.add(v[y], f.mul(coef, w.basis().at(x, y))));
            }
            rows.push_back(std::move(v));
        }
        out.push_back(Subspace::span(f, n, rows));
        return true;
    });
    return out;
}

} // namespace qv
