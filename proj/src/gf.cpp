#include "qv/gf.hpp"

#include <map>
#include <mutex>

namespace qv {

namespace {

struct OrderInfo {
    int p, e;
    // Defining polynomial for extension fields (constant first, degree e),
    // or the primitive root for prime fields.
    std::vector<int> poly;
};

// Fixed table of primitive polynomials / primitive roots per supported order.
//   F_4 : x^2 + x + 1          F_8 : x^3 + x + 1
//   F_9 : x^2 + 2x + 2         F_16: x^4 + x + 1
// Prime fields use the smallest primitive root.
const std::map<int, OrderInfo>& order_table() {
    static const std::map<int, OrderInfo> t = {
        {2, {2, 1, {1}}},  {3, {3, 1, {2}}},  {4, {2, 2, {1, 1, 1}}},
        {5, {5, 1, {2}}},  {7, {7, 1, {3}}},  {8, {2, 3, {1, 1, 0, 1}}},
        {9, {3, 2, {2, 2, 1}}}, {11, {11, 1, {2}}}, {13, {13, 1, {2}}},
        {16, {2, 4, {1, 1, 0, 0, 1}}},
    };
    return t;
}

// Digit-wise base-p addition of element codes.
int code_add(int a, int b, int p, int e) {
    int out = 0, mult = 1;
    for (int i = 0; i < e; ++i) {
        out += ((a % p + b % p) % p) * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    return out;
}

// Multiply the polynomial encoded by `a` by x, reduce by the defining
// polynomial. Codes are base-p with constant coefficient least significant.
int code_mul_x(int a, int p, int e, const std::vector<int>& poly) {
    std::vector<int> c(e + 1, 0);
    for (int i = 0; i < e; ++i) {
        c[i + 1] = a % p;
        a /= p;
    }
    int lead = c[e];
    if (lead != 0) {
        // subtract lead * poly (poly is monic of degree e)
        for (int i = 0; i <= e; ++i)
            c[i] = ((c[i] - lead * poly[i]) % p + p * p) % p;
    }
    int out = 0, mult = 1;
    for (int i = 0; i < e; ++i) {
        out += c[i] * mult;
        mult *= p;
    }
    return out;
}

} // namespace

FieldSpec::FieldSpec(int q) : q_(q) {
    if (q < 2 || q > 16)
        throw UnsupportedOrder("field order " + std::to_string(q) +
                               " outside supported range [2,16]");
    auto it = order_table().find(q);
    if (it == order_table().end())
        throw NotPrimePower(std::to_string(q) + " is not a prime power");
    p_ = it->second.p;
    e_ = it->second.e;

    if (e_ == 1) {
        int g = it->second.poly[0];
        poly_ = {(p_ - g) % p_, 1}; // x - g
        exp_.resize(q_ - 1);
        int v = 1;
        for (int i = 0; i < q_ - 1; ++i) {
            exp_[i] = static_cast<uint8_t>(v);
            v = v * g % p_;
        }
    } else {
        poly_ = it->second.poly;
        exp_.resize(q_ - 1);
        int v = 1;
        for (int i = 0; i < q_ - 1; ++i) {
            exp_[i] = static_cast<uint8_t>(v);
            v = code_mul_x(v, p_, e_, poly_);
        }
    }

    log_.assign(q_, 0);
    std::vector<bool> seen(q_, false);
    for (int i = 0; i < q_ - 1; ++i) {
        int v = exp_[i];
        if (v == 0 || seen[v])
            throw Error("defining polynomial for F_" + std::to_string(q_) +
                        " is not primitive");
        seen[v] = true;
        log_[v] = static_cast<uint8_t>(i);
    }

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b)
            add_[a * q_ + b] = static_cast<uint8_t>(code_add(a, b, p_, e_));
    for (int a = 0; a < q_; ++a) {
        // -a = (p-1)*a in characteristic p
        int acc = 0;
        for (int i = 0; i < p_ - 1; ++i) acc = add_[acc * q_ + a];
        neg_[a] = static_cast<uint8_t>(acc);
    }
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b)
            mul_[a * q_ + b] = (a == 0 || b == 0)
                                   ? 0
                                   : exp_[(log_[a] + log_[b]) % (q_ - 1)];
    for (int a = 1; a < q_; ++a)
        inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

const FieldSpec& field(int q) {
    static std::map<int, FieldSpec> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, FieldSpec(q)).first;
    return it->second;
}

} // namespace qv
