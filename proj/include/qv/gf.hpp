#pragma once

#include <cstdint>
#include <vector>

#include "qv/errors.hpp"

namespace qv {

/// Arithmetic tables for the finite field F_q, q = p^e a prime power <= 16.
///
/// Elements are encoded as integers 0..q-1: for extension fields the code is
/// the value of the polynomial coefficient vector in base p (constant
/// coefficient least significant). Nonzero elements are powers of a fixed
/// generator; exp_table[i] is the code of generator^i and log_table inverts
/// it. Primitive polynomials come from a fixed table, one per order, so
/// every downstream enumeration is reproducible.
class FieldSpec {
public:
    explicit FieldSpec(int q);

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int extension_degree() const { return e_; }

    /// Coefficients of the defining polynomial, constant term first.
    /// For prime fields this is x - g with g the chosen primitive root.
    const std::vector<int>& primitive_poly() const { return poly_; }

    const std::vector<uint8_t>& exp_table() const { return exp_; }
    const std::vector<uint8_t>& log_table() const { return log_; }

    bool valid(int a) const { return a >= 0 && a < q_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }

    int inv(int a) const {
        if (a == 0) throw DivisionByZero("inv(0) in F_" + std::to_string(q_));
        return inv_[a];
    }

    int exp(int i) const { return exp_[static_cast<size_t>(i % (q_ - 1))]; }
    int log(int a) const {
        if (a == 0) throw DivisionByZero("log(0) in F_" + std::to_string(q_));
        return log_[a];
    }

private:
    int q_ = 0, p_ = 0, e_ = 0;
    std::vector<int> poly_;
    std::vector<uint8_t> exp_, log_, add_, mul_, neg_, inv_;
};

/// Shared immutable FieldSpec for order q. Throws NotPrimePower or
/// UnsupportedOrder (q > 16). The returned reference lives for the whole
/// program; matrices and subspaces hold plain pointers to it.
const FieldSpec& field(int q);

} // namespace qv
