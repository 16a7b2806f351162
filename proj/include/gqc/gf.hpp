#pragma once

#include <string>
#include <vector>

#include "gqc/errors.hpp"

namespace gqc {

/*
 * Finite field F_{p^n} in the polynomial basis of a monic irreducible
 * modulus of degree n over F_p. Elements are stored as indices in
 * [0, p^n): the index packs the coefficient vector (c0, c1, ..., c_{n-1})
 * little-endian in base p. Arithmetic goes through precomputed tables,
 * so fields are limited to desk scale (q <= 1024).
 *
 * Field objects are immutable; all operations are pure.
 */
class Field {
 public:
    // Auto-selected modulus: the lexicographically smallest monic
    // irreducible of degree n (ascending little-endian counter order).
    // For n = 1 the modulus is x.
    Field(int p, int n);
    Field(int p, int n, std::vector<int> modulus);

    // "GF(p,n)" or "GF(p,n,<modulus poly over F_p>)"
    static Field parse(const std::string& s);
    std::string to_string() const;

    int p() const { return p_; }
    int n() const { return n_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return mod_; }  // length n+1, monic

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int inv(int a) const;  // throws precondition_error on 0
    int pow(int a, long long e) const;

    int from_int(long long v) const;  // embed an integer via reduction mod p
    std::vector<int> coeffs(int a) const;  // length n, entries in [0, p)
    int from_coeffs(const std::vector<int>& c) const;

    // Element literals: a decimal integer for n = 1, "[c0,c1,...,c_{n-1}]" otherwise.
    std::string elem_to_string(int a) const;
    int parse_elem(const std::string& s) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && n_ == o.n_ && mod_ == o.mod_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

 private:
    void build_tables();

    int p_ = 0, n_ = 0, q_ = 0;
    std::vector<int> mod_;
    std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace gqc
