#pragma once

#include <string>
#include <vector>

#include "gqc/gf.hpp"

namespace gqc {

// Element a + u*b of R = F_q + uF_q with u^2 = 0.
// a and b are element indices of the same Field.
struct REl {
    int a = 0;
    int b = 0;
    bool operator==(const REl&) const = default;
    bool is_zero() const { return a == 0 && b == 0; }
};

inline REl r_add(const Field& F, REl x, REl y) { return {F.add(x.a, y.a), F.add(x.b, y.b)}; }
inline REl r_sub(const Field& F, REl x, REl y) { return {F.sub(x.a, y.a), F.sub(x.b, y.b)}; }
inline REl r_neg(const Field& F, REl x) { return {F.neg(x.a), F.neg(x.b)}; }

// (a+ub)(c+ud) = ac + u(ad+bc); the u^2 term vanishes.
inline REl r_mul(const Field& F, REl x, REl y) {
    return {F.mul(x.a, y.a), F.add(F.mul(x.a, y.b), F.mul(x.b, y.a))};
}

// Units are exactly the elements with a != 0; everything else is a zero divisor.
inline bool r_is_unit(REl x) { return x.a != 0; }

// Inverse of a unit: a^{-1} - u a^{-2} b.
REl r_inv(const Field& F, REl x);

REl r_u(const Field& F);    // the element u
REl r_one();                // the element 1

std::string rel_to_string(const Field& F, REl x);  // canonical "(a,b)"

// Gray map omega(a+ub) = (b, a+b), applied entry-wise and concatenated.
std::vector<int> gray(const Field& F, const std::vector<REl>& v);

// Coordinate map a+ub -> (a, b), entry-wise (used by the Section-5 matrices).
std::vector<int> coords(const Field& F, const std::vector<REl>& v);

// Lee weight over F_2+uF_2 only: w(0)=0, w(1)=1, w(u)=2, w(1+u)=1.
int lee_weight(const Field& F, const std::vector<REl>& v);

// Number of nonzero R symbols.
int hamming_weight(const std::vector<REl>& v);

}  // namespace gqc
