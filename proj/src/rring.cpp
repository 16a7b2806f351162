#include "gqc/rring.hpp"

namespace gqc {

REl r_inv(const Field& F, REl x) {
    if (!r_is_unit(x)) throw precondition_error("R: inverse of a zero divisor");
    int ia = F.inv(x.a);
    return {ia, F.neg(F.mul(F.mul(ia, ia), x.b))};
}

REl r_u(const Field&) { return {0, 1}; }
REl r_one() { return {1, 0}; }

std::string rel_to_string(const Field& F, REl x) {
    return "(" + F.elem_to_string(x.a) + "," + F.elem_to_string(x.b) + ")";
}

std::vector<int> gray(const Field& F, const std::vector<REl>& v) {
    std::vector<int> out;
    out.reserve(2 * v.size());
    for (const auto& e : v) {
        out.push_back(e.b);
        out.push_back(F.add(e.a, e.b));
    }
    return out;
}

std::vector<int> coords(const Field&, const std::vector<REl>& v) {
    std::vector<int> out;
    out.reserve(2 * v.size());
    for (const auto& e : v) {
        out.push_back(e.a);
        out.push_back(e.b);
    }
    return out;
}

int lee_weight(const Field& F, const std::vector<REl>& v) {
    if (F.p() != 2 || F.n() != 1)
        throw precondition_error("Lee weight is defined over F_2+uF_2 only");
    int w = 0;
    for (const auto& e : v) {
        if (e.a == 0 && e.b == 0) continue;
        if (e.a == 0) w += 2;       // u
        else w += 1;                // 1 or 1+u
    }
    return w;
}

int hamming_weight(const std::vector<REl>& v) {
    int w = 0;
    for (const auto& e : v)
        if (!e.is_zero()) ++w;
    return w;
}

}  // namespace gqc
