#include "gqc/onegen.hpp"

#include <algorithm>

namespace gqc {

namespace {

void require_one_generator(const GqcCode& code, const char* who) {
    if (code.rho() != 1)
        throw precondition_error(std::string(who) + ": code must have exactly one generator tuple");
}

// h_i = (x^{m_i}-1) / gcd(bar base_i, x^{m_i}-1); gcd(0, f) = f.
FqPoly block_h(const Field& F, const RPoly& base, int m) {
    FqPoly xm = fq_xm1(F, m);
    FqPoly fg = bar(F, base);
    FqPoly g = fg.is_zero() ? xm : fq_gcd(F, fg, xm);
    return fq_divmod(F, xm, g).first;
}

}  // namespace

GqcCode project_block(const GqcCode& code, int i) {
    std::vector<std::vector<RPoly>> gens;
    for (const auto& A : code.gens) gens.push_back({A[i]});
    return gqc_new(code.fld, {code.blocks[i]}, std::move(gens));
}

MinGenSet minimal_generating_set(const GqcCode& code) {
    require_one_generator(code, "minimal_generating_set");
    const Field& F = code.fld;
    const auto& G = code.gens[0];
    MinGenSet out;

    out.h = FqPoly::one();
    for (int i = 0; i < code.ell(); ++i) {
        out.h_i.push_back(block_h(F, G[i], code.blocks[i]));
        out.h = fq_lcm(F, out.h, out.h_i.back());
        out.regular_hypothesis =
            out.regular_hypothesis || is_regular(F, G[i], code.blocks[i]);
    }
    out.r = out.h.deg();

    out.v = FqPoly::one();
    for (int i = 0; i < code.ell(); ++i) {
        FqPoly qi = u_part(F, G[i]);
        FqPoly vi;
        if (qi.is_zero()) {
            vi = FqPoly::one();  // gcd(0, x^m-1) = x^m-1 makes the quotient 1
        } else {
            FqPoly xm = fq_xm1(F, code.blocks[i]);
            FqPoly g = fq_gcd(F, fq_mul(F, out.h, qi), xm);
            vi = fq_divmod(F, xm, g).first;
        }
        out.v_i.push_back(vi);
        out.v = fq_lcm(F, out.v, vi);
    }
    out.t = out.v.deg();

    for (int i = 0; i < code.ell(); ++i) {
        FqPoly qi = u_part(F, G[i]);
        RPoly b = u_times(fq_mod(F, fq_mul(F, out.h, qi), fq_xm1(F, code.blocks[i])));
        out.B.push_back(b);
    }
    std::vector<RPoly> curG = G, curB = out.B;
    for (int j = 0; j < out.r; ++j) {
        out.S1.push_back(curG);
        for (int i = 0; i < code.ell(); ++i)
            curG[i] = r_mod(F, r_shift(curG[i], 1), r_xm1(F, code.blocks[i]));
    }
    for (int j = 0; j < out.t; ++j) {
        out.S2.push_back(curB);
        for (int i = 0; i < code.ell(); ++i)
            curB[i] = r_mod(F, r_shift(curB[i], 1), r_xm1(F, code.blocks[i]));
    }
    return out;
}

FreeReport is_free_cor42(const GqcCode& code) {
    require_one_generator(code, "is_free_cor42");
    const Field& F = code.fld;
    FreeReport out;
    out.h = FqPoly::one();
    for (int i = 0; i < code.ell(); ++i) {
        const RPoly& base = code.gens[0][i];
        if (base.is_zero() || !r_is_unit(base.c.back())) return out;  // free = false
        RPoly monic = r_scale(F, r_inv(F, base.c.back()), base);
        if (!r_divmod(F, r_xm1(F, code.blocks[i]), monic).second.is_zero()) return out;
        out.h = fq_lcm(F, out.h, block_h(F, base, code.blocks[i]));
    }
    out.free = true;
    out.rank = out.h.deg();
    return out;
}

namespace {

// Lexicographically smallest subset of maximal size whose h-lcm differs
// from h; scanning larger sizes first, and within a size in lexicographic
// subset order.
std::vector<int> find_K(const Field& F, const std::vector<FqPoly>& h_i, const FqPoly& h) {
    int ell = (int)h_i.size();
    for (int size = ell; size >= 0; --size) {
        std::vector<int> pick(size);
        // iterate combinations in lexicographic order
        for (int i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            FqPoly l = FqPoly::one();
            for (int i : pick) l = fq_lcm(F, l, h_i[i]);
            if (!(l == h)) return pick;
            int pos = size - 1;
            while (pos >= 0 && pick[pos] == ell - size + pos) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (int j = pos + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
            if (size == 0) break;
        }
        if (size == 0) break;
    }
    return {0};  // unreachable for h != 1; degenerate h = 1 handled by caller
}

BoundReport bound_from(const GqcCode& code, const std::vector<FqPoly>& h_i,
                       Metric metric, int cap_dim) {
    const Field& F = code.fld;
    BoundReport out;
    out.metric = metric;
    out.h_i = h_i;
    out.h = FqPoly::one();
    for (const auto& hi : h_i) out.h = fq_lcm(F, out.h, hi);
    out.rank = out.h.deg();

    for (int i = 0; i < code.ell(); ++i)
        out.d_i.push_back(min_distance(project_block(code, i), metric, cap_dim));

    if (out.h == FqPoly::one()) {
        // degenerate: every subset has lcm = h; no block survives
        out.K.resize(code.ell());
        for (int i = 0; i < code.ell(); ++i) out.K[i] = i;
        out.bound = 0;
        return out;
    }
    out.K = find_K(F, h_i, out.h);
    out.bound = 0;
    for (int i = 0; i < code.ell(); ++i)
        if (std::find(out.K.begin(), out.K.end(), i) == out.K.end())
            out.bound += out.d_i[i];
    return out;
}

}  // namespace

BoundReport distance_lower_bound(const GqcCode& code, Metric metric, int cap_dim) {
    require_one_generator(code, "distance_lower_bound");
    FreeReport fr = is_free_cor42(code);
    if (!fr.free)
        throw precondition_error(
            "distance_lower_bound: code is not free (Corollary 4.2 divisibility fails)");
    const Field& F = code.fld;
    std::vector<FqPoly> h_i;
    for (int i = 0; i < code.ell(); ++i)
        h_i.push_back(block_h(F, code.gens[0][i], code.blocks[i]));
    return bound_from(code, h_i, metric, cap_dim);
}

BoundReport distance_lower_bound_cor44(const GqcCode& base_code,
                                       const std::vector<RPoly>& multipliers,
                                       Metric metric, int cap_dim) {
    require_one_generator(base_code, "distance_lower_bound_cor44");
    const Field& F = base_code.fld;
    if ((int)multipliers.size() != base_code.ell())
        throw precondition_error("cor44: one multiplier per block required");

    FreeReport fr = is_free_cor42(base_code);
    if (!fr.free)
        throw precondition_error("cor44: base entries must divide x^{m_i}-1 over R");

    std::vector<FqPoly> h_i;
    std::vector<RPoly> actual(base_code.ell());
    for (int i = 0; i < base_code.ell(); ++i) {
        const RPoly& base = base_code.gens[0][i];
        if (base.deg() != bar(F, base).deg())
            throw precondition_error("cor44: deg(f_i g_i + u q_i) must equal deg(f_i g_i)");
        FqPoly hi = block_h(F, base, base_code.blocks[i]);
        FqPoly ki = bar(F, multipliers[i]);
        if (ki.is_zero() || !(fq_gcd(F, hi, ki) == FqPoly::one()))
            throw precondition_error("cor44: gcd(h_i, k_i) = 1 required");
        h_i.push_back(hi);
        actual[i] = r_mod(F, r_mul(F, base, multipliers[i]), r_xm1(F, base_code.blocks[i]));
    }
    GqcCode code = gqc_new(F, base_code.blocks, {actual});
    return bound_from(code, h_i, metric, cap_dim);
}

std::pair<GqcCode, BoundReport> concatenate_cor45(const GqcCode& gqc, const GqcCode& cyc,
                                                  Metric metric, int cap_dim) {
    require_one_generator(gqc, "concatenate_cor45");
    require_one_generator(cyc, "concatenate_cor45");
    if (cyc.ell() != 1)
        throw precondition_error("concatenate_cor45: second argument must be a cyclic (1-block) code");
    const Field& F = gqc.fld;

    FreeReport f1 = is_free_cor42(gqc);
    FreeReport f2 = is_free_cor42(cyc);
    if (!f1.free || !f2.free)
        throw precondition_error("concatenate_cor45: both codes must be free");

    std::vector<int> blocks = gqc.blocks;
    blocks.push_back(cyc.blocks[0]);
    std::vector<RPoly> gen = gqc.gens[0];
    gen.push_back(cyc.gens[0][0]);
    GqcCode joined = gqc_new(F, blocks, {gen});

    BoundReport rep;
    rep.metric = metric;
    rep.h_i = {f1.h, f2.h};
    FqPoly g = fq_gcd(F, f1.h, f2.h);
    int d1 = min_distance(gqc, metric, cap_dim);
    int d2 = min_distance(cyc, metric, cap_dim);
    rep.d_i = {d1, d2};
    if (g == FqPoly::one()) {
        rep.h = fq_mul(F, f1.h, f2.h);
        rep.rank = rep.h.deg();
        rep.bound = std::min(d1, d2);
    } else if (fq_divides(F, f2.h, f1.h)) {
        rep.h = f1.h;
        rep.rank = f1.h.deg();
        rep.bound = d1;
    } else {
        rep.h = fq_lcm(F, f1.h, f2.h);
        rep.rank = rep.h.deg();
        rep.has_bound = false;
        rep.bound = 0;
    }
    return {joined, rep};
}

}  // namespace gqc
