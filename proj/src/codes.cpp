#include "gqc/codes.hpp"

#include <algorithm>
#include <numeric>

#include "gqc/analysis.hpp"

namespace gqc {

int GqcCode::length() const {
    return std::accumulate(blocks.begin(), blocks.end(), 0);
}

GqcCode gqc_new(const Field& fld, std::vector<int> blocks,
                std::vector<std::vector<RPoly>> gens) {
    if (blocks.empty()) throw precondition_error("gqc_new: empty block profile");
    for (int m : blocks)
        if (m < 1) throw precondition_error("gqc_new: block lengths must be positive");
    for (auto& A : gens) {
        if (A.size() != blocks.size())
            throw precondition_error("gqc_new: generator tuple arity does not match the block count");
        for (size_t i = 0; i < A.size(); ++i)
            A[i] = r_mod(fld, A[i], r_xm1(fld, blocks[i]));
    }
    return {fld, std::move(blocks), std::move(gens)};
}

namespace {

// Shared validation helpers for the Theorem 2.3 shapes.
void require(bool ok, const std::string& cond) {
    if (!ok) throw precondition_error("classify_cyclic: condition violated: " + cond);
}

}  // namespace

CyclicCodeR classify_cyclic(const Field& F, int m, const std::vector<RPoly>& gens) {
    if (gens.empty()) throw precondition_error("classify_cyclic: no generators");
    if (gens.size() > 2)
        throw precondition_error("classify_cyclic: more than two generators match no Theorem 2.3 form");
    FqPoly xm = fq_xm1(F, m);
    RPoly first = r_mod(F, gens[0], r_xm1(F, m));
    FqPoly g = bar(F, first);
    FqPoly up = u_part(F, first);

    if (m % F.p() != 0) {
        // Form (1): (g + u a) or (g, u a) with a | g | (x^m - 1) over F_q.
        FqPoly a = up;
        if (gens.size() == 2) {
            RPoly second = r_mod(F, gens[1], r_xm1(F, m));
            require(bar(F, second).is_zero(), "second generator must be u*a(x)");
            require(a.is_zero() || a == u_part(F, second),
                    "u parts of (g+ua, ua) presentations disagree");
            a = u_part(F, second);
        }
        require(fq_divides(F, g, xm), "g | x^m-1 over F_q");
        if (!a.is_zero()) require(fq_divides(F, a, g), "a | g");
        return {m, gens, CyclicForm::PrincipalCoprime};
    }

    if (gens.size() == 1) {
        // Form (2i): (g + u p) with (g+up) | x^m-1 over R and g | p*(x^m-1)/g.
        require(fq_divides(F, g, xm), "g | x^m-1 over F_q");
        FqPoly gm = fq_make_monic(F, g);
        require(!first.is_zero() && r_is_unit(first.c.back()),
                "leading coefficient of g+up must be a unit for divisibility over R");
        RPoly monic = r_scale(F, r_inv(F, first.c.back()), first);
        require(r_divmod(F, r_xm1(F, m), monic).second.is_zero(), "(g+up) | x^m-1 over R");
        FqPoly cof = fq_divmod(F, xm, gm).first;
        require(fq_divides(F, gm, fq_mul(F, up, cof)), "g | p(x)*((x^m-1)/g)");
        return {m, gens, CyclicForm::PrincipalNonPrincipal};
    }

    // Form (2ii): (g + u p, u a).
    RPoly second = r_mod(F, gens[1], r_xm1(F, m));
    require(bar(F, second).is_zero(), "second generator must be u*a(x)");
    FqPoly a = u_part(F, second);
    require(!a.is_zero(), "a(x) must be nonzero in the two-generator form");
    require(fq_divides(F, g, xm), "g | x^m-1 over F_q");
    require(fq_divides(F, a, g), "a | g");
    FqPoly cof = fq_divmod(F, xm, fq_make_monic(F, g)).first;
    require(fq_divides(F, a, fq_mul(F, up, cof)), "a | p(x)*((x^m-1)/g)");
    require(a.deg() > up.deg(), "deg a > deg p");
    return {m, gens, CyclicForm::TwoGenerator};
}

int CrtComponent::nonzero_blocks() const {
    return (int)std::count_if(exps.begin(), exps.end(), [](int d) { return d > 0; });
}

CrtDecomposition crt_decompose(const GqcCode& code) {
    const Field& F = code.fld;
    CrtDecomposition D;

    std::vector<CyclotomicFactorization> facs;
    facs.reserve(code.blocks.size());
    for (int m : code.blocks) {
        facs.push_back(factor_cyclotomic(F, m));
        D.block_p_powers.push_back(facs.back().p_power);
    }
    // global deduplicated factor set, canonical order
    for (const auto& fac : facs)
        for (const auto& g : fac.factors)
            if (std::find(D.common_factors.begin(), D.common_factors.end(), g) ==
                D.common_factors.end())
                D.common_factors.push_back(g);
    std::sort(D.common_factors.begin(), D.common_factors.end(), factor_order_less);

    int s = (int)D.common_factors.size();
    int ell = code.ell();
    D.exponent_matrix.assign(ell, std::vector<int>(s, 0));
    D.idempotents.assign(ell, std::vector<RPoly>(s));
    for (int i = 0; i < ell; ++i) {
        auto eps = crt_idempotents(F, facs[i]);
        for (size_t j = 0; j < facs[i].factors.size(); ++j) {
            auto it = std::find(D.common_factors.begin(), D.common_factors.end(),
                                facs[i].factors[j]);
            int k = (int)(it - D.common_factors.begin());
            D.exponent_matrix[i][k] = facs[i].p_power;
            D.idempotents[i][k] = eps[j];
        }
    }

    for (int k = 0; k < s; ++k) {
        CrtComponent comp;
        comp.factor_index = k;
        for (int i = 0; i < ell; ++i) comp.exps.push_back(D.exponent_matrix[i][k]);
        for (const auto& A : code.gens) {
            std::vector<RPoly> proj(ell);
            for (int i = 0; i < ell; ++i) {
                if (!comp.exps[i]) continue;  // zero component
                RPoly mod = lift(fq_pow(F, D.common_factors[k], comp.exps[i]));
                proj[i] = r_mod(F, A[i], mod);
            }
            comp.gens.push_back(std::move(proj));
        }
        D.components.push_back(std::move(comp));
    }
    return D;
}

RPoly crt_interpolate(const Field& F, const CrtDecomposition& D, int block,
                      const std::vector<RPoly>& residues, int m) {
    RPoly acc;
    RPoly xm = r_xm1(F, m);
    for (size_t k = 0; k < D.common_factors.size(); ++k) {
        if (!D.exponent_matrix[block][k]) continue;
        acc = r_add(F, acc, r_mulmod(F, D.idempotents[block][k], residues[k], xm));
    }
    return acc;
}

GeneratorCountReport generator_count_bounds(const GqcCode& code) {
    const Field& F = code.fld;
    CrtDecomposition D = crt_decompose(code);

    int pa = D.block_p_powers[0];
    for (int v : D.block_p_powers)
        if (v != pa)
            throw precondition_error(
                "generator_count_bounds: blocks have unequal p-powers (Theorem 3.3 hypothesis)");

    GeneratorCountReport out;
    for (const auto& comp : D.components) {
        const FqPoly& g = D.common_factors[comp.factor_index];

        BlockModule M{F, {}, comp.gens};
        for (int d : comp.exps)
            M.moduli.push_back(d ? fq_pow(F, g, d) : FqPoly::one());

        auto tuples = spanning_tuples(M);
        std::vector<std::vector<int>> rows;
        rows.reserve(tuples.size());
        for (const auto& t : tuples) rows.push_back(flatten_tuple(M, t));
        int dimC = rank_of(F, rows);

        // (u, g) * C spans the Nakayama denominator
        std::vector<std::vector<int>> mrows;
        for (const auto& t : tuples) {
            std::vector<RPoly> ut(t.size()), gt(t.size());
            for (size_t i = 0; i < t.size(); ++i) {
                ut[i] = u_times(bar(F, t[i]));
                gt[i] = r_mod(F, r_mul(F, lift(g), t[i]), lift(M.moduli[i]));
            }
            mrows.push_back(flatten_tuple(M, ut));
            mrows.push_back(flatten_tuple(M, gt));
        }
        int dimM = rank_of(F, mrows);

        ComponentRankInfo info;
        info.fq_dim = dimC;
        info.rank = (dimC - dimM) / g.deg();
        info.free = dimC == info.rank * 2 * g.deg() * pa;
        out.all_free = out.all_free && info.free;
        out.K = std::max(out.K, info.rank);
        out.components.push_back(info);
    }
    return out;
}

}  // namespace gqc
