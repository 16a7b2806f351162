#include "gqc/qc.hpp"

#include <algorithm>

namespace gqc {

bool fq_irreducible(const Field& F, const FqPoly& f) {
    if (f.deg() <= 0) return false;
    for (int d = 1; 2 * d <= f.deg(); ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= F.q();
        for (long long k = 0; k < count; ++k) {
            std::vector<int> cand(d + 1, 0);
            long long kk = k;
            for (int i = 0; i < d; ++i) { cand[i] = (int)(kk % F.q()); kk /= F.q(); }
            cand[d] = 1;
            if (fq_mod(F, f, FqPoly{cand}).is_zero()) return false;
        }
    }
    return true;
}

FqPoly smallest_irreducible(const Field& F, int d) {
    if (d == 1) return {{0, 1}};  // x
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= F.q();
    for (long long k = 0; k < count; ++k) {
        std::vector<int> cand(d + 1, 0);
        long long kk = k;
        for (int i = 0; i < d; ++i) { cand[i] = (int)(kk % F.q()); kk /= F.q(); }
        cand[d] = 1;
        FqPoly g{cand};
        if (fq_irreducible(F, g)) return g;
    }
    throw precondition_error("no irreducible of requested degree");  // unreachable
}

GaloisExtR::GaloisExtR(const Field& F, int ell_) : fld(F), ell(ell_) {
    if (ell < 1) throw precondition_error("GaloisExtR: degree must be >= 1");
    modulus = lift(smallest_irreducible(F, ell));
}

GaloisExtR::GaloisExtR(const Field& F, RPoly mod) : fld(F), modulus(std::move(mod)) {
    ell = modulus.deg();
    if (ell < 1) throw precondition_error("GaloisExtR: modulus degree must be >= 1");
    if (!(modulus.c.back() == r_one()))
        throw precondition_error("GaloisExtR: modulus must be monic");
    if (!fq_irreducible(F, bar(F, modulus)))
        throw precondition_error("GaloisExtR: modulus is not basic irreducible (bar image reducible)");
}

ExtElem ext_mul(const GaloisExtR& E, const ExtElem& a, const ExtElem& b) {
    return r_mulmod(E.fld, a, b, E.modulus);
}

ExtElem ext_u_times(const GaloisExtR& E, const ExtElem& a) {
    return u_times(bar(E.fld, a));
}

QcCode qc_new(const Field& F, int m, int ell, std::vector<std::vector<RPoly>> gens) {
    if (m < 1 || ell < 1) throw precondition_error("qc_new: m and ell must be positive");
    for (auto& A : gens) {
        if ((int)A.size() != ell)
            throw precondition_error("qc_new: generator tuple arity must equal ell");
        for (auto& g : A) g = r_mod(F, g, r_xm1(F, m));
    }
    return {F, m, ell, std::move(gens)};
}

GqcCode qc_as_gqc(const QcCode& code) {
    return gqc_new(code.fld, std::vector<int>(code.ell, code.m), code.gens);
}

std::vector<REl> qc_flatten(const QcCode& code, const std::vector<RPoly>& tuple) {
    std::vector<REl> out(code.m * code.ell);
    for (int j = 0; j < code.ell; ++j)
        for (int i = 0; i < code.m; ++i)
            out[i * code.ell + j] = i <= tuple[j].deg() ? tuple[j].c[i] : REl{};
    return out;
}

std::vector<RPoly> qc_unflatten(const Field& F, int m, int ell, const std::vector<REl>& flat) {
    std::vector<RPoly> out(ell);
    for (int j = 0; j < ell; ++j) {
        std::vector<REl> c(m);
        for (int i = 0; i < m; ++i) c[i] = flat[i * ell + j];
        out[j] = r_trim(F, std::move(c));
    }
    return out;
}

std::vector<REl> t_shift(const std::vector<REl>& v, int ell) {
    if (ell < 1 || v.size() % ell != 0)
        throw precondition_error("t_shift: vector length must be a multiple of ell");
    std::vector<REl> out(v.size());
    std::rotate_copy(v.begin(), v.end() - ell, v.end(), out.begin());
    return out;
}

ExtPoly ext_view(const GaloisExtR& E, const std::vector<RPoly>& tuple, int m) {
    if ((int)tuple.size() != E.ell)
        throw precondition_error("ext_view: tuple arity must equal the extension degree");
    ExtPoly out;
    out.c.resize(m);
    for (int i = 0; i < m; ++i) {
        std::vector<REl> coef(E.ell);
        for (int j = 0; j < E.ell; ++j)
            coef[j] = i <= tuple[j].deg() ? tuple[j].c[i] : REl{};
        out.c[i] = r_trim(E.fld, std::move(coef));
    }
    while (!out.c.empty() && out.c.back().is_zero()) out.c.pop_back();
    return out;
}

std::vector<RPoly> tuple_view(const GaloisExtR& E, const ExtPoly& v, int m) {
    std::vector<RPoly> out(E.ell);
    for (int j = 0; j < E.ell; ++j) {
        std::vector<REl> c(m);
        for (int i = 0; i < m && i < (int)v.c.size(); ++i)
            c[i] = j <= v.c[i].deg() ? v.c[i].c[j] : REl{};
        out[j] = r_trim(E.fld, std::move(c));
    }
    return out;
}

int min_weight_grouped(const Field& F, const RrefBasis& basis, int group, int cap_dim) {
    if (basis.rank() > cap_dim)
        throw cap_exceeded("enumeration dimension " + std::to_string(basis.rank()) +
                           " exceeds cap " + std::to_string(cap_dim));
    if (basis.rank() == 0) return 0;
    int best = -1;
    for_each_in_span(F, basis, [&](const std::vector<int>& v) {
        int w = 0;
        for (size_t i = 0; i < v.size(); i += group) {
            for (int j = 0; j < group; ++j)
                if (v[i + j]) { ++w; break; }
        }
        if (w > 0 && (best < 0 || w < best)) best = w;
    });
    return best < 0 ? 0 : best;
}

ProductBound product_bound(const GaloisExtR& E, const std::vector<ExtPoly>& gens, int m,
                           int cap_dim) {
    const Field& F = E.fld;
    int ell = E.ell;

    // C~ spanning rows: u^d xi^j x^t v over F_q
    std::vector<std::vector<int>> crows;
    std::vector<std::vector<int>> brows;
    RPoly xj = RPoly::one();
    for (const auto& v : gens) {
        std::vector<ExtElem> coef(m);
        for (int i = 0; i < m && i < (int)v.c.size(); ++i)
            coef[i] = r_mod(F, v.c[i], E.modulus);
        for (int t = 0; t < m; ++t) {
            // cyclic coefficient shift by t
            std::vector<ExtElem> sh(m);
            for (int i = 0; i < m; ++i) sh[(i + t) % m] = coef[i];
            ExtElem xipow = RPoly::one();
            for (int j = 0; j < ell; ++j) {
                std::vector<int> row, urow;
                row.reserve(2 * ell * m);
                urow.reserve(2 * ell * m);
                for (int i = 0; i < m; ++i) {
                    ExtElem e = ext_mul(E, sh[i], xipow);
                    ExtElem ue = ext_u_times(E, e);
                    for (int c = 0; c < ell; ++c) {
                        REl a = c <= e.deg() ? e.c[c] : REl{};
                        REl b = c <= ue.deg() ? ue.c[c] : REl{};
                        row.push_back(a.a);
                        row.push_back(a.b);
                        urow.push_back(b.a);
                        urow.push_back(b.b);
                    }
                }
                crows.push_back(std::move(row));
                crows.push_back(std::move(urow));
                xipow = ext_mul(E, xipow, RPoly{{REl{0, 0}, REl{1, 0}}});
            }
        }
        // B rows: coefficient vectors w.r.t. {1, xi, ...} plus their u-multiples
        for (int i = 0; i < m && i < (int)v.c.size(); ++i) {
            std::vector<int> row, urow;
            for (int c = 0; c < ell; ++c) {
                REl a = c <= v.c[i].deg() ? v.c[i].c[c] : REl{};
                row.push_back(a.a);
                row.push_back(a.b);
                urow.push_back(0);
                urow.push_back(a.a);
            }
            brows.push_back(std::move(row));
            brows.push_back(std::move(urow));
        }
    }
    (void)xj;

    ProductBound out;
    out.d_tilde = min_weight_grouped(F, rref(F, crows), 2 * ell, cap_dim);
    out.d_B = min_weight_grouped(F, rref(F, brows), 2, cap_dim);
    out.bound = out.d_tilde * out.d_B;
    return out;
}

Cor52Code construct_cor52(const Field& F, const RPoly& v, int m, std::optional<int> delta,
                          int cap_dim) {
    Cor52Code out;
    out.fld = F;
    out.m = m;
    out.v = r_mod(F, v, r_xm1(F, m));

    for (int t = 0; t < m; ++t) {
        std::vector<REl> w(m);
        for (int i = 0; i <= out.v.deg(); ++i)
            w[(i + t) % m] = out.v.c[i];
        out.shift_rows.push_back(coords(F, w));
    }
    out.basis = rref(F, out.shift_rows);
    out.dimension = out.basis.rank();

    FqPoly vb = bar(F, out.v);
    out.g = vb.is_zero() ? fq_xm1(F, m) : fq_gcd(F, vb, fq_xm1(F, m));

    // d(C~): the R-cyclic code generated by the trivial lift of g
    BlockModule M{F, {fq_xm1(F, m)}, {{lift(out.g)}}};
    RrefBasis cb = span_basis(M);
    int d_tilde =
        cb.rank() == 0 ? 0 : min_weight_grouped(F, cb, 2, cap_dim);

    // B: length-2 code over F_q spanned by the coefficient pairs of v
    std::vector<std::vector<int>> brows;
    for (int i = 0; i <= out.v.deg(); ++i)
        brows.push_back({out.v.c[i].a, out.v.c[i].b});
    int d_B = min_weight_grouped(F, rref(F, brows), 1, cap_dim);

    out.bound = {d_tilde, d_B, d_tilde * d_B};
    if (delta) out.bound_delta = *delta * d_B;
    return out;
}

int cor52_exact_distance(const Cor52Code& code, int cap_dim) {
    return min_weight_grouped(code.fld, code.basis, 1, cap_dim);
}

REl euclid_inner(const Field& F, const std::vector<REl>& a, const std::vector<REl>& b) {
    if (a.size() != b.size()) throw precondition_error("euclid_inner: length mismatch");
    REl acc;
    for (size_t i = 0; i < a.size(); ++i) acc = r_add(F, acc, r_mul(F, a[i], b[i]));
    return acc;
}

QcCode euclid_dual(const QcCode& code, int cap_dim) {
    const Field& F = code.fld;
    int N = code.m * code.ell;
    if (2 * N > cap_dim)
        throw cap_exceeded("euclid_dual: ambient F_q dimension " + std::to_string(2 * N) +
                           " exceeds cap " + std::to_string(cap_dim));

    // R-spanning set of the code: all x^t shifts of the generators
    std::vector<std::vector<REl>> spans;
    for (const auto& A : code.gens) {
        std::vector<RPoly> cur = A;
        for (int t = 0; t < code.m; ++t) {
            spans.push_back(qc_flatten(code, cur));
            for (auto& g : cur) g = r_mod(F, r_shift(g, 1), r_xm1(F, code.m));
        }
    }

    // scan the ambient space
    std::vector<std::vector<int>> identity(2 * N, std::vector<int>(2 * N, 0));
    for (int i = 0; i < 2 * N; ++i) identity[i][i] = 1;
    RrefBasis ambient = rref(F, identity);
    std::vector<std::vector<int>> orth;
    for_each_in_span(F, ambient, [&](const std::vector<int>& flat) {
        std::vector<REl> w(N);
        for (int i = 0; i < N; ++i) w[i] = {flat[2 * i], flat[2 * i + 1]};
        for (const auto& s : spans)
            if (!euclid_inner(F, s, w).is_zero()) return;
        orth.push_back(flat);
    });

    RrefBasis dual = rref(F, orth);
    std::vector<std::vector<RPoly>> gens;
    for (const auto& row : dual.rows) {
        std::vector<REl> w(N);
        for (int i = 0; i < N; ++i) w[i] = {row[2 * i], row[2 * i + 1]};
        gens.push_back(qc_unflatten(F, code.m, code.ell, w));
    }
    return qc_new(F, code.m, code.ell, std::move(gens));
}

RPoly conj_poly(const Field& F, const RPoly& f, int m) {
    std::vector<REl> out(m);
    for (int i = 0; i <= f.deg(); ++i) {
        int j = i == 0 ? 0 : m - i;
        out[j] = r_add(F, out[j], f.c[i]);
    }
    return r_trim(F, std::move(out));
}

RPoly hermitian_product(const Field& F, const std::vector<RPoly>& a,
                        const std::vector<RPoly>& b, int m) {
    if (a.size() != b.size()) throw precondition_error("hermitian_product: arity mismatch");
    RPoly acc;
    RPoly xm = r_xm1(F, m);
    for (size_t i = 0; i < a.size(); ++i)
        acc = r_add(F, acc, r_mulmod(F, a[i], conj_poly(F, b[i], m), xm));
    return acc;
}

Thm55Report check_thm55(const QcCode& code, int cap_dim) {
    Thm55Report out;
    out.ell = code.ell;
    GqcCode g = qc_as_gqc(code);
    GeneratorCountReport rep = generator_count_bounds(g);
    out.all_free = rep.all_free;
    out.K = rep.K;
    out.Kprime = rep.components.empty() ? 0 : rep.components[0].rank;
    for (const auto& c : rep.components) {
        out.ranks.push_back(c.rank);
        out.Kprime = std::min(out.Kprime, c.rank);
    }

    QcCode dual = euclid_dual(code, cap_dim);
    GeneratorCountReport drep = generator_count_bounds(qc_as_gqc(dual));
    out.dual_generator_count = drep.K;
    out.dual_claim_ok = drep.K == code.ell - out.Kprime;

    RrefBasis cb = span_basis(g);
    RrefBasis db = span_basis(qc_as_gqc(dual));
    out.self_dual = cb.rows == db.rows;
    if (out.self_dual) {
        out.self_dual_ell_even = code.ell % 2 == 0;
        out.self_dual_ell_le_2rho = code.ell <= 2 * out.K;
    }
    return out;
}

}  // namespace gqc
