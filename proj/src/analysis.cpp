#include "gqc/analysis.hpp"

#include <algorithm>

namespace gqc {

Metric parse_metric(const std::string& s) {
    if (s == "hamming") return Metric::Hamming;
    if (s == "lee") return Metric::Lee;
    if (s == "gray" || s == "gray_hamming") return Metric::GrayHamming;
    throw parse_error("unknown metric: " + s);
}

std::string metric_name(Metric m) {
    switch (m) {
        case Metric::Hamming: return "hamming";
        case Metric::Lee: return "lee";
        default: return "gray_hamming";
    }
}

BlockModule as_module(const GqcCode& code) {
    BlockModule M{code.fld, {}, code.gens};
    for (int m : code.blocks) M.moduli.push_back(fq_xm1(code.fld, m));
    return M;
}

std::vector<std::vector<RPoly>> spanning_tuples(const BlockModule& M) {
    const Field& F = M.fld;
    FqPoly l = FqPoly::one();
    for (const auto& mod : M.moduli) {
        if (mod.deg() > 0) l = fq_lcm(F, l, mod);
    }
    int shifts = std::max(1, l.deg());
    std::vector<RPoly> rmods;
    rmods.reserve(M.moduli.size());
    for (const auto& mod : M.moduli) rmods.push_back(lift(mod));

    std::vector<std::vector<RPoly>> rows;
    for (const auto& A : M.gens) {
        std::vector<RPoly> cur;
        cur.reserve(A.size());
        for (size_t i = 0; i < A.size(); ++i) cur.push_back(r_mod(F, A[i], rmods[i]));
        for (int t = 0; t < shifts; ++t) {
            rows.push_back(cur);
            std::vector<RPoly> ucur(cur.size());
            for (size_t i = 0; i < cur.size(); ++i)
                ucur[i] = u_times(bar(F, cur[i]));  // u * (a+ub) = u a
            rows.push_back(std::move(ucur));
            if (t + 1 < shifts) {
                for (size_t i = 0; i < cur.size(); ++i)
                    cur[i] = r_mod(F, r_shift(cur[i], 1), rmods[i]);
            }
        }
    }
    return rows;
}

std::vector<int> flatten_tuple(const BlockModule& M, const std::vector<RPoly>& t) {
    std::vector<int> out;
    for (size_t i = 0; i < M.moduli.size(); ++i) {
        int slots = M.moduli[i].deg();
        for (int j = 0; j < slots; ++j) {
            REl e = j <= t[i].deg() ? t[i].c[j] : REl{};
            out.push_back(e.a);
            out.push_back(e.b);
        }
    }
    return out;
}

std::vector<RPoly> unflatten_tuple(const BlockModule& M, const std::vector<int>& flat) {
    std::vector<RPoly> out;
    size_t pos = 0;
    for (const auto& mod : M.moduli) {
        std::vector<REl> c(mod.deg());
        for (int j = 0; j < mod.deg(); ++j) {
            c[j] = {flat[pos], flat[pos + 1]};
            pos += 2;
        }
        out.push_back(r_trim(M.fld, std::move(c)));
    }
    return out;
}

RrefBasis span_basis(const BlockModule& M) {
    std::vector<std::vector<int>> rows;
    for (const auto& t : spanning_tuples(M)) rows.push_back(flatten_tuple(M, t));
    return rref(M.fld, rows);
}

RrefBasis span_basis(const GqcCode& code) { return span_basis(as_module(code)); }

void for_each_codeword(const BlockModule& M, int cap_dim,
                       const std::function<void(const std::vector<int>&)>& fn) {
    RrefBasis basis = span_basis(M);
    if (basis.rank() > cap_dim)
        throw cap_exceeded("enumeration dimension " + std::to_string(basis.rank()) +
                           " exceeds cap " + std::to_string(cap_dim));
    if (basis.rank() == 0) {
        int len = 0;
        for (const auto& mod : M.moduli) len += 2 * mod.deg();
        fn(std::vector<int>(len, 0));
        return;
    }
    for_each_in_span(M.fld, basis, fn);
}

std::vector<std::vector<REl>> enumerate_span(const GqcCode& code, int cap_dim) {
    BlockModule M = as_module(code);
    std::vector<std::vector<REl>> words;
    for_each_codeword(M, cap_dim, [&](const std::vector<int>& flat) {
        std::vector<REl> w(flat.size() / 2);
        for (size_t i = 0; i < w.size(); ++i) w[i] = {flat[2 * i], flat[2 * i + 1]};
        words.push_back(std::move(w));
    });
    return words;
}

int pair_weight(const Field& F, const std::vector<int>& flat, Metric metric) {
    int w = 0;
    switch (metric) {
        case Metric::Hamming:
            for (size_t i = 0; i < flat.size(); i += 2)
                if (flat[i] || flat[i + 1]) ++w;
            break;
        case Metric::Lee:
            if (F.p() != 2 || F.n() != 1)
                throw precondition_error("Lee weight is defined over F_2+uF_2 only");
            for (size_t i = 0; i < flat.size(); i += 2) {
                if (flat[i]) w += 1;           // 1 or 1+u
                else if (flat[i + 1]) w += 2;  // u
            }
            break;
        case Metric::GrayHamming:
            for (size_t i = 0; i < flat.size(); i += 2) {
                if (flat[i + 1]) ++w;                      // b
                if (F.add(flat[i], flat[i + 1])) ++w;      // a+b
            }
            break;
    }
    return w;
}

WeightEnumerator weight_enumerator(const BlockModule& M, Metric metric, int cap_dim) {
    WeightEnumerator we;
    we.metric = metric;
    we.length = 0;
    for (const auto& mod : M.moduli) we.length += mod.deg();
    for_each_codeword(M, cap_dim, [&](const std::vector<int>& flat) {
        ++we.counts[pair_weight(M.fld, flat, metric)];
    });
    return we;
}

WeightEnumerator weight_enumerator(const GqcCode& code, Metric metric, int cap_dim) {
    return weight_enumerator(as_module(code), metric, cap_dim);
}

std::string WeightEnumerator::polynomial_string() const {
    // homogeneous form in x, y; x-degree = max weight support
    int N = metric == Metric::GrayHamming ? 2 * length
          : metric == Metric::Lee         ? 2 * length
                                          : length;
    std::string out;
    for (const auto& [w, c] : counts) {
        if (!out.empty()) out += "+";
        std::string term;
        if (c != 1) term += std::to_string(c);
        int xe = N - w;
        if (xe > 0) {
            if (!term.empty()) term += "*";
            term += xe == 1 ? "x" : "x^" + std::to_string(xe);
        }
        if (w > 0) {
            if (!term.empty()) term += "*";
            term += w == 1 ? "y" : "y^" + std::to_string(w);
        }
        if (term.empty()) term = "1";
        out += term;
    }
    return out.empty() ? "0" : out;
}

int min_distance(const BlockModule& M, Metric metric, int cap_dim) {
    int best = -1;
    for_each_codeword(M, cap_dim, [&](const std::vector<int>& flat) {
        int w = pair_weight(M.fld, flat, metric);
        if (w > 0 && (best < 0 || w < best)) best = w;
    });
    if (best < 0) throw precondition_error("min_distance of the zero code");
    return best;
}

int min_distance(const GqcCode& code, Metric metric, int cap_dim) {
    return min_distance(as_module(code), metric, cap_dim);
}

unsigned long long pow_u64_checked(unsigned long long b, int e) {
    unsigned long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > ~0ULL / b) throw cap_exceeded("code size overflows 64 bits");
        r *= b;
    }
    return r;
}

CodeParams gray_params(const GqcCode& code, int cap_dim) {
    BlockModule M = as_module(code);
    CodeParams out;
    for (int m : code.blocks) out.n += 2 * m;
    RrefBasis basis = span_basis(M);
    out.k = basis.rank();
    out.size = pow_u64_checked(code.fld.q(), out.k);
    if (out.k > 0) out.d = min_distance(M, Metric::GrayHamming, cap_dim);
    return out;
}

}  // namespace gqc
