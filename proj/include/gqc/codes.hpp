#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gqc/poly.hpp"

namespace gqc {

// A generalized quasi-cyclic code over R = F_q + uF_q: the R[x]-submodule of
// R[x]/(x^{m_1}-1) x ... x R[x]/(x^{m_l}-1) spanned by rho generator tuples.
struct GqcCode {
    Field fld;
    std::vector<int> blocks;                 // m_1, ..., m_l
    std::vector<std::vector<RPoly>> gens;    // rho tuples, entries reduced mod x^{m_i}-1

    int ell() const { return (int)blocks.size(); }
    int rho() const { return (int)gens.size(); }
    int length() const;
};

// Validates shapes and stores generator entries reduced mod their block moduli.
GqcCode gqc_new(const Field& fld, std::vector<int> blocks,
                std::vector<std::vector<RPoly>> gens);

// Theorem 2.3 generator shapes of cyclic codes over R.
enum class CyclicForm {
    PrincipalCoprime,       // gcd(p,m)=1: (g + u a), a | g | x^m-1 over F_q
    PrincipalNonPrincipal,  // (g + u p): (g+up) | x^m-1 over R, g | p*(x^m-1)/g
    TwoGenerator,           // (g + u p, u a): a | g | x^m-1, a | p*(x^m-1)/g, deg a > deg p
};

struct CyclicCodeR {
    int m = 0;
    std::vector<RPoly> gens;
    CyclicForm form;
};

// Matches the given generators against the Theorem 2.3 shapes and validates
// the divisibility conditions of the identified form; throws
// precondition_error naming the first violated condition otherwise.
CyclicCodeR classify_cyclic(const Field& F, int m, const std::vector<RPoly>& gens);

struct CrtComponent {
    int factor_index = 0;
    std::vector<int> exps;                  // d_{i,k} per block (p^{e_i} or 0)
    std::vector<std::vector<RPoly>> gens;   // generators projected mod g_k^{d_{i,k}}
    int nonzero_blocks() const;
};

struct CrtDecomposition {
    std::vector<FqPoly> common_factors;               // deduplicated g_1..g_s
    std::vector<int> block_p_powers;                  // p^{e_i} per block
    std::vector<std::vector<int>> exponent_matrix;    // [block][factor]
    std::vector<std::vector<RPoly>> idempotents;      // [block][factor], zero where d=0
    std::vector<CrtComponent> components;             // one per factor
};

CrtDecomposition crt_decompose(const GqcCode& code);

// CRT interpolation: recombine per-factor residues of one block back into
// R[x]/(x^{m_i}-1) through the idempotents. Residue entries at factors with
// d_{i,k}=0 are ignored.
RPoly crt_interpolate(const Field& F, const CrtDecomposition& D, int block,
                      const std::vector<RPoly>& residues, int m);

// Theorem 3.3 rank data. rank is the minimal number of generators of the
// component over S_k = R[x]/(g_k^{p^a}) (Nakayama dimension); for a free
// component this equals its free rank. free is the oracle verdict
// |C_k| == |S_k|^rank.
struct ComponentRankInfo {
    int rank = 0;
    bool free = true;
    int fq_dim = 0;
};

struct GeneratorCountReport {
    std::vector<ComponentRankInfo> components;
    int K = 0;          // max component rank; Thm 3.3: the minimal generator count
    bool all_free = true;
};

// Requires every block to share the same p-power p^a (throws
// precondition_error otherwise). Non-free components are reported through
// the flags, not as errors: the rank data stays meaningful as minimal
// generator counts.
GeneratorCountReport generator_count_bounds(const GqcCode& code);

}  // namespace gqc
