#pragma once

#include "gqc/analysis.hpp"

namespace gqc {

// Lexicographically smallest monic irreducible of degree d over F_q
// (ascending little-endian counter over element indices).
FqPoly smallest_irreducible(const Field& F, int d);
bool fq_irreducible(const Field& F, const FqPoly& f);

// The ell-th Galois extension of R: R[x]/(modulus) with modulus basic
// irreducible (bar image irreducible over F_q). Elements are residues,
// i.e. RPoly of degree < ell in the basis {1, xi, ..., xi^{ell-1}}.
struct GaloisExtR {
    Field fld;
    int ell = 1;
    RPoly modulus;

    GaloisExtR(const Field& F, int ell);                // trivial lift of the smallest irreducible
    GaloisExtR(const Field& F, RPoly modulus);          // validates basic irreducibility
};

using ExtElem = RPoly;                 // residue mod ext.modulus
struct ExtPoly {
    std::vector<ExtElem> c;            // coefficient i lives in the extension
    int deg() const { return (int)c.size() - 1; }
};

ExtElem ext_mul(const GaloisExtR& E, const ExtElem& a, const ExtElem& b);
ExtElem ext_u_times(const GaloisExtR& E, const ExtElem& a);

// Quasi-cyclic code of length m*ell with index ell over R, stored in the
// conventional tuple view (generators in (R[x]/(x^m-1))^ell).
struct QcCode {
    Field fld;
    int m = 1;
    int ell = 1;
    std::vector<std::vector<RPoly>> gens;
};

QcCode qc_new(const Field& F, int m, int ell, std::vector<std::vector<RPoly>> gens);
GqcCode qc_as_gqc(const QcCode& code);

// Degree-major flattening: v = (v_0, ..., v_{m-1}) with v_i in R^ell.
std::vector<REl> qc_flatten(const QcCode& code, const std::vector<RPoly>& tuple);
std::vector<RPoly> qc_unflatten(const Field& F, int m, int ell, const std::vector<REl>& flat);

// T^ell: cyclic shift by one block of ell coordinates.
std::vector<REl> t_shift(const std::vector<REl>& v, int ell);

// eta / phi of Section 5: tuple of ell polynomials <-> polynomial over the
// ell-th extension; round-trip identity, and multiplication by x in the
// extension view equals t_shift in the vector view.
ExtPoly ext_view(const GaloisExtR& E, const std::vector<RPoly>& tuple, int m);
std::vector<RPoly> tuple_view(const GaloisExtR& E, const ExtPoly& v, int m);

// Theorem 5.1: d_min(C) >= d_min(C~) * d_min(B). C~ is the cyclic code over
// the extension generated by the given polynomials (distance in Hamming
// weight over extension symbols); B is the length-ell code over R spanned by
// all coefficient vectors. Zero codes yield distance 0 and bound 0.
struct ProductBound {
    int d_tilde = 0;
    int d_B = 0;
    int bound = 0;
};
ProductBound product_bound(const GaloisExtR& E, const std::vector<ExtPoly>& gens, int m,
                           int cap_dim = kDefaultCapDim);

// Corollary 5.2: the F_q-span of {v, xv, ..., x^{m-1}v} inside R[x]/(x^m-1),
// viewed in F_q^{2m} through the (a,b) coordinate pairs.
struct Cor52Code {
    Field fld;
    int m = 0;
    RPoly v;
    std::vector<std::vector<int>> shift_rows;  // m rows of length 2m ((a,b) pairs)
    RrefBasis basis;                           // row-reduced generator matrix
    int dimension = 0;
    FqPoly g;                                  // gcd(bar v, x^m-1), trivial-lift representative
    ProductBound bound;                        // via <lift g> over R and the length-2 pair code
    std::optional<int> bound_delta;            // delta * d_B when the caller supplies delta
};
Cor52Code construct_cor52(const Field& F, const RPoly& v, int m,
                          std::optional<int> delta = std::nullopt,
                          int cap_dim = kDefaultCapDim);
int cor52_exact_distance(const Cor52Code& code, int cap_dim = kDefaultCapDim);

// Euclidean inner product over R of equal-length vectors.
REl euclid_inner(const Field& F, const std::vector<REl>& a, const std::vector<REl>& b);

// Euclidean dual: all vectors orthogonal to every codeword, found by a scan
// of the ambient space (F_q dimension 2*m*ell must stay within cap_dim).
// Generators of the result are a canonical F_q basis of the dual.
QcCode euclid_dual(const QcCode& code, int cap_dim = kDefaultCapDim);

// Conjugation a x^i -> a x^{m-i} extended additively, and the Hermitian
// product <a(x), b(x)> = sum_i a_i(x) * conj(b_i(x)) mod (x^m - 1).
RPoly conj_poly(const Field& F, const RPoly& f, int m);
RPoly hermitian_product(const Field& F, const std::vector<RPoly>& a,
                        const std::vector<RPoly>& b, int m);

// Theorem 5.5 empirical report.
struct Thm55Report {
    int ell = 0;
    std::vector<int> ranks;
    bool all_free = true;
    int K = 0;
    int Kprime = 0;
    int dual_generator_count = 0;  // max component rank of the dual
    bool dual_claim_ok = false;    // == ell - Kprime (Thm 5.5(i))
    bool self_dual = false;
    bool self_dual_ell_even = true;
    bool self_dual_ell_le_2rho = true;
};
Thm55Report check_thm55(const QcCode& code, int cap_dim = kDefaultCapDim);

// Hamming weight counting nonzero groups of `group` consecutive F_q coords.
int min_weight_grouped(const Field& F, const RrefBasis& basis, int group, int cap_dim);

}  // namespace gqc
