#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gqc/rring.hpp"

namespace gqc {

// Polynomial over F_q, little-endian coefficient vector of element indices.
// Normalized: no trailing zeros; the zero polynomial is the empty vector.
struct FqPoly {
    std::vector<int> c;
    int deg() const { return (int)c.size() - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c.empty(); }
    bool operator==(const FqPoly&) const = default;
    static FqPoly zero() { return {}; }
    static FqPoly one() { return {{1}}; }
    static FqPoly x() { return {{0, 1}}; }
};

// Polynomial over R = F_q + uF_q, same conventions.
struct RPoly {
    std::vector<REl> c;
    int deg() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    bool operator==(const RPoly&) const = default;
    static RPoly zero() { return {}; }
    static RPoly one() { return {{{1, 0}}}; }
};

FqPoly fq_trim(std::vector<int> c);
FqPoly fq_add(const Field& F, const FqPoly& f, const FqPoly& g);
FqPoly fq_sub(const Field& F, const FqPoly& f, const FqPoly& g);
FqPoly fq_neg(const Field& F, const FqPoly& f);
FqPoly fq_mul(const Field& F, const FqPoly& f, const FqPoly& g);
FqPoly fq_scale(const Field& F, int c, const FqPoly& f);
FqPoly fq_shift(const FqPoly& f, int k);  // multiply by x^k
FqPoly fq_pow(const Field& F, const FqPoly& f, int e);
FqPoly fq_make_monic(const Field& F, const FqPoly& f);

// Division with remainder by a monic divisor (throws on non-monic g).
std::pair<FqPoly, FqPoly> fq_divmod(const Field& F, const FqPoly& f, const FqPoly& g);
FqPoly fq_mod(const Field& F, const FqPoly& f, const FqPoly& g);
bool fq_divides(const Field& F, const FqPoly& a, const FqPoly& f);  // a | f

FqPoly fq_gcd(const Field& F, FqPoly f, FqPoly g);  // monic; gcd(0,0) is an error
FqPoly fq_lcm(const Field& F, const FqPoly& f, const FqPoly& g);
struct Xgcd {
    FqPoly d, a, b;  // a f + b g = d, d the monic gcd
};
Xgcd fq_xgcd(const Field& F, const FqPoly& f, const FqPoly& g);

FqPoly fq_xm1(const Field& F, int m);  // x^m - 1

RPoly r_trim(const Field& F, std::vector<REl> c);
RPoly r_add(const Field& F, const RPoly& f, const RPoly& g);
RPoly r_sub(const Field& F, const RPoly& f, const RPoly& g);
RPoly r_neg(const Field& F, const RPoly& f);
RPoly r_mul(const Field& F, const RPoly& f, const RPoly& g);
RPoly r_scale(const Field& F, REl c, const RPoly& f);
RPoly r_shift(const RPoly& f, int k);
RPoly r_pow(const Field& F, const RPoly& f, int e);

// Exact division with remainder: over R this needs a divisor whose leading
// coefficient is a unit; the spec'd public contract requires monic g.
std::pair<RPoly, RPoly> r_divmod(const Field& F, const RPoly& f, const RPoly& g);
RPoly r_mod(const Field& F, const RPoly& f, const RPoly& g);
RPoly r_mulmod(const Field& F, const RPoly& f, const RPoly& g, const RPoly& mod);
RPoly r_xm1(const Field& F, int m);

// The bar reduction R[x] -> F_q[x] (drop u parts) and its companions.
FqPoly bar(const Field& F, const RPoly& f);
FqPoly u_part(const Field& F, const RPoly& f);
RPoly lift(const FqPoly& f);            // F_q[x] -> R[x]
RPoly u_times(const FqPoly& f);         // u * f
RPoly r_from_parts(const Field& F, const FqPoly& a, const FqPoly& b);  // a + u b

// Factorization of x^m - 1 over F_q: m = p^e * m~ with gcd(p, m~) = 1;
// x^m~ - 1 splits into distinct monic irreducibles, each raised to p^e.
// The factors, read in R[x] via the trivial lift, are basic irreducible.
struct CyclotomicFactorization {
    int m = 0;
    int e = 0;
    int p_power = 1;   // p^e
    int m_reduced = 0; // m~
    std::vector<FqPoly> factors;  // canonical order
};
CyclotomicFactorization factor_cyclotomic(const Field& F, int m);

// Canonical factor order: ascending degree, then descending componentwise
// comparison of (c0, c1, ...).
bool factor_order_less(const FqPoly& a, const FqPoly& b);

// Orthogonal idempotents of R[x]/(x^m-1), one per factor power g_k^{p^e}.
// Coefficients lie in F_q (trivial lift); eps_k^2 = eps_k, eps_j eps_k = 0,
// sum eps_k = 1.
std::vector<RPoly> crt_idempotents(const Field& F, const CyclotomicFactorization& fact);

// True iff f is a unit (equivalently not a zero divisor) of R[x]/(x^m-1),
// i.e. gcd(bar f, x^m-1) = 1 over F_q.
bool is_regular(const Field& F, const RPoly& f, int m);

// Printing / parsing. Terms are joined by '+'/'-'; a term is a '*'-separated
// product of atoms: integer, '[c0,...]', 'u', 'x', 'x^k', or a parenthesized
// subexpression; '(a,b)' is also accepted as an R-element literal.
std::string rpoly_to_string(const Field& F, const RPoly& f);
std::string fqpoly_to_string(const Field& F, const FqPoly& f);
RPoly parse_rpoly(const Field& F, const std::string& s);
FqPoly parse_fqpoly(const Field& F, const std::string& s);  // rejects u terms

}  // namespace gqc
