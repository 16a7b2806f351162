#pragma once

#include "gqc/analysis.hpp"

namespace gqc {

/*
 * Theorem 4.1 data for a 1-generator GQC code. Each generator entry
 * base_i = f_i g_i + u q_i splits canonically into its bar part f_i g_i and
 * u part q_i. The minimal generating set is S1 = {x^j G : j < r} with
 * R-coefficients and S2 = {x^j B : j < t} with F_q-coefficients,
 * B = (u h q_1, ..., u h q_l). The declared size is q^{2r+t}; the span
 * always satisfies |C| <= q^{2r+t}, with equality exactly when S1 and S2
 * are independent.
 */
struct MinGenSet {
    std::vector<FqPoly> h_i;
    FqPoly h;
    int r = 0;
    std::vector<FqPoly> v_i;
    FqPoly v;
    int t = 0;
    std::vector<RPoly> B;
    std::vector<std::vector<RPoly>> S1, S2;
    bool regular_hypothesis = false;  // Thm 4.1 premise: some base_i regular in R_i
    int size_exponent() const { return 2 * r + t; }
};

// Requires a 1-generator code; never refuses on an irregular generator
// (Example 4.6(1) has no regular block yet the formulas apply) — the
// hypothesis verdict is carried in regular_hypothesis instead.
MinGenSet minimal_generating_set(const GqcCode& code);

// Corollary 4.2 sufficient freeness test: every base_i divides x^{m_i}-1
// over R (exact division after unit-normalizing the leading coefficient).
struct FreeReport {
    bool free = false;
    int rank = 0;    // deg h when free
    FqPoly h;
};
FreeReport is_free_cor42(const GqcCode& code);

// Theorem 4.3 lower bound for free 1-generator codes. K is the
// lexicographically smallest subset of maximal size with lcm{h_i : i in K}
// != h; d_i are exact oracle distances of the projected cyclic codes.
struct BoundReport {
    Metric metric = Metric::Hamming;
    std::vector<FqPoly> h_i;
    FqPoly h;
    int rank = 0;
    std::vector<int> K;
    std::vector<int> d_i;
    int bound = 0;
    bool has_bound = true;
};

BoundReport distance_lower_bound(const GqcCode& code, Metric metric,
                                 int cap_dim = kDefaultCapDim);

// Corollary 4.4: the code generated by (base_i * k_i) with base_i | x^{m_i}-1,
// gcd(h_i, bar k_i) = 1 and deg(base_i) = deg(bar base_i).
BoundReport distance_lower_bound_cor44(const GqcCode& base_code,
                                       const std::vector<RPoly>& multipliers,
                                       Metric metric, int cap_dim = kDefaultCapDim);

// Corollary 4.5: append a free cyclic block (1-block 1-generator code) to a
// free 1-generator GQC code. The bound claim follows the gcd/divides cases;
// when neither applies the concatenated code is returned with
// has_bound = false.
std::pair<GqcCode, BoundReport> concatenate_cor45(const GqcCode& gqc,
                                                  const GqcCode& cyc,
                                                  Metric metric,
                                                  int cap_dim = kDefaultCapDim);

// Projection phi_i(C): the cyclic code over R_i generated by the i-th entries.
GqcCode project_block(const GqcCode& code, int i);

}  // namespace gqc
