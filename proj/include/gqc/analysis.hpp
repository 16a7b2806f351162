#pragma once

#include <map>
#include <optional>

#include "gqc/codes.hpp"
#include "gqc/linalg.hpp"

namespace gqc {

constexpr int kDefaultCapDim = 20;

enum class Metric { Hamming, Lee, GrayHamming };

Metric parse_metric(const std::string& s);  // "hamming" | "lee" | "gray"
std::string metric_name(Metric m);

/*
 * Ground-truth oracle. A code (or any R[x]-module given by block moduli and
 * generator tuples) is expanded into an F_q-row space: the R[x]-span equals
 * the F_q-span of { x^t A_j, u x^t A_j } with t below the degree of the lcm
 * of the block moduli. Rows are flattened coefficient pairs (a,b) per slot,
 * row-reduced over F_q, and codewords are enumerated deterministically from
 * the RREF basis.
 */
struct BlockModule {
    Field fld;
    std::vector<FqPoly> moduli;              // monic; a block with modulus 1 is identically zero
    std::vector<std::vector<RPoly>> gens;
};

BlockModule as_module(const GqcCode& code);

// All x^t-shift and u-shift tuples of the generators (the F_q-spanning set).
std::vector<std::vector<RPoly>> spanning_tuples(const BlockModule& M);
std::vector<int> flatten_tuple(const BlockModule& M, const std::vector<RPoly>& t);
std::vector<RPoly> unflatten_tuple(const BlockModule& M, const std::vector<int>& flat);

RrefBasis span_basis(const BlockModule& M);
RrefBasis span_basis(const GqcCode& code);

// Exhaustive codeword enumeration (flattened R-vectors, i.e. one REl per
// coefficient slot across the blocks). Throws cap_exceeded when the F_q
// dimension exceeds cap_dim.
std::vector<std::vector<REl>> enumerate_span(const GqcCode& code, int cap_dim = kDefaultCapDim);

// Visit flattened pair-coordinate codewords without materializing them.
void for_each_codeword(const BlockModule& M, int cap_dim,
                       const std::function<void(const std::vector<int>&)>& fn);

int pair_weight(const Field& F, const std::vector<int>& flat, Metric metric);

struct WeightEnumerator {
    Metric metric;
    int length = 0;                       // R-symbol length (sum of block degrees)
    std::map<int, long long> counts;      // weight -> codeword count
    std::string polynomial_string() const;  // x^N + c*x^{N-w}*y^w + ...
};

WeightEnumerator weight_enumerator(const GqcCode& code, Metric metric, int cap_dim = kDefaultCapDim);
WeightEnumerator weight_enumerator(const BlockModule& M, Metric metric, int cap_dim = kDefaultCapDim);

// Minimum nonzero weight; throws precondition_error on the zero code.
int min_distance(const GqcCode& code, Metric metric, int cap_dim = kDefaultCapDim);
int min_distance(const BlockModule& M, Metric metric, int cap_dim = kDefaultCapDim);

struct CodeParams {
    int n = 0;                        // Gray-image length, 2 * sum(m_i)
    int k = 0;                        // F_q dimension
    std::optional<int> d;             // Gray-image minimum Hamming distance; empty for the zero code
    unsigned long long size = 1;      // |C| = q^k
};

CodeParams gray_params(const GqcCode& code, int cap_dim = kDefaultCapDim);

unsigned long long pow_u64_checked(unsigned long long b, int e);  // throws cap_exceeded on overflow

}  // namespace gqc
