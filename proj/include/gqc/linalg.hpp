#pragma once

#include <functional>
#include <vector>

#include "gqc/gf.hpp"

namespace gqc {

// Reduced row echelon basis over F_q. Rows are vectors of element indices.
struct RrefBasis {
    std::vector<std::vector<int>> rows;  // canonical RREF rows, pivot-ordered
    std::vector<int> pivots;
    int rank() const { return (int)rows.size(); }
};

RrefBasis rref(const Field& F, const std::vector<std::vector<int>>& in);
int rank_of(const Field& F, const std::vector<std::vector<int>>& rows);

// True iff v lies in the row space of basis.
bool in_span(const Field& F, const RrefBasis& basis, std::vector<int> v);

// Visit all q^rank combinations of the basis rows exactly once, starting at
// the zero vector. Enumeration is the little-endian base-q odometer over the
// basis coefficients, so the order is deterministic for a fixed basis.
// Cost is O(q^rank * length) total via incremental updates.
void for_each_in_span(const Field& F, const RrefBasis& basis,
                      const std::function<void(const std::vector<int>&)>& fn);

}  // namespace gqc
