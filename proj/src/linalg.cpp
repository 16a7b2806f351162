#include "gqc/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace gqc {

RrefBasis rref(const Field& F, const std::vector<std::vector<int>>& in) {
    RrefBasis out;
    for (const auto& row : in) {
        std::vector<int> r = row;
        // eliminate against current basis
        for (size_t k = 0; k < out.rows.size(); ++k) {
            int c = r[out.pivots[k]];
            if (c)
                for (size_t j = 0; j < r.size(); ++j)
                    r[j] = F.sub(r[j], F.mul(c, out.rows[k][j]));
        }
        int piv = -1;
        for (size_t j = 0; j < r.size(); ++j)
            if (r[j]) { piv = (int)j; break; }
        if (piv < 0) continue;
        int s = F.inv(r[piv]);
        for (auto& x : r) x = F.mul(s, x);
        out.rows.push_back(std::move(r));
        out.pivots.push_back(piv);
    }
    // sort by pivot and back-substitute to full RREF
    std::vector<size_t> order(out.rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return out.pivots[a] < out.pivots[b]; });
    RrefBasis sorted;
    for (size_t k : order) {
        sorted.rows.push_back(std::move(out.rows[k]));
        sorted.pivots.push_back(out.pivots[k]);
    }
    for (size_t i = 0; i < sorted.rows.size(); ++i) {
        for (size_t j = 0; j < sorted.rows.size(); ++j) {
            if (i == j) continue;
            int c = sorted.rows[i][sorted.pivots[j]];
            if (c)
                for (size_t t = 0; t < sorted.rows[i].size(); ++t)
                    sorted.rows[i][t] = F.sub(sorted.rows[i][t], F.mul(c, sorted.rows[j][t]));
        }
    }
    return sorted;
}

int rank_of(const Field& F, const std::vector<std::vector<int>>& rows) {
    return rref(F, rows).rank();
}

bool in_span(const Field& F, const RrefBasis& basis, std::vector<int> v) {
    for (size_t k = 0; k < basis.rows.size(); ++k) {
        int c = v[basis.pivots[k]];
        if (c)
            for (size_t j = 0; j < v.size(); ++j)
                v[j] = F.sub(v[j], F.mul(c, basis.rows[k][j]));
    }
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

void for_each_in_span(const Field& F, const RrefBasis& basis,
                      const std::function<void(const std::vector<int>&)>& fn) {
    int k = basis.rank();
    size_t len = basis.rows.empty() ? 0 : basis.rows[0].size();
    std::vector<int> cur(len, 0);
    fn(cur);
    if (k == 0) return;
    std::vector<int> digits(k, 0);
    int q = F.q();
    while (true) {
        // odometer step: each digit change (increment or wrap q-1 -> 0)
        // adds the corresponding basis row exactly once.
        int pos = 0;
        while (pos < k) {
            for (size_t j = 0; j < len; ++j)
                cur[j] = F.add(cur[j], basis.rows[pos][j]);
            if (++digits[pos] < q) break;
            digits[pos] = 0;
            ++pos;
        }
        if (pos == k) break;  // wrapped past the last digit: back at zero
        fn(cur);
    }
}

}  // namespace gqc
