#include "hopftrees/linalg.hpp"

#include <map>
#include <utility>

namespace hopftrees {

std::size_t sparse_rank(const std::vector<std::map<std::size_t, Scalar>>& rows) {
    // Incremental echelon form: pivots[c] is a stored row whose leading column is c.
    std::map<std::size_t, std::map<std::size_t, Scalar>> pivots;
    for (auto row : rows) {
        while (!row.empty()) {
            auto lead = row.begin();
            auto it = pivots.find(lead->first);
            if (it == pivots.end()) {
                const Scalar inv = 1 / lead->second;
                for (auto& [c, v] : row) v *= inv;
                pivots.emplace(lead->first, std::move(row));
                break;
            }
            const Scalar f = lead->second;  // pivot rows are normalized to leading coefficient 1
            for (const auto& [c, v] : it->second) {
                Scalar& x = row[c];
                x -= f * v;
                if (x == 0) row.erase(c);
            }
        }
    }
    return pivots.size();
}

std::size_t matrix_rank(std::vector<std::vector<Scalar>> rows) {
    std::vector<std::map<std::size_t, Scalar>> sparse;
    sparse.reserve(rows.size());
    for (const auto& r : rows) {
        std::map<std::size_t, Scalar> m;
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r[c] != 0) m.emplace(c, r[c]);
        sparse.push_back(std::move(m));
    }
    return sparse_rank(sparse);
}

}  // namespace hopftrees
