#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hopftrees/vect.hpp"

namespace hopftrees {

/// Rank of a dense rational matrix given by rows (exact Gaussian elimination).
std::size_t matrix_rank(std::vector<std::vector<Scalar>> rows);
/// Rank of a sparse rational matrix, rows given as column -> value with no zero entries.
std::size_t sparse_rank(const std::vector<std::map<std::size_t, Scalar>>& rows);

/// Dimension of the span of the given vectors.
template <class K>
std::size_t span_dimension(const std::vector<Vect<K>>& vs) {
    std::map<K, std::size_t> column;
    for (const auto& v : vs)
        for (const auto& [k, c] : v) column.try_emplace(k, column.size());
    std::vector<std::map<std::size_t, Scalar>> rows;
    rows.reserve(vs.size());
    for (const auto& v : vs) {
        std::map<std::size_t, Scalar> row;
        for (const auto& [k, c] : v) row.emplace(column.at(k), c);
        rows.push_back(std::move(row));
    }
    return sparse_rank(rows);
}

/// Exact membership test: v lies in the span of gens.
template <class K>
bool in_span(std::vector<Vect<K>> gens, const Vect<K>& v) {
    if (v.empty()) return true;
    const std::size_t r = span_dimension(gens);
    gens.push_back(v);
    return span_dimension(gens) == r;
}

/// Dimension of the kernel of a linear map given by the images of a domain basis.
template <class K>
std::size_t nullity(const std::vector<Vect<K>>& images) {
    return images.size() - span_dimension(images);
}

}  // namespace hopftrees
