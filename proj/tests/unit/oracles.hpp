#pragma once

// Brute-force reference computations shared by the unit tests. None of these call into the library's
// algorithms beyond the basic value types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

inline std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline long long catalan(int n) {
    std::vector<long long> c{1};
    for (int m = 1; m <= n; ++m) {
        long long s = 0;
        for (int k = 0; k < m; ++k) s += c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(m - 1 - k)];
        c.push_back(s);
    }
    return c[static_cast<std::size_t>(n)];
}

inline long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Position pairs (i, j), i < j, with w(i) > w(j); 1-based.
inline std::set<std::pair<int, int>> inversion_pairs(const std::vector<int>& w) {
    std::set<std::pair<int, int>> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) out.insert({static_cast<int>(i + 1), static_cast<int>(j + 1)});
    return out;
}

/// Classical pattern containment by checking every triple of positions.
inline bool contains_pattern(const std::vector<int>& w, const std::vector<int>& pat) {
    const std::size_t n = w.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                const int x[3] = {w[a], w[b], w[c]};
                bool match = true;
                for (int i = 0; i < 3 && match; ++i)
                    for (int j = 0; j < 3 && match; ++j)
                        if ((x[i] < x[j]) != (pat[static_cast<std::size_t>(i)] < pat[static_cast<std::size_t>(j)])) match = false;
                if (match) return true;
            }
    return false;
}

/// Number of rooted unordered forests with n nodes, from the Euler transform of rooted tree counts.
inline std::vector<long long> rooted_forest_counts(int max_n) {
    std::vector<long long> f{1}, t{0};  // t[k]: rooted trees with k nodes = forests with k-1 nodes
    for (int n = 1; n <= max_n; ++n) {
        t.push_back(f[static_cast<std::size_t>(n - 1)]);
        long long s = 0;
        for (int k = 1; k <= n; ++k) {
            long long dsum = 0;
            for (int d = 1; d <= k; ++d)
                if (k % d == 0) dsum += d * t[static_cast<std::size_t>(d)];
            s += dsum * f[static_cast<std::size_t>(n - k)];
        }
        f.push_back(s / n);
    }
    return f;
}

/// Moebius function of a finite poset given by an explicit leq matrix, by the defining recursion.
inline long long moebius(const std::vector<std::vector<bool>>& leq, int x, int y) {
    if (!leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) return 0;
    if (x == y) return 1;
    long long s = 0;
    for (int z = 0; z < static_cast<int>(leq.size()); ++z)
        if (z != y && leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] && leq[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)])
            s += moebius(leq, x, z);
    return -s;
}

/// Reflexive-transitive closure of a cover relation.
inline std::vector<std::vector<bool>> closure(const std::vector<std::vector<int>>& up) {
    const std::size_t n = up.size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> stack{s};
        r[s][s] = true;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (int y : up[x])
                if (!r[s][static_cast<std::size_t>(y)]) {
                    r[s][static_cast<std::size_t>(y)] = true;
                    stack.push_back(static_cast<std::size_t>(y));
                }
        }
    }
    return r;
}

}  // namespace oracle
