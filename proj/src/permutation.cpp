#include "hopftrees/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "hopftrees/error.hpp"
#include "parse_util.hpp"

namespace hopftrees {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<char> seen(word_.size() + 1, 0);
    for (int v : word_) {
        if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
            throw invalid_input("not a permutation word of length " + std::to_string(size()));
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::reversal(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
    detail::Cursor c(text);
    c.expect_prefix("p:");
    std::vector<int> w;
    bool commas = text.find(',') != std::string_view::npos;
    while (!c.at_end()) {
        std::size_t at = c.pos();
        int v = commas ? c.integer() : c.digit();
        if (v < 1) throw parse_error(std::string(text), at, "a positive value");
        w.push_back(v);
        if (commas && !c.at_end()) c.expect(',', "',' or end of input");
    }
    try {
        return Permutation(std::move(w));
    } catch (const parse_error&) {
        throw;
    } catch (const invalid_input&) {
        throw parse_error(std::string(text), text.size(), "each of the values 1..n exactly once");
    }
}

Permutation Permutation::inverse() const {
    std::vector<int> w(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i) w[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(w));
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw invalid_input("composing permutations of different sizes");
    std::vector<int> w(v.word_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = u(v.word_[i]);
    return Permutation(std::move(w));
}

std::string Permutation::str() const {
    std::string out = "p:";
    bool commas = size() >= 10;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (commas && i) out += ',';
        out += std::to_string(word_[i]);
    }
    return out;
}

Permutation standardize(const std::vector<int>& seq) {
    std::vector<std::size_t> order(seq.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
    std::vector<int> w(seq.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        if (r && seq[order[r]] == seq[order[r - 1]]) throw invalid_input("standardize: duplicate entry " + std::to_string(seq[order[r]]));
        w[order[r]] = static_cast<int>(r) + 1;
    }
    return Permutation(std::move(w));
}

std::vector<std::pair<int, int>> inversions(const Permutation& s) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= s.size(); ++i)
        for (int j = i + 1; j <= s.size(); ++j)
            if (s(i) > s(j)) out.emplace_back(i, j);
    return out;
}

int pair_index(int i, int j) { return (j - 1) * (j - 2) / 2 + (i - 1); }

std::uint64_t inversion_mask(const Permutation& s) {
    if (s.size() > 11) throw invalid_input("inversion_mask supports n <= 11");
    std::uint64_t m = 0;
    for (int j = 2; j <= s.size(); ++j)
        for (int i = 1; i < j; ++i)
            if (s(i) > s(j)) m |= 1ULL << pair_index(i, j);
    return m;
}

bool weak_leq(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw invalid_input("weak order compares permutations of equal size");
    for (int j = 2; j <= a.size(); ++j)
        for (int i = 1; i < j; ++i)
            if (a(i) > a(j) && b(i) < b(j)) return false;
    return true;
}

Subset descents(const Permutation& s) {
    Subset d(std::max(s.size() - 1, 0));
    for (int p = 1; p < s.size(); ++p)
        if (s(p) > s(p + 1)) d.insert(p);
    return d;
}

Subset global_descents(const Permutation& s) {
    const int n = s.size();
    Subset d(std::max(n - 1, 0));
    // p is a global descent iff the first p values are exactly {n-p+1..n}, i.e. min(prefix) = n-p+1.
    int lo = n + 1;
    for (int p = 1; p < n; ++p) {
        lo = std::min(lo, s(p));
        if (lo == n - p + 1) d.insert(p);
    }
    return d;
}

Permutation graft_perm(const Permutation& s, const Permutation& t) {
    const int p = s.size(), q = t.size();
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(p + q + 1));
    for (int v : s.word()) w.push_back(v + q);
    w.push_back(p + q + 1);
    for (int v : t.word()) w.push_back(v);
    return Permutation(std::move(w));
}

Permutation graft_perm_under(const Permutation& s, const Permutation& t) {
    const int p = s.size(), q = t.size();
    std::vector<int> w(s.word());
    w.push_back(p + q + 1);
    for (int v : t.word()) w.push_back(v + p);
    return Permutation(std::move(w));
}

Permutation concat_over(const Permutation& s, const Permutation& t) {
    const int q = t.size();
    std::vector<int> w;
    for (int v : s.word()) w.push_back(v + q);
    for (int v : t.word()) w.push_back(v);
    return Permutation(std::move(w));
}

Permutation concat_under(const Permutation& s, const Permutation& t) {
    const int p = s.size();
    std::vector<int> w(s.word());
    for (int v : t.word()) w.push_back(v + p);
    return Permutation(std::move(w));
}

std::vector<Permutation> split_at_global_descents(const Permutation& s, const Subset& r) {
    if (!r.is_subset_of(global_descents(s)) || r.ambient() != std::max(s.size() - 1, 0))
        throw invalid_input("split positions must be global descents of " + s.str());
    std::vector<Permutation> out;
    const auto& w = s.word();
    int start = 0;
    std::vector<int> cuts = r.members();
    cuts.push_back(s.size());
    for (int cut : cuts) {
        out.push_back(standardize(std::vector<int>(w.begin() + start, w.begin() + cut)));
        start = cut;
    }
    return out;
}

std::vector<Permutation> gd_decompose(const Permutation& s) {
    if (s.size() == 0) return {};
    return split_at_global_descents(s, global_descents(s));
}

Permutation partial_recombine(const Permutation& s, const Subset& r) {
    Permutation acc;
    for (const Permutation& piece : split_at_global_descents(s, r)) acc = concat_under(acc, piece);
    return acc;
}

bool avoids(const Permutation& s, std::string_view pattern) {
    const int n = s.size();
    if (pattern == "132") {
        // For each middle j: need i<j with s(i) < s(j), k>j with s(i) < s(k) < s(j).
        int prefix_min = n + 1;
        for (int j = 1; j <= n; ++j) {
            if (prefix_min < s(j))
                for (int k = j + 1; k <= n; ++k)
                    if (s(k) > prefix_min && s(k) < s(j)) return false;
            prefix_min = std::min(prefix_min, s(j));
        }
        return true;
    }
    if (pattern == "213") {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (s(j) < s(i))
                    for (int k = j + 1; k <= n; ++k)
                        if (s(k) > s(i)) return false;
        return true;
    }
    throw invalid_input("unsupported pattern \"" + std::string(pattern) + "\" (expected 132 or 213)");
}

Permutation pi_R(const Subset& r, int n) {
    if (r.ambient() != n) throw invalid_input("pi_R: subset ambient must equal n");
    std::vector<int> inv;
    for (int i = 1; i <= n; ++i)
        if (r.contains(i)) inv.push_back(i);
    for (int i = 1; i <= n; ++i)
        if (!r.contains(i)) inv.push_back(i);
    return Permutation(std::move(inv)).inverse();
}

Permutation restrict_perm(const Permutation& s, const Subset& r) {
    if (r.ambient() != s.size()) throw invalid_input("restrict_perm: subset ambient must equal n");
    std::vector<int> vals;
    for (int i : r.members()) vals.push_back(s(i));
    return standardize(vals);
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do out.emplace_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<Permutation> shuffles(int p, int q) {
    // zeta with Des(zeta) contained in {p}: choose the value set of the first p positions.
    std::vector<Permutation> out;
    const int n = p + q;
    for (const Subset& first : all_subsets(n)) {
        if (first.size() != p) continue;
        std::vector<int> w = first.members();
        for (int i = 1; i <= n; ++i)
            if (!first.contains(i)) w.push_back(i);
        out.emplace_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> perms_with_descents_in(const Subset& s, int n) {
    // Blocks between allowed descents are increasing: a set composition of [n] into the block sizes.
    std::vector<int> sizes = Composition::from_subset(s, n).parts();
    std::vector<Permutation> out;
    std::vector<int> word;
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    auto rec = [&](auto&& self, std::size_t block) -> void {
        if (block == sizes.size()) {
            out.emplace_back(word);
            return;
        }
        // choose an increasing subset of unused values of the block size
        std::vector<int> avail;
        for (int v = 1; v <= n; ++v)
            if (!used[static_cast<std::size_t>(v)]) avail.push_back(v);
        const int k = sizes[block];
        std::vector<int> idx(static_cast<std::size_t>(k));
        auto pick = [&](auto&& pself, int pos, int from) -> void {
            if (pos == k) {
                for (int i : idx) {
                    word.push_back(avail[static_cast<std::size_t>(i)]);
                    used[static_cast<std::size_t>(avail[static_cast<std::size_t>(i)])] = 1;
                }
                self(self, block + 1);
                for (int i : idx) {
                    word.pop_back();
                    used[static_cast<std::size_t>(avail[static_cast<std::size_t>(i)])] = 0;
                }
                return;
            }
            for (int i = from; i < static_cast<int>(avail.size()); ++i) {
                idx[static_cast<std::size_t>(pos)] = i;
                pself(pself, pos + 1, i + 1);
            }
        };
        pick(pick, 0, 0);
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hopftrees
