#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopftrees/subset.hpp"

namespace hopftrees {

/// A permutation of [n] in one-line notation. The empty word is id_0.
class Permutation {
   public:
    Permutation() = default;
    /// Throws invalid_input unless word is a bijection on {1..word.size()}.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    /// omega_n = n ... 2 1.
    static Permutation reversal(int n);
    /// Parses "p:41253", or "p:10,3,..." (comma-separated); "p:" is id_0.
    static Permutation parse(std::string_view text);

    int size() const noexcept { return static_cast<int>(word_.size()); }
    /// sigma(i) for 1 <= i <= n.
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& word() const noexcept { return word_; }

    Permutation inverse() const;
    /// (u * v)(i) = u(v(i)).
    friend Permutation operator*(const Permutation& u, const Permutation& v);

    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return a.word_ <=> b.word_;
    }

   private:
    std::vector<int> word_;
};

/// st(a_1..a_p): the permutation with the same relative order. Throws on duplicates.
Permutation standardize(const std::vector<int>& seq);

/// Inversions as position pairs (i, j), i < j, sigma(i) > sigma(j), in lexicographic order.
std::vector<std::pair<int, int>> inversions(const Permutation& s);
/// Inversion set packed into a bit mask; bit index of (i, j) is pair_index(i, j). Requires n <= 11.
std::uint64_t inversion_mask(const Permutation& s);
int pair_index(int i, int j);
/// Weak order: Inv(a) contained in Inv(b).
bool weak_leq(const Permutation& a, const Permutation& b);

Subset descents(const Permutation& s);
Subset global_descents(const Permutation& s);

/// sigma v tau = (sigma + q, p+q+1, tau).
Permutation graft_perm(const Permutation& s, const Permutation& t);
/// sigma v_ tau = (sigma, p+q+1, tau + p).
Permutation graft_perm_under(const Permutation& s, const Permutation& t);
/// sigma \ tau = (sigma + q, tau).
Permutation concat_over(const Permutation& s, const Permutation& t);
/// sigma / tau = (sigma, tau + p).
Permutation concat_under(const Permutation& s, const Permutation& t);

/// Factors with no global descents whose concat_over-fold is s. id_0 gives an empty list.
std::vector<Permutation> gd_decompose(const Permutation& s);
/// Splits s at the positions of r (which must lie in GDes(s)) into the pieces of s = s1 \ ... \ sk.
std::vector<Permutation> split_at_global_descents(const Permutation& s, const Subset& r);
/// tau_R = tau_1 / ... / tau_k for the partial decomposition tau = tau_1 \ ... \ tau_k given by R.
Permutation partial_recombine(const Permutation& s, const Subset& r);

/// Pattern containment for "132" or "213"; other patterns throw invalid_input.
bool avoids(const Permutation& s, std::string_view pattern);

/// pi_R with pi_R^{-1} = (R_1..R_p, R^c_1..R^c_q).
Permutation pi_R(const Subset& r, int n);
/// rho|_R = st(rho(R_1), ..., rho(R_p)).
Permutation restrict_perm(const Permutation& s, const Subset& r);

/// Sh(p, q): permutations with at most one descent, located at p (the identity when p or q is 0).
std::vector<Permutation> shuffles(int p, int q);
/// Permutations of [n] with Des contained in s.
std::vector<Permutation> perms_with_descents_in(const Subset& s, int n);

std::vector<Permutation> all_permutations(int n);

}  // namespace hopftrees
