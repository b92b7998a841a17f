#pragma once

#include <string_view>
#include <vector>

#include "hopftrees/binary_tree.hpp"
#include "hopftrees/check.hpp"
#include "hopftrees/morphisms.hpp"
#include "hopftrees/permutation.hpp"
#include "hopftrees/subset.hpp"
#include "hopftrees/vect.hpp"

namespace hopftrees {

/// Number of progressive components of t.
int coradical_level(const BinaryTree& t);

struct GradingRecord {
    BinaryTree tree;
    int level;
};
std::vector<GradingRecord> grading(int n);

/// Progressive trees of Y_n (the M_t spanning the primitives).
std::vector<BinaryTree> primitives_basis(int n);

/// Every term M_s (x) M_u of Delta(M_t), t in Y_n, has level(s) + level(u) = level(t), and
/// Delta(M_t) has only the two trivial terms exactly when t is progressive.
CheckResult grading_check(int n);

/// c_m = sum_{k=1}^m p_k c_{m-k} for m <= max_n, with c_m = #Y_m and p_k the number of progressive trees,
/// both counted by enumeration; also p_k = c_{k-1}.
CheckResult hilbert_check(int max_n);

/// Keys spanning the Hopf kernel of a morphism in degree n:
/// Lambda: M_s whose last global-descent component is not 132-avoiding;
/// L: M_t whose last progressive component is not a comb;
/// D: M_s whose last global-descent component is not an identity.
std::vector<Permutation> hopf_kernel_basis_Lambda(int n);
std::vector<BinaryTree> hopf_kernel_basis_L(int n);
std::vector<Permutation> hopf_kernel_basis_D(int n);

/// (id (x) pi) Delta(x) == x (x) 1, on M bases.
bool in_hopf_kernel(Morphism m, const Vect<Permutation>& x);
bool in_hopf_kernel(const Vect<BinaryTree>& x);  // for L

/// dim A_n = n! - sum_{k<n} k! c_{n-k-1} and dim B_n = c_n - sum_{k<n} c_k (n >= 1).
long long kernel_dim_a(int n);
long long kernel_dim_b(int n);
/// Dimension of the Hopf kernel in degree n found as the nullspace of x -> (id (x) pi)Delta(x) - x (x) 1.
std::size_t kernel_nullity(Morphism m, int n);

/// Hopf cocycle c(k, k') = sum gamma(k_1) gamma(k'_1) S(gamma(k_2 k'_2)) for the pair (pi, gamma) on M bases.
Vect<Permutation> cocycle_Lambda(const BinaryTree& k, const BinaryTree& k2);  // (Lambda, Gamma)
Vect<BinaryTree> cocycle_L(const Composition& k, const Composition& k2);     // (L, C)
Vect<Permutation> cocycle_D(const Composition& k, const Composition& k2);    // (D, Z)

/// Every cocycle value with total degree <= max_n satisfies the kernel predicate and lies in the span of
/// the kernel basis of its degree.
CheckResult cocycle_check(Morphism m, int max_n);

}  // namespace hopftrees
