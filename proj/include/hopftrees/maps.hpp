#pragma once

#include <optional>

#include "hopftrees/binary_tree.hpp"
#include "hopftrees/permutation.hpp"
#include "hopftrees/subset.hpp"

namespace hopftrees {

/// lambda: split at the position of the maximum value, standardize both sides, graft.
BinaryTree lambda(const Permutation& s);
/// gamma: the maximum of the lambda-fiber; gamma(t) = gamma(t_l) v gamma(t_r).
Permutation gamma(const BinaryTree& t);
/// gamma_: the minimum of the lambda-fiber; gamma_(t) = gamma_(t_l) v_ gamma_(t_r).
Permutation gamma_min(const BinaryTree& t);
/// rho: like lambda but splitting at the first global descent (or at n when there is none).
BinaryTree rho(const Permutation& s);

/// Z(S) = id_{p1} \ id_{p2-p1} \ ... for S = {p1 < p2 < ...} in [n-1].
Permutation Z_map(const Subset& s, int n);
/// C(S) = 1_{p1} \ 1_{p2-p1} \ ...
BinaryTree C_map(const Subset& s, int n);

/// r|_R = lambda(gamma(r)|_R).
BinaryTree restrict_tree(const BinaryTree& r, const Subset& sel);

/// One step of the 132-pattern reduction used to show gamma(t) is the minimum of the rho-fiber:
/// pick a 132-pattern i<j<k with s(k) maximal, then s(j) minimal, and swap the values s(k) and s(k)+1.
/// Returns nullopt when s is 132-avoiding. The result is covered by s in the weak order.
std::optional<Permutation> rho_descent_step(const Permutation& s);

}  // namespace hopftrees
