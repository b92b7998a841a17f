#include <doctest.h>

#include <set>

#include "hopftrees/binary_tree.hpp"
#include "hopftrees/error.hpp"
#include "hopftrees/forest.hpp"
#include "hopftrees/maps.hpp"
#include "hopftrees/permutation.hpp"
#include "hopftrees/subset.hpp"
#include "oracles.hpp"

using namespace hopftrees;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
BinaryTree T(const char* s) { return BinaryTree::parse(s); }
}  // namespace

TEST_SUITE("combinat") {
    TEST_CASE("literals round-trip and reject malformed input") {
        CHECK(P("p:42351").str() == "p:42351");
        CHECK(Permutation::parse("p:1,2,3,4,5,6,7,8,10,9").size() == 10);
        CHECK(Permutation::identity(10).str() == "p:1,2,3,4,5,6,7,8,9,10");
        CHECK(T("((..).)").size() == 2);
        CHECK(Composition::parse("c:2,1").str() == "c:2,1");
        CHECK(Composition::parse("c:").degree() == 0);
        CHECK(Subset::parse("{1,3}", 4).str() == "{1,3}");
        CHECK(Forest::parse("() (())").size() == 3);
        CHECK(Forest::parse("\xE2\x88\x85").empty());
        CHECK_THROWS_AS(P("p:122"), parse_error);
        CHECK_THROWS_AS(P("421"), parse_error);
        CHECK_THROWS_AS(T("((..)"), parse_error);
        CHECK_THROWS_AS(Subset::parse("{5}", 4), parse_error);
        CHECK_THROWS_AS(Composition::parse("c:0"), parse_error);
    }

    TEST_CASE("standardize ranks values") {
        CHECK(standardize({5, 6, 4, 9, 7, 3}).str() == "p:342651");
        CHECK(standardize({1, 2, 3}).str() == "p:123");
        CHECK(standardize({}).size() == 0);
        CHECK_THROWS_AS(standardize({2, 2}), invalid_input);
    }

    TEST_CASE("inversions, descents and global descents agree with brute force") {
        std::set<std::pair<int, int>> inv;
        for (const auto& ij : inversions(P("p:42351"))) inv.insert(ij);
        CHECK(inv == std::set<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
        CHECK(descents(P("p:21")).str() == "{1}");
        CHECK(global_descents(P("p:564973812")).str() == "{7}");
        for (int n = 0; n <= 6; ++n)
            for (const auto& w : oracle::permutations(n)) {
                const Permutation s(w);
                std::set<std::pair<int, int>> got;
                for (const auto& ij : inversions(s)) got.insert(ij);
                REQUIRE(got == oracle::inversion_pairs(w));
                for (int p = 1; p < n; ++p) {
                    const auto pi = static_cast<std::size_t>(p);
                    CHECK(descents(s).contains(p) == (w[pi - 1] > w[pi]));
                    const bool gd = *std::min_element(w.begin(), w.begin() + p) > *std::max_element(w.begin() + p, w.end());
                    CHECK(global_descents(s).contains(p) == gd);
                }
            }
    }

    TEST_CASE("grafting and concatenation of permutations") {
        CHECK(graft_perm(P("p:1"), Permutation()).str() == "p:12");
        CHECK(graft_perm(Permutation(), P("p:1")).str() == "p:21");
        CHECK(graft_perm(P("p:231"), P("p:43512")).str() == "p:786943512");
        CHECK(concat_over(P("p:132"), concat_over(P("p:3412"), P("p:21"))).str() == "p:798563421");
        CHECK(concat_under(P("p:132"), concat_under(P("p:3412"), P("p:21"))).str() == "p:132674598");
        CHECK(concat_over(P("p:312"), Permutation()) == P("p:312"));
        CHECK(concat_under(Permutation(), P("p:312")) == P("p:312"));
    }

    TEST_CASE("global-descent decomposition") {
        // 798563421 = 132\3412\21 with 3412 = 12\12 and 21 = 1\1 further decomposable.
        std::vector<std::string> parts;
        for (const auto& c : gd_decompose(P("p:798563421"))) parts.push_back(c.str());
        CHECK(parts == std::vector<std::string>{"p:132", "p:12", "p:12", "p:1", "p:1"});
        CHECK(gd_decompose(P("p:123")) == std::vector<Permutation>{P("p:123")});
        CHECK(gd_decompose(P("p:21")) == std::vector<Permutation>{P("p:1"), P("p:1")});
        CHECK(gd_decompose(Permutation()).empty());
        for (int n = 1; n <= 6; ++n)
            for (const auto& s : all_permutations(n)) {
                Permutation back;
                for (const auto& c : gd_decompose(s)) {
                    CHECK(global_descents(c).empty());
                    back = concat_over(back, c);
                }
                REQUIRE(back == s);
            }
    }

    TEST_CASE("pattern avoidance") {
        CHECK(avoids(P("p:43512"), "132"));
        CHECK_FALSE(avoids(P("p:132"), "132"));
        CHECK_THROWS_AS(avoids(P("p:132"), "321"), invalid_input);
        for (int n = 0; n <= 7; ++n) {
            long long a132 = 0, both = 0;
            for (const auto& w : oracle::permutations(n)) {
                const Permutation s(w);
                REQUIRE(avoids(s, "132") == !oracle::contains_pattern(w, {1, 3, 2}));
                REQUIRE(avoids(s, "213") == !oracle::contains_pattern(w, {2, 1, 3}));
                a132 += avoids(s, "132");
                both += avoids(s, "132") && avoids(s, "213");
            }
            CHECK(a132 == oracle::catalan(n));
            CHECK(both == (n == 0 ? 1 : 1LL << (n - 1)));
        }
    }

    TEST_CASE("restriction and pi_R") {
        CHECK(pi_R(Subset::parse("{1,3}", 4), 4).str() == "p:1324");
        const Permutation r = P("p:3142");
        CHECK(restrict_perm(r, Subset::full(4)) == r);
        CHECK(restrict_tree(T("((..).)"), Subset(2)).is_leaf());
    }

    TEST_CASE("binary tree basics") {
        CHECK(comb(2).str() == "((..).)");
        CHECK(graft_tree(BinaryTree(), BinaryTree()).str() == "(..)");
        CHECK(split_root(comb(3)) == std::pair{comb(2), BinaryTree()});
        CHECK_THROWS_AS(split_root(BinaryTree()), invalid_input);
        CHECK(tree_concat_over(T("(..)"), T("(..)")).str() == "(.(..))");
        CHECK(tree_concat_over(T("((..).)"), BinaryTree()) == T("((..).)"));
        for (int n = 0; n <= 8; ++n) {
            const auto trees = all_trees(n);
            CHECK(static_cast<long long>(trees.size()) == oracle::catalan(n));
            CHECK(std::set<BinaryTree>(trees.begin(), trees.end()).size() == trees.size());
        }
    }

    TEST_CASE("progressive decomposition") {
        // comb(n) = comb(n-1) v | has an empty right branch, so it is its own single component;
        // the Tamari maximum (.(.(..))) is the chain 1\1\1.
        CHECK(progressive_decompose(comb(3)) == std::vector<BinaryTree>{comb(3)});
        CHECK(progressive_decompose(tamari_max(3)) == std::vector<BinaryTree>(3, T("(..)")));
        CHECK_FALSE(is_progressive(T("((..)(..))")));
        CHECK(progressive_decompose(BinaryTree()).empty());
        for (int n = 1; n <= 8; ++n) {
            long long prog = 0;
            for (const auto& t : all_trees(n)) {
                prog += is_progressive(t);
                BinaryTree back;
                for (const auto& c : progressive_decompose(t)) {
                    CHECK(is_progressive(c));
                    back = tree_concat_over(back, c);
                }
                REQUIRE(back == t);
            }
            CHECK(prog == oracle::catalan(n - 1));
        }
    }

    TEST_CASE("leaf and branch sets") {
        const BinaryTree t = lambda(P("p:67458231"));
        CHECK(right_branch_set(t).str() == "{5,7}");
        CHECK(left_leaf_set(t).str() == "{2,5,7}");
        for (int n = 1; n <= 6; ++n) CHECK(left_leaf_set(comb(n)).empty());
        // L(t) is the descent set of gamma(t).
        for (int n = 0; n <= 6; ++n)
            for (const auto& s : all_trees(n)) CHECK(left_leaf_set(s) == descents(gamma(s)));
    }

    TEST_CASE("admissible node subsets and pruning") {
        CHECK(prune(T("((..).)"), Subset(2)) == std::pair{BinaryTree(), T("((..).)")});
        CHECK(prune(T("((..).)"), Subset::full(2)) == std::pair{T("((..).)"), BinaryTree()});
        const BinaryTree big = lambda(P("p:67458231"));
        for (int n = 0; n <= 6; ++n)
            for (const auto& t : all_trees(n)) {
                const NodeLabeling lab = node_labeling(t);
                // Oracle: S is admissible when it contains the whole left subtree of each of its nodes.
                auto subtree = [&](int x, auto&& self, Subset& acc) -> void {
                    if (x == 0) return;
                    acc.insert(x);
                    self(lab.left[static_cast<std::size_t>(x)], self, acc);
                    self(lab.right[static_cast<std::size_t>(x)], self, acc);
                };
                std::set<Subset> expected;
                for (const auto& s : all_subsets(n)) {
                    bool ok = true;
                    for (int x : s.members()) {
                        Subset below(n);
                        subtree(lab.left[static_cast<std::size_t>(x)], subtree, below);
                        ok = ok && below.is_subset_of(s);
                    }
                    if (ok) expected.insert(s);
                }
                const auto got = admissible_node_subsets(t);
                REQUIRE(std::set<Subset>(got.begin(), got.end()) == expected);
                for (const auto& s : got) {
                    const auto pr = prune(t, s);
                    CHECK(pr.first.size() == s.size());
                    CHECK(pr.second.size() == n - s.size());
                    CHECK(pr == prune_recursive(t, s));
                }
            }
        const auto subsets = admissible_node_subsets(big);
        CHECK(std::any_of(subsets.begin(), subsets.end(), [&](const Subset& s) { return s.size() == 5; }));
    }

    TEST_CASE("tree splits and attach") {
        CHECK(tree_splits(T("(..)"), 1).size() == 2);
        CHECK(attach({BinaryTree(), T("(..)")}, T("(..)")).str() == "(.(..))");
        CHECK_THROWS_AS(attach({BinaryTree()}, T("(..)")), invalid_input);
        for (int n = 0; n <= 4; ++n)
            for (int q = 0; q <= 3; ++q)
                for (const auto& t : all_trees(n)) {
                    const auto splits = tree_splits(t, q);
                    CHECK(static_cast<long long>(splits.size()) == oracle::binomial(n + q, q));
                    for (const auto& parts : splits) {
                        int total = 0;
                        for (const auto& p : parts) total += p.size();
                        CHECK(total == n);
                        CHECK(parts.size() == static_cast<std::size_t>(q + 1));
                    }
                }
    }

    TEST_CASE("reflection") {
        for (int n = 0; n <= 6; ++n) CHECK(reflect(comb(n)) == comb(n));
        CHECK(reflect(BinaryTree()).is_leaf());
        for (int n = 0; n <= 6; ++n)
            for (const auto& t : all_trees(n)) {
                CHECK(reflect(reflect(t)) == t);
                CHECK(reflect(t) == forest_to_tree(forest_reflect(tree_to_forest(t))));
            }
    }

    TEST_CASE("forests, ladders and phi") {
        CHECK(forest_to_tree(Forest::parse("()")).str() == "(..)");
        CHECK(forest_to_tree(Forest({ladder(2)})) == comb(2));
        for (int n = 1; n <= 7; ++n) CHECK(forest_to_tree(Forest({ladder(n)})) == comb(n));
        for (int n = 0; n <= 8; ++n) {
            const auto fs = all_forests(n);
            CHECK(static_cast<long long>(fs.size()) == oracle::catalan(n));
            std::set<BinaryTree> images;
            for (const auto& f : fs) {
                const BinaryTree t = forest_to_tree(f);
                CHECK(t.size() == n);
                images.insert(t);
                CHECK(tree_to_forest(t) == f);
            }
            CHECK(images.size() == fs.size());
        }
    }

    TEST_CASE("unordered forests") {
        CHECK(unorder(Forest::parse("(()())")) == unorder(Forest::parse("(()())")));
        CHECK(unorder(Forest::parse("((())())")) == unorder(Forest::parse("(()(()))")));
        CHECK(unorder(Forest({ladder(3)})) == Forest({ladder(3)}));
        const auto expected = oracle::rooted_forest_counts(7);
        CHECK(std::vector<long long>(expected.begin() + 1, expected.begin() + 5) == std::vector<long long>{1, 2, 4, 9});
        for (int n = 0; n <= 7; ++n) {
            std::set<Forest> canon;
            for (const auto& f : all_forests(n)) canon.insert(unorder(f));
            const auto listed = all_unordered_forests(n);
            CHECK(std::set<Forest>(listed.begin(), listed.end()) == canon);
            CHECK(static_cast<long long>(canon.size()) == expected[static_cast<std::size_t>(n)]);
        }
    }
}
