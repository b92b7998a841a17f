#include <doctest.h>

#include "hopftrees/algebra.hpp"
#include "hopftrees/error.hpp"
#include "hopftrees/lr.hpp"
#include "hopftrees/qsym.hpp"
#include "hopftrees/ysym.hpp"

using namespace hopftrees;

namespace {
BinaryTree T(const char* s) { return BinaryTree::parse(s); }
Forest ladders(std::initializer_list<int> ns) {
    std::vector<OrderedTree> ts;
    for (int n : ns) ts.push_back(ladder(n));
    return Forest(ts);
}
}  // namespace

TEST_SUITE("lr") {
    TEST_CASE("dual tree algebra") {
        const BinaryTree one = T("(..)");
        CHECK(lr_product_Mstar(one, one) == Vect<BinaryTree>(tree_concat_over(one, one)));
        Tensor<BinaryTree> d;
        d.add({BinaryTree(), one}, 1);
        d.add({one, BinaryTree()}, 1);
        for (auto r : {CoproductRoute::dualize, CoproductRoute::admissible, CoproductRoute::intermediate}) CHECK(lr_coproduct_Mstar(one, r) == d);
        CHECK_THROWS_AS(parse_coproduct_route("sideways"), invalid_input);
        for (int n = 0; n <= 4; ++n)
            for (const auto& r : all_trees(n)) {
                const auto a = lr_coproduct_Mstar(r, CoproductRoute::admissible);
                CHECK(lr_coproduct_Mstar(r, CoproductRoute::dualize) == a);
                CHECK(lr_coproduct_Mstar(r, CoproductRoute::intermediate) == a);
                CHECK(lr_coproduct_Mstar_by_pairing(r) == a);
            }
    }

    TEST_CASE("pairing with the M basis") {
        // <Delta M*_r, M_s (x) M_t> = <M*_r, M_s M_t> computed straight from products.
        for (int p = 0; p <= 2; ++p)
            for (int q = 0; p + q <= 4; ++q)
                for (const auto& s : all_trees(p))
                    for (const auto& t : all_trees(q))
                        for (const auto& [r, c] : ysym_product_M(s, t)) CHECK(lr_coproduct_Mstar(r).coefficient({s, t}) == c);
    }

    TEST_CASE("forests") {
        Tensor<Forest> d;
        d.add({ladders({2}), Forest()}, 1);
        d.add({ladders({1}), ladders({1})}, 1);
        d.add({Forest(), ladders({2})}, 1);
        CHECK(nck_coproduct(ladders({2})) == d);
        CHECK(nck_product(ladders({1}), ladders({2})) == Vect<Forest>(ladders({1, 2})));
        CHECK(embed_nsym_nck(Vect<Composition>(Composition({2, 1}))) == Vect<Forest>(ladders({2, 1})));
        for (int n = 1; n <= 5; ++n) {
            Tensor<Forest> expect;
            for (int i = 0; i <= n; ++i) expect.add({i ? ladders({i}) : Forest(), i < n ? ladders({n - i}) : Forest()}, 1);
            CHECK(nck_coproduct(ladders({n})) == expect);
        }
    }

    TEST_CASE("Phi") {
        CHECK(Phi(Vect<Forest>(Forest::parse("()"))) == Vect<BinaryTree>(T("(..)")));
        for (int n = 0; n <= 4; ++n)
            for (const auto& f : all_forests(n)) {
                CHECK(Phi(Vect<Forest>(f)) == Vect<BinaryTree>(forest_to_tree(f)));
                CHECK(Phi_inverse(Phi(Vect<Forest>(f))) == Vect<Forest>(f));
                for (int m = 0; n + m <= 4; ++m)
                    for (const auto& g : all_forests(m))
                        CHECK(Phi(nck_product(f, g)) == lr_product_Mstar(forest_to_tree(f), forest_to_tree(g)));
            }
        for (int n = 0; n <= 4; ++n)
            for (const auto& a : all_compositions(n)) CHECK(Phi(embed_nsym_nck(Vect<Composition>(a))) == embed_nsym_lr(Vect<Composition>(a)));
    }

    TEST_CASE("reflections") {
        for (int n = 0; n <= 4; ++n) {
            for (const auto& f : all_forests(n)) CHECK(nck_reflect(nck_reflect(Vect<Forest>(f))) == Vect<Forest>(f));
            for (const auto& t : all_trees(n)) CHECK(ysym_reflect(ysym_reflect(Vect<BinaryTree>(t))) == Vect<BinaryTree>(t));
            for (const auto& a : all_compositions(n)) CHECK(qsym_reverse(qsym_reverse(Vect<Composition>(a))) == Vect<Composition>(a));
        }
    }

    TEST_CASE("unordered forests") {
        for (int n = 1; n <= 5; ++n) CHECK(ck_unorder(Vect<Forest>(ladders({n}))) == Vect<Forest>(ladders({n})));
        CHECK(embed_sym_ck(Vect<Partition>(Partition::parse("h:3"))) == Vect<Forest>(ladders({3})));
        CHECK(project_sym(Vect<Composition>(Composition({1, 2}))) == Vect<Partition>(Partition::parse("h:2,1")));
        const Forest a = Forest::parse("(()) ()"), b = Forest::parse("() (())");
        CHECK(ck_product(unorder(a), unorder(Forest())) == Vect<Forest>(unorder(a)));
        CHECK(ck_unorder(Vect<Forest>(a)) == ck_unorder(Vect<Forest>(b)));
        for (int n = 0; n <= 4; ++n)
            for (const auto& f : all_forests(n))
                CHECK(tensor_map(nck_coproduct(f), [](const Forest& x) { return ck_unorder(Vect<Forest>(x)); },
                                 [](const Forest& x) { return ck_unorder(Vect<Forest>(x)); }) == ck_coproduct(unorder(f)));
    }
}
