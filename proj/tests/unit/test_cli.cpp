#include <doctest.h>

#include <set>
#include <sstream>

#include "hopftrees/cli.hpp"

using hopftrees::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string joined(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += x + " ";
    return s;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("golden expansions") {
        auto r = call({"product", "--algebra", "ysym", "--basis", "M", "(..)", "(..)"});
        CHECK(r.code == 0);
        CHECK(r.out == "hopf-trees/1\n1/1\tM_tree\t((..).)\n2/1\tM_tree\t(.(..))\n");
        r = call({"product", "--algebra", "ysym", "--basis", "M", "--route", "counting", "(..)", "(..)"});
        CHECK(r.out == "hopf-trees/1\n1/1\tM_tree\t((..).)\n2/1\tM_tree\t(.(..))\n");
        r = call({"product", "--algebra", "ssym", "--basis", "F", "p:1", "p:1"});
        CHECK(r.out == "hopf-trees/1\n1/1\tF_perm\tp:12\n1/1\tF_perm\tp:21\n");
        r = call({"coproduct", "--algebra", "nck", "(())"});
        CHECK(r.code == 0);
        CHECK(r.out.find("1/1\tforest⊗forest\t() ⊗ ()\n") != std::string::npos);
        r = call({"dims", "--what", "kernel", "--n", "4"});
        CHECK(r.out.find("a_4=9 b_4=5") != std::string::npos);
        r = call({"mobius", "--poset", "weak", "p:12", "p:21"});
        CHECK(r.code == 0);
        CHECK(r.out.find("-1") != std::string::npos);
    }

    TEST_CASE("exit codes") {
        CHECK(call({}).code == 2);
        CHECK(call({"--help"}).code == 0);
        CHECK(call({"product", "--algebra", "octonions", "p:1", "p:1"}).code == 2);
        const auto bad = call({"product", "--algebra", "ssym", "--basis", "F", "p:13", "p:1"});
        CHECK(bad.code == 2);
        CHECK(bad.err.rfind("error: ", 0) == 0);
        CHECK(call({"map", "no-such-map", "p:1"}).code == 2);
        CHECK(call({"mobius", "--poset", "weak", "p:21", "p:12"}).code == 2);
        CHECK(call({"verify", "--suite", "bogus"}).code == 2);
        CHECK(call({"verify", "--suite", "galois", "--max-n", "3"}).code == 0);
        // gamma is not the lower adjoint of lambda; the check fails and reports it.
        CHECK(call({"mobius", "--check", "galois", "--f", "gamma", "--g", "lambda", "--n", "3"}).code == 1);
        CHECK(call({"--workers", "0", "dims", "--what", "catalan", "--n", "3"}).code == 2);
    }

    TEST_CASE("output does not depend on the worker count") {
        for (const char* suite : {"hopf-axioms", "galois", "kernels", "product-routes"}) {
            const auto one = call({"--workers", "1", "verify", "--suite", suite, "--max-n", "4"});
            const auto three = call({"--workers", "3", "verify", "--suite", suite, "--max-n", "4"});
            CHECK(one.code == 0);
            CHECK(one.out == three.out);
        }
    }

    TEST_CASE("every bound operation runs from its example") {
        for (const auto& b : hopftrees::cli::operation_bindings()) {
            const auto r = call(b.example);
            CHECK_MESSAGE(r.code == 0, joined(b.example), r.err);
            CHECK(b.example.front() == b.subcommand);
        }
    }

    TEST_CASE("every public operation is reachable") {
        const std::vector<std::string> required = {
            "standardize", "inversions", "descents", "global_descents", "graft_perm", "graft_perm_under", "graft_tree",
            "gd_decompose", "avoids", "pi_R", "restrict_perm", "restrict_tree", "comb", "tree_concat_over",
            "tree_concat_under", "split_root", "progressive_decompose", "is_progressive", "left_leaf_set",
            "right_branch_set", "admissible_node_subsets", "prune", "tree_splits", "attach", "node_labeling", "reflect",
            "forest_to_tree", "tree_to_forest", "ladder", "forest_concat", "admissible_cuts", "unorder",
            "all_trees", "all_forests", "all_unordered_forests", "catalan", "lambda", "gamma", "gamma_min", "rho",
            "rho_descent_step", "Z_map", "C_map", "apply_map", "tamari_covers_up", "tamari_covers_down", "moebius",
            "compute_moebius_row", "check_galois", "check_order_preserving", "rota_transfer_check", "ssym_product_F",
            "ssym_coproduct_F", "ssym_product_M", "ssym_coproduct_M", "ssym_M_to_F", "ssym_F_to_M", "ysym_product_F",
            "ysym_coproduct_F", "ysym_product_M", "ysym_coproduct_M", "ysym_M_to_F", "ysym_F_to_M",
            "ysym_structure_constants", "f_zeta", "f_zeta_image", "lambda_phi_image", "qsym_product_M",
            "qsym_coproduct_M", "qsym_product_F", "qsym_coproduct_F", "qsym_M_to_F", "qsym_F_to_M", "nsym_product",
            "nsym_coproduct", "sym_product", "sym_coproduct", "lr_product_Mstar", "lr_coproduct_Mstar",
            "lr_coproduct_Mstar_by_pairing", "nck_product", "nck_coproduct", "ck_product", "ck_coproduct", "ck_unorder",
            "Phi", "Phi_inverse", "embed_nsym_nck", "embed_nsym_lr", "project_sym", "embed_sym_ck", "ysym_reflect",
            "nck_reflect", "qsym_reverse", "morphism_D", "morphism_Lambda", "morphism_L", "splitting_C",
            "splitting_Gamma", "splitting_Z", "antipode", "antipode_kappa", "antipode_ysym_M_explicit",
            "coradical_level", "grading", "primitives_basis", "grading_check", "hilbert_check",
            "hopf_kernel_basis_Lambda", "hopf_kernel_basis_L", "hopf_kernel_basis_D", "in_hopf_kernel",
            "kernel_dim_a", "kernel_dim_b", "kernel_nullity", "cocycle_Lambda", "cocycle_L", "cocycle_D",
            "cocycle_check", "run_suite"};
        std::set<std::string> bound;
        for (const auto& b : hopftrees::cli::operation_bindings()) bound.insert(b.operation);
        for (const auto& op : required) CHECK_MESSAGE(bound.count(op) == 1, op);
    }
}
