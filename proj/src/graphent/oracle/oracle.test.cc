#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "graphent/graph/solvers.h"
#include "graphent/oracle/brute.h"
#include "graphent/oracle/dense.h"
#include "graphent/stabilizer/stabilizer_group.h"
#include "graphent/test_graphs.h"

using namespace graphent;
using namespace graphent::oracle;
using graphent::testing::double_star_graph;

TEST(oracle, statevector_small) {
    DenseState p2 = statevector(path_graph(2));
    DenseState want(4);
    want << 0.5, 0.5, 0.5, -0.5;
    EXPECT_LT((p2 - want).cwiseAbs().maxCoeff(), 1e-15);

    DenseState one = statevector(Graph(1));
    EXPECT_NEAR(one[0].real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(one[1].real(), 1 / std::sqrt(2.0), 1e-15);

    DenseState ds = statevector(double_star_graph());
    for (Eigen::Index i = 0; i < ds.size(); i++) {
        EXPECT_NEAR(std::abs(ds[i]), 0.125, 1e-15);
    }
    EXPECT_THROW(statevector(path_graph(15)), std::invalid_argument);
}

TEST(oracle, graph_basis_is_orthonormal) {
    for (int n = 1; n <= 4; n++) {
        Graph g = path_graph(n);
        for (uint64_t k = 0; k < (uint64_t{1} << n); k++) {
            for (uint64_t l = 0; l < (uint64_t{1} << n); l++) {
                Complex ip = graph_basis_state(g, VertexSet(k)).dot(graph_basis_state(g, VertexSet(l)));
                EXPECT_NEAR(std::abs(ip), k == l ? 1.0 : 0.0, 1e-12);
            }
        }
    }
    DenseState zk = graph_basis_state(path_graph(2), VertexSet::of({0}));
    DenseState want(4);
    want << 0.5, 0.5, -0.5, 0.5;
    EXPECT_LT((zk - want).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(oracle, pauli_dense_basics) {
    EXPECT_LT(max_abs_diff(pauli_dense(PauliOperator::identity(3)), DenseDensity::Identity(8, 8)), 1e-15);
    DenseDensity xzi = pauli_dense(PauliOperator::from_string("XZI"));
    EXPECT_EQ(xzi.rows(), 8);
    // X on qubit 1 flips the most significant bit.
    EXPECT_NEAR(xzi(4, 0).real(), 1.0, 1e-15);
    EXPECT_NEAR(xzi(6, 2).real(), -1.0, 1e-15);
}

TEST(oracle, stabilizer_projector_identity) {
    for (int n = 1; n <= 6; n++) {
        std::mt19937_64 rng(n);
        for (int trial = 0; trial < 6; trial++) {
            Graph g = random_connected_graph(n, 0.5, rng);
            DenseState psi = statevector(g);
            StabilizerGroup s = generators_from_graph(g);
            DenseDensity sum = DenseDensity::Zero(psi.size(), psi.size());
            for (const auto &p : s.elements()) {
                sum += pauli_dense(p);
            }
            sum /= static_cast<double>(psi.size());
            ASSERT_LT(max_abs_diff(sum, projector(psi)), 1e-12);
            for (const auto &gen : s.generators) {
                ASSERT_LT((pauli_dense(gen) * psi - psi).cwiseAbs().maxCoeff(), 1e-12);
            }
        }
    }
}

TEST(oracle, relative_entropy) {
    DenseState p2 = statevector(path_graph(2));
    DenseDensity omega = 0.5 * (projector(product_state_vector(ProductStabilizerState::from_string("+0"))) +
                                projector(product_state_vector(ProductStabilizerState::from_string("-1"))));
    EXPECT_NEAR(relative_entropy_pure(p2, omega).bits, 1.0, 1e-12);
    EXPECT_NEAR(relative_entropy_pure(p2, projector(p2)).bits, 0.0, 1e-12);
    for (int n = 1; n <= 5; n++) {
        DenseState psi = statevector(cycle_graph(n));
        DenseDensity mixed = DenseDensity::Identity(psi.size(), psi.size()) / static_cast<double>(psi.size());
        EXPECT_NEAR(relative_entropy_pure(psi, mixed).bits, n, 1e-12);
    }
    RelativeEntropy bad =
        relative_entropy_pure(p2, projector(product_state_vector(ProductStabilizerState::from_string("00"))));
    EXPECT_TRUE(std::isinf(bad.bits));
    EXPECT_FALSE(bad.diagnostic.empty());
}

TEST(oracle, overlaps) {
    EXPECT_NEAR(overlap2(statevector(double_star_graph()), ProductStabilizerState::from_string("++++00")), 0.25, 1e-12);
    EXPECT_NEAR(overlap2(statevector(path_graph(2)), ProductStabilizerState::from_string("+0")), 0.5, 1e-12);
    EXPECT_NEAR(overlap2(statevector(path_graph(3)), ProductStabilizerState::from_string("+0+")), 0.5, 1e-12);

    DenseState product = product_state_vector(ProductStabilizerState::from_string("+0i-"));
    EXPECT_NEAR(best_product_overlap(product, 4, 5, 50, 1), 1.0, 1e-9);
    EXPECT_NEAR(best_product_overlap(statevector(path_graph(2)), 2, 20, 100, 1), 0.5, 1e-9);
    double ds = best_product_overlap(statevector(double_star_graph()), 6, 200, 100, 1);
    EXPECT_LE(ds, 0.25 + 1e-9);
    EXPECT_GE(ds, 0.25 - 1e-9);
}

TEST(oracle, reduced_entropy_equals_cut_rank) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 80; trial++) {
        int n = 2 + trial % 6;
        Graph g = random_connected_graph(n, 0.5, rng);
        DenseState psi = statevector(g);
        VertexSet a(1 + rng() % (low_mask(n) - 1));
        ASSERT_NEAR(reduced_entropy(psi, n, a), cut_rank(g, a), 1e-9);
    }
    EXPECT_NEAR(reduced_entropy(statevector(path_graph(2)), 2, VertexSet::of({0})), 1.0, 1e-12);
    DenseState product = product_state_vector(ProductStabilizerState::from_string("+01"));
    EXPECT_NEAR(reduced_entropy(product, 3, VertexSet::of({1})), 0.0, 1e-12);
    EXPECT_NEAR(reduced_entropy(statevector(double_star_graph()), 6, VertexSet::of({0, 2, 4})), 2.0, 1e-9);
}

TEST(oracle, brute_force_references) {
    EXPECT_EQ(brute_mis(double_star_graph()).size, 4);
    EXPECT_EQ(brute_matching(double_star_graph()), 2);
    EXPECT_EQ(brute_mis(complete_graph(5)).size, 1);
    EXPECT_EQ(brute_matching(complete_graph(5)), 2);
    BruteOrbit p3 = brute_orbit(path_graph(3));
    EXPECT_EQ(p3.min_matching, 1);
    EXPECT_EQ(p3.min_vertex_cover, 1);
    EXPECT_NE(std::find(p3.members.begin(), p3.members.end(), complete_graph(3)), p3.members.end());
    EXPECT_EQ(all_connected_graphs(3).size(), 4u);
    EXPECT_EQ(all_connected_graphs(4).size(), 38u);
    EXPECT_EQ(all_connected_graphs(6).size(), 26704u);
}
