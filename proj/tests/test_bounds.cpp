#include <gtest/gtest.h>

#include <cmath>

#include "spectrachrome/bounds.hpp"
#include "spectrachrome/errors.hpp"
#include "spectrachrome/exact.hpp"

using namespace spectrachrome;

namespace {

struct Expected {
  const char* spec;
  int k;
  double inertial1, inertial2, ratio;
};

// Values reproduced independently with scipy's linprog on the same programs.
const Expected kTable[] = {
    {"cycle:6", 2, 3.0, 3.0, 3.0},
    {"petersen", 2, 10.0, 10.0, 10.0},
    {"prism:3", 2, 6.0, 6.0, 5.0},
    {"prism:4", 2, 4.0, 4.0, 4.0},
    {"prism:5", 2, 5.0, 5.0, 4.401492},
    {"prism:7", 2, 14.0 / 3.0, 14.0 / 3.0, 4.063585},
    {"cycle:6", 1, 2.0, 2.0, 2.0},
};

}  // namespace

TEST(Bounds, ReferenceValues) {
  for (const Expected& e : kTable) {
    const Graph g = generate_from_spec(e.spec);
    EXPECT_NEAR(inertial1_bound(g, e.k).raw_value, e.inertial1, 1e-6) << e.spec << " k=" << e.k;
    EXPECT_NEAR(inertial2_bound(g, e.k).raw_value, e.inertial2, 1e-6) << e.spec << " k=" << e.k;
    EXPECT_NEAR(ratio_bound(g, e.k).raw_value, e.ratio, 1e-5) << e.spec << " k=" << e.k;
  }
}

TEST(Bounds, WitnessesReproduceTheirValues) {
  for (const char* spec : {"cycle:6", "cycle:7", "petersen", "prism:5", "generalized_petersen:10,2", "hypercube:3",
                           "path:5", "complete_bipartite:2,3"}) {
    const Graph g = generate_from_spec(spec);
    for (int k = 1; k <= 3; ++k)
      for (BoundMethod m : kAllMethods) {
        const BoundReport r = compute_bound(g, k, m);
        if (!r.applicable) continue;
        const auto v = evaluate_witness(r, g);
        ASSERT_TRUE(v.has_value()) << spec << " " << to_string(m) << " k=" << k;
        EXPECT_NEAR(*v, r.raw_value, 1e-6) << spec << " " << to_string(m) << " k=" << k;
        EXPECT_EQ(r.integer_bound, integer_bound_from(r.raw_value));
      }
  }
}

TEST(Bounds, IntegerRounding) {
  EXPECT_EQ(integer_bound_from(3.0), 3);
  EXPECT_EQ(integer_bound_from(3.0 + 1e-9), 3);
  EXPECT_EQ(integer_bound_from(3.001), 4);
  EXPECT_EQ(integer_bound_from(4.6666), 5);
}

TEST(Bounds, Inertial2NeedsWalkRegularity) {
  const BoundReport r = inertial2_bound(generate_from_spec("path:3"), 2);
  EXPECT_FALSE(r.applicable);
  EXPECT_TRUE(inertial2_bound(generate_from_spec("path:3"), 1).applicable);
}

TEST(Bounds, C6SecondInertialIsThree) {
  const Graph c6 = generate_from_spec("cycle:6");
  const BoundReport r = inertial2_bound(c6, 2);
  ASSERT_TRUE(r.applicable);
  EXPECT_NEAR(r.raw_value, 3.0, 1e-9);
  const Spectrum s = eigendecompose(c6);
  double trace = 0.0;
  for (double lambda : s.eigenvalues) trace += r.witness(lambda);
  EXPECT_NEAR(trace, 0.0, 1e-6);
}

TEST(Bounds, TraceConditionIsNotRedundant) {
  // p(x) = x - 3/2 on C6 has one positive and five negative eigenvalues, giving
  // 1 + 5 = 6 > chi(C6) = 2, so the trace condition cannot be dropped.
  const Graph c6 = generate_from_spec("cycle:6");
  BoundOptions loose;
  loose.inertial2_trace_condition = false;
  const BoundReport dropped = inertial2_bound(c6, 1, loose);
  const BoundReport kept = inertial2_bound(c6, 1);
  EXPECT_NEAR(kept.raw_value, 2.0, 1e-9);
  EXPECT_GT(dropped.raw_value, chromatic_number_exact(c6).chi);
}

TEST(Bounds, InertiaBound) {
  EXPECT_DOUBLE_EQ(inertia_k1_bound(generate_from_spec("empty:3")).raw_value, 1.0);
  EXPECT_DOUBLE_EQ(inertia_k1_bound(generate_from_spec("complete:5")).raw_value, 5.0);
  EXPECT_DOUBLE_EQ(inertia_k1_bound(generate_from_spec("petersen")).raw_value, 2.5);
}

TEST(Bounds, Hoffman) {
  EXPECT_DOUBLE_EQ(hoffman_bound(eigendecompose(generate_from_spec("empty:3"))), 1.0);
  EXPECT_NEAR(hoffman_bound(eigendecompose(generate_from_spec("petersen"))), 2.5, 1e-12);
  EXPECT_NEAR(hoffman_bound(eigendecompose(generate_from_spec("complete:6"))), 6.0, 1e-12);
}

TEST(Bounds, DisconnectedGraphsUseComponents) {
  const Graph c6 = generate_from_spec("cycle:6");
  std::vector<Edge> edges = c6.edges();
  for (const Edge& e : c6.edges()) edges.emplace_back(e.first + 6, e.second + 6);
  const Graph two = Graph::from_edges(12, edges);
  const BoundReport r = inertial2_bound(two, 2);
  ASSERT_TRUE(r.applicable);
  EXPECT_NEAR(r.raw_value, 3.0, 1e-9);
  EXPECT_EQ(r.component.size(), 6u);
  EXPECT_NEAR(*evaluate_witness(r, two), 3.0, 1e-9);
  EXPECT_NEAR(ratio_bound(two, 2).raw_value, 3.0, 1e-6);
}

TEST(Bounds, RatioNeedsTwoEigenvalues) {
  EXPECT_FALSE(ratio_bound(generate_from_spec("empty:4"), 1).applicable);
  EXPECT_THROW(ratio_bound(generate_from_spec("cycle:5"), 0), DomainError);
}

TEST(Bounds, MethodNames) {
  for (BoundMethod m : kAllMethods) EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_FALSE(parse_method("hoffman"));
}

TEST(Certify, SandwichClosesOnKnownFamilies) {
  for (auto [spec, k, chi] : {std::tuple{"cycle:6", 2, 3}, std::tuple{"petersen", 2, 10},
                              std::tuple{"generalized_petersen:8,3", 2, 4}}) {
    const Certificate c = certify(generate_from_spec(spec), k);
    EXPECT_EQ(c.chi_k_exact, chi) << spec;
    EXPECT_TRUE(c.certified) << spec;
    ASSERT_TRUE(c.quantum_value) << spec;
    EXPECT_EQ(*c.quantum_value, chi) << spec;
  }
  // Kneser(6,2) has chi = 4 while every spectral bound gives 3.
  const Certificate open = certify(generate_from_spec("kneser:6,2"), 1);
  EXPECT_FALSE(open.certified);
  EXPECT_EQ(open.chi_k_exact, 4);
  EXPECT_EQ(open.best_bound.integer_bound, 3);
  EXPECT_FALSE(open.quantum_value);
}
