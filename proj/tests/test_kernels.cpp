#include "multideg/engine.hpp"
#include "multideg/kernels.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace multideg;

TEST(Kernels, SerialAndParallelAgree) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    auto inst = oracle::random_isobaric(rng, n, n - 1, 2 + trial % 5);
    ExponentMatrix m(inst.rows);
    auto pts = m.translated_points();
    EXPECT_EQ(kernels::serial::vertex_flags(pts), kernels::parallel::vertex_flags(pts));

    auto simplices = newton_triangulation(m).triangulation.simplices;
    auto ring = make_problem_ring(n);
    EXPECT_EQ(kernels::serial::integral_terms(simplices, ring, n - 1),
              kernels::parallel::integral_terms(simplices, ring, n - 1));
    EXPECT_EQ(kernels::serial::segre_terms(simplices, ring, n - 1),
              kernels::parallel::segre_terms(simplices, ring, n - 1));

    kernels::IntMatrix a(n, std::vector<Integer>(n));
    std::uniform_int_distribution<int> e(-3, 3);
    for (auto& r : a) {
      for (auto& x : r) x = e(rng);
    }
    auto minors = kernels::parallel::principal_minors(a);
    EXPECT_EQ(kernels::serial::principal_minors(a), minors);
    ASSERT_EQ(minors.size(), std::size_t{1} << n);
    EXPECT_EQ(minors[0], oracle::leibniz_det(a));
    EXPECT_EQ(minors.back(), 1);
  }
}

TEST(Kernels, EmptyInputs) {
  auto ring = make_problem_ring(2);
  EXPECT_TRUE(kernels::parallel::integral_terms({}, ring, 1).empty());
  EXPECT_TRUE(kernels::parallel::vertex_flags({}).empty());
  EXPECT_GE(kernels::max_threads(), 1);
}
