#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dml/parallel.hpp"

using namespace dml;

TEST(Parallel, MapPreservesOrder) {
  for (unsigned threads : {1u, 2u, 5u, 16u}) {
    const auto out = parallel_map(37, Exec{threads}, [](std::size_t i) { return i * i; });
    ASSERT_EQ(out.size(), 37u);
    for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], i * i);
  }
  EXPECT_TRUE(parallel_map(0, Exec{4}, [](std::size_t i) { return i; }).empty());
}

TEST(Parallel, ExceptionsPropagate) {
  auto failing = [](std::size_t i) {
    if (i == 13) throw std::runtime_error("item 13");
    return i;
  };
  EXPECT_THROW(parallel_map(40, Exec{1}, failing), std::runtime_error);
  EXPECT_THROW(parallel_map(40, Exec{4}, failing), std::runtime_error);
}

TEST(Parallel, PairwiseSumIsFixedTree) {
  std::vector<double> values(1000);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = 1.0 / static_cast<double>(i + 1) * (i % 2 ? -1 : 1);
  const double once = pairwise_sum(values);
  for (unsigned threads : {1u, 3u, 8u}) {
    const auto copy = parallel_map(values.size(), Exec{threads}, [&](std::size_t i) { return values[i]; });
    EXPECT_EQ(pairwise_sum(copy), once);
  }
  EXPECT_NEAR(once, std::log(2.0), 1e-3);
  EXPECT_EQ(pairwise_sum(std::vector<double>{}), 0.0);
  EXPECT_EQ(pairwise_sum(std::vector<int>{1, 2, 3}), 6);
}
