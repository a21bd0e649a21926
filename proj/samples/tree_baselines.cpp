// Expected mean hierarchical distance over all rooted trees of a given
// size, exactly and by sampling.

#include <iostream>

#include "deptree/deptree.hpp"

int main(int argc, char** argv) {
  using namespace deptree;
  const std::size_t n = argc > 1 ? std::stoul(argv[1]) : 8;

  EstimationOptions exact;
  const auto e = estimate_over_trees(unlabeled_rooted, n, "MHD", exact);
  std::cout << "unlabeled rooted trees, n = " << n << ": " << e.samples << " trees, mean MHD = "
            << to_exact_string(*e.exact_mean) << " (" << e.mean << ")\n";

  EstimationOptions mc;
  mc.mode = EstimationMode::monte_carlo;
  mc.samples = 20000;
  mc.seed = 42;
  const auto m = estimate_over_trees(unlabeled_rooted, n, "MHD", mc);
  std::cout << "sampled: " << m.mean << " +/- " << m.std_error << "\n";
}
