// Measures one sentence given as a head vector on the command line.
//   sample_analyze_sentence "2 3 0 3 2 7 5 4 3"

#include <iostream>

#include "deptree/deptree.hpp"

int main(int argc, char** argv) {
  using namespace deptree;
  const std::string text = argc > 1 ? argv[1] : "2 3 0 3 2 7 5 4 3";
  try {
    const RootedTree t = from_head_vector(text);
    const Arrangement order = Arrangement::identity(t.num_vertices());
    for (const Feature& f : feature_registry()) {
      const auto v = f.compute(t, order);
      std::cout << f.name << " = " << (v ? to_exact_string(*v) : "undefined") << "\n";
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
