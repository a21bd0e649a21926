// Minimum sum of edge lengths of a tree under three constraints, with a
// witness order for each.

#include <iostream>

#include "deptree/deptree.hpp"

int main(int argc, char** argv) {
  using namespace deptree;
  const std::string text = argc > 1 ? argv[1] : "3 3 0 5 3 7 5 10 10 7";
  const RootedTree t = from_head_vector(text);

  auto show = [](const char* label, const MinArrangementResult& r) {
    std::cout << label << ": D = " << r.value << ", order:";
    for (Vertex v : r.arrangement.order()) std::cout << ' ' << v;
    std::cout << "\n";
  };
  show("unconstrained", min_D_unconstrained(t.free()));
  show("planar       ", min_D_planar(t.free()));
  show("projective   ", min_D_projective(t));
  std::cout << "observed D = " << sum_edge_lengths(t, Arrangement::identity(t.num_vertices())) << "\n";
}
