#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "deptree/deptree.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Edges edges_of(const deptree::FreeTree& t) {
  oracle::Edges e;
  for (const auto& x : t.edges()) e.emplace_back(static_cast<int>(x.u), static_cast<int>(x.v));
  return e;
}

inline oracle::Edges edges_of(const deptree::RootedTree& t) { return edges_of(t.free()); }

inline oracle::Positions positions_of(const deptree::Arrangement& a) {
  oracle::Positions p(a.size() + 1, 0);
  for (deptree::Vertex v = 1; v <= a.size(); ++v) p[v] = static_cast<int>(a.position(v));
  return p;
}

inline deptree::Arrangement arrangement_of(const oracle::Positions& p) {
  std::vector<deptree::Position> pos(p.begin() + 1, p.end());
  return deptree::Arrangement::from_positions(pos);
}

inline deptree::Rational rational(long num, long den = 1) { return deptree::Rational(num, den); }

inline std::vector<int> heads_of(const deptree::RootedTree& t) {
  const auto hv = t.to_head_vector();
  return {hv.values().begin(), hv.values().end()};
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path temp_dir(const std::string& name) {
  static std::mt19937_64 gen(std::random_device{}());
  auto dir = std::filesystem::temp_directory_path() / ("deptree_test_" + name + "_" + std::to_string(gen()));
  std::filesystem::create_directories(dir);
  return dir;
}

inline void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(DEPTREE_TEST_FIXTURES) / name;
}

/// Random labeled tree of the given size, uniformly rooted.
inline deptree::RootedTree random_tree(deptree::Rng& rng, std::size_t n) {
  return deptree::random_rooted_tree(deptree::labeled_rooted, n, rng);
}

inline deptree::Arrangement random_order(deptree::Rng& rng, std::size_t n) {
  return deptree::random_arrangement(deptree::path_tree(n), deptree::Constraint::unconstrained, rng);
}

// Head vectors of the worked example sentences.
inline constexpr const char* crossing_sentence = "2 3 0 3 2 7 5 4 3";
inline constexpr const char* projective_sentence = "3 3 0 5 3 7 5 10 10 7";

}  // namespace support
