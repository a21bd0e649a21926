#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deptree/error.hpp"
#include "deptree/graphs.hpp"
#include "deptree/linarr.hpp"
#include "deptree/numeric.hpp"
#include "deptree/properties.hpp"

namespace deptree {

/// A named per-tree measure. `compute` returns nothing when the measure is
/// undefined for the tree (for instance hubiness below four vertices).
struct Feature {
  std::string name;
  std::string description;
  bool integer = true;                 // values are always whole numbers
  bool arrangement_dependent = false;  // depends on word order
  bool rooted = false;                 // needs the root or edge directions
  bool default_enabled = true;
  std::function<std::optional<Rational>(const RootedTree&, const Arrangement&)> compute;
};

namespace detail {

using Value = std::optional<Rational>;

inline Rational flag(bool b) { return Rational(b ? 1 : 0); }

inline std::vector<Feature> make_features() {
  std::vector<Feature> f;
  auto add = [&f](std::string name, std::string description, bool integer, bool arrangement_dependent, bool rooted,
                  auto compute, bool default_enabled = true) {
    f.push_back({std::move(name), std::move(description), integer, arrangement_dependent, rooted, default_enabled,
                 std::move(compute)});
  };
  using T = const RootedTree&;
  using A = const Arrangement&;

  add("n", "number of vertices", true, false, false, [](T t, A) -> Value { return Rational(t.num_vertices()); });
  add("D", "sum of edge lengths", true, true, false,
      [](T t, A a) -> Value { return Rational(sum_edge_lengths(t, a)); });
  add("C", "number of edge crossings", true, true, false,
      [](T t, A a) -> Value { return Rational(num_crossings(t, a)); });
  add("head_initial_ratio", "proportion of edges whose head precedes the dependent", false, true, true,
      [](T t, A a) -> Value {
        if (t.num_vertices() < 2) return std::nullopt;
        return head_initial_ratio(t, a);
      });
  add("is_projective", "1 if the arrangement is projective", true, true, true,
      [](T t, A a) -> Value { return flag(is_projective(t, a)); });
  add("is_planar", "1 if the arrangement has no crossings", true, true, false,
      [](T t, A a) -> Value { return flag(is_planar(t.free(), a)); });
  add("is_1ec", "1 if the arrangement is 1-endpoint-crossing", true, true, false,
      [](T t, A a) -> Value { return flag(is_one_endpoint_crossing(t.free(), a)); });

  auto flux_stat = [](bool weight, bool mean) {
    return [weight, mean](T t, A a) -> Value {
      if (t.num_vertices() < 2) return std::nullopt;
      const auto fx = flux(t, a);
      const auto& v = weight ? fx.weight : fx.size;
      if (!mean) return Rational(*std::max_element(v.begin(), v.end()));
      std::uint64_t sum = 0;
      for (auto x : v) sum += x;
      return Rational(BigInt(sum), BigInt(v.size()));
    };
  };
  add("flux_max_size", "largest number of edges spanning a gap", true, true, false, flux_stat(false, false));
  add("flux_max_weight", "largest flux weight over gaps", true, true, false, flux_stat(true, false));
  add("flux_mean_size", "mean number of edges spanning a gap", false, true, false, flux_stat(false, true));
  add("flux_mean_weight", "mean flux weight over gaps", false, true, false, flux_stat(true, true));

  add("MHD", "mean hierarchical distance", false, false, true, [](T t, A) -> Value {
    if (t.num_vertices() < 2) return std::nullopt;
    return mean_hierarchical_distance(t);
  });
  add("hubiness", "hubiness coefficient", false, false, false, [](T t, A) -> Value {
    if (t.num_vertices() < 4) return std::nullopt;
    return hubiness(t.free());
  });
  add("Q", "number of pairs of independent edges", true, false, false,
      [](T t, A) -> Value { return Rational(num_independent_edge_pairs(t.free())); });
  add("k2", "second moment of degree", false, false, false,
      [](T t, A) -> Value { return degree_moment(t.free(), 2); });
  add("k3", "third moment of degree", false, false, false,
      [](T t, A) -> Value { return degree_moment(t.free(), 3); });
  add("k2_out", "second moment of out-degree", false, false, true,
      [](T t, A) -> Value { return degree_moment(t, 2, DegreeKind::out); });
  add("k3_out", "third moment of out-degree", false, false, true,
      [](T t, A) -> Value { return degree_moment(t, 3, DegreeKind::out); });

  add("D_min_projective", "minimum D over projective arrangements", true, false, true,
      [](T t, A) -> Value { return Rational(min_D_projective(t).value); });
  add("D_min_planar", "minimum D over planar arrangements", true, false, false,
      [](T t, A) -> Value { return Rational(min_D_planar(t.free()).value); });
  add("ED_unconstrained", "expected D over all arrangements", false, false, false, [](T t, A) -> Value {
    if (t.num_vertices() < 2) return std::nullopt;
    return expected_D_unconstrained(t.num_vertices());
  });
  add("EC_unconstrained", "expected C over all arrangements", false, false, false, [](T t, A) -> Value {
    if (t.num_vertices() < 2) return std::nullopt;
    return expected_C_unconstrained(t.free());
  });

  auto shape = [](bool TreeShapeFlags::*member) {
    return [member](T t, A) -> Value { return flag(tree_shape(t.free()).*member); };
  };
  add("is_linear", "1 if the tree is a path", true, false, false, shape(&TreeShapeFlags::linear));
  add("is_star", "1 if the tree is a star", true, false, false, shape(&TreeShapeFlags::star));
  add("is_quasistar", "1 if the tree is a quasistar", true, false, false, shape(&TreeShapeFlags::quasistar));
  add("is_bistar", "1 if the tree is a bistar", true, false, false, shape(&TreeShapeFlags::bistar));
  add("is_caterpillar", "1 if the tree is a caterpillar", true, false, false,
      shape(&TreeShapeFlags::caterpillar));
  add("is_spider", "1 if the tree is a spider", true, false, false, shape(&TreeShapeFlags::spider));

  add(
      "D_min_unconstrained", "minimum D over all arrangements", true, false, false,
      [](T t, A) -> Value { return Rational(min_D_unconstrained(t.free()).value); }, false);
  return f;
}

}  // namespace detail

/// Every registered feature, in canonical column order.
inline const std::vector<Feature>& feature_registry() {
  static const std::vector<Feature> registry = detail::make_features();
  return registry;
}

inline const Feature& find_feature(std::string_view name) {
  for (const auto& f : feature_registry()) {
    if (f.name == name) return f;
  }
  throw Error(ErrorCode::UnknownMetric, "unknown feature '" + std::string(name) + "'");
}

inline std::vector<std::string> feature_names(bool defaults_only = false) {
  std::vector<std::string> names;
  for (const auto& f : feature_registry()) {
    if (!defaults_only || f.default_enabled) names.push_back(f.name);
  }
  return names;
}

/// Ordered, duplicate-free list of registered features.
class FeatureSpec {
public:
  FeatureSpec() : FeatureSpec(feature_names(true)) {}

  explicit FeatureSpec(const std::vector<std::string>& names) {
    if (names.empty()) throw Error(ErrorCode::InvalidArgument, "feature list is empty");
    for (const auto& name : names) {
      const Feature& f = find_feature(name);
      if (std::find(features_.begin(), features_.end(), &f) != features_.end()) {
        throw Error(ErrorCode::InvalidArgument, "feature '" + name + "' listed twice");
      }
      features_.push_back(&f);
    }
  }

  /// Comma-separated names, e.g. "n,D,C".
  static FeatureSpec parse(std::string_view list) {
    std::vector<std::string> names;
    std::size_t start = 0;
    while (start <= list.size()) {
      const auto comma = list.find(',', start);
      const auto end = comma == std::string_view::npos ? list.size() : comma;
      std::string_view item = list.substr(start, end - start);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      if (!item.empty()) names.emplace_back(item);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return FeatureSpec(names);
  }

  const std::vector<const Feature*>& features() const noexcept { return features_; }
  std::size_t size() const noexcept { return features_.size(); }

private:
  std::vector<const Feature*> features_;
};

}  // namespace deptree
