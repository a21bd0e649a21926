// deptree: command-line front end for the deptree library.
//
// Exit status: 0 success, 1 input/output failure, 2 usage error,
// 3 trees not isomorphic (isomorphic subcommand only).

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "deptree/deptree.hpp"

namespace {

using namespace deptree;

constexpr const char* version_string = "deptree 0.1.0";

constexpr int exit_ok = 0;
constexpr int exit_io = 1;
constexpr int exit_usage = 2;
constexpr int exit_not_isomorphic = 3;

/// Thrown for invalid flag values or combinations detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::UnknownMetric:
    case ErrorCode::InvalidArgument:
    case ErrorCode::KindMismatch:
    case ErrorCode::EnsembleTooLarge:
    case ErrorCode::SizeLimitExceeded: return exit_usage;
    default: return exit_io;
  }
}

ErrorPolicy parse_policy(const std::string& s) {
  if (s == "fail_fast") return ErrorPolicy::fail_fast;
  if (s == "skip_and_report") return ErrorPolicy::skip_and_report;
  throw UsageError("unknown error policy '" + s + "' (expected fail_fast or skip_and_report)");
}

FeatureSpec parse_features(const std::string& list) {
  if (list.empty()) return FeatureSpec();
  try {
    return FeatureSpec::parse(list);
  } catch (const Error& e) {
    std::ostringstream msg;
    msg << e.what() << "\nregistered features:";
    for (const auto& f : feature_registry()) {
      msg << "\n  " << f.name << (f.default_enabled ? "" : " (opt-in)") << "  " << f.description;
    }
    throw UsageError(msg.str());
  }
}

void print_skips(const std::vector<SkippedLine>& skipped, const std::string& source) {
  for (const auto& s : skipped) std::cerr << source << ": skipped: " << s.message << "\n";
}

void print_report(const ProcessingReport& r) {
  print_skips(r.skipped, r.input.string());
  std::cerr << r.input.string() << ": " << r.processed << " processed, " << r.skipped.size() << " skipped, "
            << r.elapsed_seconds << " s -> " << r.output.string() << "\n";
}

std::string edge_list(const FreeTree& t) {
  std::string s;
  for (const Edge& e : t.edges()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return s;
}

RootedTree read_tree_arg(const std::string& text) {
  try {
    return from_head_vector(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--tree: ") + e.what());
  }
}

std::vector<RootedTree> read_tree_file(const std::string& path) {
  std::vector<RootedTree> trees;
  TreebankReader reader(path, ErrorPolicy::fail_fast);
  TreebankRecord r;
  while (reader.next(r)) trees.push_back(RootedTree::from_head_vector(*r.heads));
  return trees;
}

// --- subcommands ---------------------------------------------------------

struct AnalyzeArgs {
  std::string input, output, features, policy = "skip_and_report";
  unsigned threads = 0;
  bool exact = false;
};

int run_analyze(const AnalyzeArgs& a) {
  const FeatureSpec spec = parse_features(a.features);
  ProcessOptions opt;
  opt.policy = parse_policy(a.policy);
  opt.threads = a.threads;
  opt.exact_rationals = a.exact;
  print_report(process_treebank(a.input, a.output, spec, opt));
  return exit_ok;
}

struct CollectionArgs {
  std::string list, outdir, merge_out, features, policy = "skip_and_report";
  unsigned threads = 0;
  bool exact = false;
};

int run_collection(const CollectionArgs& a) {
  if (a.outdir.empty() == a.merge_out.empty()) throw UsageError("give exactly one of --outdir and --merge-out");
  const FeatureSpec spec = parse_features(a.features);
  CollectionOptions opt;
  opt.policy = parse_policy(a.policy);
  opt.threads = a.threads;
  opt.exact_rationals = a.exact;
  opt.merge = !a.merge_out.empty();
  const auto report = process_collection(a.list, opt.merge ? a.merge_out : a.outdir, spec, opt);
  for (const auto& m : report.missing) std::cerr << "missing treebank: " << m.string() << "\n";
  for (const auto& r : report.treebanks) print_report(r);
  std::cerr << report.treebanks.size() << " treebanks processed, " << report.missing.size() << " missing\n";
  return exit_ok;
}

struct ConvertArgs {
  std::string input, output, policy = "skip_and_report", function_words;
  bool remove_punct = false, remove_function_words = false;
  std::optional<std::size_t> min_len, max_len;
  unsigned threads = 0;
};

int run_convert(const ConvertArgs& a) {
  PreprocessOptions opt;
  opt.remove_punct = a.remove_punct;
  opt.remove_function_words = a.remove_function_words;
  if (!a.function_words.empty()) {
    opt.function_words.clear();
    std::stringstream ss(a.function_words);
    std::string tag;
    while (std::getline(ss, tag, ',')) {
      if (!tag.empty()) opt.function_words.insert(tag);
    }
  }
  opt.min_len = a.min_len;
  opt.max_len = a.max_len;
  try {
    opt.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const auto r = convert(a.input, a.output, opt, parse_policy(a.policy), a.threads);
  print_skips(r.errors, r.input.string());
  std::cerr << r.input.string() << ": " << r.sentences << " sentences, " << r.written << " written, " << r.filtered
            << " filtered, " << r.errors.size() << " errors, " << r.elapsed_seconds << " s -> " << r.output.string()
            << "\n";
  return exit_ok;
}

struct GenerateArgs {
  std::string kind;
  std::size_t n = 0;
  std::optional<std::uint64_t> count, seed;
  bool exhaustive = false;
};

int run_generate(const GenerateArgs& a) {
  TreeKind kind;
  try {
    kind = TreeKind::parse(a.kind);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (a.n == 0) throw UsageError("-n must be at least 1");
  if (a.exhaustive == a.count.has_value()) throw UsageError("give exactly one of --exhaustive and --count");
  if (a.exhaustive && a.seed) throw UsageError("--seed applies to --count only");

  auto emit = [&kind](const RootedTree& t) {
    if (kind.rooted()) {
      std::cout << t.to_head_vector().to_string() << "\n";
    } else {
      std::cout << edge_list(t.free()) << "\n";
    }
  };
  if (a.exhaustive) {
    for (TreeEnumerator e(kind, a.n); !e.done(); e.advance()) emit(e.rooted());
  } else {
    Rng rng = a.seed ? Rng(*a.seed) : Rng::from_entropy();
    if (!a.seed) std::cerr << "seed " << rng.seed() << "\n";
    RandomTreeGenerator gen(kind, a.n);
    for (std::uint64_t i = 0; i < *a.count; ++i) emit(gen.rooted(rng));
  }
  std::cout.flush();
  return std::cout ? exit_ok : exit_io;
}

struct BaselineArgs {
  std::string tree, what, algorithm, metric, constraint = "unconstrained", mode = "exact", kind;
  std::size_t n = 0;
  std::uint64_t samples = 100000;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
};

void print_min(const MinArrangementResult& r) {
  std::cout << r.value << "\n" << r.arrangement.to_string() << "\n";
}

void print_estimate(const EstimationResult& r) {
  if (r.mode == EstimationMode::exact) {
    std::cout << "mean " << to_exact_string(*r.exact_mean) << "\n"
              << "variance " << to_exact_string(*r.exact_variance) << "\n"
              << "ensemble " << r.samples << "\n";
  } else {
    std::ostringstream s;
    s.precision(10);
    s << "mean " << r.mean << "\nvariance " << r.variance << "\nstd_error " << r.std_error << "\nsamples "
      << r.samples << "\nseed " << r.seed << "\n";
    std::cout << s.str();
  }
}

int run_baseline(const BaselineArgs& a) {
  const std::string& w = a.what;
  const bool over_trees = w == "estimate" && !a.kind.empty();
  if (!over_trees && a.tree.empty()) throw UsageError("--tree is required");
  if (over_trees && !a.tree.empty()) throw UsageError("--kind and --tree are mutually exclusive");

  if (w == "Dmin_unconstrained") {
    UnconstrainedAlgorithm alg = UnconstrainedAlgorithm::shiloach;
    if (a.algorithm == "Chung_2") alg = UnconstrainedAlgorithm::chung;
    else if (a.algorithm == "exhaustive") alg = UnconstrainedAlgorithm::exhaustive;
    else if (!a.algorithm.empty() && a.algorithm != "Shiloach") throw UsageError("unknown algorithm " + a.algorithm);
    print_min(min_D_unconstrained(read_tree_arg(a.tree), alg));
  } else if (w == "Dmin_planar") {
    PlanarAlgorithm alg = PlanarAlgorithm::hochberg_stallmann;
    if (a.algorithm == "exhaustive") alg = PlanarAlgorithm::exhaustive;
    else if (!a.algorithm.empty() && a.algorithm != "HS_Alemany") throw UsageError("unknown algorithm " + a.algorithm);
    print_min(min_D_planar(read_tree_arg(a.tree), alg));
  } else if (w == "Dmin_projective") {
    ProjectiveAlgorithm alg = ProjectiveAlgorithm::gildea_temperley;
    if (a.algorithm == "exhaustive") alg = ProjectiveAlgorithm::exhaustive;
    else if (!a.algorithm.empty() && a.algorithm != "GT_Alemany") throw UsageError("unknown algorithm " + a.algorithm);
    print_min(min_D_projective(read_tree_arg(a.tree), alg));
  } else if (w == "ED_unconstrained") {
    const auto t = read_tree_arg(a.tree);
    if (t.num_vertices() < 2) throw UsageError("ED_unconstrained needs at least two vertices");
    std::cout << to_exact_string(expected_D_unconstrained(t)) << "\n";
  } else if (w == "EC_unconstrained") {
    const auto t = read_tree_arg(a.tree);
    if (t.num_vertices() < 2) throw UsageError("EC_unconstrained needs at least two vertices");
    std::cout << to_exact_string(expected_C_unconstrained(t)) << "\n";
  } else if (w == "estimate") {
    if (a.metric.empty()) throw UsageError("estimate needs --metric");
    EstimationOptions opt;
    if (a.mode == "exact") opt.mode = EstimationMode::exact;
    else if (a.mode == "monte_carlo") opt.mode = EstimationMode::monte_carlo;
    else throw UsageError("unknown mode " + a.mode + " (expected exact or monte_carlo)");
    opt.samples = a.samples;
    opt.threads = a.threads;
    if (opt.mode == EstimationMode::monte_carlo) {
      opt.seed = a.seed ? *a.seed : Rng::from_entropy().seed();
    }
    if (over_trees) {
      TreeKind kind;
      try {
        kind = TreeKind::parse(a.kind);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      if (a.n == 0) throw UsageError("-n must be at least 1");
      print_estimate(estimate_over_trees(kind, a.n, a.metric, opt));
    } else {
      Constraint c;
      try {
        c = parse_constraint(a.constraint);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      print_estimate(estimate_over_arrangements(read_tree_arg(a.tree), a.metric, c, opt));
    }
  } else {
    throw UsageError("unknown --what '" + w + "'");
  }
  return exit_ok;
}

struct IsomorphicArgs {
  std::string a, b, mode = "free";
};

int run_isomorphic(const IsomorphicArgs& args) {
  IsomorphismMode mode;
  if (args.mode == "rooted") mode = IsomorphismMode::rooted;
  else if (args.mode == "free") mode = IsomorphismMode::free;
  else throw UsageError("unknown mode " + args.mode + " (expected rooted or free)");

  const auto first = read_tree_file(args.a);
  const auto second = read_tree_file(args.b);
  if (first.size() != second.size()) {
    std::cerr << "files hold " << first.size() << " and " << second.size() << " trees\n";
    return exit_io;
  }
  bool all = true;
  for (std::size_t i = 0; i < first.size(); ++i) {
    const bool iso = are_isomorphic(first[i], second[i], mode);
    all = all && iso;
    std::cout << (i + 1) << " " << (iso ? "isomorphic" : "not_isomorphic") << "\n";
  }
  return all ? exit_ok : exit_not_isomorphic;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dependency-tree analysis: metrics, minimum arrangements, generation and baselines."};
  app.set_version_flag("--version", version_string);
  app.require_subcommand(1);

  auto threads_opt = [](CLI::App* sub, unsigned& threads) {
    sub->add_option("--threads", threads, "worker threads (0 = DEPTREE_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);
  };

  AnalyzeArgs analyze;
  auto* a = app.add_subcommand("analyze", "compute features for every sentence of a head-vector file");
  a->set_version_flag("--version", version_string);
  a->add_option("input", analyze.input, "head-vector file")->required();
  a->add_option("output", analyze.output, "CSV output")->required();
  a->add_option("--features", analyze.features, "comma-separated feature names (default: default set)");
  a->add_option("--policy", analyze.policy, "fail_fast or skip_and_report");
  a->add_flag("--exact", analyze.exact, "write fractions as p/q");
  threads_opt(a, analyze.threads);

  CollectionArgs coll;
  auto* c = app.add_subcommand("collection", "analyze every treebank named in a list file");
  c->set_version_flag("--version", version_string);
  c->add_option("list", coll.list, "list file, one treebank path per line")->required();
  c->add_option("--outdir", coll.outdir, "directory for one CSV per treebank");
  c->add_option("--merge-out", coll.merge_out, "single CSV with a treebank column");
  c->add_option("--features", coll.features, "comma-separated feature names");
  c->add_option("--policy", coll.policy, "fail_fast or skip_and_report");
  c->add_flag("--exact", coll.exact, "write fractions as p/q");
  threads_opt(c, coll.threads);

  ConvertArgs conv;
  auto* v = app.add_subcommand("convert", "convert CoNLL-U into head vectors");
  v->set_version_flag("--version", version_string);
  v->add_option("input", conv.input, "CoNLL-U file")->required();
  v->add_option("output", conv.output, "head-vector output")->required();
  v->add_flag("--remove-punct", conv.remove_punct, "drop PUNCT tokens");
  v->add_flag("--remove-function-words", conv.remove_function_words, "drop function-word tokens");
  v->add_option("--function-words", conv.function_words, "comma-separated UPOS tags counted as function words");
  v->add_option("--min-len", conv.min_len, "drop sentences shorter than this after removal");
  v->add_option("--max-len", conv.max_len, "drop sentences longer than this after removal");
  v->add_option("--policy", conv.policy, "fail_fast or skip_and_report");
  threads_opt(v, conv.threads);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "print trees, one per line");
  g->set_version_flag("--version", version_string);
  g->add_option("--kind", gen.kind, "labeled-free, labeled-rooted, unlabeled-free or unlabeled-rooted")->required();
  g->add_option("-n", gen.n, "number of vertices")->required();
  g->add_option("--count", gen.count, "number of uniformly random trees");
  g->add_option("--seed", gen.seed, "random seed");
  g->add_flag("--exhaustive", gen.exhaustive, "every tree of the kind");

  BaselineArgs base;
  auto* b = app.add_subcommand("baseline", "minimum and expected values for a tree");
  b->set_version_flag("--version", version_string);
  b->add_option("--tree", base.tree, "head vector, e.g. \"0 1 1\"");
  b->add_option("--what", base.what,
                "Dmin_unconstrained, Dmin_planar, Dmin_projective, ED_unconstrained, EC_unconstrained or estimate")
      ->required();
  b->add_option("--algorithm", base.algorithm,
                "Shiloach, Chung_2, HS_Alemany, GT_Alemany or exhaustive (default: the polynomial one)");
  b->add_option("--metric", base.metric, "feature to estimate");
  b->add_option("--constraint", base.constraint, "unconstrained, planar or projective");
  b->add_option("--mode", base.mode, "exact or monte_carlo");
  b->add_option("--samples", base.samples, "Monte Carlo samples");
  b->add_option("--seed", base.seed, "Monte Carlo seed");
  b->add_option("--kind", base.kind, "estimate over all trees of this kind instead of arrangements");
  b->add_option("-n", base.n, "tree size for --kind");
  threads_opt(b, base.threads);

  IsomorphicArgs iso;
  auto* i = app.add_subcommand("isomorphic", "compare trees line by line");
  i->set_version_flag("--version", version_string);
  i->add_option("a", iso.a, "first head-vector file")->required();
  i->add_option("b", iso.b, "second head-vector file")->required();
  i->add_option("--mode", iso.mode, "rooted or free");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (a->parsed()) return run_analyze(analyze);
    if (c->parsed()) return run_collection(coll);
    if (v->parsed()) return run_convert(conv);
    if (g->parsed()) return run_generate(gen);
    if (b->parsed()) return run_baseline(base);
    if (i->parsed()) return run_isomorphic(iso);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_io;
  }
  return exit_usage;
}
