// Command-line front end. Exit codes: 0 success / positive verdict,
// 1 negative verdict on valid input, 2 input error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "supermod/cone.hpp"
#include "supermod/enumerate.hpp"
#include "supermod/io.hpp"
#include "supermod/model_prediction.hpp"
#include "supermod/standardize.hpp"
#include "supermod/transforms.hpp"
#include "supermod/verify.hpp"

namespace {

using namespace supermod;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (text.back() == sep) out.emplace_back();
  return out;
}

// "a:b,c:d" -> {a→b, c→d}
std::map<std::string, std::string> parse_mapping(const std::string& text) {
  std::map<std::string, std::string> out;
  for (const auto& pair : split(text, ',')) {
    const auto colon = pair.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == pair.size()) {
      throw UsageError("mapping entries must look like from:to, got '" + pair + "'");
    }
    if (!out.emplace(pair.substr(0, colon), pair.substr(colon + 1)).second) {
      throw UsageError("label '" + pair.substr(0, colon) + "' mapped twice");
    }
  }
  return out;
}

VariableSet parse_vars(const std::string& text) { return VariableSet(split(text, ',')); }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    io::write_file(out_path, text);
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string labels_of(const VariableSet& vars, SubsetMask s) {
  const std::string k = vars.key(s);
  return k.empty() ? "∅" : k;
}

// ---------------------------------------------------------------- commands

struct Common {
  std::string file;
  bool json = false;
  std::string out;
};

int cmd_check(const Common& c) {
  const SetFunction m = io::read_file(c.file);
  const bool sup = is_supermodular(m);
  const bool mod = is_modular(m);
  const auto model = independency_model(m);
  std::optional<ExtremalityReport> rep;
  if (sup) rep = is_extreme(m);
  if (c.json) {
    ordered_json doc;
    doc["supermodular"] = sup;
    doc["modular"] = mod;
    doc["extreme"] = rep ? ordered_json(rep->extreme) : ordered_json(nullptr);
    doc["nondecreasing"] = m.is_nondecreasing();
    doc["nonincreasing"] = m.is_nonincreasing();
    doc["carrier"] = m.vars().labels_of(carrier(m));
    doc["support"] = sup ? ordered_json(m.vars().labels_of(support(m))) : ordered_json(nullptr);
    doc["triplets"] = triplet_count(m.n());
    doc["independencies"] = model.size();
    emit(doc.dump(2) + "\n", c.out);
  } else {
    std::ostringstream os;
    os << "supermodular: " << yes_no(sup) << '\n' << "modular: " << yes_no(mod) << '\n';
    if (rep) os << "extreme: " << yes_no(rep->extreme) << '\n';
    os << "nondecreasing: " << yes_no(m.is_nondecreasing()) << '\n'
       << "nonincreasing: " << yes_no(m.is_nonincreasing()) << '\n'
       << "carrier: " << labels_of(m.vars(), carrier(m)) << '\n';
    if (sup) os << "support: " << labels_of(m.vars(), support(m)) << '\n';
    os << "scalar table: " << model.size() << " zero, " << model.dependency_count() << " non-zero of "
       << triplet_count(m.n()) << " triplets\n";
    emit(os.str(), c.out);
  }
  return sup ? kOk : kNegative;
}

int cmd_standardize(const Common& c, const std::string& kind) {
  const SetFunction m = io::read_file(c.file);
  emit(io::serialize(standardize(m, parse_kind(kind))), c.out);
  return kOk;
}

int cmd_model(const Common& c) {
  const SetFunction m = io::read_file(c.file);
  const auto model = independency_model(m);
  if (c.json) {
    ordered_json doc;
    doc["variables"] = m.vars().labels();
    doc["independencies"] = ordered_json::array();
    for (const auto& t : model.independencies()) {
      ordered_json e;
      e["a"] = m.vars().label(t.a);
      e["b"] = m.vars().label(t.b);
      e["c"] = m.vars().labels_of(t.c);
      doc["independencies"].push_back(std::move(e));
    }
    doc["dependency_count"] = model.dependency_count();
    emit(doc.dump(2) + "\n", c.out);
  } else {
    std::ostringstream os;
    for (const auto& t : model.independencies()) os << format_triplet(m.vars(), t) << '\n';
    os << "dependencies: " << model.dependency_count() << '\n';
    emit(os.str(), c.out);
  }
  return kOk;
}

int cmd_extreme(const Common& c) {
  const SetFunction m = io::read_file(c.file);
  const ExtremalityReport rep = is_extreme(m);
  if (c.json) {
    ordered_json doc;
    doc["supermodular"] = rep.supermodular;
    doc["modular"] = rep.modular;
    doc["tight"] = ordered_json::array();
    for (const auto& t : rep.face.tight) doc["tight"].push_back(format_triplet(m.vars(), t));
    doc["rank"] = rep.face.rank;
    doc["dimension"] = rep.face.dimension;
    doc["extreme"] = rep.extreme;
    if (rep.extreme) doc["ray"] = nlohmann::ordered_json::parse(io::serialize(integral_representative(m)));
    emit(doc.dump(2) + "\n", c.out);
  } else {
    std::ostringstream os;
    os << "supermodular: " << yes_no(rep.supermodular) << '\n' << "modular: " << yes_no(rep.modular) << '\n';
    if (rep.supermodular) {
      os << "tight triplets: " << rep.face.tight.size() << '\n'
         << "rank: " << rep.face.rank << '\n'
         << "face dimension: " << rep.face.dimension << " (extreme rays have " << m.n() + 2 << ")\n";
    }
    os << "extreme: " << yes_no(rep.extreme) << '\n';
    if (rep.extreme) os << "ray: " << integral_representative(m).to_delta_string() << '\n';
    emit(os.str(), c.out);
  }
  return rep.extreme ? kOk : kNegative;
}

struct TransformArgs {
  std::string op;
  std::string perm;
  std::string target;
  std::string fresh;
  std::string del;
  std::string extract;
  std::string keep;
  std::string sigma;
  std::string merge;
  std::string into;
  std::string z;
  std::string with;
  std::string composer = "product";
  std::string map;
};

VariableSet target_of(const TransformArgs& a, const VariableSet& base) {
  if (!a.target.empty() && !a.fresh.empty()) throw UsageError("give --target or --fresh, not both");
  if (!a.target.empty()) return parse_vars(a.target);
  if (a.fresh.empty()) throw UsageError("--target or --fresh is required for " + a.op);
  auto labels = base.labels();
  for (const auto& l : split(a.fresh, ',')) labels.push_back(l);
  return VariableSet(labels);
}

std::string require(const std::string& value, const char* flag, const std::string& op) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required for " + op);
  return value;
}

SetFunction run_transform(const SetFunction& m, const TransformArgs& a, bool& violated) {
  const VariableSet& vars = m.vars();
  const std::string& op = a.op;
  if (op == "permute") return permute(m, Permutation::from_labels(vars, parse_mapping(require(a.perm, "--perm", op))));
  if (op == "reflect") return reflect(m);
  if (op == "maxsub") return monotonize_max_sub(m);
  if (op == "maxsup") return monotonize_max_sup(m);
  if (op == "multiply") return pointwise_multiply(m, io::read_file(require(a.with, "--with", op)));
  if (op == "outer") {
    const auto res = outer_compose(m, io::read_file(require(a.with, "--with", op)), OuterComposer::parse(a.composer));
    for (const auto& v : res.violations) std::cerr << "warning: " << v << '\n';
    violated = !res.violations.empty();
    return res.value;
  }
  if (op == "product") return product_compose(m, io::read_file(require(a.with, "--with", op)));
  if (op == "lift") return lift(m, target_of(a, vars));
  if (op == "minor") return minor(m, vars.parse_mask(a.del), vars.parse_mask(a.extract));
  if (op == "meanminor") return mean_minor(m, vars.parse_mask(require(a.keep, "--keep", op)));
  if (op == "maxminor") return max_minor(m, vars.parse_mask(require(a.keep, "--keep", op)));
  if (op == "coarsen") return coarsen(m, Coarsening::from_labels(vars, parse_mapping(require(a.sigma, "--sigma", op))));
  if (op == "contract") {
    return contract(m, vars.parse_mask(require(a.merge, "--merge", op)), require(a.into, "--into", op));
  }
  if (op == "lowmod") return lower_modular_extension(m, target_of(a, vars));
  if (op == "uppmod") return upper_modular_extension(m, target_of(a, vars));
  if (op == "lowrepl" || op == "upprepl") {
    const std::string z = require(a.z, "--z", op);
    const VariableSet rest = vars.subset(vars.full().without(vars.index_of(z)));
    const VariableSet target = a.target.empty() ? target_of(a, rest) : parse_vars(a.target);
    return op == "lowrepl" ? lower_replication(m, z, target) : upper_replication(m, z, target);
  }
  if (op == "relabel") return relabel(m, parse_mapping(require(a.map, "--map", op)));
  throw UsageError("unknown transform '" + op + "'");
}

int cmd_transform(const Common& c, const TransformArgs& a) {
  const SetFunction m = io::read_file(c.file);
  bool violated = false;
  const SetFunction r = run_transform(m, a, violated);
  emit(io::serialize(r), c.out);
  return violated ? kNegative : kOk;
}

int cmd_enumerate(int n, const std::string& out_dir, bool allow_large, unsigned threads, bool json) {
  EnumerationOptions opts;
  opts.allow_large = allow_large;
  opts.threads = threads;
  const RayCatalogue cat = enumerate_extreme_rays(n, opts);
  if (out_dir.empty()) {
    std::cout << (json ? io::catalogue_json(cat) : io::orbit_summary(cat));
    return kOk;
  }
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);
  const std::string stem = "catalogue_n" + std::to_string(n);
  io::write_file((dir / (stem + ".json")).string(), io::catalogue_json(cat));
  io::write_file((dir / (stem + ".tsv")).string(), io::catalogue_table(cat));
  io::write_file((dir / ("orbits_n" + std::to_string(n) + ".txt")).string(), io::orbit_summary(cat));
  std::cout << io::orbit_summary(cat);
  return kOk;
}

int cmd_verify(const std::string& suite, const verify::Options& opts, bool json, const std::string& out) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = verify::suite_names();
  } else {
    names.push_back(suite);
  }
  bool ok = true;
  std::string text;
  ordered_json reports = ordered_json::array();
  for (const auto& name : names) {
    const verify::SuiteReport rep = verify::run_suite(name, opts);
    ok = ok && rep.passed();
    if (json) {
      reports.push_back(ordered_json::parse(rep.to_json()));
    } else {
      text += rep.to_text();
    }
  }
  emit(json ? (names.size() == 1 ? reports[0].dump(2) : reports.dump(2)) + "\n" : text, out);
  return ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of supermodular set functions"};
  app.require_subcommand(1);

  Common common;
  const auto add_common = [&common](CLI::App* sub, bool with_file) {
    if (with_file) sub->add_option("file", common.file, "set function document (JSON)")->required();
    sub->add_flag("--json", common.json, "machine-readable output");
    sub->add_option("--out", common.out, "output file (default stdout)");
  };

  auto* check = app.add_subcommand("check", "supermodularity and related verdicts");
  add_common(check, true);

  std::string kind = "l";
  auto* stdz = app.add_subcommand("standardize", "representative of the ≈-class");
  add_common(stdz, true);
  stdz->add_option("--kind", kind, "l, u, o, p (polymatroidal) or w (weird)");

  TransformArgs targs;
  auto* transform = app.add_subcommand("transform", "apply a transformation");
  add_common(transform, true);
  transform->add_option("--op", targs.op,
                        "permute reflect maxsub maxsup outer multiply product lift minor meanminor maxminor "
                        "coarsen contract lowmod uppmod lowrepl upprepl relabel")
      ->required();
  transform->add_option("--perm", targs.perm, "permutation as from:to pairs, e.g. a:b,b:a");
  transform->add_option("--target", targs.target, "target variables, comma-separated");
  transform->add_option("--fresh", targs.fresh, "labels added to the source (or to L for replications)");
  transform->add_option("--delete", targs.del, "deleted variables (minor)");
  transform->add_option("--extract", targs.extract, "extracted variables (minor)");
  transform->add_option("--keep", targs.keep, "kept variables (meanminor, maxminor)");
  transform->add_option("--sigma", targs.sigma, "surjection as from:to pairs (coarsen)");
  transform->add_option("--merge", targs.merge, "variables merged by contract");
  transform->add_option("--into", targs.into, "label of the merged variable");
  transform->add_option("--z", targs.z, "replicated variable");
  transform->add_option("--with", targs.with, "second operand document");
  transform->add_option("--composer", targs.composer, "outer composer: product, first, square, power:K");
  transform->add_option("--map", targs.map, "relabelling as from:to pairs");

  auto* model = app.add_subcommand("model", "induced independency model");
  add_common(model, true);
  auto* extreme = app.add_subcommand("extreme", "extremality certificate");
  add_common(extreme, true);

  int enum_n = 3;
  std::string enum_out;
  bool allow_large = false;
  unsigned threads = 0;
  auto* enumerate = app.add_subcommand("enumerate", "extreme rays of K_ℓ(N)");
  enumerate->add_option("--n", enum_n, "number of variables (2..4; 5 with --allow-large)");
  enumerate->add_option("--out", enum_out, "directory for catalogue files");
  enumerate->add_flag("--allow-large", allow_large, "permit the long-running n=5 enumeration");
  enumerate->add_option("--threads", threads, "worker threads (default SMK_THREADS or all cores)");
  enumerate->add_flag("--json", common.json, "print the catalogue as JSON when --out is absent");

  std::string suite = "all";
  verify::Options vopts;
  auto* ver = app.add_subcommand("verify", "run property suites");
  ver->add_option("--suite", suite, "preservation, models, oracle, equivalence, standardization or all");
  ver->add_option("--n", vopts.n, "catalogue size (random inputs also use n+1)");
  ver->add_option("--count", vopts.random_count, "random inputs per family");
  ver->add_option("--seed", vopts.seed, "random seed");
  ver->add_flag("--inject-corruption", vopts.inject_corruption, "plant a non-extreme generator (negative control)");
  add_common(ver, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(common);
    if (*stdz) return cmd_standardize(common, kind);
    if (*transform) return cmd_transform(common, targs);
    if (*model) return cmd_model(common);
    if (*extreme) return cmd_extreme(common);
    if (*enumerate) return cmd_enumerate(enum_n, enum_out, allow_large, threads, common.json);
    if (*ver) return cmd_verify(suite, vopts, common.json, common.out);
  } catch (const std::exception& e) {
    // Parse errors, unknown labels and violated preconditions alike.
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
