#include "opsplit/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "opsplit/errors.hpp"

namespace opsplit {

namespace {

using nlohmann::json;

const std::set<std::string> kKeys{
    "dim",       "seed",      "gamma",     "lambda",     "w",           "v",
    "a",         "U",         "a_sign",    "tol_single", "tol_multi",   "tol_power",
    "witness_threshold",      "witness_budget",          "instances",   "samples",
    "min_dim",   "max_dim",   "suites",    "max_iters",  "stop_tol",    "x0",
    "probe",     "operator_a",             "operator_b", "out"};

double number(const json& doc, const char* key) {
  const json& v = doc.at(key);
  if (!v.is_number()) throw ConfigError(fmt::format("'{}' must be a number", key));
  return v.get<double>();
}

std::int64_t integer(const json& doc, const char* key) {
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw ConfigError(fmt::format("'{}' must be an integer", key));
  return v.get<std::int64_t>();
}

std::string text(const json& doc, const char* key) {
  const json& v = doc.at(key);
  if (!v.is_string()) throw ConfigError(fmt::format("'{}' must be a string", key));
  return v.get<std::string>();
}

Point vec(const json& v, Index dim, const std::string& what) {
  if (!v.is_array()) throw ConfigError(fmt::format("'{}' must be an array of numbers", what));
  if (static_cast<Index>(v.size()) != dim)
    throw ConfigError(fmt::format("'{}' has {} entries, expected {}", what, v.size(), dim));
  Point p(dim);
  for (Index i = 0; i < dim; ++i) {
    const json& e = v[static_cast<std::size_t>(i)];
    if (!e.is_number()) throw ConfigError(fmt::format("'{}' must be an array of numbers", what));
    p[i] = e.get<double>();
  }
  if (!p.allFinite()) throw ConfigError(fmt::format("'{}' must be finite", what));
  return p;
}

SubspaceBasis subspace(const json& v, Index dim) {
  if (!v.is_array()) throw ConfigError("'U' must be a list of vectors");
  std::vector<Point> span;
  for (std::size_t i = 0; i < v.size(); ++i) span.push_back(vec(v[i], dim, fmt::format("U[{}]", i)));
  if (span.empty()) return SubspaceBasis(dim);
  try {
    return orthonormalize(span);
  } catch (const RankDeficient& e) {
    throw ConfigError(fmt::format("'U' spanning vectors are linearly dependent: {}", e.what()));
  }
}

IterOperatorA operator_a_from(const std::string& s) {
  if (s == "translated_identity") return IterOperatorA::kTranslatedIdentity;
  if (s == "zero") return IterOperatorA::kZero;
  if (s == "affine_random") return IterOperatorA::kAffineRandom;
  throw ConfigError(fmt::format("unknown operator_a '{}'", s));
}

IterOperatorB operator_b_from(const std::string& s) {
  if (s == "projector") return IterOperatorB::kProjector;
  if (s == "zero") return IterOperatorB::kZero;
  if (s == "affine_random") return IterOperatorB::kAffineRandom;
  throw ConfigError(fmt::format("unknown operator_b '{}'", s));
}

std::vector<SuiteId> parse_suite_list(std::string_view list) {
  std::vector<SuiteId> ids;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t end = std::min(list.find(',', pos), list.size());
    std::string_view tag = list.substr(pos, end - pos);
    while (!tag.empty() && tag.front() == ' ') tag.remove_prefix(1);
    while (!tag.empty() && tag.back() == ' ') tag.remove_suffix(1);
    if (!tag.empty()) ids.push_back(suite_from_string(tag));
    pos = end + 1;
  }
  if (ids.empty()) throw ConfigError("empty suite selection");
  return ids;
}

}  // namespace

std::vector<SuiteId> RunConfig::selected_suites() const {
  if (suites.empty()) return {kSuiteRegistry.begin(), kSuiteRegistry.end()};
  return suites;
}

Point RunConfig::start() const { return x0 ? *x0 : Point(Point::Zero(model.dim())); }

Point RunConfig::probe_point() const {
  if (probe) return *probe;
  Point p = Point::Zero(model.dim());
  p[0] = 2.0;
  return p;
}

RunConfig parse_run_config(std::string_view source) {
  json doc;
  try {
    doc = json::parse(source.begin(), source.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(fmt::format("config is not valid JSON: {}", e.what()));
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& item : doc.items())
    if (!kKeys.count(item.key())) throw ConfigError(fmt::format("unknown config key '{}'", item.key()));

  RunConfig cfg;
  try {
    if (doc.contains("dim")) {
      const std::int64_t dim = integer(doc, "dim");
      if (dim < 1 || dim > kMaxInstanceDim)
        throw ConfigError(fmt::format("'dim' must lie in [1, {}]", kMaxInstanceDim));
      if (dim != cfg.model.dim()) {
        cfg.model.u = SubspaceBasis(dim);
        cfg.model.a = cfg.model.v = cfg.model.w = Point::Zero(dim);
      }
    }
    const Index n = cfg.model.dim();
    if (doc.contains("U")) cfg.model.u = subspace(doc["U"], n);
    if (doc.contains("a")) cfg.model.a = vec(doc["a"], n, "a");
    if (doc.contains("v")) cfg.model.v = vec(doc["v"], n, "v");
    if (doc.contains("w")) cfg.model.w = vec(doc["w"], n, "w");
    if (doc.contains("gamma")) cfg.model.gamma = number(doc, "gamma");
    if (doc.contains("lambda")) cfg.model.lambda = number(doc, "lambda");
    if (doc.contains("a_sign")) cfg.model.a_sign = a_sign_from_string(text(doc, "a_sign"));
    if (doc.contains("seed")) {
      if (!doc["seed"].is_number_unsigned() && !(doc["seed"].is_number_integer() && doc["seed"].get<std::int64_t>() >= 0))
        throw ConfigError("'seed' must be a non-negative integer");
      cfg.seed = doc["seed"].get<std::uint64_t>();
    }

    SuiteConfig& s = cfg.suite;
    if (doc.contains("tol_single")) s.tol.single = number(doc, "tol_single");
    if (doc.contains("tol_multi")) s.tol.multi = number(doc, "tol_multi");
    if (doc.contains("tol_power")) s.tol.power = number(doc, "tol_power");
    if (doc.contains("witness_threshold")) s.tol.witness = number(doc, "witness_threshold");
    if (doc.contains("witness_budget")) s.witness_budget = integer(doc, "witness_budget");
    if (doc.contains("instances")) s.instances = static_cast<int>(integer(doc, "instances"));
    if (doc.contains("samples")) s.samples = integer(doc, "samples");
    if (doc.contains("min_dim")) s.min_dim = integer(doc, "min_dim");
    if (doc.contains("max_dim")) s.max_dim = integer(doc, "max_dim");
    if (doc.contains("suites")) {
      const json& list = doc["suites"];
      if (!list.is_array()) throw ConfigError("'suites' must be a list of suite tags");
      for (const json& tag : list) {
        if (!tag.is_string()) throw ConfigError("'suites' must be a list of suite tags");
        cfg.suites.push_back(suite_from_string(tag.get<std::string>()));
      }
    }

    if (doc.contains("max_iters")) cfg.max_iters = static_cast<int>(integer(doc, "max_iters"));
    if (doc.contains("stop_tol")) cfg.stop_tol = number(doc, "stop_tol");
    if (doc.contains("x0")) cfg.x0 = vec(doc["x0"], n, "x0");
    if (doc.contains("probe")) cfg.probe = vec(doc["probe"], n, "probe");
    if (doc.contains("operator_a")) cfg.operator_a = operator_a_from(text(doc, "operator_a"));
    if (doc.contains("operator_b")) cfg.operator_b = operator_b_from(text(doc, "operator_b"));
    if (doc.contains("out")) cfg.out = text(doc, "out");
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("malformed config: {}", e.what()));
  }

  set_seed(cfg, cfg.seed);
  if (cfg.max_iters < 1) throw ConfigError("'max_iters' must be at least 1");
  if (!(cfg.stop_tol > 0.0)) throw ConfigError("'stop_tol' must be positive");
  try {
    validate(cfg.model);
    validate(cfg.suite);
  } catch (const InvalidParameter& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(fmt::format("cannot read config file '{}'", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

void set_seed(RunConfig& config, std::uint64_t seed) {
  config.seed = seed;
  config.suite.seed = seed;
  config.suite.model = config.model;
}

void set_suites(RunConfig& config, std::string_view comma_list) {
  config.suites = parse_suite_list(comma_list);
}

void check_run_config(const RunConfig& config) {
  const auto ids = config.selected_suites();
  const auto selected = [&](SuiteId id) { return std::find(ids.begin(), ids.end(), id) != ids.end(); };
  const ModelInstance& m = config.model;
  if (selected(SuiteId::kCommutationNonEqualities)) {
    if (!(m.w.norm() > 0.0))
      throw ConfigError("degenerate parameters for PROP28_NONEQUALITIES: w = 0");
    if (!((m.a - m.v).norm() > 1e-8))
      throw ConfigError("degenerate parameters for PROP28_NONEQUALITIES: a = v");
  }
  if (selected(SuiteId::kCommutationEqualities) || selected(SuiteId::kCommutationNonEqualities)) {
    try {
      validate_for_commutation_examples(m);
    } catch (const InvalidParameter& e) {
      throw ConfigError(e.what());
    }
  }
}

SplitPair iteration_pair(const RunConfig& config) {
  const ModelInstance& m = config.model;
  const Index n = m.dim();
  const SplitPair model = model_pair(m);
  Rng rng = make_stream(config.seed, "iterate");
  Operator a = model.a;
  switch (config.operator_a) {
    case IterOperatorA::kTranslatedIdentity: break;
    case IterOperatorA::kZero: a = Operator::constant(Point::Zero(n)); break;
    case IterOperatorA::kAffineRandom: a = gen_operator(OperatorKind::kAffineRandom, n, rng); break;
  }
  Operator b = model.b;
  switch (config.operator_b) {
    case IterOperatorB::kProjector: break;
    case IterOperatorB::kZero: b = Operator::constant(Point::Zero(n)); break;
    case IterOperatorB::kAffineRandom: b = gen_operator(OperatorKind::kAffineRandom, n, rng); break;
  }
  return SplitPair{std::move(a), std::move(b), model.p, model.lam};
}

}  // namespace opsplit
