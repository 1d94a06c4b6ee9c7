// Copyright 2026 The smcsa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace smcsa::cli {

namespace {

using Json = nlohmann::ordered_json;

// Reads one JSON object, remembering which keys were consumed so that
// leftovers can be reported as unknown.
class ObjectReader {
 public:
  ObjectReader(const Json& object, std::string path) : object_(object), path_(std::move(path)) {
    if (!object_.is_object()) fail("expected an object");
  }

  bool has(const std::string& key) const { return object_.contains(key); }

  const Json& raw(const std::string& key) {
    seen_.insert(key);
    return object_.at(key);
  }

  template <typename T>
  T get(const std::string& key, T fallback) {
    if (!has(key)) return fallback;
    return convert<T>(raw(key), key);
  }

  template <typename T>
  T require(const std::string& key) {
    if (!has(key)) fail("missing required key '" + key + "'");
    return convert<T>(raw(key), key);
  }

  ObjectReader child(const std::string& key) {
    seen_.insert(key);
    return ObjectReader(object_.at(key), path_ + "." + key);
  }

  std::string where(const std::string& key) const { return path_ + "." + key; }

  void finish() const {
    for (const auto& item : object_.items()) {
      if (!seen_.count(item.key())) fail("unknown key '" + item.key() + "'");
    }
  }

  [[noreturn]] void fail(const std::string& what) const { throw ConfigError(path_ + ": " + what); }

 private:
  template <typename T>
  T convert(const Json& value, const std::string& key) const {
    try {
      if constexpr (std::is_same_v<T, std::size_t> || std::is_same_v<T, std::uint64_t>) {
        if (!value.is_number_unsigned()) throw ConfigError("");
      } else if constexpr (std::is_same_v<T, int>) {
        if (!value.is_number_integer()) throw ConfigError("");
      } else if constexpr (std::is_same_v<T, double>) {
        if (!value.is_number()) throw ConfigError("");
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!value.is_string()) throw ConfigError("");
      }
      return value.get<T>();
    } catch (const std::exception&) {
      throw ConfigError(where(key) + ": expected " + type_name<T>() + ", got " +
                        std::string(value.type_name()));
    }
  }

  template <typename T>
  static std::string type_name() {
    if constexpr (std::is_same_v<T, std::size_t> || std::is_same_v<T, std::uint64_t>) {
      return "a non-negative integer";
    } else if constexpr (std::is_same_v<T, int>) {
      return "an integer";
    } else if constexpr (std::is_same_v<T, double>) {
      return "a number";
    } else if constexpr (std::is_same_v<T, std::string>) {
      return "a string";
    } else {
      return "an array of numbers";
    }
  }

  const Json& object_;
  std::string path_;
  std::set<std::string> seen_;
};

template <typename Enum>
Enum pick(const ObjectReader& r, const std::string& key, const std::string& value,
          std::initializer_list<std::pair<const char*, Enum>> options) {
  std::string names;
  for (const auto& [name, e] : options) {
    if (value == name) return e;
    names += names.empty() ? name : std::string(", ") + name;
  }
  throw ConfigError(r.where(key) + ": unknown value '" + value + "' (expected one of " + names + ")");
}

ModelSpec read_model(ObjectReader r) {
  ModelSpec m;
  m.family = pick(r, "family", r.require<std::string>("family"),
                  {std::pair{"rational", ModelFamily::Rational},
                   std::pair{"bspline", ModelFamily::BSpline},
                   std::pair{"boundary_toy", ModelFamily::BoundaryToy}});
  switch (m.family) {
    case ModelFamily::Rational:
      m.rational.numer_degree = r.get<std::size_t>("numer_degree", m.rational.numer_degree);
      m.rational.denom_degree = r.get<std::size_t>("denom_degree", m.rational.denom_degree);
      break;
    case ModelFamily::BSpline:
      m.spline_degree = r.get<int>("degree", m.spline_degree);
      m.spline_basis = r.get<std::size_t>("num_basis", m.spline_basis);
      break;
    case ModelFamily::BoundaryToy:
      m.toy_target = r.get<double>("target", m.toy_target);
      m.toy_lower = r.get<double>("lower", m.toy_lower);
      break;
  }
  r.finish();
  return m;
}

LossSpec read_loss(ObjectReader r) {
  LossSpec l;
  l.kind = pick(r, "kind", r.get<std::string>("kind", "squared"),
                {std::pair{"squared", LossSpec::Kind::SquaredError},
                 std::pair{"tukey", LossSpec::Kind::TukeyBiweight}});
  l.c = r.get<double>("c", l.c);
  r.finish();
  return l;
}

ConstraintSpec read_constraint(ObjectReader r) {
  ConstraintSpec c;
  const std::string dir = r.get<std::string>("direction", "increasing");
  if (dir == "none") {
    c.direction.reset();
  } else {
    c.direction = pick(r, "direction", dir,
                       {std::pair{"increasing", MonotoneDirection::Increasing},
                        std::pair{"decreasing", MonotoneDirection::Decreasing}});
  }
  if (r.has("interval")) {
    const auto iv = r.get<std::vector<double>>("interval", {});
    if (iv.size() != 2) r.fail("'interval' must be [lo, hi]");
    try {
      c.interval = Interval(iv[0], iv[1]);
    } catch (const InvalidInput& e) {
      r.fail(std::string("'interval': ") + e.what());
    }
  }
  c.root_tol = r.get<double>("root_tol", c.root_tol);
  r.finish();
  return c;
}

DatasetSpec read_dataset(ObjectReader r, const std::filesystem::path& base) {
  DatasetSpec d;
  d.source = r.get<std::string>("source", d.source);
  d.seed = r.get<std::uint64_t>("seed", d.seed);
  if (r.has("path")) {
    std::filesystem::path p = r.require<std::string>("path");
    d.path = p.is_relative() && !base.empty() ? base / p : p;
  }
  d.x_column = r.get<std::string>("x_column", d.x_column);
  d.y_column = r.get<std::string>("y_column", d.y_column);
  const auto scale = [&](const char* key) {
    return pick(r, key, r.get<std::string>(key, "none"),
                {std::pair{"none", ScaleMode::None}, std::pair{"max", ScaleMode::Max},
                 std::pair{"absmax", ScaleMode::AbsMax}});
  };
  d.x_scale = scale("x_scale");
  d.y_scale = scale("y_scale");
  r.finish();
  return d;
}

StartSpec read_start(ObjectReader r) {
  StartSpec s;
  if (r.has("origin")) s.origin = r.get<std::vector<double>>("origin", {});
  s.scale = r.get<double>("scale", s.scale);
  s.max_attempts = r.get<std::size_t>("max_attempts", s.max_attempts);
  s.distinct = r.get<std::size_t>("distinct", s.distinct);
  r.finish();
  return s;
}

AlgorithmSpec read_algorithm(ObjectReader r) {
  const Algorithm algorithm = pick(r, "algorithm", r.get<std::string>("algorithm", "smcsa"),
                                   {std::pair{"smcsa", Algorithm::SmcSa},
                                    std::pair{"multistart", Algorithm::MultiStartSa}});

  // The schedule picks the defaults for everything else.
  CoolingSchedule::Kind kind = CoolingSchedule::Kind::Reciprocal;
  std::optional<ObjectReader> schedule;
  if (r.has("schedule")) {
    schedule.emplace(r.child("schedule"));
    kind = pick(*schedule, "kind", schedule->get<std::string>("kind", "reciprocal"),
                {std::pair{"logarithm", CoolingSchedule::Kind::Logarithm},
                 std::pair{"reciprocal", CoolingSchedule::Kind::Reciprocal}});
  }
  AlgorithmSpec a = AlgorithmSpec::table_defaults(algorithm, kind);
  if (schedule) {
    if (kind == CoolingSchedule::Kind::Reciprocal) {
      a.schedule.alpha = schedule->get<double>("alpha", a.schedule.alpha);
    }
    a.schedule.floor = schedule->get<double>("floor", a.schedule.floor);
    schedule->finish();
  }

  if (r.has("proposal")) {
    ObjectReader p = r.child("proposal");
    a.proposal.kind = pick(p, "kind", p.get<std::string>("kind", "kpoint"),
                           {std::pair{"kpoint", ProposalConfig::Kind::KPoint},
                            std::pair{"full", ProposalConfig::Kind::Full}});
    if (a.proposal.kind == ProposalConfig::Kind::KPoint) {
      a.proposal.k_points = p.get<std::size_t>("k", a.proposal.k_points);
    } else {
      a.proposal.k_points = 0;
    }
    a.proposal.sigma0 = p.get<double>("sigma0", a.proposal.sigma0);
    a.proposal.decay = p.get<double>("decay", a.proposal.decay);
    a.proposal.max_attempts = p.get<std::size_t>("max_attempts", a.proposal.max_attempts);
    p.finish();
  }
  a.resampling = pick(r, "resampling", r.get<std::string>("resampling", "multinomial"),
                      {std::pair{"multinomial", ResamplingScheme::Multinomial},
                       std::pair{"systematic", ResamplingScheme::Systematic}});
  a.particles = r.get<std::size_t>("particles", a.particles);
  a.iterations = r.get<std::size_t>("iterations", a.iterations);
  // Duplicated starts only make sense at the default particle count.
  if (r.has("particles") && !r.has("distinct_starts")) a.distinct_starts = 0;
  a.distinct_starts = r.get<std::size_t>("distinct_starts", a.distinct_starts);
  a.label = r.get<std::string>("label", a.label);
  r.finish();
  return a;
}

}  // namespace

RunConfig parse_config(const Json& doc, const std::string& source,
                       const std::filesystem::path& base_dir) {
  ObjectReader r(doc, source);
  if (!r.has("schema_version")) r.fail("missing required key 'schema_version'");
  const int version = r.require<int>("schema_version");
  if (version != kSchemaVersion) {
    r.fail("unsupported schema_version " + std::to_string(version) + " (this build reads " +
           std::to_string(kSchemaVersion) + ")");
  }

  RunConfig cfg;
  cfg.echo = doc;
  ExperimentSpec& spec = cfg.spec;
  spec.name = r.get<std::string>("name", spec.name);
  if (!r.has("model")) r.fail("missing required key 'model'");
  spec.model = read_model(r.child("model"));
  if (r.has("loss")) spec.loss = read_loss(r.child("loss"));
  if (r.has("constraint")) spec.constraint = read_constraint(r.child("constraint"));
  if (r.has("dataset")) spec.dataset = read_dataset(r.child("dataset"), base_dir);
  if (r.has("start")) spec.start = read_start(r.child("start"));

  if (!r.has("algorithms")) r.fail("missing required key 'algorithms'");
  const Json& algs = r.raw("algorithms");
  if (!algs.is_array() || algs.empty()) r.fail("'algorithms' must be a non-empty array");
  for (std::size_t i = 0; i < algs.size(); ++i) {
    spec.algorithms.push_back(
        read_algorithm(ObjectReader(algs[i], source + ".algorithms[" + std::to_string(i) + "]")));
  }

  spec.replications = r.get<std::size_t>("replications", spec.replications);
  spec.seed = r.get<std::uint64_t>("seed", spec.seed);
  spec.conv_threshold_pct = r.get<double>("conv_threshold_pct", spec.conv_threshold_pct);
  cfg.progress_every = r.get<std::size_t>("progress_every", cfg.progress_every);
  r.finish();

  try {
    spec.validate();
  } catch (const InvalidInput& e) {
    throw ConfigError(source + ": " + e.what());
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return parse_config(doc, path.string(), path.parent_path());
}

}  // namespace smcsa::cli
