#include "bigreedy/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bigreedy {

namespace {

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) rows.push_back(m(r, c));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, int n) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("instance file: matrix must be a flat row-major array of n*n floats");
  }
  Matrix m(n, n);
  std::size_t k = 0;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = j[k++].get<double>();
  }
  return m;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Vector vector_from_json(const Json& j, int n) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("instance file: vector must be an array of n floats");
  }
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = j[i].get<double>();
  return v;
}

}  // namespace

Json instance_to_json(const std::string& kind, std::uint64_t seed, const Objective& obj) {
  Json j;
  j["kind"] = kind;
  j["n"] = obj.dimension();
  j["seed"] = seed;
  if (const auto* quad = dynamic_cast<const QuadraticObjective*>(&obj)) {
    j["H"] = matrix_to_json(quad->H());
    j["h"] = vector_to_json(quad->h());
    j["c"] = quad->c();
  } else if (const auto* softmax = dynamic_cast<const SoftmaxObjective*>(&obj)) {
    j["L"] = matrix_to_json(softmax->L());
  } else {
    throw std::invalid_argument("instance_to_json: only quadratic and softmax objectives are storable");
  }
  return j;
}

StoredInstance instance_from_json(const Json& j) {
  StoredInstance inst;
  inst.kind = j.at("kind").get<std::string>();
  inst.n = j.at("n").get<int>();
  inst.seed = j.at("seed").get<std::uint64_t>();
  if (inst.n <= 0) throw std::invalid_argument("instance file: n must be positive");

  if (inst.kind == "softmax") {
    inst.objective = std::make_unique<SoftmaxObjective>(matrix_from_json(j.at("L"), inst.n));
  } else if (inst.kind == "nqp-strong" || inst.kind == "nqp-weak") {
    inst.objective = std::make_unique<QuadraticObjective>(matrix_from_json(j.at("H"), inst.n),
                                                          vector_from_json(j.at("h"), inst.n),
                                                          j.at("c").get<double>());
  } else {
    throw std::invalid_argument("instance file: unknown kind '" + inst.kind + "'");
  }
  return inst;
}

void save_instance(const std::string& path, const std::string& kind, std::uint64_t seed,
                   const Objective& obj) {
  write_text_file(path, instance_to_json(kind, seed, obj).dump(2) + "\n");
}

StoredInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  Json j;
  in >> j;
  return instance_from_json(j);
}

Json trace_to_json(const std::vector<CoordinateTrace>& trace) {
  Json steps = Json::array();
  for (const CoordinateTrace& step : trace) {
    Json s;
    s["i"] = step.i;
    s["Z_l"] = step.z_lo;
    s["Z_u"] = step.z_hi;
    if (step.randomized) {
      s["alpha"] = step.alpha;
      s["beta"] = step.beta;
    } else {
      s["alpha"] = nullptr;
      s["beta"] = nullptr;
    }
    s["lambda"] = step.lambda;
    s["z1"] = step.z1;
    s["z2"] = step.z2;
    s["chosen"] = step.chosen;
    steps.push_back(std::move(s));
  }
  Json j;
  j["schema"] = 1;
  j["steps"] = std::move(steps);
  return j;
}

Json report_to_json(const TrialReport& report) {
  Json j;
  j["schema"] = 1;
  j["instance_seed"] = report.instance_seed;
  j["algorithm"] = report.algorithm;
  j["objective_value"] = report.objective_value;
  j["oracle_calls"] = report.oracle_calls;
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

Json validation_to_json(const SubmodularityReport& report) {
  Json j;
  j["schema"] = 1;
  j["variant"] = report.variant == Variant::strong ? "strong" : "weak";
  j["probes"] = report.probes;
  j["passed"] = report.passed;
  if (std::isfinite(report.worst_violation)) {
    j["worst_violation"] = report.worst_violation;
  } else {
    j["worst_violation"] = nullptr;  // nothing was checked (e.g. weak with n=1)
  }
  j["tolerance"] = report.tolerance;
  return j;
}

Json experiment_to_json(const ExperimentResult& result) {
  Json j;
  j["schema"] = 1;
  j["family"] = family_name(result.config.family);
  j["n"] = result.config.n;
  j["trials"] = result.config.trials;
  j["epsilon"] = result.config.epsilon;
  j["master_seed"] = result.config.master_seed;
  Json algos = Json::array();
  for (const Algorithm a : result.config.algorithms) algos.push_back(algorithm_name(a));
  j["algorithms"] = std::move(algos);

  Json rows = Json::array();
  for (const TrialRecord& record : result.trials) {
    Json row;
    row["trial"] = record.trial;
    row["seed"] = record.seed;
    for (std::size_t a = 0; a < record.reports.size(); ++a) {
      const TrialReport& report = record.reports[a];
      Json cell;
      cell["value"] = report.objective_value;
      cell["oracle_calls"] = report.oracle_calls;
      cell["elapsed_ms"] = report.elapsed_ms;
      row[report.algorithm] = std::move(cell);
    }
    rows.push_back(std::move(row));
  }
  j["results"] = std::move(rows);

  Json summary;
  for (const auto& [name, stats] : result.summary) {
    Json s;
    s["mean"] = stats.mean;
    s["min"] = stats.min;
    s["q1"] = stats.q1;
    s["median"] = stats.median;
    s["q3"] = stats.q3;
    s["max"] = stats.max;
    summary[name] = std::move(s);
  }
  j["summary"] = std::move(summary);
  j["elapsed_ms"] = result.elapsed_ms;
  return j;
}

std::string experiment_to_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << "family,n,trial,algorithm,value,oracle_calls\n";
  const std::string family = family_name(result.config.family);
  for (const TrialRecord& record : result.trials) {
    for (const TrialReport& report : record.reports) {
      out << family << ',' << result.config.n << ',' << record.trial << ',' << report.algorithm
          << ',' << Json(report.objective_value).dump() << ',' << report.oracle_calls << '\n';
    }
  }
  return out.str();
}

Json envelope_debug_json(std::span<const CurveSample> samples, const Envelope& envelope,
                         const MixedStrategy& strategy) {
  const auto sample_json = [](const CurveSample& s) {
    Json j;
    j["z"] = s.z;
    j["g"] = s.g;
    j["h"] = s.h;
    return j;
  };
  Json j;
  j["schema"] = 1;
  Json in = Json::array();
  for (const CurveSample& s : samples) in.push_back(sample_json(s));
  j["samples"] = std::move(in);
  Json hull = Json::array();
  for (const CurveSample& v : envelope.vertices) hull.push_back(sample_json(v));
  j["envelope"] = std::move(hull);
  j["alpha"] = envelope.alpha;
  j["beta"] = envelope.beta;
  Json strat;
  strat["lambda"] = strategy.lambda;
  strat["support"] = strategy.support;
  strat["p1"] = sample_json(strategy.p1);
  strat["p2"] = sample_json(strategy.p2);
  j["strategy"] = std::move(strat);
  return j;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << contents;
  if (!out) throw std::runtime_error("failed writing file: " + path);
}

}  // namespace bigreedy
