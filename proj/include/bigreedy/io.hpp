#pragma once

#include <json.hpp>

#include <memory>
#include <string>

#include "bigreedy/envelope.hpp"
#include "bigreedy/experiment.hpp"
#include "bigreedy/objective.hpp"
#include "bigreedy/weak_bigreedy.hpp"

namespace bigreedy {

using Json = nlohmann::ordered_json;

/// An objective together with its provenance (family tag and generator
/// seed), as stored in instance files.
struct StoredInstance {
  std::string kind;
  int n = 0;
  std::uint64_t seed = 0;
  std::unique_ptr<Objective> objective;
};

/// Instance files carry matrices as row-major float arrays; doubles are
/// emitted in shortest round-trip decimal form, so save/load reproduces the
/// exact bits.
Json instance_to_json(const std::string& kind, std::uint64_t seed, const Objective& obj);
StoredInstance instance_from_json(const Json& j);

void save_instance(const std::string& path, const std::string& kind, std::uint64_t seed,
                   const Objective& obj);
StoredInstance load_instance(const std::string& path);

/// Per-coordinate trace of a randomized sweep; deterministic steps carry
/// null alpha/beta.
Json trace_to_json(const std::vector<CoordinateTrace>& trace);

Json report_to_json(const TrialReport& report);
Json validation_to_json(const SubmodularityReport& report);

Json experiment_to_json(const ExperimentResult& result);

/// Rows family,n,trial,algorithm,value,oracle_calls (header included).
std::string experiment_to_csv(const ExperimentResult& result);

/// Debug dump of one coordinate game for offline plotting.
Json envelope_debug_json(std::span<const CurveSample> samples, const Envelope& envelope,
                         const MixedStrategy& strategy);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace bigreedy
