#pragma once

#include <json.hpp>

#include "gcl/blowup.hpp"
#include "gcl/boundary.hpp"
#include "gcl/covers.hpp"
#include "gcl/domain.hpp"
#include "gcl/function_class.hpp"
#include "gcl/levels.hpp"
#include "gcl/measure.hpp"
#include "gcl/partition.hpp"
#include "gcl/plane.hpp"
#include "gcl/schedule.hpp"
#include "gcl/stochastic.hpp"
#include "gcl/witness.hpp"

namespace gcl {

/// All result payloads are nlohmann ordered JSON so reruns serialize
/// byte-identically. Rationals are "num/den" strings; pattern keys are
/// bit-strings with character j = '1' when bit j of the mask is set.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const FiniteDomain& domain);
FiniteDomain domain_from_json(const Json& j);

Json to_json(const Measure& mu);
Measure measure_from_json(const Json& j);

Json to_json(const FunctionClass& cls);
FunctionClass function_class_from_json(const Json& j);

Json to_json(const SetFamily& family);
SetFamily set_family_from_json(const Json& j);

Json to_json(const Partition& pi);
Partition partition_from_json(const Json& j);

Json to_json(const Levels& levels);
Levels levels_from_json(const Json& j);

Json to_json(const IndependenceWitness& w);
Json to_json(const ShatterWitness& w);
Json to_json(const Bracket& b);
Json to_json(const CoverResult& r);
Json to_json(const ProjectivePlane& plane);
Json to_json(const PlaneAxiomReport& report);
Json to_json(const ScheduleBand& band);
Json to_json(const Schedule& schedule);
Json to_json(const BlowupReport& report);
Json to_json(const EmpiricalRun& run, bool include_samples = true);
Json to_json(const GcFailureReport& report);
Json to_json(const AlonCheck& check);

/// Plane adjacency text: one line per geometric line, point indices
/// space-separated.
std::string plane_adjacency_text(const ProjectivePlane& plane);

/// EmpiricalRun CSV: header n,deviation[,envelope].
std::string empirical_csv(const EmpiricalRun& run);

}  // namespace gcl
