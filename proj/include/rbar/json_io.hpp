#pragma once

#include "rbar/almeasure.hpp"
#include "rbar/frequency.hpp"
#include "rbar/harmonic.hpp"
#include "rbar/measure.hpp"
#include "rbar/projlim.hpp"
#include "rbar/su2.hpp"

#include <json.hpp>

#include <string>

namespace rbar {

using Json = nlohmann::ordered_json;

// CLI-facing wire formats.  Rationals travel as "p/q" strings so results
// round-trip exactly; floating values are printed with 17 significant
// digits by dump_json_17.

ContextPtr context_from_json(const Json& j);
Frequency frequency_from_json(const Json& j, const ContextPtr& ctx);
FrequencyTuple tuple_from_json(const Json& j, const ContextPtr& ctx);
RBarPoint rbar_point_from_json(const Json& j, const ContextPtr& ctx);
LevelPoint level_point_from_json(const Json& j);
APPolynomial ap_from_json(const Json& j, const ContextPtr& ctx);
C0Function c0_from_json(const Json& j);
QuantumFunction function_from_json(const Json& j, const ContextPtr& ctx);
Parametrization parametrization_from_json(const Json& j);
MeasureDescriptor measure_from_json(const Json& j);
QuadratureConfig quad_from_json(const Json& j);
DecompositionSpec spec_from_json(const Json& j);
Vec3 vec3_from_json(const Json& j);

Json to_json(const Frequency& f);
Json to_json(const FrequencyTuple& t);
Json to_json(const LevelPoint& p);
Json to_json(const ConsistencyReport& r);
Json to_json(const SeparationResult& r);
Json to_json(const CircleLemmaReport& r);
Json to_json(const MomentPanelReport& r);
Json to_json(const JonsReport& r);
Json to_json(const Mat2& m);
Json complex_to_json(Complex v);

/// Deterministic serialization with floats at 17 significant digits.
std::string dump_json_17(const Json& j, int indent = 2);

}  // namespace rbar
