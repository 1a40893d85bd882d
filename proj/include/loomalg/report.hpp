#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "loomalg/descent.hpp"
#include "loomalg/verify.hpp"

namespace loomalg {

// Machine-readable reports. All numeric content is integral or an exact
// coefficient string; no floats anywhere, so serialization is bit-stable
// and re-parsing then re-serializing is the identity.

nlohmann::json degree_json(const Degree& d);
nlohmann::json window_json(const Window& w);

nlohmann::json algebra_report_json(const FiniteAlgebra& a, const std::string& fixture);

nlohmann::json eigenspace_report_json(const MultiloopAlgebra& ml, const std::string& fixture);

nlohmann::json multiloop_table_json(const MultiloopAlgebra& ml, const Window& w,
                                    const std::string& fixture);

nlohmann::json descent_report_json(const DescentComparison& cmp, const std::string& fixture,
                                   const Window& w, long long runtime_ms);

nlohmann::json centroid_report_json(const CentroidReport& rep, const std::string& fixture,
                                    const Window& w, const Window& core, long long runtime_ms);

nlohmann::json theorem_report_json(const TheoremReport& rep, const std::string& fixture,
                                   const Window& w, const Window& core, uint64_t seed,
                                   long long runtime_ms);

// Text renderings of the same content for terminal use.
std::string algebra_report_text(const nlohmann::json& j);
std::string eigenspace_report_text(const nlohmann::json& j);
std::string multiloop_table_text(const nlohmann::json& j);
std::string descent_report_text(const nlohmann::json& j);
std::string centroid_report_text(const nlohmann::json& j);
std::string theorem_report_text(const nlohmann::json& j);

} // namespace loomalg
