#include "loomalg/report.hpp"

#include <sstream>

namespace loomalg {

using nlohmann::json;

namespace {

json vec_json(const FiniteAlgebra& a, const Vec& v) {
  json out = json::array();
  for (const Cyclotomic& c : v) out.push_back(c.str());
  (void)a;
  return out;
}

std::vector<unsigned> class_digits(const MultiloopAlgebra& ml, size_t cls) {
  std::vector<unsigned> digits(ml.nvars());
  for (size_t j = 0; j < ml.nvars(); ++j) {
    digits[j] = static_cast<unsigned>(cls % ml.orders()[j]);
    cls /= ml.orders()[j];
  }
  return digits;
}

std::string verdict(const json& v) {
  if (v.is_null()) return "skipped";
  return v.get<bool>() ? "PASS" : "FAIL";
}

} // namespace

json degree_json(const Degree& d) {
  json out = json::array();
  for (int x : d) out.push_back(x);
  return out;
}

json window_json(const Window& w) {
  json out = json::array();
  for (int x : w.radius) out.push_back(x);
  return out;
}

json algebra_report_json(const FiniteAlgebra& a, const std::string& fixture) {
  json j;
  j["fixture"] = fixture;
  j["dim"] = a.dim();
  j["basis"] = a.basis_names();
  j["conductor"] = a.conductor();
  j["lie"] = a.is_lie();
  j["associative"] = a.is_associative();
  j["perfect"] = is_perfect(a);
  std::vector<ExactMatrix> ctd = centroid_basis(a);
  j["centroid_dim"] = ctd.size();
  j["central"] = is_central(a);
  j["derivation_dim"] = algebra_derivations(a).size();
  return j;
}

json eigenspace_report_json(const MultiloopAlgebra& ml, const std::string& fixture) {
  json j;
  j["fixture"] = fixture;
  json orders = json::array();
  for (unsigned m : ml.orders()) orders.push_back(m);
  j["orders"] = orders;
  j["conductor"] = ml.conductor();
  json classes = json::array();
  for (size_t c = 0; c < ml.class_count(); ++c) {
    json entry;
    entry["digits"] = class_digits(ml, c);
    entry["dim"] = ml.class_dim(c);
    json basis = json::array();
    for (const Vec& v : ml.class_basis(c)) basis.push_back(vec_json(ml.base(), v));
    entry["basis"] = basis;
    classes.push_back(entry);
  }
  j["classes"] = classes;
  return j;
}

json multiloop_table_json(const MultiloopAlgebra& ml, const Window& w,
                          const std::string& fixture) {
  json j;
  j["fixture"] = fixture;
  j["window"] = window_json(w);
  json degrees = json::array();
  for (const Degree& a : w.degrees()) {
    json entry;
    entry["degree"] = degree_json(a);
    entry["class"] = ml.class_of(a);
    entry["dim"] = ml.block_dim(a);
    degrees.push_back(entry);
  }
  j["degrees"] = degrees;
  json products = json::array();
  for (size_t c1 = 0; c1 < ml.class_count(); ++c1)
    for (size_t c2 = 0; c2 < ml.class_count(); ++c2) {
      size_t d1 = ml.class_dim(c1), d2 = ml.class_dim(c2);
      size_t d3 = ml.class_dim(ml.class_sum(c1, c2));
      if (d1 == 0 || d2 == 0) continue;
      const std::vector<Cyclotomic>& t = ml.class_tensor(c1, c2);
      json entry;
      entry["left"] = c1;
      entry["right"] = c2;
      entry["target"] = ml.class_sum(c1, c2);
      json tensor = json::array();
      for (size_t i = 0; i < d1; ++i) {
        json row = json::array();
        for (size_t jj = 0; jj < d2; ++jj) {
          json cell = json::array();
          for (size_t k = 0; k < d3; ++k) cell.push_back(t[(i * d2 + jj) * d3 + k].str());
          row.push_back(cell);
        }
        tensor.push_back(row);
      }
      entry["tensor"] = tensor;
      products.push_back(entry);
    }
  j["products"] = products;
  return j;
}

json descent_report_json(const DescentComparison& cmp, const std::string& fixture,
                         const Window& w, long long runtime_ms) {
  json j;
  j["fixture"] = fixture;
  j["window"] = window_json(w);
  j["runtime_ms"] = runtime_ms;
  j["equal"] = cmp.equal;
  j["degrees_checked"] = cmp.degrees_checked;
  j["total_dim"] = cmp.total_dim;
  j["detail"] = cmp.detail;
  return j;
}

json centroid_report_json(const CentroidReport& rep, const std::string& fixture, const Window& w,
                          const Window& core, long long runtime_ms) {
  json j;
  j["fixture"] = fixture;
  j["window"] = window_json(w);
  j["core"] = window_json(core);
  j["runtime_ms"] = runtime_ms;
  j["base_centroid_dim"] = rep.base_centroid_dim;
  j["commuting_dim"] = rep.commuting_dim;
  j["verdicts"] = {{"membership", rep.membership},
                   {"coverage", rep.coverage},
                   {"degrees", rep.degrees_ok}};
  json shifts = json::array();
  for (const CentroidShiftReport& sr : rep.shifts) {
    json entry;
    entry["shift"] = degree_json(sr.shift);
    entry["solution_dim"] = sr.solution_dim;
    entry["homothety_rank"] = sr.homothety_rank;
    entry["integral"] = sr.integral;
    entry["membership"] = sr.membership;
    entry["coverage"] = sr.coverage;
    shifts.push_back(entry);
  }
  j["shifts"] = shifts;
  j["passed"] = rep.passed;
  j["detail"] = rep.detail;
  return j;
}

json theorem_report_json(const TheoremReport& rep, const std::string& fixture, const Window& w,
                         const Window& core, uint64_t seed, long long runtime_ms) {
  json j;
  j["fixture"] = fixture;
  j["window"] = window_json(w);
  j["core"] = window_json(core);
  j["seed"] = seed;
  j["runtime_ms"] = runtime_ms;
  j["gate"] = {{"ok", rep.gate_ok}, {"reason", rep.gate_reason}};

  auto section = [](const IdentitySection& s) {
    return json{{"ok", s.ok}, {"comparisons", s.comparisons}, {"detail", s.detail}};
  };

  json verdicts;
  verdicts["membership"] = rep.ran_structure ? json(rep.membership) : json();
  verdicts["directness"] = rep.ran_structure ? json(rep.directness) : json();
  verdicts["section"] = rep.ran_identities
                            ? json(rep.lift_roundtrip.ok && rep.bracket_identity.ok &&
                                   rep.homothety_identity.ok)
                            : json();
  verdicts["ideal"] = rep.ran_identities ? json(rep.inner_identity.ok) : json();
  j["verdicts"] = verdicts;
  j["coverage"] = rep.ran_structure ? json(rep.coverage) : json();
  j["total_solutions"] = rep.total_solutions;
  j["total_generators"] = rep.total_generators;

  json shifts = json::array();
  for (const ShiftReport& sr : rep.shifts) {
    json entry;
    entry["shift"] = degree_json(sr.shift);
    entry["solution_dim"] = sr.solution_dim;
    entry["core_rank"] = sr.core_rank;
    entry["inner_rank"] = sr.inner_rank;
    entry["rho_rank"] = sr.rho_rank;
    entry["joint_rank"] = sr.joint_rank;
    entry["membership"] = sr.membership;
    entry["coverage"] = sr.coverage;
    entry["direct"] = sr.direct;
    shifts.push_back(entry);
  }
  j["shifts"] = shifts;

  json sections;
  sections["lift_roundtrip"] = rep.ran_identities ? section(rep.lift_roundtrip) : json();
  sections["bracket"] = rep.ran_identities ? section(rep.bracket_identity) : json();
  sections["homothety"] = rep.ran_identities ? section(rep.homothety_identity) : json();
  sections["inner"] = rep.ran_identities ? section(rep.inner_identity) : json();
  sections["roundtrips"] = rep.ran_roundtrips ? section(rep.roundtrips) : json();
  j["sections"] = sections;

  j["passed"] = rep.passed;
  j["detail"] = rep.detail;
  return j;
}

std::string algebra_report_text(const json& j) {
  std::ostringstream out;
  out << "algebra " << j["fixture"].get<std::string>() << "\n";
  out << "  dim " << j["dim"] << ", kind "
      << (j["lie"].get<bool>() ? "lie" : j["associative"].get<bool>() ? "associative" : "plain")
      << ", conductor " << j["conductor"] << "\n";
  out << "  perfect: " << (j["perfect"].get<bool>() ? "yes" : "no") << "\n";
  out << "  centroid dim " << j["centroid_dim"] << " ("
      << (j["central"].get<bool>() ? "central" : "not central") << ")\n";
  out << "  derivation dim " << j["derivation_dim"] << "\n";
  return out.str();
}

std::string eigenspace_report_text(const json& j) {
  std::ostringstream out;
  out << "eigenspaces of " << j["fixture"].get<std::string>() << " (conductor "
      << j["conductor"] << ")\n";
  for (const json& c : j["classes"]) {
    out << "  class (";
    bool first = true;
    for (const json& d : c["digits"]) {
      if (!first) out << ",";
      out << d;
      first = false;
    }
    out << "): dim " << c["dim"] << "\n";
    for (const json& v : c["basis"]) {
      out << "    [";
      bool f2 = true;
      for (const json& e : v) {
        if (!f2) out << ", ";
        out << e.get<std::string>();
        f2 = false;
      }
      out << "]\n";
    }
  }
  return out.str();
}

std::string multiloop_table_text(const json& j) {
  std::ostringstream out;
  out << "multiloop table for " << j["fixture"].get<std::string>() << "\n";
  out << "  degree blocks in the window:\n";
  for (const json& d : j["degrees"])
    out << "    " << d["degree"].dump() << " class " << d["class"] << " dim " << d["dim"]
        << "\n";
  out << "  class products (tensor entries [left][right][target]):\n";
  for (const json& p : j["products"])
    out << "    " << p["left"] << " * " << p["right"] << " -> " << p["target"] << ": "
        << p["tensor"].dump() << "\n";
  return out.str();
}

std::string descent_report_text(const json& j) {
  std::ostringstream out;
  out << "descent comparison for " << j["fixture"].get<std::string>() << " on window "
      << j["window"].dump() << "\n";
  if (j["equal"].get<bool>())
    out << "  fixed-point and eigenspace constructions agree on " << j["degrees_checked"]
        << " degrees (total dim " << j["total_dim"] << ")\n";
  else
    out << "  MISMATCH: " << j["detail"].get<std::string>() << "\n";
  out << "  runtime " << j["runtime_ms"] << " ms\n";
  return out.str();
}

std::string centroid_report_text(const json& j) {
  std::ostringstream out;
  out << "windowed centroid for " << j["fixture"].get<std::string>() << " on window "
      << j["window"].dump() << " core " << j["core"].dump() << "\n";
  out << "  base centroid dim " << j["base_centroid_dim"] << ", twist-commuting dim "
      << j["commuting_dim"] << "\n";
  const json& v = j["verdicts"];
  out << "  membership " << verdict(v["membership"]) << ", coverage " << verdict(v["coverage"])
      << ", degrees " << verdict(v["degrees"]) << "\n";
  for (const json& s : j["shifts"])
    if (s["solution_dim"].get<size_t>() > 0 || s["homothety_rank"].get<size_t>() > 0)
      out << "    shift " << s["shift"].dump() << ": solutions " << s["solution_dim"]
          << ", homotheties " << s["homothety_rank"] << "\n";
  out << "  overall: " << (j["passed"].get<bool>() ? "PASS" : "FAIL");
  if (!j["detail"].get<std::string>().empty()) out << " (" << j["detail"].get<std::string>() << ")";
  out << "\n  runtime " << j["runtime_ms"] << " ms\n";
  return out.str();
}

std::string theorem_report_text(const json& j) {
  std::ostringstream out;
  out << "derivation theorem check for " << j["fixture"].get<std::string>() << " on window "
      << j["window"].dump() << " core " << j["core"].dump() << " seed " << j["seed"] << "\n";
  const json& gate = j["gate"];
  if (!gate["ok"].get<bool>()) {
    out << "  REFUSED: " << gate["reason"].get<std::string>() << "\n";
    return out.str();
  }
  const json& v = j["verdicts"];
  out << "  membership " << verdict(v["membership"]) << "\n";
  out << "  directness " << verdict(v["directness"]) << "\n";
  out << "  section    " << verdict(v["section"]) << "\n";
  out << "  ideal      " << verdict(v["ideal"]) << "\n";
  out << "  windowed solutions " << j["total_solutions"] << ", generators "
      << j["total_generators"] << "\n";
  for (const json& s : j["shifts"])
    out << "    shift " << s["shift"].dump() << ": solutions " << s["solution_dim"]
        << ", core rank " << s["core_rank"] << ", inner " << s["inner_rank"] << " + lifted "
        << s["rho_rank"] << " = joint " << s["joint_rank"] << "\n";
  const json& sec = j["sections"];
  auto line = [&](const char* name, const json& s) {
    if (s.is_null()) return;
    out << "  " << name << ": " << (s["ok"].get<bool>() ? "PASS" : "FAIL") << " ("
        << s["comparisons"] << " comparisons)";
    if (!s["detail"].get<std::string>().empty())
      out << " " << s["detail"].get<std::string>();
    out << "\n";
  };
  line("lift round trips", sec["lift_roundtrip"]);
  line("bracket identity", sec["bracket"]);
  line("homothety identity", sec["homothety"]);
  line("inner identity", sec["inner"]);
  line("decompositions", sec["roundtrips"]);
  out << "  overall: " << (j["passed"].get<bool>() ? "PASS" : "FAIL");
  if (!j["detail"].get<std::string>().empty()) out << " (" << j["detail"].get<std::string>() << ")";
  out << "\n  runtime " << j["runtime_ms"] << " ms\n";
  return out.str();
}

} // namespace loomalg
