#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "loomalg/report.hpp"
#include "loomalg/specfile.hpp"

using namespace loomalg;
using nlohmann::json;

namespace {

struct Args {
  std::string algebra;
  std::string sigma;
  std::vector<unsigned> m;
  std::vector<int> window;
  std::vector<int> core;
  std::string format = "text";
  std::string out;
  uint64_t seed = 20240817;
  unsigned samples = 50;
  bool structure_only = false;
  unsigned conductor = 1; // check-algebra only
};

std::string basename_of(const std::string& path) {
  size_t pos = path.find_last_of('/');
  return pos == std::string::npos ? path : path.substr(pos + 1);
}

std::string fixture_name(const Args& a) {
  std::string s = basename_of(a.algebra);
  if (!a.sigma.empty()) s += " + " + basename_of(a.sigma);
  return s;
}

unsigned product_of(const std::vector<unsigned>& m) {
  unsigned p = 1;
  for (unsigned x : m) p *= x;
  return p;
}

MultiloopAlgebra load_session(const Args& a) {
  if (a.m.empty()) throw std::invalid_argument("at least one --m order is required");
  unsigned conductor = product_of(a.m);
  FiniteAlgebra base = instantiate(parse_algebra_file(a.algebra), conductor);
  std::vector<SigmaMatrix> mats = parse_sigma_file(a.sigma);
  if (mats.size() != a.m.size())
    throw std::invalid_argument("sigma file declares " + std::to_string(mats.size()) +
                                " matrices but " + std::to_string(a.m.size()) +
                                " orders were given");
  std::vector<ExactMatrix> maps;
  maps.reserve(mats.size());
  for (const SigmaMatrix& m : mats) maps.push_back(instantiate(m, conductor));
  auto tuple = validate_automorphism_tuple(base, maps, a.m);
  return MultiloopAlgebra::create(std::move(base), std::move(tuple));
}

// Window flags broadcast a single radius across all variables.
Window resolve_window(const Args& a, size_t nvars) {
  std::vector<int> r = a.window;
  if (r.empty()) throw std::invalid_argument("--window is required here");
  if (r.size() == 1 && nvars > 1) r.assign(nvars, r[0]);
  if (r.size() != nvars)
    throw std::invalid_argument("--window needs one radius or one per variable");
  for (int x : r)
    if (x < 0) throw std::invalid_argument("window radii must be nonnegative");
  return Window(r);
}

Window resolve_core(const Args& a, const Window& w) {
  std::vector<int> r = a.core;
  if (r.empty()) {
    r.resize(w.radius.size());
    for (size_t j = 0; j < r.size(); ++j) r[j] = w.radius[j] / 2;
    return Window(r);
  }
  if (r.size() == 1 && w.radius.size() > 1) r.assign(w.radius.size(), r[0]);
  if (r.size() != w.radius.size())
    throw std::invalid_argument("--core needs one radius or one per variable");
  for (size_t j = 0; j < r.size(); ++j)
    if (r[j] < 0 || r[j] > w.radius[j])
      throw std::invalid_argument("core must sit inside the window");
  return Window(r);
}

void emit(const Args& a, const json& j, const std::string& text) {
  std::string payload = a.format == "json" ? j.dump(2) + "\n" : text;
  if (a.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(a.out);
  if (!f) throw std::invalid_argument("cannot write " + a.out);
  f << payload;
}

long long ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

int run_check_algebra(const Args& a) {
  FiniteAlgebra alg = instantiate(parse_algebra_file(a.algebra), a.conductor);
  json j = algebra_report_json(alg, basename_of(a.algebra));
  emit(a, j, algebra_report_text(j));
  return 0;
}

int run_eigenspaces(const Args& a) {
  MultiloopAlgebra ml = load_session(a);
  json j = eigenspace_report_json(ml, fixture_name(a));
  emit(a, j, eigenspace_report_text(j));
  return 0;
}

int run_table(const Args& a) {
  MultiloopAlgebra ml = load_session(a);
  Args with_default = a;
  if (with_default.window.empty())
    for (unsigned m : ml.orders()) with_default.window.push_back(static_cast<int>(m));
  Window w = resolve_window(with_default, ml.nvars());
  json j = multiloop_table_json(ml, w, fixture_name(a));
  emit(a, j, multiloop_table_text(j));
  return 0;
}

int run_descent(const Args& a) {
  auto t0 = std::chrono::steady_clock::now();
  MultiloopAlgebra ml = load_session(a);
  Window w = resolve_window(a, ml.nvars());
  GaloisCocycle c = cocycle_from_automorphisms(ml.base(), ml.twists());
  if (!check_cocycle(c)) {
    std::cerr << "automorphism tuple does not define a cocycle\n";
    return 1;
  }
  DescentComparison cmp = compare_with_multiloop(ml, c, w);
  json j = descent_report_json(cmp, fixture_name(a), w, ms_since(t0));
  emit(a, j, descent_report_text(j));
  return cmp.equal ? 0 : 1;
}

int run_centroid(const Args& a) {
  auto t0 = std::chrono::steady_clock::now();
  MultiloopAlgebra ml = load_session(a);
  Window w = resolve_window(a, ml.nvars());
  Window core = resolve_core(a, w);
  CentroidReport rep = verify_centroid(ml, w, core);
  json j = centroid_report_json(rep, fixture_name(a), w, core, ms_since(t0));
  emit(a, j, centroid_report_text(j));
  return rep.passed ? 0 : 1;
}

int run_derivations(const Args& a) {
  auto t0 = std::chrono::steady_clock::now();
  MultiloopAlgebra ml = load_session(a);
  Window w = resolve_window(a, ml.nvars());
  Window core = resolve_core(a, w);
  TheoremOptions opts;
  opts.seed = a.seed;
  if (a.structure_only) {
    opts.run_identities = false;
    opts.run_roundtrips = false;
  }
  TheoremReport rep = verify_theorem(ml, w, core, opts);
  json j = theorem_report_json(rep, fixture_name(a), w, core, a.seed, ms_since(t0));
  emit(a, j, theorem_report_text(j));
  return rep.passed ? 0 : 1;
}

int run_decompose(const Args& a) {
  auto t0 = std::chrono::steady_clock::now();
  MultiloopAlgebra ml = load_session(a);
  Window w = resolve_window(a, ml.nvars());
  Window core = resolve_core(a, w);
  TheoremOptions opts;
  opts.seed = a.seed;
  opts.run_structure = false;
  opts.run_identities = false;
  opts.roundtrip_samples = a.samples;
  TheoremReport rep = verify_theorem(ml, w, core, opts);
  json j = theorem_report_json(rep, fixture_name(a), w, core, a.seed, ms_since(t0));
  emit(a, j, theorem_report_text(j));
  return rep.passed ? 0 : 1;
}

void add_io_flags(CLI::App* sub, Args& a) {
  sub->add_option("--format", a.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", a.out, "write the report to this file instead of stdout");
}

void add_session_flags(CLI::App* sub, Args& a, bool need_window) {
  sub->add_option("--algebra", a.algebra, "algebra spec file")->required();
  sub->add_option("--sigma", a.sigma, "automorphism spec file")->required();
  sub->add_option("--m", a.m, "automorphism orders, one per variable")->required();
  auto* wopt = sub->add_option("--window", a.window,
                               "window radius, one value or one per variable");
  if (need_window) wopt->required();
  sub->add_option("--core", a.core, "core radius (default: half the window)");
  add_io_flags(sub, a);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for twisted multiloop algebras"};
  app.require_subcommand(1);
  int code = 0;

  Args check_args;
  auto* check = app.add_subcommand("check-algebra", "validate an algebra file and profile it");
  check->add_option("--algebra", check_args.algebra, "algebra spec file")->required();
  check->add_option("--conductor", check_args.conductor,
                    "cyclotomic conductor for coefficients (default 1)");
  add_io_flags(check, check_args);
  check->callback([&] { code = run_check_algebra(check_args); });

  Args eigen_args;
  auto* eigen = app.add_subcommand("eigenspaces", "show the simultaneous eigenspace bases");
  add_session_flags(eigen, eigen_args, false);
  eigen->callback([&] { code = run_eigenspaces(eigen_args); });

  Args table_args;
  auto* table = app.add_subcommand("multiloop-table",
                                   "tabulate graded blocks and class products");
  add_session_flags(table, table_args, false);
  table->callback([&] { code = run_table(table_args); });

  Args descent_args;
  auto* descent = app.add_subcommand(
      "descent-compare", "compare the fixed-point construction with the eigenspace one");
  add_session_flags(descent, descent_args, true);
  descent->callback([&] { code = run_descent(descent_args); });

  Args centroid_args;
  auto* centroid = app.add_subcommand("verify-centroid",
                                      "match the windowed centroid against homotheties");
  add_session_flags(centroid, centroid_args, true);
  centroid->callback([&] { code = run_centroid(centroid_args); });

  Args deriv_args;
  auto* deriv = app.add_subcommand("verify-derivations",
                                   "certify the splitting of windowed derivations");
  add_session_flags(deriv, deriv_args, true);
  deriv->add_option("--seed", deriv_args.seed, "seed for the sampled identity sections");
  deriv->add_flag("--structure-only", deriv_args.structure_only,
                  "skip the sampled identity and round-trip sections");
  deriv->callback([&] { code = run_derivations(deriv_args); });

  Args dec_args;
  auto* dec = app.add_subcommand("decompose",
                                 "split seeded synthetic derivations and check the round trip");
  add_session_flags(dec, dec_args, true);
  dec->add_option("--seed", dec_args.seed, "seed for the synthetic derivations");
  dec->add_option("--samples", dec_args.samples, "number of round trips (default 50)");
  dec->callback([&] { code = run_decompose(dec_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
