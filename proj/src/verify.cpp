#include "loomalg/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

namespace loomalg {

namespace {

struct Sampler {
  std::mt19937_64 rng;
  explicit Sampler(uint64_t seed) : rng(seed) {}

  long long integer(long long lo, long long hi) {
    std::uniform_int_distribution<long long> d(lo, hi);
    return d(rng);
  }

  Cyclotomic coefficient(unsigned conductor) {
    long long num = 0;
    while (num == 0) num = integer(-9, 9);
    long long den = integer(1, 4);
    Cyclotomic c = Cyclotomic::from_rational(conductor, Rational(num, den));
    if (conductor > 2) c *= Cyclotomic::root_power(conductor, integer(0, conductor - 1));
    return c;
  }

  // A single-term derivation c * t^b theta_j whose degree shift fits the box.
  LaurentDerivation monomial_derivation(const MultiloopAlgebra& ml, const Window& w,
                                        int expo_range, size_t* var = nullptr,
                                        Degree* shift = nullptr) {
    size_t n = ml.nvars();
    while (true) {
      Exponents b(n);
      bool fits = true;
      for (size_t k = 0; k < n; ++k) {
        b[k] = integer(-expo_range, expo_range);
        if (std::abs(b[k]) * static_cast<long long>(ml.orders()[k]) > w.radius[k]) fits = false;
      }
      if (!fits) continue;
      size_t j = static_cast<size_t>(integer(0, static_cast<long long>(n) - 1));
      LaurentDerivation d(n, ml.conductor());
      d.coeff(j).add_term(b, coefficient(ml.conductor()));
      if (var) *var = j;
      if (shift) {
        shift->assign(n, 0);
        for (size_t k = 0; k < n; ++k)
          (*shift)[k] = static_cast<int>(b[k]) * static_cast<int>(ml.orders()[k]);
      }
      return d;
    }
  }

  // A homogeneous element at a degree within the given box, with a nonzero
  // eigenclass; coordinates are random and not all zero.
  bool homogeneous_element(const MultiloopAlgebra& ml, const std::vector<int>& box, Degree* deg,
                           Vec* coords) {
    for (int tries = 0; tries < 64; ++tries) {
      Degree g(ml.nvars());
      for (size_t k = 0; k < ml.nvars(); ++k)
        g[k] = static_cast<int>(integer(-box[k], box[k]));
      size_t d = ml.block_dim(g);
      if (d == 0) continue;
      Vec v = zero_vec(d, ml.conductor());
      bool nonzero = false;
      for (size_t i = 0; i < d; ++i) {
        if (integer(0, 1)) continue;
        v[i] = coefficient(ml.conductor());
        nonzero = true;
      }
      if (!nonzero) v[0] = coefficient(ml.conductor());
      *deg = g;
      *coords = v;
      return true;
    }
    return false;
  }
};

Degree single_shift(const WindowedMap& m) {
  auto s = m.shifts();
  if (s.size() != 1) throw std::logic_error("expected a single-shift map");
  return *s.begin();
}

// Blocks of the commutator [f, g] from source c, for single-shift maps.
ExactMatrix commutator_block(const MultiloopAlgebra& ml, const WindowedMap& f, const Degree& sf,
                             const WindowedMap& g, const Degree& sg, const Degree& c) {
  Degree cg = degree_add(c, sg), cf = degree_add(c, sf);
  Degree end = degree_add(cf, sg);
  return block_or_zero(f, ml, cg, end) * block_or_zero(g, ml, c, cg) -
         block_or_zero(g, ml, cf, end) * block_or_zero(f, ml, c, cf);
}

bool commutator_visible(const Window& w, const Degree& c, const Degree& sf, const Degree& sg) {
  Degree cf = degree_add(c, sf), cg = degree_add(c, sg);
  Degree end = degree_add(cf, sg);
  return w.contains(c) && w.contains(cf) && w.contains(cg) && w.contains(end);
}

IdentitySection section_lift_roundtrip(const MultiloopAlgebra& ml, const Window& w,
                                       const Window& core, const TheoremOptions& opts) {
  IdentitySection out;
  Sampler sampler(opts.seed ^ 0x11d1);
  for (unsigned trial = 0; trial < opts.monomial_samples; ++trial) {
    LaurentDerivation d = sampler.monomial_derivation(ml, w, opts.sample_expo);
    WindowedMap lifted = lift_derivation(ml, w, d);
    std::string why;
    auto back = induced_base_derivation(ml, w, core, lifted, &why);
    if (!back) {
      out.ok = false;
      out.detail = "probe failed on a sampled monomial: " + why;
      return out;
    }
    if (*back != d) {
      out.ok = false;
      out.detail = "probe returned a different derivation for " + d.str();
      return out;
    }
    ++out.comparisons;
  }
  if (out.comparisons == 0) {
    out.ok = false;
    out.detail = "no round trips were run";
  }
  return out;
}

IdentitySection section_bracket(const MultiloopAlgebra& ml, const Window& w, const Window& core,
                                const TheoremOptions& opts) {
  IdentitySection out;
  Sampler sampler(opts.seed ^ 0x2bb2);
  for (unsigned trial = 0; trial < opts.pair_samples; ++trial) {
    Degree s1, s2;
    LaurentDerivation d1 = sampler.monomial_derivation(ml, w, opts.sample_expo, nullptr, &s1);
    LaurentDerivation d2 = sampler.monomial_derivation(ml, w, opts.sample_expo, nullptr, &s2);
    WindowedMap f = lift_derivation(ml, w, d1);
    WindowedMap g = lift_derivation(ml, w, d2);
    WindowedMap rhs = lift_derivation(ml, w, derivation_bracket(d1, d2));
    Degree s12 = degree_add(s1, s2);
    for (const Degree& c : core.degrees()) {
      if (ml.block_dim(c) == 0 || !commutator_visible(w, c, s1, s2)) continue;
      ExactMatrix lhs = commutator_block(ml, f, s1, g, s2, c);
      if (lhs != block_or_zero(rhs, ml, c, degree_add(c, s12))) {
        out.ok = false;
        out.detail = "bracket identity fails at source " + degree_str(c);
        return out;
      }
      ++out.comparisons;
    }
  }
  if (out.comparisons == 0) {
    out.ok = false;
    out.detail = "bracket identity was never visible";
  }
  return out;
}

IdentitySection section_homothety(const MultiloopAlgebra& ml, const Window& w,
                                  const Window& core, const TheoremOptions& opts) {
  IdentitySection out;
  Sampler sampler(opts.seed ^ 0x3cc3);
  size_t n = ml.nvars();
  for (unsigned trial = 0; trial < opts.pair_samples; ++trial) {
    Degree s;
    LaurentDerivation d = sampler.monomial_derivation(ml, w, opts.sample_expo, nullptr, &s);
    // Random ring monomial r = c * t^b with its shift inside the box.
    Exponents b(n);
    Degree h(n);
    bool fits = true;
    for (size_t k = 0; k < n; ++k) {
      b[k] = sampler.integer(-opts.sample_expo, opts.sample_expo);
      h[k] = static_cast<int>(b[k]) * static_cast<int>(ml.orders()[k]);
      if (std::abs(h[k]) > w.radius[k]) fits = false;
    }
    if (!fits) continue;
    LaurentPoly r = LaurentPoly::monomial(n, ml.conductor(), b, sampler.coefficient(ml.conductor()));
    WindowedMap f = lift_derivation(ml, w, d);
    WindowedMap chi = ring_poly_map(ml, w, r);
    WindowedMap rhs = ring_poly_map(ml, w, d.apply(r));
    Degree sh = degree_add(s, h);
    for (const Degree& c : core.degrees()) {
      if (ml.block_dim(c) == 0 || !commutator_visible(w, c, s, h)) continue;
      ExactMatrix lhs = commutator_block(ml, f, s, chi, h, c);
      if (lhs != block_or_zero(rhs, ml, c, degree_add(c, sh))) {
        out.ok = false;
        out.detail = "homothety identity fails at source " + degree_str(c);
        return out;
      }
      ++out.comparisons;
    }
  }
  if (out.comparisons == 0) {
    out.ok = false;
    out.detail = "homothety identity was never visible";
  }
  return out;
}

IdentitySection section_inner(const MultiloopAlgebra& ml, const Window& w, const Window& core,
                              const TheoremOptions& opts) {
  IdentitySection out;
  Sampler sampler(opts.seed ^ 0x4dd4);
  std::vector<int> box(ml.nvars());
  for (size_t k = 0; k < ml.nvars(); ++k)
    box[k] = std::min(w.radius[k], opts.sample_expo * static_cast<int>(ml.orders()[k]));
  for (unsigned trial = 0; trial < opts.pair_samples; ++trial) {
    Degree s;
    size_t var = 0;
    LaurentDerivation d = sampler.monomial_derivation(ml, w, opts.sample_expo, &var, &s);
    Degree g;
    Vec z;
    if (!sampler.homogeneous_element(ml, box, &g, &z)) continue;
    WindowedMap f = lift_derivation(ml, w, d);
    WindowedMap az = adjoint_map(ml, w, g, z);
    // The lift applied to the homogeneous element z (x) t^{g/m}: the ring
    // part acts on the fractional monomial, scaling by g_j / m_j per term.
    Degree gs = degree_add(g, s);
    Vec zprime = zero_vec(z.size(), ml.conductor());
    for (const auto& [eb, coeff] : d.coeff(var).terms()) {
      Cyclotomic scalar = coeff;
      scalar.scale(Rational(g[var], static_cast<int>(ml.orders()[var])));
      zprime = vec_add(zprime, vec_scale(z, scalar));
    }
    WindowedMap rhs = adjoint_map(ml, w, gs, zprime);
    for (const Degree& c : core.degrees()) {
      if (ml.block_dim(c) == 0 || !commutator_visible(w, c, s, g)) continue;
      ExactMatrix lhs = commutator_block(ml, f, s, az, g, c);
      if (lhs != block_or_zero(rhs, ml, c, degree_add(c, gs))) {
        out.ok = false;
        out.detail = "inner identity fails at source " + degree_str(c);
        return out;
      }
      ++out.comparisons;
    }
  }
  if (out.comparisons == 0) {
    out.ok = false;
    out.detail = "inner identity was never visible";
  }
  return out;
}

IdentitySection section_roundtrips(const MultiloopAlgebra& ml, const Window& w,
                                   const Window& core, const TheoremOptions& opts) {
  IdentitySection out;
  Sampler sampler(opts.seed ^ 0x5ee5);
  std::vector<int> box(ml.nvars());
  for (size_t k = 0; k < ml.nvars(); ++k) {
    box[k] = w.radius[k] - core.radius[k];
    if (box[k] < 0) box[k] = 0;
  }
  for (unsigned trial = 0; trial < opts.roundtrip_samples; ++trial) {
    LaurentDerivation d(ml.nvars(), ml.conductor());
    long long terms = sampler.integer(1, 2);
    for (long long t = 0; t < terms; ++t) {
      LaurentDerivation mono = sampler.monomial_derivation(ml, w, opts.sample_expo);
      d += mono;
    }
    std::map<Degree, Vec> parts;
    long long zcount = sampler.integer(1, 2);
    for (long long t = 0; t < zcount; ++t) {
      Degree g;
      Vec z;
      if (!sampler.homogeneous_element(ml, box, &g, &z)) continue;
      auto [it, fresh] = parts.emplace(g, z);
      if (!fresh) it->second = vec_add(it->second, z);
    }
    WindowedMap delta = lift_derivation(ml, w, d);
    for (const auto& [g, z] : parts) delta += adjoint_map(ml, w, g, z);

    DecomposeResult res = decompose(ml, w, core, delta);
    if (!res.ok || !res.residual_zero) {
      out.ok = false;
      out.detail = "round trip " + std::to_string(trial) + ": " +
                   (res.detail.empty() ? "nonzero residual" : res.detail);
      return out;
    }
    if (res.lifted != d) {
      out.ok = false;
      out.detail = "round trip " + std::to_string(trial) + " recovered a different base part";
      return out;
    }
    // The inner parts must match degree by degree (zero entries may be
    // dropped on either side).
    std::map<Degree, Vec> recovered;
    for (const InnerPart& p : res.inner) recovered[p.degree] = p.coords;
    for (const auto& [g, z] : parts) {
      auto it = recovered.find(g);
      Vec want = z;
      if (it == recovered.end()) {
        if (!vec_is_zero(want)) {
          out.ok = false;
          out.detail = "round trip " + std::to_string(trial) + " lost the inner part at " +
                       degree_str(g);
          return out;
        }
      } else if (it->second != want) {
        out.ok = false;
        out.detail = "round trip " + std::to_string(trial) + " changed the inner part at " +
                     degree_str(g);
        return out;
      }
    }
    for (const auto& [g, z] : recovered)
      if (!parts.count(g) && !vec_is_zero(z)) {
        out.ok = false;
        out.detail = "round trip " + std::to_string(trial) + " invented an inner part at " +
                     degree_str(g);
        return out;
      }
    ++out.comparisons;
  }
  if (out.comparisons == 0) {
    out.ok = false;
    out.detail = "no round trips were run";
  }
  return out;
}

} // namespace

TheoremReport verify_theorem(const MultiloopAlgebra& ml, const Window& w, const Window& core,
                             const TheoremOptions& opts) {
  TheoremReport rep;
  for (size_t k = 0; k < ml.nvars(); ++k)
    if (core.radius[k] > w.radius[k]) {
      rep.gate_reason = "core exceeds the window";
      return rep;
    }
  if (!is_perfect(ml.base())) {
    rep.gate_reason = "base algebra is not perfect";
    return rep;
  }
  if (!is_central(ml.base())) {
    rep.gate_reason = "base algebra is not central";
    return rep;
  }
  rep.gate_ok = true;
  rep.ran_structure = opts.run_structure;
  rep.ran_identities = opts.run_identities;
  rep.ran_roundtrips = opts.run_roundtrips;

  if (opts.run_structure) {
    std::vector<ShiftSolutions> solutions = windowed_derivations(ml, w);

    // Generators, grouped by their degree shift: adjoints of the homogeneous
    // window elements and lifts of the monomial base derivations whose shift
    // stays in the box.
    std::map<Degree, std::vector<Vec>> inner_vecs, rho_vecs;
    for (const Degree& a : w.degrees()) {
      size_t d = ml.block_dim(a);
      for (size_t i = 0; i < d; ++i) {
        Vec unit = zero_vec(d, ml.conductor());
        unit[i] = Cyclotomic::one(ml.conductor());
        WindowedMap gen = adjoint_map(ml, w, a, unit);
        inner_vecs[a].push_back(shift_core_vector(ml, gen, a, core, w));
        ++rep.total_generators;
      }
    }
    {
      // Integer monomial shifts inside the box.
      std::vector<int> box(ml.nvars());
      for (size_t k = 0; k < ml.nvars(); ++k)
        box[k] = w.radius[k] / static_cast<int>(ml.orders()[k]);
      for (const Degree& bdeg : Window(box).degrees()) {
        Exponents b(bdeg.begin(), bdeg.end());
        Degree shift(ml.nvars());
        for (size_t k = 0; k < ml.nvars(); ++k)
          shift[k] = bdeg[k] * static_cast<int>(ml.orders()[k]);
        for (size_t j = 0; j < ml.nvars(); ++j) {
          LaurentDerivation d(ml.nvars(), ml.conductor());
          d.coeff(j).add_term(b, Cyclotomic::one(ml.conductor()));
          WindowedMap gen = lift_derivation(ml, w, d);
          rho_vecs[shift].push_back(shift_core_vector(ml, gen, shift, core, w));
          ++rep.total_generators;
        }
      }
    }

    for (const ShiftSolutions& sol : solutions) {
      ShiftReport sr;
      sr.shift = sol.shift;
      sr.solution_dim = sol.basis.size();
      rep.total_solutions += sol.basis.size();

      RowSpan sol_span(ml.conductor());
      std::vector<Vec> sol_core;
      for (const WindowedMap& m : sol.basis) {
        Vec v = shift_core_vector(ml, m, sol.shift, core, w);
        sol_span.insert(v);
        sol_core.push_back(std::move(v));
      }
      sr.core_rank = sol_span.rank();

      RowSpan inner_span(ml.conductor()), rho_span(ml.conductor()), joint_span(ml.conductor());
      auto ii = inner_vecs.find(sol.shift);
      if (ii != inner_vecs.end())
        for (const Vec& v : ii->second) {
          inner_span.insert(v);
          joint_span.insert(v);
        }
      auto ri = rho_vecs.find(sol.shift);
      if (ri != rho_vecs.end())
        for (const Vec& v : ri->second) {
          rho_span.insert(v);
          joint_span.insert(v);
        }
      sr.inner_rank = inner_span.rank();
      sr.rho_rank = rho_span.rank();
      sr.joint_rank = joint_span.rank();
      sr.direct = sr.inner_rank + sr.rho_rank == sr.joint_rank;

      for (const Vec& v : sol_core)
        if (!joint_span.contains(v)) {
          sr.membership = false;
          break;
        }
      if (ii != inner_vecs.end())
        for (const Vec& v : ii->second)
          if (!sol_span.contains(v)) {
            sr.coverage = false;
            break;
          }
      if (ri != rho_vecs.end())
        for (const Vec& v : ri->second)
          if (!sol_span.contains(v)) {
            sr.coverage = false;
            break;
          }

      rep.membership = rep.membership && sr.membership;
      rep.coverage = rep.coverage && sr.coverage;
      rep.directness = rep.directness && sr.direct;
      rep.shifts.push_back(std::move(sr));
    }
    if (rep.total_solutions == 0) {
      rep.membership = false;
      rep.detail = "the windowed solver produced no solutions at all";
    }
  }

  if (opts.run_identities) {
    rep.lift_roundtrip = section_lift_roundtrip(ml, w, core, opts);
    rep.bracket_identity = section_bracket(ml, w, core, opts);
    rep.homothety_identity = section_homothety(ml, w, core, opts);
    rep.inner_identity = section_inner(ml, w, core, opts);
  }
  if (opts.run_roundtrips) rep.roundtrips = section_roundtrips(ml, w, core, opts);

  rep.passed = rep.gate_ok;
  if (opts.run_structure)
    rep.passed = rep.passed && rep.membership && rep.coverage && rep.directness;
  if (opts.run_identities)
    rep.passed = rep.passed && rep.lift_roundtrip.ok && rep.bracket_identity.ok &&
                 rep.homothety_identity.ok && rep.inner_identity.ok;
  if (opts.run_roundtrips) rep.passed = rep.passed && rep.roundtrips.ok;
  if (!rep.passed && rep.detail.empty()) {
    for (const IdentitySection* s :
         {&rep.lift_roundtrip, &rep.bracket_identity, &rep.homothety_identity,
          &rep.inner_identity, &rep.roundtrips})
      if (!s->ok && !s->detail.empty()) {
        rep.detail = s->detail;
        break;
      }
  }
  return rep;
}

CentroidReport verify_centroid(const MultiloopAlgebra& ml, const Window& w, const Window& core) {
  CentroidReport rep;
  const FiniteAlgebra& a = ml.base();
  std::vector<ExactMatrix> ctd = centroid_basis(a);
  rep.base_centroid_dim = ctd.size();

  // The twist-commuting part of the centroid, as exact linear conditions on
  // the coefficients of a combination.
  std::vector<ExactMatrix> commuting;
  {
    size_t n = ctd.size(), dim = a.dim();
    std::vector<Vec> rows;
    for (const ExactMatrix& sigma : ml.twists().maps) {
      std::vector<ExactMatrix> comms;
      comms.reserve(n);
      for (const ExactMatrix& k : ctd) comms.push_back(commutator(k, sigma));
      for (size_t r = 0; r < dim; ++r)
        for (size_t s = 0; s < dim; ++s) {
          Vec row = zero_vec(n, ml.conductor());
          for (size_t i = 0; i < n; ++i) row[i] = comms[i].at(r, s);
          if (!vec_is_zero(row)) rows.push_back(std::move(row));
        }
    }
    for (const Vec& combo : nullspace(ExactMatrix::from_rows(rows, n, ml.conductor()))) {
      ExactMatrix k(dim, dim, ml.conductor());
      for (size_t i = 0; i < n; ++i)
        if (!combo[i].is_zero()) k = k + ctd[i].scaled(combo[i]);
      commuting.push_back(std::move(k));
    }
  }
  rep.commuting_dim = commuting.size();

  std::vector<ShiftSolutions> solutions = windowed_centroid(ml, w);
  for (const ShiftSolutions& sol : solutions) {
    CentroidShiftReport sr;
    sr.shift = sol.shift;
    sr.integral = degree_is_integral(sol.shift, ml.orders());

    RowSpan sol_span(ml.conductor());
    std::vector<Vec> sol_core;
    for (const WindowedMap& m : sol.basis) {
      Vec v = shift_core_vector(ml, m, sol.shift, core, w);
      sol_span.insert(v);
      sol_core.push_back(std::move(v));
    }
    sr.solution_dim = sol_span.rank();

    RowSpan gen_span(ml.conductor());
    std::vector<Vec> gen_core;
    if (sr.integral) {
      Exponents b(ml.nvars());
      for (size_t k = 0; k < ml.nvars(); ++k)
        b[k] = sol.shift[k] / static_cast<int>(ml.orders()[k]);
      for (const ExactMatrix& kappa : commuting) {
        WindowedMap gen = centroid_monomial_map(ml, w, kappa, b);
        Vec v = shift_core_vector(ml, gen, sol.shift, core, w);
        gen_span.insert(v);
        gen_core.push_back(std::move(v));
      }
    }
    sr.homothety_rank = gen_span.rank();

    for (const Vec& v : sol_core)
      if (!gen_span.contains(v)) {
        sr.membership = false;
        break;
      }
    for (const Vec& v : gen_core)
      if (!sol_span.contains(v)) {
        sr.coverage = false;
        break;
      }
    bool expected = sr.integral && sr.homothety_rank > 0;
    if ((sr.solution_dim > 0) != expected) {
      rep.degrees_ok = false;
      if (rep.detail.empty())
        rep.detail = "unexpected centroid degree profile at shift " + degree_str(sr.shift);
    }
    rep.membership = rep.membership && sr.membership;
    rep.coverage = rep.coverage && sr.coverage;
    rep.shifts.push_back(std::move(sr));
  }
  rep.passed = rep.membership && rep.coverage && rep.degrees_ok && rep.commuting_dim > 0;
  return rep;
}

} // namespace loomalg
