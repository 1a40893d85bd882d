#include "loomalg/dermod.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace loomalg {

namespace {

unsigned thread_budget() {
  if (const char* env = std::getenv("LOOMALG_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs fn(0..n-1) on up to thread_budget() workers. Slot-indexed outputs keep
// the result deterministic regardless of scheduling.
void parallel_for_index(size_t n, const std::function<void(size_t)>& fn) {
  size_t workers = std::min<size_t>(thread_budget(), n);
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

// Unknown layout for one shift: a block M_a per source degree a whose source
// and target dims are both nonzero. Entry M_a[p][i] sits at
// offset[a] + p * dim(a) + i.
struct BlockLayout {
  std::vector<Degree> sources;
  std::map<Degree, size_t> offset;
  size_t total = 0;
};

BlockLayout layout_for_shift(const MultiloopAlgebra& ml, const Window& w, const Degree& s) {
  BlockLayout out;
  for (const Degree& a : w.degrees()) {
    Degree dst = degree_add(a, s);
    if (!w.contains(dst)) continue;
    size_t da = ml.block_dim(a), dd = ml.block_dim(dst);
    if (da == 0 || dd == 0) continue;
    out.offset[a] = out.total;
    out.sources.push_back(a);
    out.total += da * dd;
  }
  return out;
}

std::vector<WindowedMap> unflatten_solutions(const MultiloopAlgebra& ml, const Window& w,
                                             const Degree& s, const BlockLayout& layout,
                                             const std::vector<Vec>& null) {
  std::vector<WindowedMap> out;
  out.reserve(null.size());
  for (const Vec& v : null) {
    WindowedMap map(w, ml.conductor());
    for (const Degree& a : layout.sources) {
      Degree dst = degree_add(a, s);
      size_t da = ml.block_dim(a), dd = ml.block_dim(dst);
      ExactMatrix m(dd, da, ml.conductor());
      size_t off = layout.offset.at(a);
      for (size_t p = 0; p < dd; ++p)
        for (size_t i = 0; i < da; ++i) m.at(p, i) = v[off + p * da + i];
      map.set_block(a, dst, std::move(m));
    }
    out.push_back(std::move(map));
  }
  return out;
}

void append_leibniz_rows(const MultiloopAlgebra& ml, const Window& w, const Degree& s,
                         const BlockLayout& layout, std::vector<Vec>& rows) {
  unsigned cond = ml.conductor();
  std::vector<Degree> degs = w.degrees();
  for (const Degree& a : degs)
    for (const Degree& b : degs) {
      Degree ab = degree_add(a, b);
      Degree as = degree_add(a, s), bs = degree_add(b, s), abs = degree_add(ab, s);
      if (!w.contains(ab) || !w.contains(as) || !w.contains(bs) || !w.contains(abs)) continue;
      size_t ca = ml.class_of(a), cb = ml.class_of(b);
      size_t da = ml.class_dim(ca), db = ml.class_dim(cb);
      size_t cab = ml.class_sum(ca, cb);
      size_t dab = ml.class_dim(cab);
      size_t cas = ml.class_of(as), cbs = ml.class_of(bs);
      size_t das = ml.class_dim(cas), dbs = ml.class_dim(cbs);
      size_t dabs = ml.class_dim(ml.class_of(abs));
      if (da == 0 || db == 0 || dabs == 0) continue;
      const std::vector<Cyclotomic>& t1 = ml.class_tensor(ca, cb);
      const std::vector<Cyclotomic>& t2 = ml.class_tensor(cas, cb);
      const std::vector<Cyclotomic>& t3 = ml.class_tensor(ca, cbs);
      for (size_t i = 0; i < da; ++i)
        for (size_t j = 0; j < db; ++j)
          for (size_t k = 0; k < dabs; ++k) {
            Vec row = zero_vec(layout.total, cond);
            if (dab > 0) {
              size_t off = layout.offset.at(ab);
              for (size_t l = 0; l < dab; ++l)
                row[off + k * dab + l] += t1[(i * db + j) * dab + l];
            }
            if (das > 0) {
              size_t off = layout.offset.at(a);
              for (size_t p = 0; p < das; ++p)
                row[off + p * da + i] -= t2[(p * db + j) * dabs + k];
            }
            if (dbs > 0) {
              size_t off = layout.offset.at(b);
              for (size_t p = 0; p < dbs; ++p)
                row[off + p * db + j] -= t3[(i * dbs + p) * dabs + k];
            }
            if (!vec_is_zero(row)) rows.push_back(std::move(row));
          }
    }
}

void append_translation_rows(const MultiloopAlgebra& ml, const Window& w, const Degree& s,
                             const BlockLayout& layout, std::vector<Vec>& rows) {
  unsigned cond = ml.conductor();
  size_t n = ml.nvars();
  for (size_t j = 0; j < n; ++j)
    for (int sign : {1, -1}) {
      Degree h = zero_degree(n);
      h[j] = sign * static_cast<int>(ml.orders()[j]);
      for (const Degree& a : w.degrees()) {
        Degree ah = degree_add(a, h);
        Degree as = degree_add(a, s), ahs = degree_add(ah, s);
        if (!w.contains(ah) || !w.contains(as) || !w.contains(ahs)) continue;
        size_t da = ml.block_dim(a), das = ml.block_dim(as);
        if (da == 0 || das == 0) continue;
        size_t offa = layout.offset.at(a), offah = layout.offset.at(ah);
        for (size_t p = 0; p < das; ++p)
          for (size_t i = 0; i < da; ++i) {
            Vec row = zero_vec(layout.total, cond);
            row[offah + p * da + i] += Cyclotomic::one(cond);
            row[offa + p * da + i] -= Cyclotomic::one(cond);
            rows.push_back(std::move(row));
          }
      }
    }
}

void append_centroid_rows(const MultiloopAlgebra& ml, const Window& w, const Degree& s,
                          const BlockLayout& layout, std::vector<Vec>& rows) {
  unsigned cond = ml.conductor();
  std::vector<Degree> degs = w.degrees();
  for (const Degree& a : degs)
    for (const Degree& b : degs) {
      Degree ab = degree_add(a, b);
      Degree abs = degree_add(ab, s);
      if (!w.contains(ab) || !w.contains(abs)) continue;
      size_t ca = ml.class_of(a), cb = ml.class_of(b);
      size_t da = ml.class_dim(ca), db = ml.class_dim(cb);
      size_t cab = ml.class_sum(ca, cb);
      size_t dab = ml.class_dim(cab);
      size_t dabs = ml.class_dim(ml.class_of(abs));
      if (da == 0 || db == 0 || dabs == 0) continue;
      const std::vector<Cyclotomic>& t1 = ml.class_tensor(ca, cb);
      // Left equation: needs the image of the a block.
      Degree as = degree_add(a, s);
      if (w.contains(as)) {
        size_t das = ml.block_dim(as);
        const std::vector<Cyclotomic>& t2 = ml.class_tensor(ml.class_of(as), cb);
        for (size_t i = 0; i < da; ++i)
          for (size_t j = 0; j < db; ++j)
            for (size_t k = 0; k < dabs; ++k) {
              Vec row = zero_vec(layout.total, cond);
              if (dab > 0) {
                size_t off = layout.offset.at(ab);
                for (size_t l = 0; l < dab; ++l)
                  row[off + k * dab + l] += t1[(i * db + j) * dab + l];
              }
              if (das > 0) {
                size_t off = layout.offset.at(a);
                for (size_t p = 0; p < das; ++p)
                  row[off + p * da + i] -= t2[(p * db + j) * dabs + k];
              }
              if (!vec_is_zero(row)) rows.push_back(std::move(row));
            }
      }
      // Right equation: needs the image of the b block.
      Degree bs = degree_add(b, s);
      if (w.contains(bs)) {
        size_t dbs = ml.block_dim(bs);
        const std::vector<Cyclotomic>& t3 = ml.class_tensor(ca, ml.class_of(bs));
        for (size_t i = 0; i < da; ++i)
          for (size_t j = 0; j < db; ++j)
            for (size_t k = 0; k < dabs; ++k) {
              Vec row = zero_vec(layout.total, cond);
              if (dab > 0) {
                size_t off = layout.offset.at(ab);
                for (size_t l = 0; l < dab; ++l)
                  row[off + k * dab + l] += t1[(i * db + j) * dab + l];
              }
              if (dbs > 0) {
                size_t off = layout.offset.at(b);
                for (size_t p = 0; p < dbs; ++p)
                  row[off + p * db + j] -= t3[(i * dbs + p) * dabs + k];
              }
              if (!vec_is_zero(row)) rows.push_back(std::move(row));
            }
      }
    }
}

using RowBuilder = std::function<void(const MultiloopAlgebra&, const Window&, const Degree&,
                                      const BlockLayout&, std::vector<Vec>&)>;

std::vector<ShiftSolutions> solve_per_shift(const MultiloopAlgebra& ml, const Window& w,
                                            const RowBuilder& build) {
  std::vector<Degree> shifts = w.degrees();
  std::vector<ShiftSolutions> out(shifts.size());
  parallel_for_index(shifts.size(), [&](size_t idx) {
    const Degree& s = shifts[idx];
    BlockLayout layout = layout_for_shift(ml, w, s);
    std::vector<Vec> rows;
    build(ml, w, s, layout, rows);
    std::vector<Vec> null = nullspace(ExactMatrix::from_rows(rows, layout.total, ml.conductor()));
    out[idx] = ShiftSolutions{s, unflatten_solutions(ml, w, s, layout, null)};
  });
  return out;
}

} // namespace

ExactMatrix block_or_zero(const WindowedMap& m, const MultiloopAlgebra& ml, const Degree& src,
                          const Degree& dst) {
  if (const ExactMatrix* b = m.block(src, dst)) return *b;
  return ExactMatrix(ml.block_dim(dst), ml.block_dim(src), ml.conductor());
}

const ExactMatrix* WindowedMap::block(const Degree& src, const Degree& dst) const {
  auto it = blocks_.find({src, dst});
  return it == blocks_.end() ? nullptr : &it->second;
}

void WindowedMap::set_block(const Degree& src, const Degree& dst, ExactMatrix m) {
  if (!window_.contains(src) || !window_.contains(dst)) return;
  if (m.is_zero()) {
    blocks_.erase({src, dst});
    return;
  }
  blocks_[{src, dst}] = std::move(m);
}

void WindowedMap::add_block(const Degree& src, const Degree& dst, const ExactMatrix& m) {
  if (!window_.contains(src) || !window_.contains(dst)) return;
  auto it = blocks_.find({src, dst});
  if (it == blocks_.end()) {
    if (!m.is_zero()) blocks_.emplace(std::make_pair(src, dst), m);
    return;
  }
  it->second = it->second + m;
  if (it->second.is_zero()) blocks_.erase(it);
}

std::set<Degree> WindowedMap::shifts() const {
  std::set<Degree> out;
  for (const auto& [key, mat] : blocks_) out.insert(degree_sub(key.second, key.first));
  return out;
}

WindowedMap& WindowedMap::operator+=(const WindowedMap& o) {
  for (const auto& [key, mat] : o.blocks_) add_block(key.first, key.second, mat);
  return *this;
}

WindowedMap& WindowedMap::operator-=(const WindowedMap& o) {
  for (const auto& [key, mat] : o.blocks_) add_block(key.first, key.second, -mat);
  return *this;
}

WindowedMap& WindowedMap::scale(const Cyclotomic& c) {
  if (c.is_zero()) {
    blocks_.clear();
    return *this;
  }
  for (auto& [key, mat] : blocks_) mat = mat.scaled(c);
  return *this;
}

WindowedMap adjoint_map(const MultiloopAlgebra& ml, const Window& w, const Degree& zdeg,
                        const Vec& zcoords) {
  WindowedMap out(w, ml.conductor());
  size_t cz = ml.class_of(zdeg);
  size_t dz = ml.class_dim(cz);
  if (zcoords.size() != dz) throw std::invalid_argument("adjoint_map: coordinate length");
  for (const Degree& a : w.degrees()) {
    Degree dst = degree_add(a, zdeg);
    if (!w.contains(dst)) continue;
    size_t ca = ml.class_of(a);
    size_t da = ml.class_dim(ca), dd = ml.block_dim(dst);
    if (da == 0 || dd == 0) continue;
    const std::vector<Cyclotomic>& t = ml.class_tensor(cz, ca);
    ExactMatrix m(dd, da, ml.conductor());
    for (size_t i = 0; i < da; ++i)
      for (size_t k = 0; k < dd; ++k) {
        Cyclotomic sum = Cyclotomic::zero(ml.conductor());
        for (size_t p = 0; p < dz; ++p) {
          const Cyclotomic& c = t[(p * da + i) * dd + k];
          if (!c.is_zero() && !zcoords[p].is_zero()) sum += zcoords[p] * c;
        }
        m.at(k, i) = sum;
      }
    out.set_block(a, dst, std::move(m));
  }
  return out;
}

WindowedMap lift_derivation(const MultiloopAlgebra& ml, const Window& w,
                            const LaurentDerivation& d) {
  if (d.nvars() != ml.nvars() || d.conductor() != ml.conductor())
    throw std::invalid_argument("lift_derivation: shape mismatch");
  WindowedMap out(w, ml.conductor());
  for (size_t j = 0; j < d.nvars(); ++j)
    for (const auto& [eb, g] : d.coeff(j).terms()) {
      Degree h(ml.nvars());
      for (size_t k = 0; k < ml.nvars(); ++k)
        h[k] = static_cast<int>(eb[k]) * static_cast<int>(ml.orders()[k]);
      for (const Degree& a : w.degrees()) {
        Degree dst = degree_add(a, h);
        if (!w.contains(dst)) continue;
        size_t da = ml.block_dim(a);
        if (da == 0 || a[j] == 0) continue;
        // t^b theta_j sends x (x) t^{a/m} to (a_j / m_j) x (x) t^{(a + m b)/m}.
        Cyclotomic scalar = g;
        scalar.scale(Rational(a[j], static_cast<int>(ml.orders()[j])));
        out.add_block(a, dst, ExactMatrix::identity(da, ml.conductor()).scaled(scalar));
      }
    }
  return out;
}

WindowedMap ring_monomial_map(const MultiloopAlgebra& ml, const Window& w, const Exponents& b) {
  if (b.size() != ml.nvars()) throw std::invalid_argument("ring_monomial_map: variable count");
  WindowedMap out(w, ml.conductor());
  Degree h(ml.nvars());
  for (size_t k = 0; k < ml.nvars(); ++k)
    h[k] = static_cast<int>(b[k]) * static_cast<int>(ml.orders()[k]);
  for (const Degree& a : w.degrees()) {
    Degree dst = degree_add(a, h);
    if (!w.contains(dst)) continue;
    size_t da = ml.block_dim(a);
    if (da == 0) continue;
    out.set_block(a, dst, ExactMatrix::identity(da, ml.conductor()));
  }
  return out;
}

WindowedMap ring_poly_map(const MultiloopAlgebra& ml, const Window& w, const LaurentPoly& r) {
  WindowedMap out(w, ml.conductor());
  for (const auto& [e, c] : r.terms()) {
    WindowedMap piece = ring_monomial_map(ml, w, e);
    piece.scale(c);
    out += piece;
  }
  return out;
}

WindowedMap centroid_monomial_map(const MultiloopAlgebra& ml, const Window& w,
                                  const ExactMatrix& kappa, const Exponents& b) {
  WindowedMap out(w, ml.conductor());
  Degree h(ml.nvars());
  for (size_t k = 0; k < ml.nvars(); ++k)
    h[k] = static_cast<int>(b[k]) * static_cast<int>(ml.orders()[k]);
  // kappa restricted to each class, in class coordinates.
  std::vector<ExactMatrix> restricted(ml.class_count());
  for (size_t cls = 0; cls < ml.class_count(); ++cls) {
    size_t d = ml.class_dim(cls);
    ExactMatrix m(d, d, ml.conductor());
    for (size_t i = 0; i < d; ++i) {
      Vec image = kappa.apply(ml.class_basis(cls)[i]);
      auto coords = ml.to_class_coords(cls, image);
      if (!coords)
        throw std::invalid_argument("centroid_monomial_map: map does not preserve eigenclasses");
      for (size_t r = 0; r < d; ++r) m.at(r, i) = (*coords)[r];
    }
    restricted[cls] = std::move(m);
  }
  for (const Degree& a : w.degrees()) {
    Degree dst = degree_add(a, h);
    if (!w.contains(dst)) continue;
    size_t cls = ml.class_of(a);
    if (ml.class_dim(cls) == 0) continue;
    out.set_block(a, dst, restricted[cls]);
  }
  return out;
}

std::vector<ShiftSolutions> windowed_derivations(const MultiloopAlgebra& ml, const Window& w) {
  return solve_per_shift(ml, w, append_leibniz_rows);
}

std::vector<ShiftSolutions> windowed_r_linear_derivations(const MultiloopAlgebra& ml,
                                                          const Window& w) {
  return solve_per_shift(ml, w,
                         [](const MultiloopAlgebra& m, const Window& win, const Degree& s,
                            const BlockLayout& layout, std::vector<Vec>& rows) {
                           append_leibniz_rows(m, win, s, layout, rows);
                           append_translation_rows(m, win, s, layout, rows);
                         });
}

std::vector<ShiftSolutions> windowed_centroid(const MultiloopAlgebra& ml, const Window& w) {
  return solve_per_shift(ml, w, append_centroid_rows);
}

Vec shift_core_vector(const MultiloopAlgebra& ml, const WindowedMap& map, const Degree& shift,
                      const Window& core, const Window& w) {
  Vec out;
  for (const Degree& c : core.degrees()) {
    Degree dst = degree_add(c, shift);
    if (!w.contains(dst)) continue;
    size_t dc = ml.block_dim(c), dd = ml.block_dim(dst);
    if (dc == 0 || dd == 0) continue;
    ExactMatrix b = block_or_zero(map, ml, c, dst);
    for (size_t p = 0; p < dd; ++p)
      for (size_t i = 0; i < dc; ++i) out.push_back(b.at(p, i));
  }
  return out;
}

std::optional<LaurentDerivation> induced_base_derivation(const MultiloopAlgebra& ml,
                                                         const Window& w, const Window& core,
                                                         const WindowedMap& delta,
                                                         std::string* why) {
  auto fail = [&](const std::string& msg) -> std::optional<LaurentDerivation> {
    if (why) *why = msg;
    return std::nullopt;
  };
  size_t n = ml.nvars();
  unsigned cond = ml.conductor();
  LaurentDerivation d(n, cond);
  std::set<Degree> shifts = delta.shifts();
  for (size_t j = 0; j < n; ++j) {
    Degree h = zero_degree(n);
    h[j] = static_cast<int>(ml.orders()[j]);
    for (const Degree& s : shifts) {
      bool integral = degree_is_integral(s, ml.orders());
      bool any_visible = false;
      std::optional<Cyclotomic> value;
      for (const Degree& c : core.degrees()) {
        if (ml.block_dim(c) == 0) continue;
        Degree ch = degree_add(c, h);
        Degree cs = degree_add(c, s);
        Degree e = degree_add(ch, s);
        if (!w.contains(ch) || !w.contains(cs) || !w.contains(e)) continue;
        if (ml.block_dim(cs) == 0) continue;
        // Probe commutator with multiplication by t_j at source c:
        // delta after the shift minus the shift after delta.
        ExactMatrix probe =
            block_or_zero(delta, ml, ch, e) - block_or_zero(delta, ml, c, cs);
        any_visible = true;
        if (!integral) {
          if (!probe.is_zero())
            return fail("probe for variable " + std::to_string(j + 1) +
                        " is nonzero at the non-integral shift " + degree_str(s));
          continue;
        }
        // Integral shift: the probe must be a scalar on the block.
        Cyclotomic lambda = probe.at(0, 0);
        if (probe != ExactMatrix::identity(probe.rows(), cond).scaled(lambda))
          return fail("probe for variable " + std::to_string(j + 1) + " at shift " +
                      degree_str(s) + " is not scalar at source " + degree_str(c));
        if (value && *value != lambda)
          return fail("probe for variable " + std::to_string(j + 1) + " at shift " +
                      degree_str(s) + " differs between core sources");
        value = lambda;
      }
      if (!any_visible)
        return fail("no core source can see shift " + degree_str(s) + " for variable " +
                    std::to_string(j + 1));
      if (integral && value && !value->is_zero()) {
        Exponents b(n);
        for (size_t k = 0; k < n; ++k) b[k] = s[k] / static_cast<int>(ml.orders()[k]);
        d.coeff(j).add_term(b, *value);
      }
    }
  }
  return d;
}

bool adjoint_injective_on_core(const MultiloopAlgebra& ml, const Window& w, const Window& core,
                               const Degree& zdeg) {
  size_t cz = ml.class_of(zdeg);
  size_t dz = ml.class_dim(cz);
  if (dz == 0) return true;
  // Matrix of z -> (blocks [z, .] over core sources), one row per output
  // coordinate, dz columns.
  std::vector<Vec> out_rows;
  for (const Degree& c : core.degrees()) {
    Degree dst = degree_add(c, zdeg);
    if (!w.contains(dst)) continue;
    size_t ca = ml.class_of(c);
    size_t da = ml.class_dim(ca), dd = ml.block_dim(dst);
    if (da == 0 || dd == 0) continue;
    const std::vector<Cyclotomic>& t = ml.class_tensor(cz, ca);
    for (size_t i = 0; i < da; ++i)
      for (size_t k = 0; k < dd; ++k) {
        Vec row = zero_vec(dz, ml.conductor());
        for (size_t p = 0; p < dz; ++p) row[p] = t[(p * da + i) * dd + k];
        out_rows.push_back(std::move(row));
      }
  }
  return rank(ExactMatrix::from_rows(out_rows, dz, ml.conductor())) == dz;
}

DecomposeResult decompose(const MultiloopAlgebra& ml, const Window& w, const Window& core,
                          const WindowedMap& delta) {
  DecomposeResult res;
  std::string why;
  auto eta = induced_base_derivation(ml, w, core, delta, &why);
  if (!eta) {
    res.detail = "base derivation extraction failed: " + why;
    return res;
  }
  res.lifted = *eta;
  res.ok = true;
  WindowedMap psi = delta;
  psi -= lift_derivation(ml, w, *eta);

  // Inner support box: degrees whose adjoint blocks stay in the window from
  // every core source.
  std::vector<int> box(ml.nvars());
  for (size_t jj = 0; jj < ml.nvars(); ++jj) {
    box[jj] = w.radius[jj] - core.radius[jj];
    if (box[jj] < 0) box[jj] = 0;
  }
  WindowedMap reconstructed(w, ml.conductor());
  for (const Degree& g : Window(box).degrees()) {
    size_t cg = ml.class_of(g);
    size_t dg = ml.class_dim(cg);
    if (dg == 0) continue;
    // Solve ad(z_g) = psi on the core-sourced blocks of shift g.
    std::vector<Vec> rows;
    Vec rhs_entries;
    for (const Degree& c : core.degrees()) {
      Degree dst = degree_add(c, g);
      if (!w.contains(dst)) continue;
      size_t ca = ml.class_of(c);
      size_t da = ml.class_dim(ca), dd = ml.block_dim(dst);
      if (da == 0 || dd == 0) continue;
      const std::vector<Cyclotomic>& t = ml.class_tensor(cg, ca);
      ExactMatrix target = block_or_zero(psi, ml, c, dst);
      for (size_t i = 0; i < da; ++i)
        for (size_t k = 0; k < dd; ++k) {
          Vec row = zero_vec(dg, ml.conductor());
          for (size_t p = 0; p < dg; ++p) row[p] = t[(p * da + i) * dd + k];
          rows.push_back(std::move(row));
          rhs_entries.push_back(target.at(k, i));
        }
    }
    if (rows.empty()) continue;
    auto z = solve(ExactMatrix::from_rows(rows, dg, ml.conductor()), rhs_entries);
    if (!z) continue; // no inner part matches; the residual check reports it
    if (vec_is_zero(*z)) continue;
    res.inner.push_back(InnerPart{g, *z});
    reconstructed += adjoint_map(ml, w, g, *z);
  }
  psi -= reconstructed;

  res.residual_zero = true;
  for (const auto& [key, mat] : psi.blocks()) {
    if (!core.contains(key.first)) continue;
    if (!mat.is_zero()) {
      res.residual_zero = false;
      res.detail = "residual block " + degree_str(key.first) + " -> " + degree_str(key.second);
      break;
    }
  }
  return res;
}

} // namespace loomalg
