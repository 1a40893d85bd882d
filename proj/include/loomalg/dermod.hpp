#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "loomalg/laurent.hpp"
#include "loomalg/multiloop.hpp"

namespace loomalg {

// Degree-graded linear map on the windowed piece of the algebra. Blocks are
// keyed by (source degree, target degree) and stored in class coordinates;
// a missing block is zero. Only blocks with both ends inside the window are
// represented, which is exactly the truncation the solvers reason about.
class WindowedMap {
public:
  WindowedMap(Window w, unsigned conductor) : window_(std::move(w)), conductor_(conductor) {}

  const Window& window() const { return window_; }
  unsigned conductor() const { return conductor_; }
  const std::map<std::pair<Degree, Degree>, ExactMatrix>& blocks() const { return blocks_; }

  const ExactMatrix* block(const Degree& src, const Degree& dst) const;
  // Drops silently when either end leaves the window; erases zero blocks.
  void set_block(const Degree& src, const Degree& dst, ExactMatrix m);
  void add_block(const Degree& src, const Degree& dst, const ExactMatrix& m);

  bool is_zero() const { return blocks_.empty(); }
  std::set<Degree> shifts() const;

  WindowedMap& operator+=(const WindowedMap& o);
  WindowedMap& operator-=(const WindowedMap& o);
  friend WindowedMap operator+(WindowedMap a, const WindowedMap& b) { return a += b; }
  friend WindowedMap operator-(WindowedMap a, const WindowedMap& b) { return a -= b; }
  WindowedMap& scale(const Cyclotomic& c);

private:
  Window window_;
  unsigned conductor_;
  std::map<std::pair<Degree, Degree>, ExactMatrix> blocks_;
};

// The block of a map with absent entries read as zero matrices of the right
// shape.
ExactMatrix block_or_zero(const WindowedMap& m, const MultiloopAlgebra& ml, const Degree& src,
                          const Degree& dst);

// ad(z) for the homogeneous element z at degree zdeg (class coordinates).
WindowedMap adjoint_map(const MultiloopAlgebra& ml, const Window& w, const Degree& zdeg,
                        const Vec& zcoords);

// The lift of a derivation of the base ring: x (x) t^{a/m} maps to
// x (x) d(t^{a/m}). Every term of d must use integer powers of the t_j.
WindowedMap lift_derivation(const MultiloopAlgebra& ml, const Window& w,
                            const LaurentDerivation& d);

// Multiplication by t^b (integer exponents b, so a degree shift of m*b).
WindowedMap ring_monomial_map(const MultiloopAlgebra& ml, const Window& w, const Exponents& b);

// Multiplication by the ring element r.
WindowedMap ring_poly_map(const MultiloopAlgebra& ml, const Window& w, const LaurentPoly& r);

// kappa (x) t^b for kappa in End(A) preserving every eigenclass.
WindowedMap centroid_monomial_map(const MultiloopAlgebra& ml, const Window& w,
                                  const ExactMatrix& kappa, const Exponents& b);

// Basis of solutions of one windowed equation system at one degree shift.
struct ShiftSolutions {
  Degree shift;
  std::vector<WindowedMap> basis;
};

// Per-shift windowed derivations: for every shift s in the window box, the
// maps {M_a : block a -> block a+s} satisfying the Leibniz rule on every
// fully visible pair, meaning a, b, a+b, a+s, b+s, a+b+s all in the window.
// Restrictions of genuine degree-s derivations solve all of these equations,
// so they appear with nothing cut off; the converse is what the verifier
// establishes on the core. Shifts are solved independently (the equations
// never couple different shifts) and in parallel when LOOMALG_THREADS allows.
std::vector<ShiftSolutions> windowed_derivations(const MultiloopAlgebra& ml, const Window& w);

// Same equations plus translation invariance M_{a+h} = M_a for the integer
// monomial shifts h = +-m_j e_j wherever all four corners are visible. These
// are the windowed R-linear derivations.
std::vector<ShiftSolutions> windowed_r_linear_derivations(const MultiloopAlgebra& ml,
                                                          const Window& w);

// Windowed centroid: X([x,y]) = [X(x), y] = [x, X(y)] on fully visible pairs
// (the left equation needs a+s in the window, the right one b+s).
std::vector<ShiftSolutions> windowed_centroid(const MultiloopAlgebra& ml, const Window& w);

// Flattened core restriction of the degree-s component of a map: the blocks
// c -> c+s over core degrees c whose target stays in the window, in a fixed
// order. Two maps agree on the core at shift s iff these vectors are equal.
Vec shift_core_vector(const MultiloopAlgebra& ml, const WindowedMap& map, const Degree& shift,
                      const Window& core, const Window& w);

// The derivation of the base ring induced by a windowed derivation-like map:
// probes with multiplication by each t_j and reads coefficients off the
// visible commutator blocks. Fails (with a reason) when the blocks are not
// scalar, not consistent across core sources, or sit at shifts that are not
// integer multiples of the orders.
std::optional<LaurentDerivation> induced_base_derivation(const MultiloopAlgebra& ml,
                                                         const Window& w, const Window& core,
                                                         const WindowedMap& delta,
                                                         std::string* why = nullptr);

struct InnerPart {
  Degree degree;
  Vec coords; // class coordinates at class_of(degree)
};

struct DecomposeResult {
  bool ok = false;
  LaurentDerivation lifted;       // the base-ring part
  std::vector<InnerPart> inner;   // homogeneous inner parts, degree-sorted
  bool residual_zero = false;     // delta - rho(lifted) - ad(inner) vanished
                                  // on all core-sourced blocks
  std::string detail;
  DecomposeResult() : lifted(0, 1) {}
};

// Splits a windowed derivation into lifted + inner on the core: extracts the
// base derivation, subtracts its lift, then solves for homogeneous inner
// parts with degrees in the box |g_j| <= w_j - core_j. Exact throughout; a
// leftover is reported, never discarded.
DecomposeResult decompose(const MultiloopAlgebra& ml, const Window& w, const Window& core,
                          const WindowedMap& delta);

// Rank of z -> ad(z) restricted to core-sourced blocks, per degree. Full rank
// everywhere in the box makes the inner parts of decompose unique.
bool adjoint_injective_on_core(const MultiloopAlgebra& ml, const Window& w, const Window& core,
                               const Degree& zdeg);

} // namespace loomalg
