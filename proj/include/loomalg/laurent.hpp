#pragma once

#include <map>
#include <string>
#include <vector>

#include "loomalg/cyclotomic.hpp"

namespace loomalg {

// Integer exponent vector of a Laurent monomial t1^{e1} ... tn^{en}.
using Exponents = std::vector<long long>;

// Laurent polynomial in n variables over Q(zeta_m). Terms are kept in a
// sorted map so iteration order, printing and equality are deterministic.
class LaurentPoly {
public:
  LaurentPoly(size_t nvars, unsigned conductor) : nvars_(nvars), conductor_(conductor) {}
  static LaurentPoly monomial(size_t nvars, unsigned conductor, const Exponents& e,
                              const Cyclotomic& c);
  static LaurentPoly constant(size_t nvars, unsigned conductor, const Cyclotomic& c);

  size_t nvars() const { return nvars_; }
  unsigned conductor() const { return conductor_; }
  const std::map<Exponents, Cyclotomic>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Cyclotomic coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Cyclotomic& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly& scale(const Cyclotomic& c);

  // "t^2" for one variable, "t1^2*t2^-1" beyond; exact coefficients.
  std::string str() const;

private:
  size_t nvars_;
  unsigned conductor_;
  std::map<Exponents, Cyclotomic> terms_;
};

// Derivation of the Laurent ring, stored as sum_j f_j * theta_j where
// theta_j = t_j d/dt_j. The theta_j form a free basis of the derivation
// module over the ring, so the representation is unique.
class LaurentDerivation {
public:
  LaurentDerivation(size_t nvars, unsigned conductor);
  static LaurentDerivation theta(size_t nvars, unsigned conductor, size_t j);

  size_t nvars() const { return nvars_; }
  unsigned conductor() const { return conductor_; }
  const LaurentPoly& coeff(size_t j) const { return coeff_[j]; }
  LaurentPoly& coeff(size_t j) { return coeff_[j]; }

  bool is_zero() const;
  LaurentPoly apply(const LaurentPoly& p) const;

  LaurentDerivation& operator+=(const LaurentDerivation& o);
  LaurentDerivation& operator-=(const LaurentDerivation& o);
  LaurentDerivation operator-() const;
  friend LaurentDerivation operator+(LaurentDerivation a, const LaurentDerivation& b) {
    return a += b;
  }
  friend LaurentDerivation operator-(LaurentDerivation a, const LaurentDerivation& b) {
    return a -= b;
  }
  friend bool operator==(const LaurentDerivation& a, const LaurentDerivation& b) {
    return a.coeff_ == b.coeff_;
  }
  friend bool operator!=(const LaurentDerivation& a, const LaurentDerivation& b) {
    return !(a == b);
  }

  // Left-multiplication by a ring element (the module structure).
  LaurentDerivation scaled(const LaurentPoly& f) const;

  std::string str() const;

private:
  size_t nvars_;
  unsigned conductor_;
  std::vector<LaurentPoly> coeff_;
};

// [d, d'] as a derivation; coefficient j is d(g_j) - d'(f_j).
LaurentDerivation derivation_bracket(const LaurentDerivation& d, const LaurentDerivation& e);

} // namespace loomalg
