#pragma once

#include <string>
#include <vector>

#include "loomalg/rational.hpp"

namespace loomalg {

// Euler totient, by trial-division factorization. Desk-scale inputs only.
unsigned totient(unsigned m);

// Coefficients of the m-th cyclotomic polynomial, ascending degree, monic,
// length totient(m) + 1. Computed once per conductor and cached.
const std::vector<Rational>& cyclotomic_polynomial(unsigned m);

// An element of Q(zeta_m), stored as the residue of a polynomial in
// Q[x]/(Phi_m(x)). The representation is canonical (degree < totient(m)),
// so equality is coefficient-wise.
class Cyclotomic {
public:
  Cyclotomic() : conductor_(1), coeff_(1) {}
  static Cyclotomic zero(unsigned m);
  static Cyclotomic one(unsigned m);
  static Cyclotomic from_rational(unsigned m, const Rational& r);
  // zeta_m^k, any integer k (reduced mod m).
  static Cyclotomic root_power(unsigned m, long long k);

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coeff() const { return coeff_; }

  bool is_zero() const;
  bool is_rational() const;
  // Valid only when is_rational().
  const Rational& rational_value() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.conductor_ == b.conductor_ && a.coeff_ == b.coeff_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic& scale(const Rational& r);

  // Multiplicative inverse; throws std::domain_error on zero.
  Cyclotomic inverse() const;

  // Human-readable polynomial in the symbol given (default "z"),
  // e.g. "1/2*z^2 - z + 3". Exact, no floats.
  std::string str(const std::string& symbol = "z") const;

private:
  Cyclotomic(unsigned m, std::vector<Rational> c)
      : conductor_(m), coeff_(std::move(c)) {}
  void require_same(const Cyclotomic& o) const;

  unsigned conductor_;
  std::vector<Rational> coeff_; // size totient(conductor_)
};

Cyclotomic cyc_pow(Cyclotomic base, long long e);

} // namespace loomalg
