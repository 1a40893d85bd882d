#include "loomalg/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace loomalg {

namespace {

using Poly = std::vector<Rational>; // ascending degree

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Euclidean division; requires d nonzero. Returns {quotient, remainder}.
std::pair<Poly, Poly> divmod(Poly n, const Poly& d) {
  trim(n);
  if (d.empty()) throw std::domain_error("polynomial division by zero");
  Poly q;
  if (n.size() >= d.size()) q.assign(n.size() - d.size() + 1, Rational(0));
  const Rational lead = d.back();
  while (n.size() >= d.size()) {
    Rational f = n.back() / lead;
    size_t shift = n.size() - d.size();
    q[shift] = f;
    for (size_t i = 0; i < d.size(); ++i) n[shift + i] -= f * d[i];
    trim(n); // the leading term cancels exactly, so n shrinks every pass
  }
  trim(q);
  return {q, n};
}

Poly x_pow_minus_one(unsigned m) {
  Poly p(m + 1);
  p[0] = -1;
  p[m] = 1;
  return p;
}

std::map<unsigned, Poly>& phi_cache() {
  static std::map<unsigned, Poly> cache;
  return cache;
}
std::mutex phi_mutex;

const Poly& cyclotomic_locked(unsigned m) {
  auto& cache = phi_cache();
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  Poly result;
  if (m == 1) {
    result = {Rational(-1), Rational(1)}; // x - 1
  } else {
    Poly num = x_pow_minus_one(m);
    for (unsigned d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      auto [q, r] = divmod(num, cyclotomic_locked(d));
      if (!r.empty()) throw std::logic_error("cyclotomic division left a remainder");
      num = std::move(q);
    }
    result = std::move(num);
  }
  auto [pos, inserted] = cache.emplace(m, std::move(result));
  (void)inserted;
  return pos->second;
}

Poly reduce_mod_phi(Poly p, unsigned m) {
  const Poly& phi = cyclotomic_locked(m);
  auto [q, r] = divmod(std::move(p), phi);
  (void)q;
  return r;
}

// Extended Euclid over Q[x]: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtGcd {
  Poly g, s, t;
};

ExtGcd ext_gcd(Poly a, Poly b) {
  Poly s0 = {Rational(1)}, s1 = {};
  Poly t0 = {}, t1 = {Rational(1)};
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto [q, r] = divmod(a, b);
    Poly s2 = s0, t2 = t0;
    // s2 = s0 - q*s1 ; t2 = t0 - q*t1
    Poly qs = mul(q, s1), qt = mul(q, t1);
    s2.resize(std::max(s2.size(), qs.size()));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    t2.resize(std::max(t2.size(), qt.size()));
    for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
    trim(s2);
    trim(t2);
    a = std::move(b);
    b = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.empty()) throw std::domain_error("gcd of zero polynomials");
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
  for (auto& c : s0) c /= lead;
  for (auto& c : t0) c /= lead;
  return {std::move(a), std::move(s0), std::move(t0)};
}

} // namespace

unsigned totient(unsigned m) {
  if (m == 0) throw std::invalid_argument("totient(0)");
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Rational>& cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_polynomial(0)");
  std::lock_guard<std::mutex> lock(phi_mutex);
  return cyclotomic_locked(m);
}

Cyclotomic Cyclotomic::zero(unsigned m) {
  return Cyclotomic(m, std::vector<Rational>(totient(m)));
}

Cyclotomic Cyclotomic::one(unsigned m) {
  return from_rational(m, Rational(1));
}

Cyclotomic Cyclotomic::from_rational(unsigned m, const Rational& r) {
  std::vector<Rational> c(totient(m));
  c[0] = r;
  return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::root_power(unsigned m, long long k) {
  long long e = k % static_cast<long long>(m);
  if (e < 0) e += m;
  Poly p(static_cast<size_t>(e) + 1);
  p[static_cast<size_t>(e)] = 1;
  std::lock_guard<std::mutex> lock(phi_mutex);
  Poly r = reduce_mod_phi(std::move(p), m);
  r.resize(totient(m));
  return Cyclotomic(m, std::move(r));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeff_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeff_.size(); ++i)
    if (coeff_[i] != 0) return false;
  return true;
}

const Rational& Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("not a rational cyclotomic value");
  return coeff_[0];
}

void Cyclotomic::require_same(const Cyclotomic& o) const {
  if (conductor_ != o.conductor_)
    throw std::invalid_argument("conductor mismatch: " + std::to_string(conductor_) +
                                " vs " + std::to_string(o.conductor_));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  require_same(o);
  for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  require_same(o);
  for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  require_same(o);
  Poly prod = mul(coeff_, o.coeff_);
  std::lock_guard<std::mutex> lock(phi_mutex);
  Poly r = reduce_mod_phi(std::move(prod), conductor_);
  r.resize(coeff_.size());
  coeff_ = std::move(r);
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeff_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::scale(const Rational& r) {
  for (auto& c : coeff_) c *= r;
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Poly a = coeff_;
  // trim for the gcd computation
  while (!a.empty() && a.back() == 0) a.pop_back();
  std::lock_guard<std::mutex> lock(phi_mutex);
  const Poly& phi = cyclotomic_locked(conductor_);
  auto eg = ext_gcd(a, phi);
  if (eg.g.size() != 1)
    throw std::logic_error("cyclotomic polynomial not coprime to nonzero element");
  Poly inv = reduce_mod_phi(std::move(eg.s), conductor_);
  inv.resize(coeff_.size());
  return Cyclotomic(conductor_, std::move(inv));
}

std::string Cyclotomic::str(const std::string& symbol) const {
  std::ostringstream out;
  bool first = true;
  for (size_t d = coeff_.size(); d-- > 0;) {
    const Rational& c = coeff_[d];
    if (c == 0) continue;
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const bool unit = abs == 1;
    if (d == 0) {
      out << rational_str(abs);
    } else {
      if (!unit) out << rational_str(abs) << "*";
      out << symbol;
      if (d > 1) out << "^" << d;
    }
  }
  if (first) out << "0";
  return out.str();
}

Cyclotomic cyc_pow(Cyclotomic base, long long e) {
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  Cyclotomic result = Cyclotomic::one(base.conductor());
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

} // namespace loomalg
