#include "loomalg/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace loomalg {

LaurentPoly LaurentPoly::monomial(size_t nvars, unsigned conductor, const Exponents& e,
                                  const Cyclotomic& c) {
  LaurentPoly p(nvars, conductor);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::constant(size_t nvars, unsigned conductor, const Cyclotomic& c) {
  return monomial(nvars, conductor, Exponents(nvars, 0), c);
}

Cyclotomic LaurentPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Cyclotomic::zero(conductor_) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Cyclotomic& c) {
  if (e.size() != nvars_) throw std::invalid_argument("term has wrong variable count");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly out(nvars_, conductor_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e = e1;
      for (size_t j = 0; j < nvars_; ++j) e[j] += e2[j];
      out.add_term(e, c1 * c2);
    }
  *this = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(nvars_, conductor_);
  for (const auto& [e, c] : terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly& LaurentPoly::scale(const Cyclotomic& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string vars;
    for (size_t j = 0; j < nvars_; ++j) {
      if (e[j] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += nvars_ == 1 ? "t" : "t" + std::to_string(j + 1);
      if (e[j] != 1) vars += "^" + std::to_string(e[j]);
    }
    if (vars.empty()) {
      os << c.str();
    } else if (c == Cyclotomic::one(conductor_)) {
      os << vars;
    } else {
      os << "(" << c.str() << ")*" << vars;
    }
  }
  return os.str();
}

LaurentDerivation::LaurentDerivation(size_t nvars, unsigned conductor)
    : nvars_(nvars), conductor_(conductor),
      coeff_(nvars, LaurentPoly(nvars, conductor)) {}

LaurentDerivation LaurentDerivation::theta(size_t nvars, unsigned conductor, size_t j) {
  LaurentDerivation d(nvars, conductor);
  d.coeff_[j] = LaurentPoly::constant(nvars, conductor, Cyclotomic::one(conductor));
  return d;
}

bool LaurentDerivation::is_zero() const {
  for (const auto& f : coeff_)
    if (!f.is_zero()) return false;
  return true;
}

LaurentPoly LaurentDerivation::apply(const LaurentPoly& p) const {
  LaurentPoly out(nvars_, conductor_);
  // theta_j(t^e) = e_j t^e, so d(t^e) = (sum_j e_j f_j) t^e.
  for (const auto& [e, c] : p.terms())
    for (size_t j = 0; j < nvars_; ++j) {
      if (e[j] == 0) continue;
      Cyclotomic factor = c;
      factor.scale(Rational(e[j]));
      LaurentPoly piece = coeff_[j];
      piece.scale(factor);
      for (const auto& [fe, fc] : piece.terms()) {
        Exponents shifted = fe;
        for (size_t k = 0; k < nvars_; ++k) shifted[k] += e[k];
        out.add_term(shifted, fc);
      }
    }
  return out;
}

LaurentDerivation& LaurentDerivation::operator+=(const LaurentDerivation& o) {
  for (size_t j = 0; j < nvars_; ++j) coeff_[j] += o.coeff_[j];
  return *this;
}

LaurentDerivation& LaurentDerivation::operator-=(const LaurentDerivation& o) {
  for (size_t j = 0; j < nvars_; ++j) coeff_[j] -= o.coeff_[j];
  return *this;
}

LaurentDerivation LaurentDerivation::operator-() const {
  LaurentDerivation out(nvars_, conductor_);
  for (size_t j = 0; j < nvars_; ++j) out.coeff_[j] = -coeff_[j];
  return out;
}

LaurentDerivation LaurentDerivation::scaled(const LaurentPoly& f) const {
  LaurentDerivation out(nvars_, conductor_);
  for (size_t j = 0; j < nvars_; ++j) out.coeff_[j] = f * coeff_[j];
  return out;
}

std::string LaurentDerivation::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < nvars_; ++j) {
    if (coeff_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeff_[j].str() << ")*theta" << (nvars_ == 1 ? "" : std::to_string(j + 1));
  }
  if (first) os << "0";
  return os.str();
}

LaurentDerivation derivation_bracket(const LaurentDerivation& d, const LaurentDerivation& e) {
  LaurentDerivation out(d.nvars(), d.conductor());
  for (size_t j = 0; j < d.nvars(); ++j)
    out.coeff(j) = d.apply(e.coeff(j)) - e.apply(d.coeff(j));
  return out;
}

} // namespace loomalg
