#include "loomalg/specfile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace loomalg {

namespace {

[[noreturn]] void fail(const std::string& file, size_t line, const std::string& msg) {
  throw parse_error(file + ":" + std::to_string(line) + ": " + msg);
}

std::string strip_comment(const std::string& line) {
  size_t pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// One coefficient token: `p/q`, `z`, `z^k`, `p/q*z^k`, with optional sign.
CoeffExpr parse_coeff_token(const std::string& file, size_t line, const std::string& tok) {
  std::string s = tok;
  CoeffExpr out;
  out.coeff = Rational(1);
  bool negate = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negate = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) fail(file, line, "empty coefficient");
  size_t star = s.find('*');
  std::string head = star == std::string::npos ? s : s.substr(0, star);
  std::string tail = star == std::string::npos ? "" : s.substr(star + 1);
  auto parse_zpow = [&](const std::string& z) -> long long {
    if (z.empty() || z[0] != 'z') fail(file, line, "expected a power of z in '" + tok + "'");
    if (z.size() == 1) return 1;
    if (z[1] != '^') fail(file, line, "expected '^' after z in '" + tok + "'");
    try {
      size_t used = 0;
      long long k = std::stoll(z.substr(2), &used);
      if (used != z.size() - 2) fail(file, line, "bad exponent in '" + tok + "'");
      return k;
    } catch (const parse_error&) {
      throw;
    } catch (const std::exception&) {
      fail(file, line, "bad exponent in '" + tok + "'");
    }
  };
  if (!head.empty() && head[0] == 'z') {
    if (!tail.empty()) fail(file, line, "z-power must come last in '" + tok + "'");
    out.zpow = parse_zpow(head);
  } else {
    try {
      out.coeff = parse_rational(head);
    } catch (const std::exception&) {
      fail(file, line, "bad coefficient '" + tok + "'");
    }
    if (!tail.empty()) out.zpow = parse_zpow(tail);
  }
  if (negate) out.coeff = -out.coeff;
  return out;
}

// Right-hand side of a product line: terms joined by + or -, each term a
// coefficient token followed by a basis name, or a bare basis name. A lone 0
// means the zero element.
std::vector<std::pair<CoeffExpr, size_t>> parse_rhs(const std::string& file, size_t line,
                                                    const std::vector<std::string>& toks,
                                                    size_t start,
                                                    const std::map<std::string, size_t>& index) {
  std::vector<std::pair<CoeffExpr, size_t>> terms;
  if (start == toks.size()) fail(file, line, "missing right-hand side");
  if (toks.size() == start + 1 && toks[start] == "0") return terms;
  bool negate = false;
  CoeffExpr pending;
  bool have_coeff = false;
  pending.coeff = Rational(1);
  for (size_t i = start; i < toks.size(); ++i) {
    const std::string& t = toks[i];
    if (t == "+" || t == "-") {
      if (have_coeff) fail(file, line, "dangling coefficient before '" + t + "'");
      negate = t == "-";
      continue;
    }
    auto it = index.find(t);
    if (it != index.end()) {
      if (!have_coeff) {
        pending = CoeffExpr{};
        pending.coeff = Rational(1);
      }
      if (negate) pending.coeff = -pending.coeff;
      terms.push_back({pending, it->second});
      pending = CoeffExpr{};
      pending.coeff = Rational(1);
      have_coeff = false;
      negate = false;
      continue;
    }
    if (have_coeff) fail(file, line, "two coefficients in a row at '" + t + "'");
    pending = parse_coeff_token(file, line, t);
    have_coeff = true;
  }
  if (have_coeff) fail(file, line, "coefficient without a basis element at the end");
  return terms;
}

} // namespace

Cyclotomic instantiate(const CoeffExpr& e, unsigned conductor) {
  Cyclotomic c = Cyclotomic::from_rational(conductor, e.coeff);
  if (e.zpow != 0) c *= Cyclotomic::root_power(conductor, e.zpow);
  return c;
}

AlgebraSpec parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path + ": cannot open");
  AlgebraSpec spec;
  std::map<std::string, size_t> index;
  size_t dim = 0;
  bool have_dim = false;
  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> toks = split_ws(strip_comment(raw));
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    if (head == "kind") {
      if (toks.size() != 2) fail(path, lineno, "kind takes one word");
      if (toks[1] != "lie" && toks[1] != "associative" && toks[1] != "plain")
        fail(path, lineno, "kind must be lie, associative or plain");
      if (!spec.kind.empty()) fail(path, lineno, "kind declared twice");
      spec.kind = toks[1];
    } else if (head == "dim") {
      if (toks.size() != 2) fail(path, lineno, "dim takes one number");
      try {
        dim = std::stoul(toks[1]);
      } catch (const std::exception&) {
        fail(path, lineno, "bad dimension '" + toks[1] + "'");
      }
      if (dim == 0) fail(path, lineno, "dimension must be positive");
      have_dim = true;
    } else if (head == "basis") {
      if (!have_dim) fail(path, lineno, "basis before dim");
      if (!spec.names.empty()) fail(path, lineno, "basis declared twice");
      if (toks.size() != dim + 1)
        fail(path, lineno, "expected " + std::to_string(dim) + " basis names");
      for (size_t i = 1; i < toks.size(); ++i) {
        if (index.count(toks[i])) fail(path, lineno, "duplicate basis name '" + toks[i] + "'");
        index[toks[i]] = i - 1;
        spec.names.push_back(toks[i]);
      }
    } else if (head == "bracket" || head == "product") {
      if (spec.kind.empty()) fail(path, lineno, "product line before kind");
      if (spec.names.empty()) fail(path, lineno, "product line before basis");
      bool lie = spec.kind == "lie";
      if (lie != (head == "bracket"))
        fail(path, lineno, lie ? "lie algebras use bracket lines"
                               : "non-lie algebras use product lines");
      if (toks.size() < 4 || toks[3] != "=")
        fail(path, lineno, "expected '" + head + " x y = ...'");
      auto li = index.find(toks[1]), ri = index.find(toks[2]);
      if (li == index.end()) fail(path, lineno, "unknown basis name '" + toks[1] + "'");
      if (ri == index.end()) fail(path, lineno, "unknown basis name '" + toks[2] + "'");
      auto key = std::make_pair(li->second, ri->second);
      if (spec.products.count(key))
        fail(path, lineno, "pair (" + toks[1] + ", " + toks[2] + ") declared twice");
      spec.products[key] = parse_rhs(path, lineno, toks, 4, index);
    } else {
      fail(path, lineno, "unknown directive '" + head + "'");
    }
  }
  if (spec.kind.empty()) throw parse_error(path + ": missing kind");
  if (!have_dim) throw parse_error(path + ": missing dim");
  if (spec.names.empty()) throw parse_error(path + ": missing basis");
  return spec;
}

FiniteAlgebra instantiate(const AlgebraSpec& spec, unsigned conductor) {
  size_t n = spec.names.size();
  std::vector<Cyclotomic> c(n * n * n, Cyclotomic::zero(conductor));
  auto put = [&](size_t i, size_t j, const std::vector<std::pair<CoeffExpr, size_t>>& terms) {
    for (const auto& [expr, k] : terms)
      c[(i * n + j) * n + k] += instantiate(expr, conductor);
  };
  for (const auto& [key, terms] : spec.products) put(key.first, key.second, terms);
  if (spec.kind == "lie") {
    // Fill unwritten mirror pairs by antisymmetry.
    for (const auto& [key, terms] : spec.products) {
      auto mirror = std::make_pair(key.second, key.first);
      if (spec.products.count(mirror)) continue;
      for (const auto& [expr, k] : terms) {
        CoeffExpr neg = expr;
        neg.coeff = -neg.coeff;
        c[(key.second * n + key.first) * n + k] += instantiate(neg, conductor);
      }
    }
  }
  return FiniteAlgebra::create(spec.names, std::move(c), conductor, spec.kind == "lie",
                               spec.kind == "associative");
}

std::vector<SigmaMatrix> parse_sigma_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path + ": cannot open");
  std::vector<SigmaMatrix> out;
  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> toks = split_ws(strip_comment(raw));
    if (toks.empty()) continue;
    if (toks[0] == "sigma") {
      if (toks.size() != 1) fail(path, lineno, "sigma takes no arguments");
      out.emplace_back();
      continue;
    }
    if (out.empty()) fail(path, lineno, "matrix row before any sigma line");
    std::vector<CoeffExpr> row;
    row.reserve(toks.size());
    for (const std::string& t : toks) row.push_back(parse_coeff_token(path, lineno, t));
    SigmaMatrix& m = out.back();
    if (!m.empty() && m.front().size() != row.size())
      fail(path, lineno, "ragged matrix row");
    m.push_back(std::move(row));
  }
  if (out.empty()) throw parse_error(path + ": no sigma blocks");
  for (const SigmaMatrix& m : out) {
    if (m.empty()) throw parse_error(path + ": empty sigma block");
    if (m.size() != m.front().size()) throw parse_error(path + ": sigma matrix is not square");
  }
  return out;
}

ExactMatrix instantiate(const SigmaMatrix& m, unsigned conductor) {
  ExactMatrix out(m.size(), m.front().size(), conductor);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) out.at(i, j) = instantiate(m[i][j], conductor);
  return out;
}

} // namespace loomalg
