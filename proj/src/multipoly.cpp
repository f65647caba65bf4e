#include "hypdeg/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hypdeg/error.hpp"

namespace hypdeg {

MultiPoly::MultiPoly(int nvars, TermMap terms) : m_(nvars) {
  for (auto& [e, c] : terms) add_term(e, c);
}

MultiPoly MultiPoly::constant(int nvars, const Int& c) {
  MultiPoly p(nvars);
  p.add_term(ExponentVector(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int j) {
  require(j >= 0 && j < nvars, ErrorCode::PreconditionFailed, "variable index out of range");
  ExponentVector e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(j)] = 1;
  MultiPoly p(nvars);
  p.add_term(e, Int(1));
  return p;
}

Int MultiPoly::coeff(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void MultiPoly::add_term(const ExponentVector& e, const Int& c) {
  require(static_cast<int>(e.size()) == m_, ErrorCode::PreconditionFailed, "exponent vector length mismatch");
  require(std::all_of(e.begin(), e.end(), [](int k) { return k >= 0; }), ErrorCode::PreconditionFailed,
          "negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& kv) { return std::accumulate(kv.first.begin(), kv.first.end(), 0) == d; });
}

int MultiPoly::degree_in(int j) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(j)]);
  return d;
}

MultiPoly MultiPoly::partial_derivative(int j) const {
  require(j >= 0 && j < m_, ErrorCode::PreconditionFailed, "variable index out of range");
  MultiPoly out(m_);
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(j)];
    if (k == 0) continue;
    ExponentVector f = e;
    f[static_cast<std::size_t>(j)] = k - 1;
    out.add_term(f, c * k);
  }
  return out;
}

Int MultiPoly::evaluate(const IntVector& x) const {
  require(static_cast<int>(x.size()) == m_, ErrorCode::PreconditionFailed, "point length mismatch");
  Int acc = 0;
  for (const auto& [e, c] : terms_) {
    Int term = c;
    for (int j = 0; j < m_; ++j) term *= int_pow(x[static_cast<std::size_t>(j)], static_cast<unsigned long>(e[static_cast<std::size_t>(j)]));
    acc += term;
  }
  return acc;
}

Rat MultiPoly::evaluate(const RationalVector& x) const {
  require(static_cast<int>(x.size()) == m_, ErrorCode::PreconditionFailed, "point length mismatch");
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat term(c);
    for (int j = 0; j < m_; ++j) term *= rat_pow(x[static_cast<std::size_t>(j)], static_cast<unsigned long>(e[static_cast<std::size_t>(j)]));
    acc += term;
  }
  return acc;
}

UniPoly MultiPoly::evaluate_composition(const std::vector<UniPoly>& x) const {
  require(static_cast<int>(x.size()) == m_, ErrorCode::PreconditionFailed, "composition length mismatch");
  // Cache the powers of each coordinate once.
  std::vector<std::vector<UniPoly>> powers(static_cast<std::size_t>(m_));
  for (int j = 0; j < m_; ++j) {
    auto& pw = powers[static_cast<std::size_t>(j)];
    pw.push_back(UniPoly::constant(Rat(1)));
    for (int k = 1; k <= degree_in(j); ++k) pw.push_back(pw.back() * x[static_cast<std::size_t>(j)]);
  }
  UniPoly acc;
  for (const auto& [e, c] : terms_) {
    UniPoly term = UniPoly::constant(Rat(c));
    for (int j = 0; j < m_; ++j) {
      const int k = e[static_cast<std::size_t>(j)];
      if (k > 0) term *= powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    }
    acc += term;
  }
  return acc;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require(m_ == o.m_, ErrorCode::PreconditionFailed, "variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require(m_ == o.m_, ErrorCode::PreconditionFailed, "variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require(a.m_ == b.m_, ErrorCode::PreconditionFailed, "variable count mismatch");
  MultiPoly out(a.m_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ExponentVector e(ea.size());
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly operator*(const Int& c, const MultiPoly& a) {
  MultiPoly out(a.m_);
  for (const auto& [e, v] : a.terms_) out.add_term(e, c * v);
  return out;
}

namespace {

std::string monomial_text(const ExponentVector& e) {
  std::string s;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(j + 1);
    if (e[j] > 1) s += "^" + std::to_string(e[j]);
  }
  return s;
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponent vectors first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const std::string mono = monomial_text(e);
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << mono;
    }
  }
  return os.str();
}

std::string to_string(const PolyOverT& g) {
  if (g.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")";
    const std::string mono = monomial_text(it->first);
    if (!mono.empty()) os << "*" << mono;
  }
  return os.str();
}

}  // namespace hypdeg
