#include "hypdeg/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "hypdeg/error.hpp"
#include "hypdeg/linalg.hpp"

namespace hypdeg {

namespace {
const Rat kZero(0);
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly::UniPoly(std::initializer_list<long> low_to_high) {
  coeffs_.reserve(low_to_high.size());
  for (long c : low_to_high) coeffs_.emplace_back(c);
  normalize();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(const Rat& c, int degree) {
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1, Rat(0));
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_ints(const std::vector<Int>& low_to_high) {
  std::vector<Rat> v(low_to_high.begin(), low_to_high.end());
  return UniPoly(std::move(v));
}

UniPoly UniPoly::t() { return monomial(Rat(1), 1); }

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rat& UniPoly::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

Rat UniPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += constant(*it);
  }
  return acc;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result = constant(Rat(1));
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading());
}

UniPoly UniPoly::scaled(const Rat& c) const {
  if (c == 0) return {};
  std::vector<Rat> v(coeffs_);
  for (auto& x : v) x *= c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::shifted(const Rat& shift) const { return compose(UniPoly({0, 1}) + constant(shift)); }

bool UniPoly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c.get_den() == 1; });
}

std::vector<Int> UniPoly::to_ints() const {
  std::vector<Int> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    require(c.get_den() == 1, ErrorCode::PreconditionFailed, "polynomial is not integral");
    out.push_back(c.get_num());
  }
  return out;
}

Rat UniPoly::height() const {
  Rat h(0);
  for (const auto& c : coeffs_) h = std::max(h, Rat(abs(c)));
  return h;
}

Rat UniPoly::content() const {
  if (is_zero()) return Rat(0);
  Int num_gcd = 0;
  Int den_lcm = 1;
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    num_gcd = int_gcd(num_gcd, c.get_num());
    den_lcm = int_lcm(den_lcm, c.get_den());
  }
  Rat cont(num_gcd, den_lcm);
  cont.canonicalize();
  if (leading() < 0) cont = -cont;
  return cont;
}

UniPoly UniPoly::primitive_part() const {
  if (is_zero()) return *this;
  return scaled(1 / content());
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  *this = *this * o;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

bool lex_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
  return false;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  require(!b.is_zero(), ErrorCode::PreconditionFailed, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rat> rem(a.coeffs());
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rat(0));
  const Rat inv_lead = 1 / b.leading();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    Rat& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Rat q = top * inv_lead;
    const int shift = i - db;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(shift + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    quo[static_cast<std::size_t>(shift)] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).remainder; }

UniPoly poly_divide_exact(const UniPoly& a, const UniPoly& b) {
  auto qr = divmod(a, b);
  if (!qr.remainder.is_zero())
    throw Error(ErrorCode::NotDivisible, b.to_string() + " does not divide " + a.to_string());
  return qr.quotient;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    // Keep intermediate coefficients small.
    y = r.is_zero() ? r : r.primitive_part();
  }
  return x.monic();
}

ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(Rat(1)), s1;
  UniPoly t0, t1 = UniPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto qr = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    UniPoly s2 = s0 - qr.quotient * s1;
    UniPoly t2 = t0 - qr.quotient * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rat inv = 1 / r0.leading();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

UniPoly inverse_mod(const UniPoly& a, const UniPoly& m) {
  auto eg = ext_gcd(a % m, m);
  if (eg.g.degree() != 0)
    throw Error(ErrorCode::NotCoprime, a.to_string() + " is not invertible modulo " + m.to_string());
  return eg.s % m;
}

namespace {

// Integer-coefficient copy of q*p where q clears denominators; returns the multiplier.
std::vector<Int> integerize(const UniPoly& p, Int& multiplier) {
  multiplier = 1;
  for (const auto& c : p.coeffs()) multiplier = int_lcm(multiplier, c.get_den());
  std::vector<Int> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (multiplier / c.get_den()));
  return out;
}

}  // namespace

Rat resultant(const UniPoly& a, const UniPoly& b) {
  require(!a.is_zero() && !b.is_zero(), ErrorCode::PreconditionFailed, "resultant of zero polynomial");
  const int n = a.degree();
  const int m = b.degree();
  if (n == 0 && m == 0) return Rat(1);
  if (n == 0) return rat_pow(a.leading(), static_cast<unsigned long>(m));
  if (m == 0) return rat_pow(b.leading(), static_cast<unsigned long>(n));
  Int ma, mb;
  const auto ai = integerize(a, ma);
  const auto bi = integerize(b, mb);
  const std::size_t size = static_cast<std::size_t>(n + m);
  IntMatrix s(size, IntVector(size, Int(0)));
  // Rows 0..m-1: shifted a (highest coefficient first); rows m..m+n-1: shifted b.
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = ai[static_cast<std::size_t>(n - k)];
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(m + r)][static_cast<std::size_t>(r + k)] = bi[static_cast<std::size_t>(m - k)];
  Rat res(bareiss_determinant(std::move(s)));
  // Res(ma*a, mb*b) = ma^m mb^n Res(a, b).
  Rat scale(int_pow(ma, static_cast<unsigned long>(m)) * int_pow(mb, static_cast<unsigned long>(n)));
  res /= scale;
  return res;
}

Rat discriminant(const UniPoly& g) {
  require(g.degree() >= 1, ErrorCode::PreconditionFailed, "discriminant needs degree >= 1");
  const long n = g.degree();
  if (n == 1) return Rat(1);
  Rat res = resultant(g, g.derivative());
  Rat disc = res / g.leading();
  if (((n * (n - 1)) / 2) % 2 == 1) disc = -disc;
  return disc;
}

bool discriminant_within_hadamard_bound(const UniPoly& g, const Rat& disc) {
  const long n = g.degree();
  if (n <= 1) return abs(disc) <= 1;
  const Rat h = g.height();
  // disc^2 <= (1 + n^2) * (n^3 + n - 1)^(2n-2) * h^(4n-4)
  Rat rhs = Rat(1 + n * n) * rat_pow(Rat(n * n * n + n - 1), static_cast<unsigned long>(2 * n - 2)) *
            rat_pow(h, static_cast<unsigned long>(4 * n - 4));
  return disc * disc <= rhs;
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& g) {
  std::vector<std::pair<UniPoly, int>> out;
  if (g.degree() < 1) return out;
  const UniPoly f = g.monic();
  const UniPoly df = f.derivative();
  UniPoly a = gcd(f, df);
  UniPoly b = poly_divide_exact(f, a);
  UniPoly c = poly_divide_exact(df.monic().scaled(df.leading() / f.leading()), a);
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() >= 1) {
    UniPoly factor = gcd(b, d);
    b = poly_divide_exact(b, factor);
    c = poly_divide_exact(d, factor);
    d = c - b.derivative();
    if (factor.degree() >= 1) out.emplace_back(factor, i);
    ++i;
  }
  return out;
}

}  // namespace hypdeg

namespace hypdeg {

UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  require(!xs.empty() && xs.size() == ys.size(), ErrorCode::PreconditionFailed, "interpolation needs matching nonempty data");
  // Newton divided differences, then Horner in the Newton basis.
  std::vector<Rat> c = ys;
  const std::size_t n = xs.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - k]);
      if (i == k) break;
    }
  UniPoly p = UniPoly::constant(c[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) p = p * UniPoly(std::vector<Rat>{-xs[i], Rat(1)}) + UniPoly::constant(c[i]);
  return p;
}

}  // namespace hypdeg
