#include "hypdeg/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hypdeg/error.hpp"

namespace hypdeg {

namespace {

int coordinate_sum(const ExponentVector& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Integer-preserving simplex tableau for
//   max delta  s.t.  (i - h).v + delta <= 0  (i in I, i != h),  sum v <= 1,  delta <= 1,  v, delta >= 0.
// The origin is feasible, so no first phase is needed. Entries are kept as integers scaled by the
// current pivot determinant; every update divides exactly by the previous pivot.
struct Tableau {
  std::size_t rows = 0;  // constraint rows; the objective row is index `rows`
  std::size_t cols = 0;  // structural + slack columns; rhs is column `cols`
  std::vector<IntVector> t;
  std::vector<std::size_t> basis;
  Int det = 1;

  void pivot(std::size_t r, std::size_t c) {
    const Int a = t[r][c];
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == r) continue;
      const Int f = t[i][c];
      for (std::size_t j = 0; j <= cols; ++j) {
        Int v = t[i][j] * a - f * t[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), det.get_mpz_t());
        t[i][j] = std::move(v);
      }
    }
    det = a;
    basis[r] = c;
  }

  // Bland's rule; returns false if unbounded (cannot happen with the delta <= 1 row).
  bool solve() {
    for (;;) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols; ++j)
        if (t[rows][j] < 0) {
          enter = j;
          break;
        }
      if (enter == cols) return true;
      std::size_t leave = rows;
      for (std::size_t i = 0; i < rows; ++i) {
        if (t[i][enter] <= 0) continue;
        if (leave == rows) {
          leave = i;
          continue;
        }
        // Compare rhs_i / a_i against rhs_leave / a_leave.
        const Int lhs = t[i][cols] * t[leave][enter];
        const Int rhs = t[leave][cols] * t[i][enter];
        if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
      }
      if (leave == rows) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

long coordinate_gcd(const ExponentVector& h) {
  long g = 0;
  for (int x : h) g = std::gcd(g, static_cast<long>(x));
  return g;
}

int Polytope::find(const ExponentVector& h) const {
  auto it = std::lower_bound(corners.begin(), corners.end(), h);
  if (it == corners.end() || *it != h) return -1;
  return static_cast<int>(it - corners.begin());
}

long Polytope::index_G() const {
  long g = 0;
  for (long x : gcds) g = std::gcd(g, x);
  return g;
}

std::vector<ExponentVector> support(const MultiPoly& f) {
  require(!f.is_zero(), ErrorCode::PreconditionFailed, "support of the zero polynomial");
  if (!f.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, f.to_string());
  std::vector<ExponentVector> out;
  for (const auto& [e, c] : f.terms()) out.push_back(e);
  return out;
}

bool is_corner(const std::vector<ExponentVector>& I, const ExponentVector& h, IntVector* witness) {
  const std::size_t m = h.size();
  std::vector<ExponentVector> others;
  for (const auto& i : I)
    if (i != h) others.push_back(i);
  Tableau tab;
  tab.rows = others.size() + 2;
  // Columns: v_1..v_m, delta, then one slack per row.
  const std::size_t delta = m;
  tab.cols = m + 1 + tab.rows;
  tab.t.assign(tab.rows + 1, IntVector(tab.cols + 1, Int(0)));
  tab.basis.resize(tab.rows);
  for (std::size_t r = 0; r < others.size(); ++r) {
    for (std::size_t j = 0; j < m; ++j) tab.t[r][j] = others[r][j] - h[j];
    tab.t[r][delta] = 1;
  }
  const std::size_t sum_row = others.size();
  for (std::size_t j = 0; j < m; ++j) tab.t[sum_row][j] = 1;
  tab.t[sum_row][tab.cols] = 1;
  const std::size_t cap_row = sum_row + 1;
  tab.t[cap_row][delta] = 1;
  tab.t[cap_row][tab.cols] = 1;
  for (std::size_t r = 0; r < tab.rows; ++r) {
    tab.t[r][m + 1 + r] = 1;
    tab.basis[r] = m + 1 + r;
  }
  tab.t[tab.rows][delta] = -1;
  require(tab.solve(), ErrorCode::PreconditionFailed, "corner LP unbounded");
  if (tab.t[tab.rows][tab.cols] <= 0) return false;
  IntVector v(m, Int(0));
  for (std::size_t r = 0; r < tab.rows; ++r)
    if (tab.basis[r] < m) v[tab.basis[r]] = tab.t[r][tab.cols];
  // Scale down by the common gcd and re-verify with plain dot products.
  Int g = 0;
  for (const auto& x : v) g = int_gcd(g, x);
  if (g == 0) {
    // Only possible for the singleton support, where any v works.
    std::fill(v.begin(), v.end(), Int(1));
  } else {
    for (auto& x : v) x /= g;
  }
  auto dot = [&](const ExponentVector& e) {
    Int s = 0;
    for (std::size_t j = 0; j < m; ++j) s += v[j] * e[j];
    return s;
  };
  const Int hv = dot(h);
  for (const auto& i : others)
    require(hv > dot(i), ErrorCode::PreconditionFailed, "corner witness failed re-verification");
  if (witness != nullptr) *witness = std::move(v);
  return true;
}

Polytope corners_general(const std::vector<ExponentVector>& I) {
  require(!I.empty(), ErrorCode::PreconditionFailed, "empty support");
  std::set<ExponentVector> uniq(I.begin(), I.end());
  std::vector<ExponentVector> pts(uniq.begin(), uniq.end());
  Polytope P;
  P.m = static_cast<int>(pts.front().size());
  const int s0 = coordinate_sum(pts.front());
  P.d = std::all_of(pts.begin(), pts.end(), [&](const auto& e) { return coordinate_sum(e) == s0; }) ? s0 : -1;
  for (const auto& h : pts) {
    require(static_cast<int>(h.size()) == P.m, ErrorCode::PreconditionFailed, "mixed vector lengths");
    IntVector w;
    if (is_corner(pts, h, &w)) {
      P.corners.push_back(h);
      P.gcds.push_back(coordinate_gcd(h));
      P.witnesses.push_back(std::move(w));
    }
  }
  return P;
}

Polytope corners(const std::vector<ExponentVector>& I) {
  require(!I.empty(), ErrorCode::PreconditionFailed, "empty support");
  const int s0 = coordinate_sum(I.front());
  for (const auto& e : I)
    if (coordinate_sum(e) != s0) throw Error(ErrorCode::NotHomogeneous, "support vectors have different coordinate sums");
  return corners_general(I);
}

Restriction restrict_J(const Polytope& H, const std::vector<int>& J) {
  require(!J.empty(), ErrorCode::PreconditionFailed, "J must be nonempty");
  std::set<ExponentVector> proj;
  Restriction r;
  for (const auto& h : H.corners) {
    ExponentVector p;
    for (int j : J) {
      require(j >= 0 && j < H.m, ErrorCode::PreconditionFailed, "J index out of range");
      p.push_back(h[static_cast<std::size_t>(j)]);
    }
    r.degree = std::max(r.degree, coordinate_sum(p));
    proj.insert(std::move(p));
  }
  r.points.assign(proj.begin(), proj.end());
  return r;
}

bool validity_flag(const Polytope& H) {
  for (int j = 0; j < H.m; ++j) {
    bool zero = false, positive = false;
    for (const auto& h : H.corners) {
      zero = zero || h[static_cast<std::size_t>(j)] == 0;
      positive = positive || h[static_cast<std::size_t>(j)] > 0;
    }
    if (!zero || !positive) return false;
  }
  return true;
}

Polytope newton_polytope(const MultiPoly& f) { return corners(support(f)); }

namespace families {

std::vector<ExponentVector> diagonal(int m, int d) {
  std::vector<ExponentVector> out;
  for (int j = 0; j < m; ++j) {
    ExponentVector e(static_cast<std::size_t>(m), 0);
    e[static_cast<std::size_t>(j)] = d;
    out.push_back(e);
  }
  return out;
}

std::vector<ExponentVector> hyperelliptic(int d) {
  std::vector<ExponentVector> out{{0, 2, d - 2}};
  for (int i = 0; i <= d; ++i) out.push_back({i, 0, d - i});
  return out;
}

std::vector<ExponentVector> superelliptic(int q, int d) { return {{d, 0, 0}, {0, 0, d}, {0, q, d - q}}; }

std::vector<ExponentVector> symmetric(int a, int b) { return {{a, b, 0}, {0, a, b}, {b, 0, a}}; }

}  // namespace families

}  // namespace hypdeg
