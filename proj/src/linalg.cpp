#include "newtonlab/linalg.hpp"

#include <algorithm>

namespace nl {

namespace {

int rank_inplace(RMat& m) {
  if (m.empty()) return 0;
  std::size_t nc = m[0].size();
  int r = 0;
  for (std::size_t c = 0; c < nc && r < static_cast<int>(m.size()); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < nc; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

int rank(const RMat& rows) {
  RMat m = rows;
  return rank_inplace(m);
}

int rank(const IMat& rows) {
  RMat m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(to_rat(r));
  return rank_inplace(m);
}

int affine_dim(const std::vector<IVec>& pts) {
  if (pts.empty()) return -1;
  IMat d;
  for (std::size_t i = 1; i < pts.size(); ++i) d.push_back(sub(pts[i], pts[0]));
  return rank(d);
}

Int det(IMat m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IMat integer_kernel(const IMat& m, std::size_t n) {
  IMat a = m;  // rows
  IMat u(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  // column j of U is u[*][j]
  auto colop = [&](std::size_t p, std::size_t q, const Int& s, const Int& t, const Int& x,
                   const Int& y) {
    // col_p <- s col_p + t col_q ; col_q <- x col_p + y col_q
    for (auto* mat : {&a, &u})
      for (auto& row : *mat) {
        Int cp = row[p], cq = row[q];
        row[p] = s * cp + t * cq;
        row[q] = x * cp + y * cq;
      }
  };
  std::size_t piv = 0;
  for (std::size_t i = 0; i < a.size() && piv < n; ++i) {
    for (std::size_t j = piv + 1; j < n; ++j) {
      if (a[i][j] == 0) continue;
      Int aa = a[i][piv], bb = a[i][j], g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), aa.get_mpz_t(), bb.get_mpz_t());
      Int x = -bb / g, y = aa / g;
      colop(piv, j, s, t, x, y);
    }
    if (a[i][piv] != 0) ++piv;
  }
  IMat ker;
  for (std::size_t j = piv; j < n; ++j) {
    IVec v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = u[r][j];
    ker.push_back(std::move(v));
  }
  return ker;
}

Frame::Frame(const std::vector<IVec>& pts) {
  if (pts.empty()) throw InputError("frame of empty point set");
  base_ = pts[0];
  std::size_t n = base_.size();
  IMat d;
  for (std::size_t i = 1; i < pts.size(); ++i) d.push_back(sub(pts[i], base_));
  annihilator_ = integer_kernel(d, n);
  if (annihilator_.empty()) {
    basis_.assign(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) basis_[i][i] = 1;
  } else {
    basis_ = integer_kernel(annihilator_, n);
  }
  std::size_t k = basis_.size();
  // choose k rows (coordinates) making the basis invertible
  RMat cur;
  for (std::size_t r = 0; r < n && rows_.size() < k; ++r) {
    RVec row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = basis_[j][r];
    cur.push_back(row);
    if (rank(cur) == static_cast<int>(cur.size()))
      rows_.push_back(r);
    else
      cur.pop_back();
  }
  // invert cur (k x k), where cur[i][j] = basis_[j][rows_[i]]
  inv_.assign(k, RVec(k, 0));
  RMat aug = cur;
  for (std::size_t i = 0; i < k; ++i) {
    aug[i].resize(2 * k, 0);
    aug[i][k + i] = 1;
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (aug[p][c] == 0) ++p;
    std::swap(aug[p], aug[c]);
    Rat f = aug[c][c];
    for (auto& x : aug[c]) x /= f;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      Rat g = aug[i][c];
      for (std::size_t j = 0; j < 2 * k; ++j) aug[i][j] -= g * aug[c][j];
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) inv_[i][j] = aug[i][k + j];
}

bool Frame::contains(const IVec& p) const {
  IVec d = sub(p, base_);
  for (const auto& c : annihilator_)
    if (dot(c, d) != 0) return false;
  RVec y = local_rat(to_rat(p));
  for (const auto& x : y)
    if (x.get_den() != 1) return false;
  return true;
}

RVec Frame::local_rat(const RVec& p) const {
  std::size_t k = basis_.size();
  RVec d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = p[rows_[i]] - base_[rows_[i]];
  RVec y(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) y[i] += inv_[i][j] * d[j];
  return y;
}

IVec Frame::local(const IVec& p) const {
  IVec d = sub(p, base_);
  for (const auto& a : annihilator_)
    if (dot(a, d) != 0) throw InputError("point outside the affine span");
  RVec y = local_rat(to_rat(p));
  IVec r(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i].get_den() != 1) throw InputError("point outside the affine lattice");
    r[i] = y[i].get_num();
  }
  return r;
}

IVec Frame::global(const IVec& y) const {
  IVec p = base_;
  for (std::size_t j = 0; j < y.size(); ++j)
    for (std::size_t r = 0; r < p.size(); ++r) p[r] += y[j] * basis_[j][r];
  return p;
}

RVec Frame::lift_covector(const RVec& lc) const {
  // find ambient c with c . basis_j = lc_j, supported on rows_
  std::size_t k = basis_.size();
  RVec c(base_.size(), 0);
  // c_rows . cur[:,j] = lc_j  ->  c_rows^T = lc^T inv
  for (std::size_t i = 0; i < k; ++i) {
    Rat s = 0;
    for (std::size_t j = 0; j < k; ++j) s += lc[j] * inv_[j][i];
    c[rows_[i]] = s;
  }
  return c;
}

std::pair<IVec, Int> hyperplane_through(const std::vector<IVec>& pts) {
  std::size_t k = pts[0].size();
  IMat d;
  for (std::size_t i = 1; i < pts.size(); ++i) d.push_back(sub(pts[i], pts[0]));
  IMat ker = integer_kernel(d, k);
  if (ker.size() != 1) throw std::logic_error("hyperplane_through: degenerate points");
  IVec a = primitive(ker[0]);
  return {a, dot(a, pts[0])};
}

RVec solve(RMat a, RVec b) {
  std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::logic_error("solve: singular system");
    std::swap(a[p], a[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  RVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

}  // namespace nl
