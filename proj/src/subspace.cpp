#include "homnalg/subspace.hpp"

#include <algorithm>

#include "homnalg/error.hpp"

namespace homnalg {

namespace {

// Back-substitute so the echelon rows become fully reduced (RREF).
void reduce_upward(std::vector<Vec>& rows, const std::vector<std::size_t>& pivots) {
  for (std::size_t i = rows.size(); i-- > 0;) {
    for (std::size_t j = 0; j < i; ++j) {
      Rat f = rows[j][pivots[i]];
      if (sgn(f) == 0) continue;
      for (std::size_t c = pivots[i]; c < rows[j].size(); ++c) rows[j][c] -= f * rows[i][c];
    }
  }
}

}  // namespace

bool SpanBuilder::add(Vec v) {
  if (v.size() != ambient_) throw Error("generator has wrong ambient dimension");
  v = reduce(std::move(v));
  std::size_t lead = 0;
  while (lead < ambient_ && sgn(v[lead]) == 0) ++lead;
  if (lead == ambient_) return false;
  Rat inv = 1 / v[lead];
  for (std::size_t c = lead; c < ambient_; ++c) v[c] *= inv;
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, lead);
  return true;
}

bool SpanBuilder::add(const SparseVec& v) {
  return add(sv_dense(v, ambient_));
}

Vec SpanBuilder::reduce(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rat f = v[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = pivots_[i]; c < ambient_; ++c) v[c] -= f * rows_[i][c];
  }
  return v;
}

bool SpanBuilder::contains_reduced(const Vec& v) const {
  return is_zero(reduce(v));
}

Subspace SpanBuilder::finish() {
  reduce_upward(rows_, pivots_);
  Subspace s(ambient_);
  s.rows_ = std::move(rows_);
  s.pivots_ = std::move(pivots_);
  rows_.clear();
  pivots_.clear();
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.rows_.push_back(unit_vec(ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& gens) {
  SpanBuilder b(ambient);
  for (const Vec& g : gens) b.add(g);
  return b.finish();
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw Error("vector has wrong ambient dimension");
  Vec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rat f = r[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = pivots_[i]; c < ambient_; ++c) r[c] -= f * rows_[i][c];
  }
  return r;
}

bool Subspace::contains(const Vec& v) const {
  return is_zero(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error("ambient dimension mismatch");
  for (const Vec& row : other.rows_)
    if (!contains(row)) return false;
  return true;
}

std::optional<Vec> Subspace::coords(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  // rows are RREF: the coefficient of basis row i is v[pivots_[i]]
  Vec c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace kernel_basis(const Matrix& m) {
  // RREF of m, then the standard null-space basis, re-echelonized so the
  // stored representation is canonical.
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  SpanBuilder rowspace(m.cols());
  for (Vec& r : rows) rowspace.add(std::move(r));
  Subspace rs = rowspace.finish();

  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : rs.pivots()) is_pivot[p] = true;

  SpanBuilder ker(m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < rs.dim(); ++i) v[rs.pivots()[i]] = -rs.basis()[i][f];
    ker.add(std::move(v));
  }
  return ker.finish();
}

Subspace image_basis(const Matrix& m) {
  SpanBuilder b(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) b.add(m.column(c));
  return b.finish();
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("ambient dimension mismatch");
  SpanBuilder s(a.ambient_dim());
  for (const Vec& v : a.basis()) s.add(v);
  for (const Vec& v : b.basis()) s.add(v);
  return s.finish();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("ambient dimension mismatch");
  // Zassenhaus: echelonize rows [v|v] for v in a and [w|0] for w in b; the
  // rows whose left half vanished have right halves spanning the intersection.
  const std::size_t n = a.ambient_dim();
  SpanBuilder big(2 * n);
  for (const Vec& v : a.basis()) {
    Vec w(2 * n);
    for (std::size_t i = 0; i < n; ++i) w[i] = v[i], w[n + i] = v[i];
    big.add(std::move(w));
  }
  for (const Vec& v : b.basis()) {
    Vec w(2 * n);
    for (std::size_t i = 0; i < n; ++i) w[i] = v[i];
    big.add(std::move(w));
  }
  Subspace bigspace = big.finish();
  SpanBuilder out(n);
  for (std::size_t i = 0; i < bigspace.dim(); ++i)
    if (bigspace.pivots()[i] >= n)
      out.add(Vec(bigspace.basis()[i].begin() + n, bigspace.basis()[i].end()));
  return out.finish();
}

Subspace image_under(const Matrix& f, const Subspace& s) {
  if (f.cols() != s.ambient_dim()) throw Error("map/subspace dimension mismatch");
  SpanBuilder b(f.rows());
  for (const Vec& v : s.basis()) b.add(mul(f, v));
  return b.finish();
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw Error("rhs has wrong dimension");
  // RREF of the augmented matrix [m | b]
  const std::size_t n = m.cols();
  SpanBuilder rs(n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vec row(n + 1);
    for (std::size_t c = 0; c < n; ++c) row[c] = m.at(r, c);
    row[n] = b[r];
    rs.add(std::move(row));
  }
  Subspace aug = rs.finish();
  Vec x(n);
  for (std::size_t i = 0; i < aug.dim(); ++i) {
    std::size_t p = aug.pivots()[i];
    if (p == n) return std::nullopt;  // inconsistent
    x[p] = aug.basis()[i][n];
  }
  return x;
}

}  // namespace homnalg
