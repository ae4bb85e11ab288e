#include "liebider/exactla.hpp"

#include <algorithm>

#include "liebider/errors.hpp"

namespace liebider {

namespace {

void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  Rational g;
  for (const auto& [col, val] : row) {
    g = gcd(g, val);
    if (g.is_one()) break;
  }
  const bool flip = row.front().second.sign() < 0;
  if (g.is_one()) {
    if (flip)
      for (auto& e : row) e.second = -e.second;
    return;
  }
  if (flip) g = -g;
  for (auto& e : row) e.second /= g;
}

// Cancels the leading entry of `row` against `pivot` (same leading column)
// using integer multipliers only.
SparseRow eliminate(const SparseRow& row, const SparseRow& pivot) {
  const Rational& a = row.front().second;
  const Rational& b = pivot.front().second;
  const Rational g = gcd(a, b);
  const Rational row_scale = b / g;
  const Rational pivot_scale = a / g;

  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1;
  std::size_t j = 1;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, row_scale * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -(pivot_scale * pivot[j].second));
      ++j;
    } else {
      Rational v = row_scale * row[i].second - pivot_scale * pivot[j].second;
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseRow to_sparse(std::span<const Rational> dense) {
  SparseRow row;
  for (std::size_t c = 0; c < dense.size(); ++c)
    if (!dense[c].is_zero()) row.emplace_back(c, dense[c]);
  return row;
}

Vector to_dense(const SparseRow& row, std::size_t cols) {
  Vector out(cols);
  for (const auto& [c, v] : row) out[c] = v;
  return out;
}

}  // namespace

std::size_t SparseRowHash::operator()(const SparseRow& row) const noexcept {
  std::size_t h = row.size();
  for (const auto& [c, v] : row) {
    h ^= c + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h ^= v.hash() + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void EchelonBuilder::add_row(std::span<const Rational> dense) {
  if (dense.size() != cols_) throw DimMismatch("row length does not match column count");
  add_row(to_sparse(dense));
}

void EchelonBuilder::add_row(SparseRow row) {
  std::erase_if(row, [](const auto& e) { return e.second.is_zero(); });
  if (row.empty()) return;
  if (row.back().first >= cols_) throw DimMismatch("sparse row column out of range");
  make_primitive(row);
  if (!seen_.insert(row).second) return;

  while (!row.empty()) {
    const std::size_t idx = pivot_index_[row.front().first];
    if (idx == kNone) break;
    row = eliminate(row, pivot_rows_[idx]);
    make_primitive(row);
  }
  if (row.empty()) return;
  pivot_index_[row.front().first] = pivot_rows_.size();
  pivot_rows_.push_back(std::move(row));
}

EchelonBuilder::Reduced EchelonBuilder::reduce() const {
  Reduced out;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_index_[c] != kNone) out.pivots.push_back(c);
  out.rows.resize(out.pivots.size());

  // position of each pivot column within out.rows
  std::vector<std::size_t> slot(cols_, kNone);
  for (std::size_t k = 0; k < out.pivots.size(); ++k) slot[out.pivots[k]] = k;

  // Back substitution, last pivot first.
  Vector acc(cols_);
  for (std::size_t k = out.pivots.size(); k-- > 0;) {
    const std::size_t c = out.pivots[k];
    const SparseRow& src = pivot_rows_[pivot_index_[c]];
    for (const auto& [col, v] : src) acc[col] = v;
    for (const auto& [col, v] : src) {
      if (col == c || slot[col] == kNone) continue;
      const Rational factor = acc[col];
      for (const auto& [rc, rv] : out.rows[slot[col]]) acc[rc] -= factor * rv;
    }
    const Rational lead = acc[c];
    SparseRow reduced;
    for (std::size_t col = c; col < cols_; ++col) {
      if (!acc[col].is_zero()) {
        reduced.emplace_back(col, acc[col] / lead);
        acc[col] = Rational();
      }
    }
    out.rows[k] = std::move(reduced);
  }
  return out;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  EchelonBuilder builder(ambient_dim);
  for (const auto& v : vectors) builder.add_row(v);
  return from_reduced(ambient_dim, builder.reduce());
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(unit_vector(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::from_reduced(std::size_t ambient_dim, const EchelonBuilder::Reduced& reduced) {
  Subspace s(ambient_dim);
  s.pivots_ = reduced.pivots;
  s.basis_.reserve(reduced.rows.size());
  for (const auto& row : reduced.rows) s.basis_.push_back(to_dense(row, ambient_dim));
  return s;
}

bool Subspace::contains(std::span<const Rational> v) const { return coordinates(v).has_value(); }

std::optional<Vector> Subspace::coordinates(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw AmbientMismatch("vector length does not match ambient dimension");
  Vector rest(v.begin(), v.end());
  Vector coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational factor = rest[pivots_[i]];
    if (factor.is_zero()) continue;
    coords[i] = factor;
    const Vector& b = basis_[i];
    for (std::size_t c = pivots_[i]; c < ambient_; ++c)
      if (!b[c].is_zero()) rest[c] -= factor * b[c];
  }
  if (!liebider::is_zero(std::span<const Rational>(rest))) return std::nullopt;
  return coords;
}

RrefResult rref(const Matrix& m) {
  EchelonBuilder builder(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) builder.add_row(m.row(r));
  const auto reduced = builder.reduce();
  RrefResult out{Matrix(m.rows(), m.cols()), reduced.pivots};
  for (std::size_t k = 0; k < reduced.rows.size(); ++k)
    for (const auto& [c, v] : reduced.rows[k]) out.reduced(k, c) = v;
  return out;
}

Subspace kernel_of(const EchelonBuilder& rows) {
  const std::size_t n = rows.cols();
  const auto reduced = rows.reduce();
  std::vector<std::size_t> free_slot(n, static_cast<std::size_t>(-1));
  std::vector<bool> is_pivot(n, false);
  for (auto p : reduced.pivots) is_pivot[p] = true;
  std::vector<Vector> params;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    free_slot[c] = params.size();
    params.push_back(unit_vector(n, c));
  }
  for (std::size_t k = 0; k < reduced.rows.size(); ++k) {
    const std::size_t p = reduced.pivots[k];
    for (const auto& [c, v] : reduced.rows[k])
      if (c != p) params[free_slot[c]][p] = -v;
  }
  return Subspace::span(n, params);
}

Subspace kernel_basis(const Matrix& m) {
  EchelonBuilder builder(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) builder.add_row(m.row(r));
  return kernel_of(builder);
}

std::optional<Vector> solve_linear(const Matrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw DimMismatch("right-hand side length does not match row count");
  const std::size_t n = m.cols();
  EchelonBuilder builder(n + 1);
  Vector aug(n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), aug.begin());
    aug[n] = b[r];
    builder.add_row(aug);
  }
  const auto reduced = builder.reduce();
  Vector x(n);
  for (std::size_t k = 0; k < reduced.rows.size(); ++k) {
    const std::size_t p = reduced.pivots[k];
    if (p == n) return std::nullopt;
    const auto& row = reduced.rows[k];
    if (row.back().first == n) x[p] = row.back().second;
  }
  return x;
}

bool is_subspace_of(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) throw AmbientMismatch("subspaces live in different ambient spaces");
  if (s.dim() > t.dim()) return false;
  return std::all_of(s.basis().begin(), s.basis().end(), [&](const Vector& v) { return t.contains(v); });
}

Containment subspace_compare(const Subspace& s, const Subspace& t) {
  const bool st = is_subspace_of(s, t);
  const bool ts = is_subspace_of(t, s);
  if (st && ts) return Containment::equal;
  if (st) return Containment::first_in_second;
  if (ts) return Containment::second_in_first;
  return Containment::incomparable;
}

SubspaceSum subspace_combine(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) throw AmbientMismatch("subspaces live in different ambient spaces");
  const std::size_t n = s.ambient_dim();
  std::vector<Vector> all = s.basis();
  all.insert(all.end(), t.basis().begin(), t.basis().end());
  Subspace sum = Subspace::span(n, all);

  // (a, b) with sum a_i s_i - sum b_j t_j = 0 parameterise the intersection.
  const std::size_t ds = s.dim();
  const std::size_t dt = t.dim();
  Matrix stacked(n, ds + dt);
  for (std::size_t i = 0; i < ds; ++i)
    for (std::size_t r = 0; r < n; ++r) stacked(r, i) = s.basis()[i][r];
  for (std::size_t j = 0; j < dt; ++j)
    for (std::size_t r = 0; r < n; ++r) stacked(r, ds + j) = -t.basis()[j][r];
  const Subspace relations = kernel_basis(stacked);
  std::vector<Vector> common;
  for (const auto& rel : relations.basis()) {
    Vector v(n);
    for (std::size_t i = 0; i < ds; ++i)
      if (!rel[i].is_zero()) v = v + rel[i] * s.basis()[i];
    common.push_back(std::move(v));
  }
  return {std::move(sum), Subspace::span(n, common)};
}

Subspace subspace_projection(const Subspace& s, std::size_t begin, std::size_t count) {
  if (begin + count > s.ambient_dim()) throw AmbientMismatch("projection range exceeds ambient dimension");
  std::vector<Vector> images;
  images.reserve(s.dim());
  for (const auto& v : s.basis()) images.emplace_back(v.begin() + begin, v.begin() + begin + count);
  return Subspace::span(count, images);
}

const char* to_string(Containment c) {
  switch (c) {
    case Containment::equal: return "equal";
    case Containment::first_in_second: return "first_in_second";
    case Containment::second_in_first: return "second_in_first";
    case Containment::incomparable: return "incomparable";
  }
  return "?";
}

}  // namespace liebider
