#include "liebider/derivations.hpp"

#include "liebider/errors.hpp"

namespace liebider {

namespace {

// Unknown entry D(r, c) of an n x n map sits at column r * n + c.
std::size_t slot(std::size_t n, std::size_t r, std::size_t c) { return r * n + c; }

// Rows of [f(e_i), e_j] + sign * [e_i, f(e_j)] = 0 in the entries of f.
// The pairs j > i repeat the pairs j < i up to sign; the diagonal j = i is
// never redundant.
void add_commuting_rows(const LieAlgebra& alg, int sign, bool all_pairs, EchelonBuilder& rows) {
  const std::size_t n = alg.dim();
  Vector row(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = all_pairs ? 0 : i; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        std::fill(row.begin(), row.end(), Rational());
        // [f(e_i), e_j]_r = sum_s f(s, i) c_sj^r
        for (std::size_t s = 0; s < n; ++s) row[slot(n, s, i)] += alg.c(s, j, r);
        // [e_i, f(e_j)]_r = sum_s f(s, j) c_is^r
        for (std::size_t s = 0; s < n; ++s)
          if (!alg.c(i, s, r).is_zero()) row[slot(n, s, j)] += Rational(sign) * alg.c(i, s, r);
        rows.add_row(row);
      }
}

}  // namespace

Subspace derivation_space(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  EchelonBuilder rows(n * n);
  Vector row(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        std::fill(row.begin(), row.end(), Rational());
        // (D [e_i, e_j])_r = sum_t c_ij^t D(r, t)
        for (std::size_t t = 0; t < n; ++t) row[slot(n, r, t)] += alg.c(i, j, t);
        // ([D e_i, e_j])_r = sum_s D(s, i) c_sj^r
        for (std::size_t s = 0; s < n; ++s) row[slot(n, s, i)] -= alg.c(s, j, r);
        // ([e_i, D e_j])_r = sum_s D(s, j) c_is^r
        for (std::size_t s = 0; s < n; ++s) row[slot(n, s, j)] -= alg.c(i, s, r);
        rows.add_row(row);
      }
  return kernel_of(rows);
}

Subspace inner_derivation_space(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<Vector> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(flatten(adjoint_matrix(alg, unit_vector(n, i))));
  return Subspace::span(n * n, ads);
}

bool is_derivation(const LieAlgebra& alg, const Matrix& map) {
  const std::size_t n = alg.dim();
  if (map.rows() != n || map.cols() != n) throw DimMismatch("map size does not match algebra dimension");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element lhs = map.apply(alg.basis_bracket(i, j));
      const Element rhs = alg.bracket(map.column(i), unit_vector(n, j)) + alg.bracket(unit_vector(n, i), map.column(j));
      if (lhs != rhs) return false;
    }
  return true;
}

Completeness is_complete(const LieAlgebra& alg) {
  Completeness out;
  out.center_dim = center(alg).dim();
  const Subspace der = derivation_space(alg);
  const Subspace inner = inner_derivation_space(alg);
  out.der_dim = der.dim();
  out.inner_dim = inner.dim();
  out.complete = out.center_dim == 0 && subspace_compare(der, inner) == Containment::equal;
  return out;
}

Subspace commuting_map_space(const LieAlgebra& alg) {
  EchelonBuilder rows(alg.dim() * alg.dim());
  add_commuting_rows(alg, -1, false, rows);
  return kernel_of(rows);
}

Subspace skew_commuting_map_space(const LieAlgebra& alg) {
  EchelonBuilder rows(alg.dim() * alg.dim());
  add_commuting_rows(alg, +1, true, rows);
  return kernel_of(rows);
}

Element ad_preimage(const LieAlgebra& alg, const Matrix& map) {
  const std::size_t n = alg.dim();
  if (map.rows() != n || map.cols() != n) throw DimMismatch("map size does not match algebra dimension");
  if (!center(alg).is_zero()) throw CenterNonzero("ad preimage is not unique: the center is nonzero");
  // ad(u) = sum_i u_i ad(e_i); column i of the system is flatten(ad(e_i)).
  Matrix system(n * n, n);
  for (std::size_t i = 0; i < n; ++i) system.set_column(i, flatten(adjoint_matrix(alg, unit_vector(n, i))));
  auto u = solve_linear(system, flatten(map));
  if (!u) throw NotInner("map is not an inner derivation");
  return *u;
}

}  // namespace liebider
