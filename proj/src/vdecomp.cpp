#include "liebider/vdecomp.hpp"

#include "liebider/biderivations.hpp"
#include "liebider/derivations.hpp"
#include "liebider/errors.hpp"

namespace liebider {

namespace {

MatrixSubspace symmetry_space(const LieAlgebra& alg, const StructureMatrices& A, int sign) {
  // (M A_i)(c, r) - sign * (M A_i)(r, c) = 0 in the entries of M.
  const std::size_t n = alg.dim();
  EchelonBuilder rows(n * n);
  Vector row(n * n);
  for (const auto& a : A.mats)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        std::fill(row.begin(), row.end(), Rational());
        for (std::size_t s = 0; s < n; ++s) {
          row[c * n + s] += a(s, r);
          if (sign > 0) {
            row[r * n + s] -= a(s, c);
          } else {
            row[r * n + s] += a(s, c);
          }
        }
        rows.add_row(row);
      }
  return {n, kernel_of(rows)};
}

MatrixSubspace intersect(const MatrixSubspace& a, const MatrixSubspace& b) {
  return {a.n, subspace_combine(a.space, b.space).intersection};
}

}  // namespace

std::optional<Matrix> v_witness(const LieAlgebra& alg, const Matrix& m) {
  const std::size_t n = alg.dim();
  const auto A = structure_matrices(alg);
  // A_i Q = M A_i, unknown Q(s, c) at s*n + c.
  Matrix system(n * n * n, n * n);
  Vector rhs(n * n * n);
  std::size_t row = 0;
  for (const auto& a : A.mats) {
    const Matrix ma = m * a;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c, ++row) {
        for (std::size_t s = 0; s < n; ++s) system(row, s * n + c) = a(r, s);
        rhs[row] = ma(r, c);
      }
  }
  auto q = solve_linear(system, rhs);
  if (!q) return std::nullopt;
  return unflatten(*q, n);
}

VSpace compute_V(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  const std::size_t nn = n * n;
  const auto A = structure_matrices(alg);
  // Joint unknowns: M(r, s) at r*n + s, then Q(s, c) at n*n + s*n + c.
  EchelonBuilder rows(2 * nn);
  Vector row(2 * nn);
  for (const auto& a : A.mats)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        std::fill(row.begin(), row.end(), Rational());
        for (std::size_t s = 0; s < n; ++s) {
          row[r * n + s] += a(s, c);
          row[nn + s * n + c] -= a(r, s);
        }
        rows.add_row(row);
      }
  VSpace out{{n, subspace_projection(kernel_of(rows), 0, nn)}, {}};
  for (std::size_t b = 0; b < out.v.dim(); ++b) {
    auto q = v_witness(alg, out.v.element(b));
    if (!q) throw InternalInconsistency("basis element of V has no witness Q");
    out.witness_q.push_back(std::move(*q));
  }
  return out;
}

VPlusMinus compute_Vpm(const LieAlgebra& alg, const VSpace& v) {
  const auto A = structure_matrices(alg);
  VPlusMinus out;
  out.raw_plus = symmetry_space(alg, A, +1);
  out.raw_minus = symmetry_space(alg, A, -1);
  out.plus = intersect(out.raw_plus, v.v);
  out.minus = intersect(out.raw_minus, v.v);
  return out;
}

VPlusMinus compute_Vpm(const LieAlgebra& alg) { return compute_Vpm(alg, compute_V(alg)); }

DirectSumReport verify_direct_sum(const LieAlgebra& alg) {
  const VSpace v = compute_V(alg);
  const VPlusMinus pm = compute_Vpm(alg, v);
  const SubspaceSum combined = subspace_combine(pm.plus.space, pm.minus.space);
  DirectSumReport out;
  out.v_dim = v.v.dim();
  out.vplus_dim = pm.plus.dim();
  out.vminus_dim = pm.minus.dim();
  out.sum_dim = combined.sum.dim();
  out.intersection_dim = combined.intersection.dim();
  out.sum_equals_v = combined.sum == v.v.space;
  out.is_direct_sum = out.sum_equals_v && out.intersection_dim == 0;
  out.complete = is_complete(alg).complete;
  return out;
}

CorrespondenceReport bider_V_correspondence(const LieAlgebra& alg) {
  if (!is_complete(alg).complete) throw NotComplete("algebra is not complete");
  const BiderivationSpace bider = biderivation_space(alg);
  const VSpace v = compute_V(alg);
  CorrespondenceReport out;
  out.bider_dim = bider.dim();
  out.v_dim = v.v.dim();
  out.dims_match = out.bider_dim == out.v_dim;
  out.all_phi_transposes_in_v = true;
  for (std::size_t b = 0; b < bider.dim(); ++b) {
    const PhiPsiPair pq = extract_phi_psi(alg, bider.element(b));
    if (!v.v.contains(pq.phi.transpose())) out.all_phi_transposes_in_v = false;
  }
  out.semisimple = killing_form(alg).semisimple;
  out.factor_count = alg.factor_sizes().size();
  const VPlusMinus pm = compute_Vpm(alg, v);
  out.vplus_dim = pm.plus.dim();
  out.vminus_dim = pm.minus.dim();
  if (out.semisimple) out.semisimple_checks = out.vminus_dim == out.factor_count && out.vplus_dim == 0;
  out.ok = out.dims_match && out.all_phi_transposes_in_v && out.semisimple_checks;
  return out;
}

bool is_block_scalar(const LieAlgebra& alg, const Matrix& m) {
  const std::size_t n = alg.dim();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c && !m(r, c).is_zero()) return false;
  // Diagonal entries agree within each factor.
  for (std::size_t r = 1; r < n; ++r)
    if (alg.factor_of(r) == alg.factor_of(r - 1) && m(r, r) != m(r - 1, r - 1)) return false;
  return true;
}

}  // namespace liebider
