#ifndef LIEBIDER_VDECOMP_HPP
#define LIEBIDER_VDECOMP_HPP

#include <cstddef>
#include <vector>

#include "liebider/exactla.hpp"
#include "liebider/lie_algebra.hpp"

namespace liebider {

// The matrix variable M used throughout this module is the transpose of the
// phi-matrix of extract_phi_psi: B(x,y) = [phi(x), y] has B_k = phi^T A_k,
// so M A_k = A_k Q is the same statement as phi^T A_k = A_k psi.
inline constexpr const char* kMatrixVariableLabel = "M = transpose of phi-matrix";

/// Subspace of n x n matrices, row-major flattened into Q^(n*n).
struct MatrixSubspace {
  std::size_t n = 0;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  Matrix element(std::size_t idx) const { return unflatten(space.basis().at(idx), n); }
  bool contains(const Matrix& m) const { return space.contains(flatten(m)); }
};

/// V = {M : exists Q with M A_i = A_i Q for all i}. witness_q[b] is one Q
/// for the b-th canonical basis element (free variables set to zero).
struct VSpace {
  MatrixSubspace v;
  std::vector<Matrix> witness_q;
};

VSpace compute_V(const LieAlgebra& alg);

/// Returns Q with M A_i = A_i Q for all i, if one exists.
std::optional<Matrix> v_witness(const LieAlgebra& alg, const Matrix& m);

struct VPlusMinus {
  MatrixSubspace plus;       // (M A_i)^T =  M A_i, intersected with V
  MatrixSubspace minus;      // (M A_i)^T = -M A_i, intersected with V
  MatrixSubspace raw_plus;   // before intersecting with V
  MatrixSubspace raw_minus;
};

VPlusMinus compute_Vpm(const LieAlgebra& alg);
VPlusMinus compute_Vpm(const LieAlgebra& alg, const VSpace& v);

struct DirectSumReport {
  std::size_t v_dim = 0;
  std::size_t vplus_dim = 0;
  std::size_t vminus_dim = 0;
  std::size_t sum_dim = 0;
  std::size_t intersection_dim = 0;
  bool sum_equals_v = false;
  bool is_direct_sum = false;
  bool complete = false;  // the decomposition is only guaranteed for complete algebras
};

DirectSumReport verify_direct_sum(const LieAlgebra& alg);

struct CorrespondenceReport {
  std::size_t bider_dim = 0;
  std::size_t v_dim = 0;
  bool dims_match = false;
  bool all_phi_transposes_in_v = false;
  bool semisimple = false;
  std::size_t factor_count = 0;
  std::size_t vplus_dim = 0;
  std::size_t vminus_dim = 0;
  bool semisimple_checks = true;  // dim V- = t and V+ = 0; vacuous when not semisimple
  bool ok = false;
};

/// Throws NotComplete: the correspondence is only defined for complete algebras.
CorrespondenceReport bider_V_correspondence(const LieAlgebra& alg);

/// True when every element of the subspace is block diagonal with scalar
/// blocks along the algebra's factors.
bool is_block_scalar(const LieAlgebra& alg, const Matrix& m);

}  // namespace liebider

#endif  // LIEBIDER_VDECOMP_HPP
