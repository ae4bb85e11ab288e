#ifndef LIEBIDER_BIDERIVATIONS_HPP
#define LIEBIDER_BIDERIVATIONS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liebider/exactla.hpp"
#include "liebider/lie_algebra.hpp"

namespace liebider {

/// Bilinear map B: L x L -> L as the tuple (B_1, ..., B_n) with
/// (B_k)_ij = b_ij^k, the k-th coordinate of B(e_i, e_j).
///
/// The same shape holds verified biderivations and unchecked candidates;
/// is_biderivation() decides which one a value is.
struct Biderivation {
  std::vector<Matrix> mats;

  static Biderivation zero(std::size_t n);
  /// Inverse of flatten(): index k*n*n + i*n + j holds b_ij^k.
  static Biderivation from_flat(std::span<const Rational> flat, std::size_t n);

  std::size_t dim() const { return mats.size(); }
  Vector flatten() const;
  /// B(e_i, e_j).
  Element value(std::size_t i, std::size_t j) const;
  /// B(x, y) for arbitrary coordinate vectors.
  Element apply(std::span<const Rational> x, std::span<const Rational> y) const;
  bool is_symmetric() const;
  bool is_skew() const;

  friend bool operator==(const Biderivation&, const Biderivation&) = default;
};

Biderivation operator+(const Biderivation& a, const Biderivation& b);
Biderivation operator*(const Rational& s, const Biderivation& b);

/// BiDer(L) inside Q^(n^3), flattened k outer, then i, then j.
struct BiderivationSpace {
  std::size_t algebra_dim = 0;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  Biderivation element(std::size_t idx) const;
  bool contains(const Biderivation& b) const;
};

/// Constraint rows of both biderivation identities on all basis triples.
/// Row (block, i, j, k, r) sits at block*n^4 + ((i*n + j)*n + k)*n + r;
/// block 0 is B([x,y],z) = [x,B(y,z)] + [B(x,z),y] and block 1 is
/// B(x,[y,z]) = [B(x,y),z] + [y,B(x,z)]. Zero rows are kept.
Matrix assemble_constraints(const LieAlgebra& alg);

/// Same rows as assemble_constraints, streamed into a builder without
/// materialising the dense matrix.
void stream_constraints(const LieAlgebra& alg, EchelonBuilder& rows);

enum class SymmetryMode { none, symmetric, skew };

BiderivationSpace biderivation_space(const LieAlgebra& alg);
BiderivationSpace constrained_biderivation_space(const LieAlgebra& alg, SymmetryMode mode);

struct BiderivationViolation {
  int condition = 1;  // 1 or 2
  std::size_t i = 0, j = 0, k = 0;
  Element residual;   // left side minus right side
};

/// Expands both identities on all n^3 basis triples directly and returns
/// the first violation in (condition, i, j, k) order.
std::optional<BiderivationViolation> is_biderivation(const LieAlgebra& alg, const Biderivation& cand);

/// B_k = lambda_f(k) A_k where f(k) is the factor containing index k.
Biderivation inner_biderivation(const LieAlgebra& alg, const std::vector<Rational>& lambdas);

struct RowColumnMaps {
  Matrix row_map;     // B(e_i, -)
  Matrix column_map;  // B(-, e_i)
  bool both_derivations = false;
};

RowColumnMaps row_column_derivations(const LieAlgebra& alg, const Biderivation& b, std::size_t i);

/// phi and psi with B(x,y) = [phi(x), y] = [x, psi(y)]; columns are images
/// of basis vectors.
struct PhiPsiPair {
  Matrix phi;
  Matrix psi;
};

/// Requires a complete algebra and a biderivation. Throws NotComplete,
/// NotBiderivation, or InternalInconsistency if the result fails its
/// verification.
PhiPsiPair extract_phi_psi(const LieAlgebra& alg, const Biderivation& b);

/// The biderivation (x, y) -> [phi(x), y].
Biderivation biderivation_from_phi(const LieAlgebra& alg, const Matrix& phi);

struct SymmetricSkewSplit {
  Biderivation plus;   // B(x,y) + B(y,x)
  Biderivation minus;  // B(x,y) - B(y,x)
};

SymmetricSkewSplit symmetric_skew_split(const Biderivation& b);

struct BracketClosure {
  bool closed = false;
  /// First basis pair (a, b) whose commutator tuple leaves the space.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  /// {B^a, B^b} = sum_c constants[(a,b)][c] B^c for a < b when closed.
  std::map<std::pair<std::size_t, std::size_t>, Vector> constants;
};

BracketClosure bider_bracket_closure(const LieAlgebra& alg);
BracketClosure bider_bracket_closure(const BiderivationSpace& space);

struct TwoStepWitness {
  std::string property;  // "B(x,z) in L'", "B(z,x) in L'", "B(z,z')=0"
  std::size_t basis_index = 0;
  std::size_t derived_index = 0;
  std::size_t other_derived_index = 0;
};

struct TwoStepReport {
  bool pass = true;
  std::size_t derived_dim = 0;
  std::vector<TwoStepWitness> failures;
};

/// Throws NotTwoStep unless L' is contained in Z(L).
TwoStepReport two_step_properties(const LieAlgebra& alg, const Biderivation& b);

}  // namespace liebider

#endif  // LIEBIDER_BIDERIVATIONS_HPP
