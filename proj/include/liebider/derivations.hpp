#ifndef LIEBIDER_DERIVATIONS_HPP
#define LIEBIDER_DERIVATIONS_HPP

#include <cstddef>

#include "liebider/exactla.hpp"
#include "liebider/lie_algebra.hpp"

namespace liebider {

// Linear maps L -> L are n x n matrices whose column j is the image of e_j.
// Whenever a space of maps is returned as a Subspace it lives in Q^(n*n)
// with the row-major flattening of that matrix (see flatten()).

/// Der(L): all D with D[e_i,e_j] = [D e_i, e_j] + [e_i, D e_j].
Subspace derivation_space(const LieAlgebra& alg);

/// ad(L): span of ad(e_1), ..., ad(e_n).
Subspace inner_derivation_space(const LieAlgebra& alg);

/// Checks the Leibniz identity on every basis pair directly.
bool is_derivation(const LieAlgebra& alg, const Matrix& map);

struct Completeness {
  bool complete = false;
  std::size_t center_dim = 0;
  std::size_t der_dim = 0;
  std::size_t inner_dim = 0;
};

/// Complete means Z(L) = 0 and Der(L) = ad(L) (compared as subspaces).
Completeness is_complete(const LieAlgebra& alg);

/// f with [f(x), y] = [x, f(y)] for all x, y.
Subspace commuting_map_space(const LieAlgebra& alg);

/// f with [f(x), y] = -[x, f(y)] for all x, y.
Subspace skew_commuting_map_space(const LieAlgebra& alg);

/// The unique u with ad(u) = D. Throws CenterNonzero when u would not be
/// unique and NotInner when no such u exists.
Element ad_preimage(const LieAlgebra& alg, const Matrix& map);

}  // namespace liebider

#endif  // LIEBIDER_DERIVATIONS_HPP
