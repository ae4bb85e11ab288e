#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liebider/derivations.hpp"
#include "liebider/errors.hpp"
#include "test_support.hpp"

using namespace liebider;
using test_support::ints;

namespace {

struct Expected {
  const char* name;
  std::size_t der;
  std::size_t commuting;
  std::size_t skew_commuting;
};

// Values from the independent brute-force oracle in tests/oracle.
const Expected kOracle[] = {
    {"abelian(1)", 1, 1, 1},   {"abelian(2)", 4, 4, 4},   {"abelian(3)", 9, 9, 9},
    {"L22", 2, 1, 3},          {"heisenberg3", 6, 4, 6},  {"sl2", 3, 1, 0},
    {"so3", 3, 1, 0},          {"sl2_plus_sl2", 6, 2, 0}, {"L22+abelian(1)", 4, 4, 6},
    {"sl3", 8, 1, 0},
};

LieAlgebra load(const std::string& name) {
  if (name == "L22+abelian(1)") return direct_sum(catalog("L22"), catalog("abelian(1)"));
  return catalog(name);
}

}  // namespace

TEST_CASE("dimensions agree with the oracle") {
  for (const auto& e : kOracle) {
    INFO(std::string(e.name));
    const LieAlgebra alg = load(e.name);
    CHECK(derivation_space(alg).dim() == e.der);
    CHECK(commuting_map_space(alg).dim() == e.commuting);
    CHECK(skew_commuting_map_space(alg).dim() == e.skew_commuting);
  }
}

TEST_CASE("inner derivation examples") {
  CHECK(inner_derivation_space(catalog("sl2")).dim() == 3);
  CHECK(inner_derivation_space(catalog("abelian(3)")).dim() == 0);
  CHECK(inner_derivation_space(catalog("heisenberg3")).dim() == 2);
}

TEST_CASE("completeness examples") {
  const auto sl2 = is_complete(catalog("sl2"));
  CHECK(sl2.complete);
  CHECK(sl2.center_dim == 0);
  CHECK(sl2.der_dim == 3);
  CHECK(sl2.inner_dim == 3);
  for (std::size_t n = 1; n <= 4; ++n) CHECK_FALSE(is_complete(catalog("abelian(" + std::to_string(n) + ")")).complete);
  CHECK_FALSE(is_complete(catalog("heisenberg3")).complete);
  CHECK(is_complete(catalog("L22")).complete);
  CHECK_FALSE(is_complete(load("L22+abelian(1)")).complete);
  CHECK(is_complete(catalog("sl3")).complete);
  CHECK(is_complete(catalog("sl2_plus_sl2")).complete);
}

TEST_CASE("commuting map examples") {
  for (const auto& e : kOracle) {
    INFO(std::string(e.name));
    const LieAlgebra alg = load(e.name);
    CHECK(commuting_map_space(alg).contains(flatten(Matrix::identity(alg.dim()))));
    CHECK(skew_commuting_map_space(alg).contains(Vector(alg.dim() * alg.dim())));
  }
  const Subspace sl2 = commuting_map_space(catalog("sl2"));
  CHECK(sl2 == Subspace::span(9, {flatten(Matrix::identity(3))}));
}

TEST_CASE("ad_preimage examples") {
  const LieAlgebra sl2 = catalog("sl2");
  CHECK(ad_preimage(sl2, adjoint_matrix(sl2, unit_vector(3, 2))) == unit_vector(3, 2));
  CHECK(ad_preimage(sl2, Matrix(3, 3)) == Vector(3));
  CHECK(ad_preimage(catalog("L22"), Matrix(2, 2)) == Vector(2));
  CHECK_THROWS_AS(ad_preimage(catalog("heisenberg3"), Matrix(3, 3)), CenterNonzero);
  CHECK_THROWS_AS(ad_preimage(sl2, Matrix::identity(3)), NotInner);
}

TEST_CASE("derivation invariants") {
  std::mt19937_64 rng(5);
  for (const auto& e : kOracle) {
    INFO(std::string(e.name));
    const LieAlgebra alg = load(e.name);
    const std::size_t n = alg.dim();
    const Subspace der = derivation_space(alg);
    const Subspace ad = inner_derivation_space(alg);
    CHECK(is_subspace_of(ad, der));
    CHECK(ad.dim() == n - center(alg).dim());
    for (const auto& v : der.basis()) CHECK(is_derivation(alg, unflatten(v, n)));
    if (is_complete(alg).complete) {
      for (int t = 0; t < 5; ++t) {
        const Vector x = test_support::random_vector(rng, n);
        CHECK(ad_preimage(alg, adjoint_matrix(alg, x)) == x);
      }
    }
  }
}

TEST_CASE("is_derivation rejects non-derivations") {
  CHECK_FALSE(is_derivation(catalog("sl2"), Matrix::identity(3)));
  CHECK(is_derivation(catalog("abelian(2)"), Matrix{{1, 2}, {3, 4}}));
}
