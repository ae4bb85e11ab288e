#ifndef LIEBIDER_DOCUMENTS_HPP
#define LIEBIDER_DOCUMENTS_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "liebider/biderivations.hpp"
#include "liebider/lie_algebra.hpp"

namespace liebider {

// JSON documents. Rationals are always strings ("p" or "p/q"), indices are
// 0-based.
//
// AlgebraDocument:
//   {"name": "L22", "dim": 2, "basis": ["e1", "e2"],
//    "brackets": [{"left": 0, "right": 1, "result": [{"index": 0, "coeff": "1"}]}],
//    "factors": [2]}                                  (factors optional)
//
// BiderivationDocument:
//   {"dim": 2, "mats": [[["0","0"],["0","1"]], [["1","0"],["0","0"]]]}

/// Throws ParseError, IndexError, FactorMismatch, or JacobiError (the
/// latter only when skip_jacobi is false).
LieAlgebra parse_algebra(std::string_view text, bool skip_jacobi = false);

/// Throws ParseError or DimMismatch. The result is an unchecked candidate.
Biderivation parse_biderivation(std::string_view text, const LieAlgebra& alg);

nlohmann::json algebra_document(const LieAlgebra& alg);
nlohmann::json biderivation_document(const Biderivation& b);

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(std::span<const Rational> v);
nlohmann::json to_json(const Matrix& m);

/// Stable serialisation: sorted keys, two-space indent, trailing newline.
std::string dump_document(const nlohmann::json& doc);

}  // namespace liebider

#endif  // LIEBIDER_DOCUMENTS_HPP
