#include "liebider/documents.hpp"

#include <set>

#include "liebider/errors.hpp"

namespace liebider {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t p = 0; p + 1 < e.byte && p < text.size(); ++p) {
      if (text[p] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column));
  }
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + "." + key + ": missing field");
  return *it;
}

std::size_t as_count(const json& v, const std::string& path) {
  if (!v.is_number_unsigned()) {
    if (v.is_number_integer()) throw IndexError(path + ": negative value");
    throw ParseError(path + ": expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

Rational as_rational(const json& v, const std::string& path) {
  if (!v.is_string()) throw ParseError(path + ": expected a rational string");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw ParseError(path + ": expected an array");
  return v;
}

}  // namespace

LieAlgebra parse_algebra(std::string_view text, bool skip_jacobi) {
  const json doc = parse_json(text);
  const std::string root = "$";
  const std::size_t n = as_count(field(doc, "dim", root), root + ".dim");

  std::string name = "L";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError(root + ".name: expected a string");
    name = doc["name"].get<std::string>();
  }

  std::vector<std::string> basis;
  if (doc.contains("basis")) {
    const json& b = as_array(doc["basis"], root + ".basis");
    if (b.size() != n) throw DimMismatch(root + ".basis: expected " + std::to_string(n) + " labels");
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!b[i].is_string()) throw ParseError(root + ".basis[" + std::to_string(i) + "]: expected a string");
      basis.push_back(b[i].get<std::string>());
    }
  } else {
    for (std::size_t i = 1; i <= n; ++i) basis.push_back("e" + std::to_string(i));
  }

  ConstantTable table;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  if (doc.contains("brackets")) {
    const json& brackets = as_array(doc["brackets"], root + ".brackets");
    for (std::size_t b = 0; b < brackets.size(); ++b) {
      const std::string path = root + ".brackets[" + std::to_string(b) + "]";
      const std::size_t left = as_count(field(brackets[b], "left", path), path + ".left");
      const std::size_t right = as_count(field(brackets[b], "right", path), path + ".right");
      if (left >= n || right >= n) throw IndexError(path + ": index out of range");
      if (left >= right) throw IndexError(path + ": left must be smaller than right");
      if (!pairs.emplace(left, right).second) throw IndexError(path + ": duplicate bracket pair");
      const json& result = as_array(field(brackets[b], "result", path), path + ".result");
      std::set<std::size_t> seen;
      for (std::size_t t = 0; t < result.size(); ++t) {
        const std::string tpath = path + ".result[" + std::to_string(t) + "]";
        const std::size_t index = as_count(field(result[t], "index", tpath), tpath + ".index");
        if (index >= n) throw IndexError(tpath + ".index: index out of range");
        if (!seen.insert(index).second) throw IndexError(tpath + ".index: duplicate result index");
        Rational coeff = as_rational(field(result[t], "coeff", tpath), tpath + ".coeff");
        if (!coeff.is_zero()) table.emplace(ConstantKey{left, right, index}, std::move(coeff));
      }
    }
  }

  std::optional<std::vector<std::size_t>> factors;
  if (doc.contains("factors") && !doc["factors"].is_null()) {
    const json& f = as_array(doc["factors"], root + ".factors");
    factors.emplace();
    for (std::size_t i = 0; i < f.size(); ++i) factors->push_back(as_count(f[i], root + ".factors[" + std::to_string(i) + "]"));
  }

  LieAlgebra alg(std::move(name), std::move(basis), std::move(table), std::move(factors));
  if (!skip_jacobi) require_valid(alg);
  return alg;
}

Biderivation parse_biderivation(std::string_view text, const LieAlgebra& alg) {
  const json doc = parse_json(text);
  const std::string root = "$";
  const std::size_t n = as_count(field(doc, "dim", root), root + ".dim");
  if (n != alg.dim())
    throw DimMismatch("biderivation dim " + std::to_string(n) + " does not match algebra dim " + std::to_string(alg.dim()));
  const json& mats = as_array(field(doc, "mats", root), root + ".mats");
  if (mats.size() != n)
    throw DimMismatch(root + ".mats: expected " + std::to_string(n) + " matrices, got " + std::to_string(mats.size()));
  Biderivation out = Biderivation::zero(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::string mpath = root + ".mats[" + std::to_string(k) + "]";
    const json& rows = as_array(mats[k], mpath);
    if (rows.size() != n) throw DimMismatch(mpath + ": expected " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < n; ++i) {
      const std::string rpath = mpath + "[" + std::to_string(i) + "]";
      const json& row = as_array(rows[i], rpath);
      if (row.size() != n) throw DimMismatch(rpath + ": expected " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j) out.mats[k](i, j) = as_rational(row[j], rpath + "[" + std::to_string(j) + "]");
    }
  }
  return out;
}

json to_json(const Rational& r) { return r.str(); }

json to_json(std::span<const Rational> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

json algebra_document(const LieAlgebra& alg) {
  json doc;
  doc["name"] = alg.name();
  doc["dim"] = alg.dim();
  doc["basis"] = alg.basis_names();
  json brackets = json::array();
  json* current = nullptr;
  std::pair<std::size_t, std::size_t> current_pair{static_cast<std::size_t>(-1), 0};
  for (const auto& [key, value] : alg.constants()) {  // map order: (i, j, k)
    if (!current || current_pair != std::make_pair(key.i, key.j)) {
      brackets.push_back({{"left", key.i}, {"right", key.j}, {"result", json::array()}});
      current = &brackets.back();
      current_pair = {key.i, key.j};
    }
    (*current)["result"].push_back({{"index", key.k}, {"coeff", value.str()}});
  }
  doc["brackets"] = std::move(brackets);
  if (alg.factors()) doc["factors"] = *alg.factors();
  return doc;
}

json biderivation_document(const Biderivation& b) {
  json mats = json::array();
  for (const auto& m : b.mats) mats.push_back(to_json(m));
  return {{"dim", b.dim()}, {"mats", std::move(mats)}};
}

std::string dump_document(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace liebider
