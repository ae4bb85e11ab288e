#include "liebider/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "liebider/biderivations.hpp"
#include "liebider/derivations.hpp"
#include "liebider/documents.hpp"
#include "liebider/errors.hpp"
#include "liebider/vdecomp.hpp"

namespace liebider {

using nlohmann::json;

namespace {

struct Options {
  bool json_mode = false;
  bool skip_jacobi = false;
  std::uint64_t seed = 0;
  std::string file;
  std::string bfile;
  std::string name;
  bool symmetric = false;
  bool skew = false;
};

// Outcome of one command: the report (or raw document) and the exit code.
struct Outcome {
  json report;
  int code = kExitOk;
  bool raw_document = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LieAlgebra load_algebra(const std::string& path) {
  try {
    return parse_algebra(read_file(path), false);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

json make_report(const std::string& command, json inputs, json results) {
  return {{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)}, {"version", kVersion}};
}

json algebra_inputs(const LieAlgebra& alg) { return {{"algebra", algebra_document(alg)}}; }

json matrices(const std::vector<Matrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

json map_basis(const Subspace& space, std::size_t n) {
  json out = json::array();
  for (const auto& v : space.basis()) out.push_back(to_json(unflatten(v, n)));
  return out;
}

json matrix_subspace_basis(const MatrixSubspace& s) { return map_basis(s.space, s.n); }

json bider_basis(const BiderivationSpace& space) {
  json out = json::array();
  for (std::size_t b = 0; b < space.dim(); ++b) out.push_back(matrices(space.element(b).mats));
  return out;
}

std::string classification(const Biderivation& b) {
  const bool sym = b.is_symmetric();
  const bool skew = b.is_skew();
  if (sym && skew) return "zero";
  if (sym) return "symmetric";
  if (skew) return "skew";
  return "neither";
}

Outcome cmd_validate(const Options& opt) {
  LieAlgebra alg;
  try {
    alg = parse_algebra(read_file(opt.file), true);
  } catch (const InputError& e) {
    throw InputError(opt.file + ": " + e.what());
  }
  json results;
  results["dim"] = alg.dim();
  const auto violation = validate(alg);
  results["valid"] = !violation.has_value();
  Outcome out;
  if (violation) {
    if (!opt.skip_jacobi) require_valid(alg);
    results["violation"] = {{"triple", {violation->i, violation->j, violation->k}},
                            {"residual", to_json(violation->residual)}};
    out.code = kExitInputError;
  }
  out.report = make_report("validate", algebra_inputs(alg), std::move(results));
  return out;
}

Outcome cmd_info(const Options& opt) {
  const LieAlgebra alg = load_algebra(opt.file);
  const auto lcs = lower_central_series(alg);
  const auto killing = killing_form(alg);
  const auto comp = is_complete(alg);
  json dims = json::array();
  for (const auto& t : lcs.terms) dims.push_back(t.dim());
  json results;
  results["dim"] = alg.dim();
  results["center_dim"] = comp.center_dim;
  results["derived_dim"] = derived_algebra(alg).dim();
  results["lower_central_series_dims"] = std::move(dims);
  if (lcs.nilpotency_class) {
    results["nilpotency_class"] = *lcs.nilpotency_class;
  } else {
    results["nilpotency_class"] = "not nilpotent";
  }
  results["two_step_nilpotent"] = is_two_step_nilpotent(alg);
  results["killing_rank"] = killing.rank;
  results["semisimple"] = killing.semisimple;
  results["der_dim"] = comp.der_dim;
  results["inner_der_dim"] = comp.inner_dim;
  results["complete"] = comp.complete;
  return {make_report("info", algebra_inputs(alg), std::move(results))};
}

Outcome cmd_derivations(const Options& opt) {
  const LieAlgebra alg = load_algebra(opt.file);
  const Subspace der = derivation_space(alg);
  const Subspace ad = inner_derivation_space(alg);
  json results;
  results["der_dim"] = der.dim();
  results["ad_dim"] = ad.dim();
  results["basis"] = map_basis(der, alg.dim());
  return {make_report("derivations", algebra_inputs(alg), std::move(results))};
}

Outcome cmd_biderivations(const Options& opt) {
  const LieAlgebra alg = load_algebra(opt.file);
  SymmetryMode mode = SymmetryMode::none;
  std::string mode_name = "all";
  if (opt.symmetric) {
    mode = SymmetryMode::symmetric;
    mode_name = "symmetric";
  } else if (opt.skew) {
    mode = SymmetryMode::skew;
    mode_name = "skew";
  }
  const BiderivationSpace space =
      mode == SymmetryMode::none ? biderivation_space(alg) : constrained_biderivation_space(alg, mode);
  json inputs = algebra_inputs(alg);
  inputs["mode"] = mode_name;
  json results;
  results["dim"] = space.dim();
  results["basis"] = bider_basis(space);
  return {make_report("biderivations", std::move(inputs), std::move(results))};
}

Biderivation load_bider(const std::string& path, const LieAlgebra& alg) {
  try {
    return parse_biderivation(read_file(path), alg);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Outcome cmd_check_bider(const Options& opt) {
  const LieAlgebra alg = load_algebra(opt.file);
  const Biderivation b = load_bider(opt.bfile, alg);
  json inputs = algebra_inputs(alg);
  inputs["biderivation"] = biderivation_document(b);
  json results;
  Outcome out;
  const auto violation = is_biderivation(alg, b);
  results["ok"] = !violation.has_value();
  if (violation) {
    results["violation"] = {{"condition", violation->condition},
                            {"triple", {violation->i, violation->j, violation->k}},
                            {"residual", to_json(violation->residual)}};
    out.code = kExitMathFailure;
  }
  out.report = make_report("check-bider", std::move(inputs), std::move(results));
  return out;
}

Outcome cmd_phi_psi(const Options& opt) {
  const LieAlgebra alg = load_algebra(opt.file);
  const Biderivation b = load_bider(opt.bfile, alg);
  const PhiPsiPair pq = extract_phi_psi(alg, b);
  json inputs = algebra_inputs(alg);
  inputs["biderivation"] = biderivation_document(b);
  Matrix neg_psi = pq.psi;
  neg_psi *= Rational(-1);
  json results;
  results["P"] = to_json(pq.phi);
  results["Q"] = to_json(pq.psi);
  results["classification"] = classification(b);
  results["P_equals_Q"] = pq.phi == pq.psi;
  results["P_equals_minus_Q"] = pq.phi == neg_psi;
  return {make_report("phi-psi", std::move(inputs), std::move(results))};
}

Outcome cmd_vdecomp(const Options& opt) {
  const LieAlgebra alg = load_algebra(opt.file);
  const VSpace v = compute_V(alg);
  const VPlusMinus pm = compute_Vpm(alg, v);
  const DirectSumReport ds = verify_direct_sum(alg);
  json results;
  results["matrix_variable"] = kMatrixVariableLabel;
  results["v_dim"] = ds.v_dim;
  results["vplus_dim"] = ds.vplus_dim;
  results["vminus_dim"] = ds.vminus_dim;
  results["sum_dim"] = ds.sum_dim;
  results["intersection_dim"] = ds.intersection_dim;
  results["direct_sum"] = ds.is_direct_sum;
  results["complete"] = ds.complete;
  results["v_basis"] = matrix_subspace_basis(v.v);
  results["v_witness_q"] = matrices(v.witness_q);
  results["vplus_basis"] = matrix_subspace_basis(pm.plus);
  results["vminus_basis"] = matrix_subspace_basis(pm.minus);
  Outcome out;
  if (!ds.is_direct_sum) out.code = kExitMathFailure;
  if (ds.complete) {
    const CorrespondenceReport corr = bider_V_correspondence(alg);
    results["correspondence"] = {{"bider_dim", corr.bider_dim},
                                 {"dims_match", corr.dims_match},
                                 {"phi_transposes_in_v", corr.all_phi_transposes_in_v},
                                 {"semisimple", corr.semisimple},
                                 {"factor_count", corr.factor_count},
                                 {"semisimple_checks", corr.semisimple_checks},
                                 {"ok", corr.ok}};
    if (!corr.ok) out.code = kExitMathFailure;
  }
  out.report = make_report("vdecomp", algebra_inputs(alg), std::move(results));
  return out;
}

Outcome cmd_bracket_closure(const Options& opt) {
  const LieAlgebra alg = load_algebra(opt.file);
  const BiderivationSpace space = biderivation_space(alg);
  const BracketClosure bc = bider_bracket_closure(space);
  json results;
  results["dim"] = space.dim();
  results["closed"] = bc.closed;
  Outcome out;
  if (bc.closed) {
    json constants = json::array();
    for (const auto& [pair, coords] : bc.constants)
      constants.push_back({{"left", pair.first}, {"right", pair.second}, {"coords", to_json(coords)}});
    results["constants"] = std::move(constants);
  } else {
    if (bc.witness) results["witness"] = {bc.witness->first, bc.witness->second};
    out.code = kExitMathFailure;
  }
  out.report = make_report("bracket-closure", algebra_inputs(alg), std::move(results));
  return out;
}

Outcome cmd_catalog(const Options& opt) {
  Outcome out;
  if (opt.name.empty()) {
    out.report = make_report("catalog", json::object(), {{"names", catalog_names()}});
    return out;
  }
  out.report = algebra_document(catalog(opt.name, opt.seed));
  out.raw_document = true;
  return out;
}

bool is_scalar(const json& v) { return !v.is_array() && !v.is_object(); }

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool is_matrix(const json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v) {
    if (!row.is_array()) return false;
    for (const auto& x : row)
      if (!is_scalar(x)) return false;
  }
  return true;
}

void render(std::ostream& os, const std::string& key, const json& v, std::size_t indent) {
  const std::string pad(indent, ' ');
  if (is_scalar(v)) {
    os << pad << key << ": " << scalar_text(v) << '\n';
    return;
  }
  if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
    os << pad << key << ": [";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
    os << "]\n";
    return;
  }
  os << pad << key << ":\n";
  if (is_matrix(v)) {
    std::size_t width = 1;
    for (const auto& row : v)
      for (const auto& x : row) width = std::max(width, scalar_text(x).size());
    for (const auto& row : v) {
      os << pad << "  ";
      for (std::size_t c = 0; c < row.size(); ++c) {
        const std::string s = scalar_text(row[c]);
        os << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
      }
      os << '\n';
    }
    return;
  }
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) render(os, "[" + std::to_string(i) + "]", v[i], indent + 2);
    return;
  }
  for (const auto& [k, child] : v.items()) render(os, k, child, indent + 2);
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  os << "command: " << report.value("command", "") << '\n';
  if (report.contains("inputs") && report["inputs"].contains("algebra"))
    os << "algebra: " << report["inputs"]["algebra"].value("name", "") << '\n';
  if (report.contains("inputs") && report["inputs"].contains("mode"))
    os << "mode: " << report["inputs"]["mode"].get<std::string>() << '\n';
  if (report.contains("results"))
    for (const auto& [k, child] : report["results"].items()) render(os, k, child, 0);
  return os.str();
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact derivations and biderivations of finite-dimensional Lie algebras", "liebider"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.add_flag("--json", opt.json_mode, "Emit a JSON report");
  app.add_option("--seed", opt.seed, "Seed for randomized catalog entries");
  app.add_flag("--skip-jacobi", opt.skip_jacobi, "Let validate report Jacobi failures instead of rejecting");

  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  CLI::App* validate_cmd = add("validate", "Check a structure-constant table");
  validate_cmd->add_option("FILE", opt.file, "Algebra document")->required();
  CLI::App* info_cmd = add("info", "Center, series, Killing form, completeness");
  info_cmd->add_option("FILE", opt.file, "Algebra document")->required();
  CLI::App* der_cmd = add("derivations", "Derivation algebra");
  der_cmd->add_option("FILE", opt.file, "Algebra document")->required();
  CLI::App* bider_cmd = add("biderivations", "Biderivation space");
  bider_cmd->add_option("FILE", opt.file, "Algebra document")->required();
  CLI::Option* sym_flag = bider_cmd->add_flag("--symmetric", opt.symmetric, "Symmetric biderivations only");
  CLI::Option* skew_flag = bider_cmd->add_flag("--skew", opt.skew, "Skew-symmetric biderivations only");
  sym_flag->excludes(skew_flag);
  CLI::App* check_cmd = add("check-bider", "Check a candidate biderivation");
  check_cmd->add_option("FILE", opt.file, "Algebra document")->required();
  check_cmd->add_option("BFILE", opt.bfile, "Biderivation document")->required();
  CLI::App* phipsi_cmd = add("phi-psi", "Factor a biderivation of a complete algebra");
  phipsi_cmd->add_option("FILE", opt.file, "Algebra document")->required();
  phipsi_cmd->add_option("BFILE", opt.bfile, "Biderivation document")->required();
  CLI::App* vdecomp_cmd = add("vdecomp", "Matrix spaces V, V+ and V-");
  vdecomp_cmd->add_option("FILE", opt.file, "Algebra document")->required();
  CLI::App* closure_cmd = add("bracket-closure", "Closure of the biderivation space under commutators");
  closure_cmd->add_option("FILE", opt.file, "Algebra document")->required();
  CLI::App* catalog_cmd = add("catalog", "List catalog algebras or emit one");
  catalog_cmd->add_option("NAME", opt.name, "Catalog name");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    Outcome result;
    if (*validate_cmd) result = cmd_validate(opt);
    else if (*info_cmd) result = cmd_info(opt);
    else if (*der_cmd) result = cmd_derivations(opt);
    else if (*bider_cmd) result = cmd_biderivations(opt);
    else if (*check_cmd) result = cmd_check_bider(opt);
    else if (*phipsi_cmd) result = cmd_phi_psi(opt);
    else if (*vdecomp_cmd) result = cmd_vdecomp(opt);
    else if (*closure_cmd) result = cmd_bracket_closure(opt);
    else result = cmd_catalog(opt);

    if (result.raw_document) {
      out << dump_document(result.report);
    } else if (opt.json_mode) {
      out << dump_document(result.report);
    } else if (*catalog_cmd) {
      for (const auto& n : result.report["results"]["names"]) out << n.get<std::string>() << '\n';
    } else {
      out << render_text(result.report);
    }
    return result.code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const MathError& e) {
    err << "error: " << e.what() << '\n';
    return kExitMathFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
}

}  // namespace liebider
