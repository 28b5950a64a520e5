// Copyright 2026 The symlu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "report.hpp"
#include "symlu/classifier.hpp"
#include "symlu/cli.hpp"
#include "symlu/error.hpp"
#include "symlu/stabilizer.hpp"

namespace symlu::cli {

namespace {

using nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kInequivalent = 1,
  kParse = 2,
  kNotSymmetric = 3,
  kNumerical = 4,
  kUnknown = 5,
};

struct Options {
  Tolerances tol;
  std::string format = "json";
  std::vector<std::string> files;
  bool decompose = false;
};

json tolerance_block(const Tolerances& t) {
  return {{"num", t.num},   {"herm", t.herm}, {"sparse", t.sparse}, {"rank", t.rank},
          {"gap", t.gap},   {"orth", t.orth}, {"unit", t.unit}};
}

json complex_pair(Complex z) { return json::array({z.real(), z.imag()}); }

json unitary_json(const LocalUnitary& g) {
  json out = json::array();
  for (const Unitary2& f : g.factors()) out.push_back(json::array({complex_pair(f.a), complex_pair(f.b)}));
  return out;
}

json element_json(const LocalAlgebraElement& m) {
  json rows = json::array();
  for (const Su2Element& p : m.parts()) rows.push_back(json::array({p.a, p.b, p.c}));
  return rows;
}

json canonical_json(const CanonicalForm& cf) {
  json c;
  c["labels"] = cf.labels;
  c["coefficients"] = cf.coefficients;
  if (cf.twin) {
    c["twin"] = *cf.twin;
  } else {
    c["twin"] = "unique";
  }
  c["aligner"] = unitary_json(cf.aligner);
  c["residual"] = cf.residual;
  return c;
}

json base_report(const std::string& command, const Options& opt) {
  json r;
  r["command"] = command;
  r["inputs"] = opt.files;
  r["tolerances"] = tolerance_block(opt.tol);
  return r;
}

void emit(const json& report, const Options& opt, std::ostream& out) {
  out << (opt.format == "text" ? format_text(report) : format_json(report));
}

int cmd_classify(const Options& opt, std::ostream& out) {
  const PauliOperator rho = load_state(opt.files[0], opt.tol);
  const StabilizerClass cls = classify(rho, opt.tol);
  json r = base_report("classify", opt);
  r["tag"] = std::string(to_string(cls.tag));
  r["stabilizer_dim"] = cls.dim();
  r["projection_dims"] = cls.projection_dims;
  r["stabilizer_residual"] = cls.basis.residual;
  if (cls.tag == ClassTag::Zero) {
    r["canonical"] = nullptr;
  } else {
    r["canonical"] = canonical_json(canonical_form(rho, opt.tol));
  }
  emit(r, opt, out);
  return kOk;
}

int cmd_canon(const Options& opt, std::ostream& out, std::ostream& err) {
  const PauliOperator rho = load_state(opt.files[0], opt.tol);
  const StabilizerClass cls = classify(rho, opt.tol);
  json r = base_report("canon", opt);
  r["tag"] = std::string(to_string(cls.tag));
  if (cls.tag == ClassTag::Zero) {
    r["canonical"] = nullptr;
    emit(r, opt, out);
    err << "canon: zero stabilizer, no canonical form\n";
    return kUnknown;
  }
  r["canonical"] = canonical_json(canonical_form(rho, opt.tol));
  emit(r, opt, out);
  return kOk;
}

int cmd_equiv(const Options& opt, std::ostream& out) {
  const PauliOperator a = load_state(opt.files[0], opt.tol);
  const PauliOperator b = load_state(opt.files[1], opt.tol);
  const Equivalence eq = lu_equivalent(a, b, opt.tol);
  json r = base_report("equiv", opt);
  r["verdict"] = std::string(to_string(eq.verdict));
  r["tags"] = {std::string(to_string(eq.tag_a)), std::string(to_string(eq.tag_b))};
  r["used_twin"] = eq.used_twin;
  r["note"] = eq.note;
  if (eq.witness) {
    r["witness"] = unitary_json(*eq.witness);
    r["witness_residual"] = eq.witness_residual;
  } else {
    r["witness"] = nullptr;
  }
  emit(r, opt, out);
  switch (eq.verdict) {
    case Verdict::Equivalent: return kOk;
    case Verdict::Inequivalent: return kInequivalent;
    case Verdict::Unknown: break;
  }
  return kUnknown;
}

int cmd_stabilizer(const Options& opt, std::ostream& out) {
  const PauliOperator rho = load_state(opt.files[0], opt.tol);
  const AlgebraBasis k = stabilizer_basis(rho, opt.tol);
  json r = base_report("stabilizer", opt);
  r["dim"] = k.dim();
  r["residual"] = k.residual;
  json basis = json::array();
  for (const auto& m : k.elements) basis.push_back(element_json(m));
  r["basis"] = basis;
  r["projection_dims"] = projection_dims(k, opt.tol);
  if (opt.decompose) {
    const BlockDecomposition d = decompose_algebra(k, opt.tol);
    const BlockRelationReport check = verify_block_relations(d, opt.tol);
    json blocks = json::array();
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
      const Block& blk = d.blocks[i];
      const auto& e = check.blocks[i];
      blocks.push_back({{"qubits", blk.qubits},
                        {"u", element_json(blk.u)},
                        {"v", element_json(blk.v)},
                        {"w", element_json(blk.w)},
                        {"relation_residuals", {e.uv_w, e.vw_u, e.wu_v}},
                        {"orthonormality", e.orthonormality},
                        {"alignment", e.alignment}});
    }
    json s_basis = json::array();
    for (const auto& m : d.s_basis) s_basis.push_back(element_json(m));
    r["decomposition"] = {{"blocks", blocks},
                          {"s_qubits", d.s_qubits},
                          {"s_basis", s_basis},
                          {"r_qubits", d.r_qubits},
                          {"aligner", unitary_json(d.aligner)},
                          {"relations_ok", check.ok}};
  }
  emit(r, opt, out);
  return kOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSymmetric:
      return kNotSymmetric;
    case ErrorKind::IllConditioned:
    case ErrorKind::UnclassifiableDimension:
    case ErrorKind::Rank2Anomaly:
    case ErrorKind::NotClosed:
    case ErrorKind::BasisExpansionResidual:
    case ErrorKind::ResourceLimit:
      return kNumerical;
    case ErrorKind::ZeroClassUnsupported:
      return kUnknown;
    default:
      return kParse;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local unitary classification of permutation-symmetric multiqubit states", "symlu"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opt;
  app.add_option("--rank-tol", opt.tol.rank, "relative singular-value threshold for ranks")
      ->check(CLI::PositiveNumber);
  app.add_option("--num-tol", opt.tol.num, "absolute tolerance for coefficient comparisons")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "report format")->check(CLI::IsMember({"json", "text"}));

  auto* classify_cmd = app.add_subcommand("classify", "stabilizer class and canonical form");
  classify_cmd->add_option("file", opt.files, "state file")->required()->expected(1);
  auto* equiv_cmd = app.add_subcommand("equiv", "decide local unitary equivalence");
  equiv_cmd->add_option("files", opt.files, "two state files")->required()->expected(2);
  auto* stab_cmd = app.add_subcommand("stabilizer", "stabilizer subalgebra basis");
  stab_cmd->add_option("file", opt.files, "state file")->required()->expected(1);
  stab_cmd->add_flag("--decompose", opt.decompose, "also split the algebra into blocks");
  auto* canon_cmd = app.add_subcommand("canon", "canonical coefficients only");
  canon_cmd->add_option("file", opt.files, "state file")->required()->expected(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kParse;
  }

  try {
    if (*classify_cmd) return cmd_classify(opt, out);
    if (*canon_cmd) return cmd_canon(opt, out, err);
    if (*equiv_cmd) return cmd_equiv(opt, out);
    if (*stab_cmd) return cmd_stabilizer(opt, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kParse;
}

}  // namespace symlu::cli
