// Copyright 2026 The entkit Authors
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

// entkit — multipartite entanglement resources for local state
// discrimination: dual bases, stochastic local transformations, unambiguous
// measurements, teleport-based discrimination, rank and class analysis.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entkit/classify.hpp"
#include "entkit/discrimination.hpp"
#include "entkit/dual_basis.hpp"
#include "entkit/errors.hpp"
#include "entkit/io.hpp"
#include "entkit/named_states.hpp"
#include "entkit/protocol.hpp"
#include "entkit/random.hpp"
#include "entkit/teleport.hpp"
#include "entkit/tensor_ops.hpp"
#include "entkit/tensor_rank.hpp"
#include "entkit/transform.hpp"
#include "entkit/universality.hpp"
#include "entkit/verification.hpp"

namespace {

using namespace entkit;

// exit codes: 0 ok, 1 check failed, 2 usage, 3 file/parse,
// 4 shape/dimension, 5 numeric precondition
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitShape = 4;
constexpr int kExitNumeric = 5;

std::string fmt_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Ordered key/value report, rendered as aligned text or key=value lines.
class Report {
 public:
  void add(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }
  void add(const std::string& key, double value) { add(key, fmt_double(value)); }
  void add(const std::string& key, int value) { add(key, std::to_string(value)); }
  void add(const std::string& key, std::int64_t value) { add(key, std::to_string(value)); }
  void add(const std::string& key, bool value) { add(key, std::string(value ? "yes" : "no")); }

  std::string render(bool machine) const {
    std::string out;
    if (machine) {
      for (const auto& [k, v] : rows_) {
        out += k + "=" + v + "\n";
      }
      return out;
    }
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    for (const auto& [k, v] : rows_) {
      out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
    }
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

struct GlobalOpts {
  std::uint64_t seed = 7;
  std::optional<double> tol;
  std::string out;
  std::string format = "human";

  bool machine() const { return format == "machine"; }
  void emit(const Report& report) const {
    const std::string text = report.render(machine());
    std::fputs(text.c_str(), stdout);
    if (!out.empty()) write_text_file(out, text);
  }
  AlsOptions als() const {
    AlsOptions o;
    o.seed = seed;
    if (tol) o.tol = *tol;
    return o;
  }
};

void add_state_amps(Report& report, const std::string& prefix, const PureState& s, bool machine) {
  if (!machine) return;
  for (std::int64_t i = 0; i < s.dim(); ++i) {
    report.add(prefix + "_re_" + std::to_string(i), s.amp(i).real());
    report.add(prefix + "_im_" + std::to_string(i), s.amp(i).imag());
  }
}

int run_dual(const GlobalOpts& g, const std::vector<std::string>& files) {
  const BasisSet basis(read_states(files));
  const DualBasis dual = dual_basis(basis);
  Report report;
  report.add("states", basis.size());
  report.add("shape", basis.shape().str());
  report.add("orthonormal", basis.orthonormal());
  report.add("condition_number", dual.condition_number);
  for (int i = 0; i < basis.size(); ++i) {
    report.add("overlap_c_" + std::to_string(i), dual.overlaps[static_cast<std::size_t>(i)].real());
  }
  report.add("identity_residual", check_identity_decomposition(basis, dual));
  report.add("mes_residual", check_mes_decomposition(basis, dual));
  for (int i = 0; i < basis.size(); ++i) {
    add_state_amps(report, "dual_" + std::to_string(i), dual.duals[static_cast<std::size_t>(i)],
                   g.machine());
  }
  g.emit(report);
  return 0;
}

int run_transform_verify(const GlobalOpts& g, const std::string& phi_file,
                         const std::string& target_file, const std::string& op_file) {
  const PureState phi = read_state_file(phi_file);
  const PureState target = read_state_file(target_file);
  const ProductOperator op = read_operator_file(op_file);
  const TransformCheck chk = verify_transform(phi, target, op, g.tol.value_or(tol::kNorm));
  Report report;
  report.add("ok", chk.ok);
  report.add("mu_re", chk.mu.real());
  report.add("mu_im", chk.mu.imag());
  report.add("residual", chk.residual);
  g.emit(report);
  return chk.ok ? 0 : kExitCheckFailed;
}

int run_transform_find(const GlobalOpts& g, const std::string& phi_file,
                       const std::string& target_file, int restarts, int sweeps, double norm_cap) {
  const PureState phi = read_state_file(phi_file);
  const PureState target = read_state_file(target_file);
  AlsOptions opts = g.als();
  opts.restarts = restarts;
  opts.max_sweeps = sweeps;
  opts.norm_cap = norm_cap;
  const TransformSearch search = find_transform(phi, target, opts);
  Report report;
  report.add("found", search.found);
  report.add("residual", search.residual);
  report.add("border_rank_escape", search.border_rank_escape);
  report.add("starts_used", search.starts_used);
  report.add("sweeps_recorded", search.sweeps_used);
  if (search.op) {
    report.add("max_factor_norm", search.op->max_factor_norm());
  }
  g.emit(report);
  if (search.found && !g.out.empty()) {
    // --out holds the report; certificates go next to it
    write_text_file(g.out + ".op.json", operator_to_json(*search.op, "found transform"));
  }
  return search.found ? 0 : kExitCheckFailed;
}

int run_protocol_forward(const GlobalOpts& g, const std::string& resource_file,
                         const std::string& basis_file, const std::string& povm_file) {
  const PureState phi = read_state_file(resource_file);
  const BasisSet basis(read_states({basis_file}));
  const SeparablePOVM povm = read_povm_file(povm_file);
  const DualBasis dual = dual_basis(basis);
  const auto branches = protocol_from_measurement(phi, basis, povm);
  Report report;
  report.add("outcomes", static_cast<int>(branches.size()));
  double total = 0.0;
  for (const auto& b : branches) {
    const std::string key = "outcome_" + std::to_string(b.outcome);
    report.add(key + "_probability", b.probability);
    report.add(key + "_dual_fidelity",
               std::norm(inner(dual.duals[static_cast<std::size_t>(b.outcome)], b.output)));
    report.add(key + "_impurity", b.output_impurity);
    total += b.probability;
  }
  report.add("conclusive_probability", total);
  g.emit(report);
  return 0;
}

int run_teleport(const GlobalOpts& g, const std::string& state_file, int party, int dest) {
  const PureState s = read_state_file(state_file);
  const int d = s.shape().dim(party);
  const PureState out = teleport(s, max_entangled(d), party, dest);
  Report report;
  report.add("qudit_dimension", d);
  report.add("branches", d * d);
  report.add("output_shape", out.shape().str());
  add_state_amps(report, "out", out, g.machine());
  g.emit(report);
  if (!g.out.empty()) write_state_file(g.out, out);
  return 0;
}

int run_discriminate_build(const GlobalOpts& g, const std::string& resource_file,
                           const std::string& basis_file, const std::vector<std::string>& op_files,
                           const std::string& povm_out) {
  const PureState phi = read_state_file(resource_file);
  const BasisSet basis(read_states({basis_file}));
  std::vector<ProductOperator> ms;
  ms.reserve(op_files.size());
  for (const auto& f : op_files) ms.push_back(read_operator_file(f));
  const SeparablePOVM povm = build_unambiguous_povm(phi, basis, ms);
  const UnambiguityTable table = check_unambiguous(povm, phi, basis);
  Report report;
  report.add("scale_c", povm.scale());
  report.add("offdiag_max", table.offdiag_max);
  for (int i = 0; i < basis.size(); ++i) {
    report.add("eps_" + std::to_string(i), table.eps(i));
  }
  report.add("pass", table.pass);
  if (!povm_out.empty()) {
    write_text_file(povm_out, povm_to_json(povm));
    report.add("povm_file", povm_out);
  }
  g.emit(report);
  return 0;
}

int run_discriminate_check(const GlobalOpts& g, const std::string& povm_file,
                           const std::string& resource_file, const std::string& basis_file) {
  const SeparablePOVM povm = read_povm_file(povm_file);
  const PureState phi = read_state_file(resource_file);
  const BasisSet basis(read_states({basis_file}));
  const UnambiguityTable table = check_unambiguous(povm, phi, basis);
  Report report;
  for (int i = 0; i < basis.size(); ++i) {
    report.add("eps_" + std::to_string(i), table.eps(i));
  }
  report.add("offdiag_max", table.offdiag_max);
  report.add("pass", table.pass);
  g.emit(report);
  return table.pass ? 0 : kExitCheckFailed;
}

int run_discriminate_bell(const GlobalOpts& g, const std::string& basis_file) {
  const BasisSet basis(read_states({basis_file}));
  const BellDiscriminationResult res = perfect_discrimination_bell(basis);
  Report report;
  report.add("inputs", static_cast<int>(res.success_probability.rows()));
  report.add("branches", static_cast<int>(res.success_probability.cols()));
  report.add("success_probability_min", res.min_success);
  report.add("pass", res.pass);
  g.emit(report);
  return res.pass ? 0 : kExitCheckFailed;
}

int run_resource_make(const GlobalOpts& g, const std::string& name, int parties, int levels,
                      const std::vector<int>& dims) {
  std::optional<SystemShape> shape;
  if (!dims.empty()) shape = SystemShape(dims);
  const PureState s = make_named(name, parties, levels, shape);
  Report report;
  report.add("label", s.label());
  report.add("shape", s.shape().str());
  report.add("dim", s.dim());
  add_state_amps(report, "amp", s, g.machine());
  g.emit(report);
  if (!g.out.empty()) write_state_file(g.out, s);
  return 0;
}

int run_schmidt(const GlobalOpts& g, const std::string& state_file, int r_max) {
  const PureState s = read_state_file(state_file);
  const RankResult r = schmidt_measure(s, r_max, g.als());
  Report report;
  report.add("certified", r.certified);
  report.add("rank", r.rank);
  if (r.certified) report.add("schmidt_measure_bits", r.schmidt_measure_bits);
  report.add("flattening_lower_bound", r.flattening_lower_bound);
  report.add("border_rank_flag", r.border_rank_flag);
  for (const auto& f : r.fits) {
    const std::string key = "fit_r" + std::to_string(f.rank);
    report.add(key + "_residual", f.residual);
    report.add(key + "_escape", f.escape);
  }
  g.emit(report);
  if (r.certified && !g.out.empty()) {
    write_text_file(g.out, decomposition_to_json(r.decomposition));
  }
  return 0;
}

int run_classify(const GlobalOpts& g, const std::string& state_file) {
  const PureState s = read_state_file(state_file);
  const Slocc3Class cls = classify3(s);
  Report report;
  report.add("class", to_string(cls.tag));
  report.add("rank_a", cls.local_ranks[0]);
  report.add("rank_b", cls.local_ranks[1]);
  report.add("rank_c", cls.local_ranks[2]);
  report.add("tangle", cls.tangle);
  report.add("near_boundary", cls.near_boundary);
  report.add("entropy_bits_a_bc", cut_entropy(s, {0}));
  report.add("entropy_bits_b_ac", cut_entropy(s, {1}));
  report.add("entropy_bits_ab_c", cut_entropy(s, {2}));
  g.emit(report);
  return 0;
}

int run_universal(const GlobalOpts& g, const std::string& resource_file,
                  const std::vector<std::string>& rep_files,
                  const std::vector<std::string>& cert_files, const std::string& witness_prefix) {
  const PureState phi = read_state_file(resource_file);
  std::vector<PureState> reps;
  if (rep_files.empty()) {
    reps = maximal_reps_qubits3();
  } else {
    reps = read_states(rep_files);
  }
  std::vector<std::optional<ProductOperator>> certs;
  if (!cert_files.empty()) {
    certs.resize(reps.size());
    for (std::size_t i = 0; i < cert_files.size() && i < reps.size(); ++i) {
      certs[i] = read_operator_file(cert_files[i]);
    }
  }
  const UniversalityVerdict verdict = universality_unambiguous(phi, reps, g.als(), certs);
  Report report;
  report.add("universal", verdict.universal);
  for (std::size_t i = 0; i < verdict.reps.size(); ++i) {
    const auto& r = verdict.reps[i];
    const std::string key = "rep_" + std::to_string(i);
    report.add(key + "_label", reps[i].label().empty() ? std::string("state") : reps[i].label());
    report.add(key + "_reachable", r.reachable);
    report.add(key + "_residual", r.residual);
    report.add(key + "_certified", r.from_certificate);
    report.add(key + "_border_rank_escape", r.border_rank_escape);
    if (r.witness && !witness_prefix.empty()) {
      const std::string path = witness_prefix + std::to_string(i) + ".json";
      write_text_file(path, operator_to_json(*r.witness));
      report.add(key + "_witness_file", path);
    }
  }
  g.emit(report);
  return verdict.universal ? 0 : kExitCheckFailed;
}

int run_verify_paper(const GlobalOpts& g) {
  const auto results = run_verification_suite(g.seed);
  Report report;
  int failures = 0;
  int index = 0;
  for (const auto& r : results) {
    ++index;
    const std::string key = "check_" + std::to_string(index);
    report.add(key + "_anchor", r.anchor);
    report.add(key + "_id", r.id);
    report.add(key + "_pass", r.pass);
    for (const auto& d : r.details) {
      const auto eq = d.find('=');
      report.add(key + "_" + d.substr(0, eq), d.substr(eq + 1));
    }
    if (!r.pass) ++failures;
  }
  report.add("seed", static_cast<std::int64_t>(g.seed));
  report.add("passed", static_cast<int>(results.size()) - failures);
  report.add("failed", failures);

  if (g.machine()) {
    g.emit(report);
  } else {
    // human table: one line per criterion, anchor first
    std::string text;
    index = 0;
    for (const auto& r : results) {
      ++index;
      char line[160];
      std::snprintf(line, sizeof line, "%s  %2d/%zu  %-40s %s\n", r.pass ? "PASS" : "FAIL", index,
                    results.size(), r.anchor.c_str(), r.id.c_str());
      text += line;
      for (const auto& d : r.details) {
        text += "        " + d + "\n";
      }
    }
    text += std::to_string(static_cast<int>(results.size()) - failures) + "/" +
            std::to_string(results.size()) + " criteria passed\n";
    std::fputs(text.c_str(), stdout);
    if (!g.out.empty()) write_text_file(g.out, text);
  }
  return failures == 0 ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multipartite entanglement resources for local state discrimination"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may trail the subcommand

  GlobalOpts g;
  app.add_option("--seed", g.seed, "seed for all randomized searches");
  double tol_value = 0.0;
  auto* tol_opt = app.add_option("--tol", tol_value, "override the subcommand's main tolerance");
  app.add_option("--out", g.out, "write the report (or artifact) to this path");
  app.add_option("--format", g.format, "report format")
      ->check(CLI::IsMember({"human", "machine"}));

  // dual
  std::vector<std::string> dual_files;
  auto* dual = app.add_subcommand("dual", "dual (biorthogonal) basis of a complete basis");
  dual->add_option("files", dual_files, "basis file or one state file per basis element")
      ->required();

  // transform verify|find
  auto* transform = app.add_subcommand("transform", "stochastic local transformations");
  transform->require_subcommand(1);
  std::string t_phi, t_target, t_op;
  auto* tverify = transform->add_subcommand("verify", "check a product-matrix transformation");
  tverify->add_option("--phi", t_phi, "source state file")->required();
  tverify->add_option("--target", t_target, "target state file")->required();
  tverify->add_option("--op", t_op, "product operator file")->required();
  int t_restarts = 64, t_sweeps = 500;
  double t_cap = tol::kNormCap;
  auto* tfind = transform->add_subcommand("find", "search for a product-matrix transformation");
  tfind->add_option("--phi", t_phi, "source state file")->required();
  tfind->add_option("--target", t_target, "target state file")->required();
  tfind->add_option("--restarts", t_restarts, "number of starts");
  tfind->add_option("--sweeps", t_sweeps, "maximum sweeps per start");
  tfind->add_option("--norm-cap", t_cap, "factor norm cap");

  // protocol forward
  auto* protocol = app.add_subcommand("protocol", "measurement-to-transformation protocol");
  protocol->require_subcommand(1);
  std::string p_resource, p_basis, p_povm;
  auto* pforward = protocol->add_subcommand("forward", "run the conversion protocol");
  pforward->add_option("--resource", p_resource, "resource state file")->required();
  pforward->add_option("--basis", p_basis, "basis file")->required();
  pforward->add_option("--povm", p_povm, "POVM file")->required();

  // teleport
  std::string tp_state;
  int tp_party = 0, tp_dest = -1;
  auto* tele = app.add_subcommand("teleport", "simulate qudit teleportation, all Bell branches");
  tele->add_option("--state", tp_state, "input state file")->required();
  tele->add_option("--party", tp_party, "party to teleport");
  tele->add_option("--dest", tp_dest, "destination slot (default: same position)");

  // discriminate build|check|bell
  auto* disc = app.add_subcommand("discriminate", "unambiguous / perfect discrimination");
  disc->require_subcommand(1);
  std::string d_resource, d_basis, d_povm, d_povm_out;
  std::vector<std::string> d_ops;
  auto* dbuild = disc->add_subcommand("build", "build the separable measurement from transforms");
  dbuild->add_option("--resource", d_resource)->required();
  dbuild->add_option("--basis", d_basis)->required();
  dbuild->add_option("--ops", d_ops, "one operator file per basis state")->required();
  dbuild->add_option("--povm-out", d_povm_out, "where to write the POVM");
  auto* dcheck = disc->add_subcommand("check", "unambiguity table of a POVM");
  dcheck->add_option("--povm", d_povm)->required();
  dcheck->add_option("--resource", d_resource)->required();
  dcheck->add_option("--basis", d_basis)->required();
  auto* dbell = disc->add_subcommand("bell", "teleport-then-measure with the hub resource");
  dbell->add_option("--basis", d_basis)->required();

  // resource make
  auto* resource = app.add_subcommand("resource", "construct named resource states");
  resource->require_subcommand(1);
  std::string r_name;
  int r_parties = 3, r_levels = 2;
  std::vector<int> r_dims;
  auto* rmake = resource->add_subcommand("make", "write a named state");
  rmake->add_option("name", r_name, "w | ghz | bell | ures322")->required();
  rmake->add_option("--parties", r_parties, "party count (w, ghz)");
  rmake->add_option("--levels", r_levels, "level count (ghz)");
  rmake->add_option("--dims", r_dims, "target shape (bell)")->delimiter(',');

  // schmidt
  std::string s_state;
  int s_rmax = 6;
  auto* schmidt = app.add_subcommand("schmidt", "certified tensor rank and Schmidt measure");
  schmidt->add_option("--state", s_state)->required();
  schmidt->add_option("--rmax", s_rmax, "largest candidate rank");

  // classify
  std::string c_state;
  auto* classify = app.add_subcommand("classify", "three-qubit class, tangle and cut entropies");
  classify->add_option("--state", c_state)->required();

  // universal
  std::string u_resource, u_witness_prefix;
  std::vector<std::string> u_reps, u_certs;
  auto* universal = app.add_subcommand("universal", "universality for unambiguous discrimination");
  universal->add_option("--resource", u_resource)->required();
  universal->add_option("--reps", u_reps, "maximal representatives (default: three-qubit GHZ, W)");
  universal->add_option("--certs", u_certs, "candidate certificate operator files");
  universal->add_option("--witness-prefix", u_witness_prefix, "write witness operators here");

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");
  (void)verify;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*tol_opt) g.tol = tol_value;

  try {
    if (*dual) return run_dual(g, dual_files);
    if (*tverify) return run_transform_verify(g, t_phi, t_target, t_op);
    if (*tfind) return run_transform_find(g, t_phi, t_target, t_restarts, t_sweeps, t_cap);
    if (*pforward) return run_protocol_forward(g, p_resource, p_basis, p_povm);
    if (*tele) return run_teleport(g, tp_state, tp_party, tp_dest < 0 ? tp_party : tp_dest);
    if (*dbuild) return run_discriminate_build(g, d_resource, d_basis, d_ops, d_povm_out);
    if (*dcheck) return run_discriminate_check(g, d_povm, d_resource, d_basis);
    if (*dbell) return run_discriminate_bell(g, d_basis);
    if (*rmake) return run_resource_make(g, r_name, r_parties, r_levels, r_dims);
    if (*schmidt) return run_schmidt(g, s_state, s_rmax);
    if (*classify) return run_classify(g, c_state);
    if (*universal) return run_universal(g, u_resource, u_reps, u_certs, u_witness_prefix);
    if (*verify) return run_verify_paper(g);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitShape;
  } catch (const SingularBasisError& e) {
    std::cerr << "error: " << e.what() << " (condition " << fmt_double(e.condition_number) << ")\n";
    return kExitNumeric;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
