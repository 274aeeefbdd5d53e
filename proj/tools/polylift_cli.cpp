// Copyright 2026 The polylift Authors
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

// Command-line interface.  Exit codes: 0 = success / accepted, 1 = checked
// negative (a bound refutes the requested rank, a verification fails, a
// recognition test rejects, a system is infeasible), 2 = input error with a
// single-line diagnostic on standard error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polylift/errors.hpp"
#include "polylift/factorization.hpp"
#include "polylift/io.hpp"
#include "polylift/lift.hpp"
#include "polylift/linalg.hpp"
#include "polylift/polar.hpp"
#include "polylift/polyhedron.hpp"
#include "polylift/slack.hpp"

namespace {

using nlohmann::json;
using namespace polylift;

struct CommonOpts {
  std::string out;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--out", opts->out, "write the result to this file");
  cmd->add_option("--format", opts->format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

// Every command funnels its result through here.
void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(opts.out, text);
  }
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(print_scalar(v(i)));
  return a;
}

json vec_list_json(const std::vector<Vec>& list) {
  json a = json::array();
  for (const Vec& v : list) a.push_back(vec_json(v));
  return a;
}

json mat_json(const Mat& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(print_scalar(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json poly_json(const Polyhedron& p, PolyForm form) {
  json j;
  j["n"] = p.ambient_dim();
  if (form == PolyForm::h) {
    j["form"] = "H";
    const HRep& h = p.is_empty()
                        ? Polyhedron::empty_set(
                              p.ambient_dim() > 0 ? p.ambient_dim() : 1)
                              .hrep()
                        : p.minimal_h();
    json ineq = json::array();
    for (Index i = 0; i < h.a.rows(); ++i) {
      json row;
      row["a"] = vec_json(h.a.row(i).transpose());
      row["b"] = print_scalar(h.b(i));
      ineq.push_back(std::move(row));
    }
    json eq = json::array();
    for (Index i = 0; i < h.e.rows(); ++i) {
      json row;
      row["a"] = vec_json(h.e.row(i).transpose());
      row["b"] = print_scalar(h.f(i));
      eq.push_back(std::move(row));
    }
    j["ineq"] = std::move(ineq);
    j["eq"] = std::move(eq);
    return j;
  }
  j["form"] = "V";
  if (p.is_empty()) {
    j["empty"] = true;
    j["points"] = json::array();
    j["rays"] = json::array();
    j["lines"] = json::array();
    return j;
  }
  const VRep& v = p.vrep();
  j["empty"] = false;
  j["points"] = vec_list_json(v.points);
  j["rays"] = vec_list_json(v.rays);
  j["lines"] = vec_list_json(v.lines);
  return j;
}

std::string plain_row(const Vec& v) {
  std::string s;
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) s += " ";
    s += print_scalar(v(i));
  }
  return s;
}

Factorization factors_from_matrices(const Mat& u, const Mat& v) {
  if (u.cols() != v.rows()) {
    throw DimensionMismatchError(
        "inner dimensions of the factor matrices disagree");
  }
  Factorization f;
  f.cone = ConeKind::orthant(u.cols());
  for (Index i = 0; i < u.rows(); ++i) {
    Mat a(u.cols(), 1);
    for (Index t = 0; t < u.cols(); ++t) a(t, 0) = u(i, t);
    f.a_factors.push_back(std::move(a));
  }
  for (Index j = 0; j < v.cols(); ++j) {
    Mat b(v.rows(), 1);
    for (Index t = 0; t < v.rows(); ++t) b(t, 0) = v(t, j);
    f.b_factors.push_back(std::move(b));
  }
  return f;
}

Vec negated_vec(const Vec& v) {
  Vec out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = -v(i);
  return out;
}

// ---- subcommand bodies ----------------------------------------------------

int run_convert(const std::string& path, const CommonOpts& opts) {
  const ParsedPolyhedron in = parse_polyhedron_text(read_text_file(path));
  const PolyForm target =
      in.form == PolyForm::h ? PolyForm::v : PolyForm::h;
  if (opts.format == "json") {
    emit(opts, poly_json(in.poly, target).dump(2) + "\n");
  } else {
    emit(opts, print_polyhedron_text(in.poly, target));
  }
  return 0;
}

int run_polar(const std::string& path, const CommonOpts& opts) {
  const ParsedPolyhedron in = parse_polyhedron_text(read_text_file(path));
  const Polyhedron polar = polar_set(in.poly);
  if (opts.format == "json") {
    emit(opts, poly_json(polar, PolyForm::v).dump(2) + "\n");
  } else {
    emit(opts, print_polyhedron_text(polar, PolyForm::v));
  }
  return 0;
}

int run_dsets(const std::string& path, const CommonOpts& opts) {
  const ParsedPolyhedron in = parse_polyhedron_text(read_text_file(path));
  const PolarData pd = compute_d_sets(in.poly);
  if (opts.format == "json") {
    json j;
    j["d1"] = vec_list_json(pd.d1);
    j["d2"] = vec_list_json(pd.d2);
    j["d3"] = vec_list_json(pd.d3);
    j["d32"] = vec_list_json(pd.d32);
    j["l2"] = vec_list_json(pd.l_two_basis);
    emit(opts, j.dump(2) + "\n");
    return 0;
  }
  std::string out;
  const auto block = [&out](const char* name, const std::vector<Vec>& list) {
    out += std::string(name) + " " + std::to_string(list.size()) + "\n";
    for (const Vec& v : list) out += plain_row(v) + "\n";
  };
  block("D1", pd.d1);
  block("D2", pd.d2);
  block("D3", pd.d3);
  block("D32", pd.d32);
  block("L2", pd.l_two_basis);
  emit(opts, out);
  return 0;
}

json slack_json(const SlackMatrix& s) {
  json j;
  j["rows"] = s.m.rows();
  j["cols"] = s.m.cols();
  j["entries"] = mat_json(s.m);
  json rows = json::array();
  for (const SlackRowLabel& label : s.row_labels) {
    json r;
    r["block"] = label.block;
    r["rhs"] = print_scalar(label.rhs);
    r["normal"] = vec_json(label.normal);
    rows.push_back(std::move(r));
  }
  json cols = json::array();
  for (const SlackColLabel& label : s.col_labels) {
    json c;
    c["kind"] = label.is_ray ? "ray" : "point";
    c["generator"] = vec_json(label.generator);
    cols.push_back(std::move(c));
  }
  j["row_labels"] = std::move(rows);
  j["col_labels"] = std::move(cols);
  return j;
}

int run_slack(const std::string& path, bool canonical,
              const CommonOpts& opts) {
  const ParsedPolyhedron in = parse_polyhedron_text(read_text_file(path));
  const SlackMatrix s =
      canonical ? canonical_slack(in.poly)
                : build_slack(in.poly, in.poly.minimal_h(), in.poly.vrep());
  if (opts.format == "json") {
    emit(opts, slack_json(s).dump(2) + "\n");
  } else {
    emit(opts, print_slack_text(s));
  }
  return 0;
}

int run_rank_check(const std::string& path, const CommonOpts& opts) {
  const ParsedPolyhedron in = parse_polyhedron_text(read_text_file(path));
  const RankTheoremReport rep = check_rank_theorem(in.poly);
  if (opts.format == "json") {
    json j;
    j["slack_rank"] = rep.slack_rank;
    j["pointed_dim"] = rep.pointed_dim;
    j["translated_cone"] = rep.translated_cone;
    j["holds"] = rep.holds;
    emit(opts, j.dump(2) + "\n");
  } else {
    std::string out;
    out += "slack rank " + std::to_string(rep.slack_rank) + "\n";
    out += "pointed dimension " + std::to_string(rep.pointed_dim) + "\n";
    out += std::string("translated cone ") +
           (rep.translated_cone ? "yes" : "no") + "\n";
    out += std::string("rank equals dimension plus one ") +
           (rep.holds ? "yes" : "no") + "\n";
    emit(opts, out);
  }
  return rep.holds ? 0 : 1;
}

int run_nnrank(const std::string& path, long k, std::uint64_t budget,
               std::uint64_t seed, int threads, const CommonOpts& opts) {
  const Mat m = parse_matrix_text(read_text_file(path));
  if (k < 1) throw Error("--k must be at least 1");
  const NnRankDecision decision = nn_rank_decide(m, k, budget, seed, threads);
  json j;
  std::string out;
  out += "k " + std::to_string(k) + "\n";
  j["k"] = k;
  int code = 1;
  switch (decision.verdict) {
    case NnRankDecision::Verdict::yes: {
      out = "verdict yes\n" + out;
      j["verdict"] = "yes";
      const Factorization& f = *decision.certificate;
      Mat left(static_cast<Index>(f.a_factors.size()), f.cone.size);
      for (std::size_t i = 0; i < f.a_factors.size(); ++i) {
        for (Index t = 0; t < f.cone.size; ++t) {
          left(static_cast<Index>(i), t) = f.a_factors[i](t, 0);
        }
      }
      Mat right(f.cone.size, static_cast<Index>(f.b_factors.size()));
      for (std::size_t jj = 0; jj < f.b_factors.size(); ++jj) {
        for (Index t = 0; t < f.cone.size; ++t) {
          right(t, static_cast<Index>(jj)) = f.b_factors[jj](t, 0);
        }
      }
      out += "# left factor\n" + print_matrix_text(left);
      out += "# right factor\n" + print_matrix_text(right);
      j["left"] = mat_json(left);
      j["right"] = mat_json(right);
      code = 0;
      break;
    }
    case NnRankDecision::Verdict::no:
      out = "verdict no\n" + out;
      out += "bound " + std::to_string(decision.bound_value) + " (" +
             decision.bound_reason + ")\n";
      j["verdict"] = "no";
      j["bound"] = decision.bound_value;
      j["reason"] = decision.bound_reason;
      code = 1;
      break;
    default:
      out = "verdict unknown\n" + out;
      out += "search budget exhausted without a verified factorization; "
             "absence proves nothing\n";
      j["verdict"] = "unknown";
      code = 1;
      break;
  }
  emit(opts, opts.format == "json" ? j.dump(2) + "\n" : out);
  return code;
}

int run_psd_bound(const std::string& path, const CommonOpts& opts) {
  const ParsedPolyhedron in = parse_polyhedron_text(read_text_file(path));
  const Index bound = psd_rank_lower_bound(in.poly);
  const SlackMatrix s = canonical_slack(in.poly);
  const std::optional<Index> upper = shitov_report(s.m);
  if (opts.format == "json") {
    json j;
    j["psd_rank_lower_bound"] = bound;
    if (upper) {
      j["nonneg_rank_upper_bound"] = *upper;
    } else {
      j["nonneg_rank_upper_bound"] = nullptr;
    }
    emit(opts, j.dump(2) + "\n");
  } else {
    std::string out = "psd rank lower bound " + std::to_string(bound) + "\n";
    if (upper) {
      out += "nonnegative rank upper bound " + std::to_string(*upper) +
             " (rank-3 construction, non-constructive)\n";
    }
    emit(opts, out);
  }
  return 0;
}

int run_verify_fact(const std::string& s_path, const std::string& u_path,
                    const std::string& v_path, const CommonOpts& opts) {
  const Mat s = parse_matrix_text(read_text_file(s_path));
  const Mat u = parse_matrix_text(read_text_file(u_path));
  const Mat v = parse_matrix_text(read_text_file(v_path));
  const Factorization f = factors_from_matrices(u, v);
  const VerifyOutcome outcome = verify_factorization(s, f);
  if (opts.format == "json") {
    json j;
    j["ok"] = outcome.ok;
    j["violation"] = outcome.violation;
    emit(opts, j.dump(2) + "\n");
  } else if (outcome.ok) {
    emit(opts, "verified\n");
  } else {
    emit(opts, "rejected: " + outcome.violation + "\n");
  }
  return outcome.ok ? 0 : 1;
}

int run_lift_build(const std::string& poly_path, const std::string& u_path,
                   const std::string& v_path, const CommonOpts& opts) {
  const ParsedPolyhedron in = parse_polyhedron_text(read_text_file(poly_path));
  const Mat u = parse_matrix_text(read_text_file(u_path));
  const Mat v = parse_matrix_text(read_text_file(v_path));
  const Factorization f = factors_from_matrices(u, v);
  const Polyhedron& p = in.poly;
  if (!p.is_empty() && lineality_space(p).cols() > 0) {
    throw Error(
        "sets with lines need lineality factors; the command-line builder "
        "accepts line-free sets only");
  }
  Lift lift;
  std::optional<Vec> apex;
  if (!p.is_empty()) apex = is_translated_cone(p);
  if (apex) {
    const Polyhedron cone0 = translate(p, negated_vec(*apex));
    lift = build_cone_lift(cone0, f);
    bool apex_zero = true;
    for (Index i = 0; i < apex->size() && apex_zero; ++i) {
      apex_zero = (*apex)(i).is_zero();
    }
    if (!apex_zero) lift.translation = *apex;
  } else {
    const PolarData pd = compute_d_sets(p);
    lift = build_lift(p, pd, f);
  }
  if (opts.format == "json") {
    json j;
    j["cone"] = lift.cone.is_orthant() ? "orthant" : "psd";
    j["size"] = lift.cone.size;
    j["text"] = print_lift_text(lift);
    emit(opts, j.dump(2) + "\n");
  } else {
    emit(opts, print_lift_text(lift));
  }
  return 0;
}

int run_lift_verify(const std::string& poly_path, const std::string& lift_path,
                    const CommonOpts& opts) {
  const ParsedPolyhedron in = parse_polyhedron_text(read_text_file(poly_path));
  const Lift lift = parse_lift_text(read_text_file(lift_path));
  const LiftReport rep = verify_lift(in.poly, lift);
  if (opts.format == "json") {
    json j = json::array();
    for (const LiftCheck& c : rep.checks) {
      json e;
      e["condition"] = c.condition;
      e["verdict"] = verdict_name(c.verdict);
      e["detail"] = c.detail;
      j.push_back(std::move(e));
    }
    emit(opts, j.dump(2) + "\n");
  } else {
    std::string out;
    for (const LiftCheck& c : rep.checks) {
      out += c.condition + " " + verdict_name(c.verdict) + " (" + c.detail +
             ")\n";
    }
    emit(opts, out);
  }
  return rep.all_verified() ? 0 : 1;
}

int run_identify_slack(const std::string& path, const CommonOpts& opts) {
  const Mat m = parse_matrix_text(read_text_file(path));
  const SlackIdentification si = is_slack_matrix(m);
  if (opts.format == "json") {
    json j;
    j["accepted"] = si.accepted;
    j["note"] = si.note;
    if (si.zero_one_vector) j["zero_one_vector"] = vec_json(*si.zero_one_vector);
    if (si.violation) j["violation"] = vec_json(*si.violation);
    emit(opts, j.dump(2) + "\n");
  } else {
    std::string out;
    if (si.accepted) {
      out += "accepted\n";
      if (si.zero_one_vector) {
        out += "zero-one row-space vector " + plain_row(*si.zero_one_vector) +
               "\n";
      }
    } else {
      out += "rejected\n";
      if (si.violation) {
        out += "violating row-space vector " + plain_row(*si.violation) + "\n";
      }
    }
    out += "criterion " + si.note + "\n";
    emit(opts, out);
  }
  return si.accepted ? 0 : 1;
}

int run_eliminate(const std::string& lift_path, const std::string& poly_path,
                  const std::string& u_path, const CommonOpts& opts) {
  const Lift lift = parse_lift_text(read_text_file(lift_path));
  const ParsedPolyhedron in = parse_polyhedron_text(read_text_file(poly_path));
  if (in.form != PolyForm::h) {
    throw Error("eliminate expects the system as an inequality (H) file");
  }
  const Mat u = parse_matrix_text(read_text_file(u_path));
  const HRep& h = in.poly.hrep();
  AffineSubspace sub;
  try {
    sub = eliminate_presentation(lift, h, u, h.b);
  } catch (const InconsistentSystemError& e) {
    if (opts.format == "json") {
      json j;
      j["consistent"] = false;
      j["error"] = e.what();
      emit(opts, j.dump(2) + "\n");
    } else {
      emit(opts, std::string("infeasible: ") + e.what() + "\n");
    }
    return 1;
  }
  if (opts.format == "json") {
    json j;
    j["consistent"] = true;
    j["offset"] = vec_json(sub.offset);
    json dirs = json::array();
    for (Index c = 0; c < sub.basis.cols(); ++c) {
      dirs.push_back(vec_json(sub.basis.col(c)));
    }
    j["dirs"] = std::move(dirs);
    emit(opts, j.dump(2) + "\n");
  } else {
    std::string out = "subspace " + std::to_string(sub.offset.size()) +
                      " dim " + std::to_string(sub.basis.cols()) + "\n";
    out += "offset " + plain_row(sub.offset) + "\n";
    for (Index c = 0; c < sub.basis.cols(); ++c) {
      out += "dir " + plain_row(sub.basis.col(c)) + "\n";
    }
    emit(opts, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lifts of polyhedral convex sets"};
  app.require_subcommand(1);

  std::string in_path;
  std::string u_path;
  std::string v_path;
  std::string extra_path;
  bool canonical = false;
  long k = 0;
  std::uint64_t budget = 1000000;
  std::uint64_t seed = 0;
  int threads = 1;

  CommonOpts convert_o;
  auto* convert = app.add_subcommand(
      "convert", "convert a polyhedron file between H and V form");
  convert->add_option("input", in_path, "polyhedron file")->required();
  add_common(convert, &convert_o);

  CommonOpts polar_o;
  auto* polar = app.add_subcommand("polar", "polar set of a polyhedron");
  polar->add_option("input", in_path, "polyhedron file")->required();
  add_common(polar, &polar_o);

  CommonOpts dsets_o;
  auto* dsets = app.add_subcommand(
      "dsets", "polar decomposition blocks D1/D2/D3/D32");
  dsets->add_option("input", in_path, "polyhedron file")->required();
  add_common(dsets, &dsets_o);

  CommonOpts slack_o;
  auto* slack = app.add_subcommand("slack", "slack matrix with labels");
  slack->add_option("input", in_path, "polyhedron file")->required();
  slack->add_flag("--canonical", canonical,
                  "canonically ordered and scaled slack");
  add_common(slack, &slack_o);

  CommonOpts rank_o;
  auto* rank = app.add_subcommand(
      "rank-check", "compare slack rank with dimension plus one");
  rank->add_option("input", in_path, "polyhedron file")->required();
  add_common(rank, &rank_o);

  CommonOpts nnrank_o;
  auto* nnrank = app.add_subcommand(
      "nnrank", "decide nonnegative rank at a threshold");
  nnrank->add_option("input", in_path, "matrix file")->required();
  nnrank->add_option("--k", k, "width to certify or refute")->required();
  nnrank->add_option("--budget-iters", budget, "search iteration budget");
  nnrank->add_option("--seed", seed, "random restart seed");
  nnrank->add_option("--threads", threads, "worker threads for the search");
  add_common(nnrank, &nnrank_o);

  CommonOpts psd_o;
  auto* psd = app.add_subcommand("psd-bound", "psd rank lower bound");
  psd->add_option("input", in_path, "polyhedron file")->required();
  add_common(psd, &psd_o);

  CommonOpts vf_o;
  auto* vf = app.add_subcommand(
      "verify-fact", "verify an exact nonnegative factorization S = U V");
  vf->add_option("s", in_path, "target matrix file")->required();
  vf->add_option("u", u_path, "left factor file")->required();
  vf->add_option("v", v_path, "right factor file")->required();
  add_common(vf, &vf_o);

  CommonOpts lb_o;
  auto* lb = app.add_subcommand(
      "lift-build", "build a verified lift from slack factors");
  lb->add_option("input", in_path, "polyhedron file")->required();
  lb->add_option("u", u_path, "left factor file")->required();
  lb->add_option("v", v_path, "right factor file")->required();
  add_common(lb, &lb_o);

  CommonOpts lv_o;
  auto* lv = app.add_subcommand("lift-verify", "verify a lift certificate");
  lv->add_option("input", in_path, "polyhedron file")->required();
  lv->add_option("lift", extra_path, "lift file")->required();
  add_common(lv, &lv_o);

  CommonOpts id_o;
  auto* id = app.add_subcommand(
      "identify-slack", "recognize a slack matrix among nonnegative matrices");
  id->add_option("input", in_path, "matrix file")->required();
  add_common(id, &id_o);

  CommonOpts el_o;
  auto* el = app.add_subcommand(
      "eliminate", "eliminate the x block from a lift presentation");
  el->add_option("lift", extra_path, "lift file")->required();
  el->add_option("system", in_path, "inequality file with the x block")
      ->required();
  el->add_option("u", u_path, "y block coefficient matrix file")->required();
  add_common(el, &el_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (convert->parsed()) return run_convert(in_path, convert_o);
    if (polar->parsed()) return run_polar(in_path, polar_o);
    if (dsets->parsed()) return run_dsets(in_path, dsets_o);
    if (slack->parsed()) return run_slack(in_path, canonical, slack_o);
    if (rank->parsed()) return run_rank_check(in_path, rank_o);
    if (nnrank->parsed()) {
      return run_nnrank(in_path, k, budget, seed, threads, nnrank_o);
    }
    if (psd->parsed()) return run_psd_bound(in_path, psd_o);
    if (vf->parsed()) return run_verify_fact(in_path, u_path, v_path, vf_o);
    if (lb->parsed()) return run_lift_build(in_path, u_path, v_path, lb_o);
    if (lv->parsed()) return run_lift_verify(in_path, extra_path, lv_o);
    if (id->parsed()) return run_identify_slack(in_path, id_o);
    if (el->parsed()) return run_eliminate(extra_path, in_path, u_path, el_o);
  } catch (const FactorizationMismatchError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
