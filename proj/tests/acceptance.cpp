// End-to-end acceptance checks.  Run with the CLI binary as the only
// argument, from the repository root (fixture paths are relative).  Prints
// one PASS/FAIL line per criterion and exits nonzero when any of them fail.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "polylift/errors.hpp"
#include "polylift/factorization.hpp"
#include "polylift/io.hpp"
#include "polylift/lift.hpp"
#include "polylift/linalg.hpp"
#include "polylift/polar.hpp"
#include "polylift/polyhedron.hpp"
#include "polylift/slack.hpp"
#include "test_util.hpp"

using namespace polylift;

namespace {

std::string g_cli;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = "\"" + g_cli + "\" " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

bool expect(bool cond, const std::string& what) {
  if (!cond) std::cout << "    check failed: " << what << "\n";
  return cond;
}

Vec make_vec(const std::vector<Scalar>& entries) {
  Vec v(static_cast<Index>(entries.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = entries[i];
  return v;
}

// ---------------------------------------------------------------------------
// criterion 1: the polar decomposition subcommand on the planar square that
// does not contain the origin, compared byte for byte.

bool criterion1() {
  const CliResult r = run_cli("dsets examples/nonequal.poly");
  const std::string want =
      "D1 3\n"
      "-1 1\n"
      "1/3 1/3\n"
      "1 -1\n"
      "D2 2\n"
      "-1 0\n"
      "0 -1\n"
      "D3 1\n"
      "-1 -1\n"
      "D32 0\n"
      "L2 0\n";
  return expect(r.exit_code == 0, "dsets exit code") &&
         expect(r.out == want, "dsets output text");
}

// ---------------------------------------------------------------------------
// criterion 2: the hexagonal prism's slack matrix against its published
// 7x7 value, in the published generator order, plus the rank identity.

bool criterion2() {
  const ParsedPolyhedron in =
      parse_polyhedron_text(read_text_file("examples/prism.poly"));
  const Polyhedron& p = in.poly;
  const Scalar r3(mpq_class(0), mpq_class(1), 3);
  const Scalar half(1, 2);
  VRep v;
  v.n = 3;
  const Scalar zero(0);
  const std::vector<std::pair<Scalar, Scalar>> hex = {
      {Scalar(1), zero},          {half, half * r3},
      {-half, half * r3},         {Scalar(-1), zero},
      {-half, -(half * r3)},      {half, -(half * r3)}};
  for (const auto& [x, y] : hex) v.points.push_back(make_vec({x, y, zero}));
  v.rays.push_back(make_vec({zero, zero, Scalar(1)}));
  const SlackMatrix s = build_slack(p, p.hrep(), v);
  const Mat ref = parse_matrix_text(read_text_file("examples/prism_slack.mat"));
  bool ok = expect(s.m.rows() == ref.rows() && s.m.cols() == ref.cols(),
                   "slack shape");
  for (Index i = 0; ok && i < ref.rows(); ++i) {
    for (Index j = 0; ok && j < ref.cols(); ++j) {
      ok = expect(s.m(i, j) == ref(i, j), "slack entry");
    }
  }
  ok = ok && expect(exact_rank(s.m) == 4, "slack rank 4");
  ok = ok && expect(dimension(p) + 1 == 4, "rank equals dimension plus one");
  return ok;
}

// ---------------------------------------------------------------------------
// criterion 3: refutation of a width-5 nonnegative factorization of the
// prism slack, certified by the peeled rectangle bound.

bool criterion3() {
  const Mat s = parse_matrix_text(read_text_file("examples/prism_slack.mat"));
  const NnRankDecision dec = nn_rank_decide(s, 5);
  return expect(dec.verdict == NnRankDecision::Verdict::no, "verdict no") &&
         expect(dec.bound_value == 6, "bound value 6") &&
         expect(dec.bound_reason == "block 6 = rectangle 5 + 1",
                "bound reason");
}

// ---------------------------------------------------------------------------
// criterion 4: a verified width-5 nonnegative factorization of the hexagon
// block, found within the iteration budget on at least one of ten seeds.

bool criterion4() {
  const Mat s =
      parse_matrix_text(read_text_file("examples/hexagon_slack.mat"));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::optional<Factorization> f = nn_search(s, 5, 1000000, seed);
    if (!f) continue;
    if (verify_factorization(s, *f).ok) {
      std::cout << "    seed " << seed << " produced a verified factorization\n";
      return true;
    }
    return expect(false, "search result failed re-verification");
  }
  return expect(false, "no seed in 0..9 produced a factorization");
}

// ---------------------------------------------------------------------------
// criterion 5: exact acceptance of the quadratic-field factorization, and
// rejection of every single-entry perturbation by 1/1000.

Factorization factors_of(const Mat& u, const Mat& v) {
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

bool criterion5() {
  const Mat s = parse_matrix_text(read_text_file("examples/noncom_S.mat"));
  const Mat u = parse_matrix_text(read_text_file("examples/noncom_U.mat"));
  const Mat v = parse_matrix_text(read_text_file("examples/noncom_V.mat"));
  const Scalar eps(1, 1000);
  if (!expect(verify_factorization(s, factors_of(u, v)).ok,
              "unperturbed factorization accepted")) {
    return false;
  }
  for (Index i = 0; i < s.rows(); ++i) {
    for (Index j = 0; j < s.cols(); ++j) {
      Mat sp = s;
      sp(i, j) = sp(i, j) + eps;
      if (!expect(!verify_factorization(sp, factors_of(u, v)).ok,
                  "perturbed target rejected")) {
        return false;
      }
    }
  }
  for (Index i = 0; i < u.rows(); ++i) {
    for (Index j = 0; j < u.cols(); ++j) {
      Mat up = u;
      up(i, j) = up(i, j) + eps;
      if (!expect(!verify_factorization(s, factors_of(up, v)).ok,
                  "perturbed left factor rejected")) {
        return false;
      }
    }
  }
  for (Index i = 0; i < v.rows(); ++i) {
    for (Index j = 0; j < v.cols(); ++j) {
      Mat vp = v;
      vp(i, j) = vp(i, j) + eps;
      if (!expect(!verify_factorization(s, factors_of(u, vp)).ok,
                  "perturbed right factor rejected")) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 6: lift round trip for the quadratic-field example; the built
// slice, rewritten against the original presentation, matches the reference
// parameterization, and full verification passes.

// Express each canonically ordered supporting row as a positive rescaling of
// a presentation row, or as a two-row conic combination, and carry the left
// factors along; columns are matched by their slack values.
Factorization map_presentation_factors(const SlackMatrix& ds, const Mat& h,
                                       const Vec& d, const Mat& u,
                                       const Mat& v) {
  const Index q = ds.m.rows();
  const Index w = ds.m.cols();
  const Index width = u.cols();
  const Index rows = h.rows();
  Factorization f;
  f.cone = ConeKind::orthant(width);
  for (Index i = 0; i < q; ++i) {
    const Vec& nrm = ds.row_labels[i].normal;
    const Scalar& rhs = ds.row_labels[i].rhs;
    Mat a = Mat::Zero(width, 1);
    bool done = false;
    for (Index k = 0; k < rows && !done; ++k) {
      Index ff = 0;
      while (ff < nrm.size() && nrm(ff).is_zero()) ++ff;
      if (ff == nrm.size() || h(k, ff).is_zero()) continue;
      const Scalar c = h(k, ff) / nrm(ff);
      if (!(c > Scalar(0))) continue;
      bool match = d(k) == c * rhs;
      for (Index t = 0; t < nrm.size() && match; ++t) {
        match = h(k, t) == c * nrm(t);
      }
      if (match) {
        for (Index t = 0; t < width; ++t) a(t, 0) = u(k, t) / c;
        done = true;
      }
    }
    for (Index k = 0; k < rows && !done; ++k) {
      for (Index l = k + 1; l < rows && !done; ++l) {
        Mat sys(nrm.size() + 1, 2);
        Vec tgt(nrm.size() + 1);
        for (Index t = 0; t < nrm.size(); ++t) {
          sys(t, 0) = h(k, t);
          sys(t, 1) = h(l, t);
          tgt(t) = nrm(t);
        }
        sys(nrm.size(), 0) = d(k);
        sys(nrm.size(), 1) = d(l);
        tgt(nrm.size()) = rhs;
        const auto sol = solve_affine(sys, tgt);
        if (!sol || sol->basis.cols() != 0) continue;
        const Scalar lk = sol->offset(0);
        const Scalar ll = sol->offset(1);
        if (!(lk > Scalar(0)) || !(ll > Scalar(0))) continue;
        for (Index t = 0; t < width; ++t) {
          a(t, 0) = lk * u(k, t) + ll * u(l, t);
        }
        done = true;
      }
    }
    if (!done) throw Error("supporting row has no presentation preimage");
    f.a_factors.push_back(a);
  }
  for (Index j = 0; j < w; ++j) {
    Index found = -1;
    Scalar gamma(0);
    for (Index l = 0; l < v.cols() && found < 0; ++l) {
      Scalar g(0);
      bool ok = true;
      bool have = false;
      for (Index i = 0; i < q; ++i) {
        const Scalar lhs = ds.m(i, j);
        Scalar rv(0);
        for (Index t = 0; t < width; ++t) {
          rv = rv + f.a_factors[i](t, 0) * v(t, l);
        }
        if (!have) {
          if (rv.is_zero()) {
            if (!lhs.is_zero()) {
              ok = false;
              break;
            }
            continue;
          }
          g = lhs / rv;
          have = true;
          if (!(g > Scalar(0))) {
            ok = false;
            break;
          }
        } else if (lhs != g * rv) {
          ok = false;
          break;
        }
      }
      if (ok && have) {
        found = l;
        gamma = g;
      }
    }
    if (found < 0) throw Error("generator column has no factor preimage");
    Mat b(width, 1);
    for (Index t = 0; t < width; ++t) b(t, 0) = v(t, found) * gamma;
    f.b_factors.push_back(b);
  }
  return f;
}

bool criterion6() {
  const ParsedPolyhedron in =
      parse_polyhedron_text(read_text_file("examples/noncom.poly"));
  const Mat u = parse_matrix_text(read_text_file("examples/noncom_U.mat"));
  const Mat v = parse_matrix_text(read_text_file("examples/noncom_V.mat"));
  const Polyhedron& p = in.poly;
  const PolarData pd = compute_d_sets(p);
  const SlackMatrix ds = d_slack(pd, p);
  const Factorization f =
      map_presentation_factors(ds, p.hrep().a, p.hrep().b, u, v);
  if (!expect(verify_factorization(ds.m, f).ok, "mapped factors accepted")) {
    return false;
  }
  const Lift lift = build_lift(p, pd, f);
  const LiftReport rep = verify_lift(p, lift);
  for (const LiftCheck& c : rep.checks) {
    if (c.verdict != Verdict::verified) {
      std::cout << "    " << c.condition << ": " << verdict_name(c.verdict)
                << " (" << c.detail << ")\n";
    }
  }
  if (!expect(rep.all_verified(), "lift verification")) return false;

  const AffineSubspace elim =
      eliminate_presentation(lift, p.hrep(), u, p.hrep().b);
  const Scalar r3(mpq_class(0), mpq_class(1), 3);
  const Scalar one(1), half(1, 2), quarter(1, 4), zero(0);
  AffineSubspace ref;
  ref.offset = make_vec({one, half, zero, zero, zero, zero});
  const std::vector<std::vector<Scalar>> dirs = {
      {-(r3 + one) * half, (r3 + one) * quarter, one, zero, zero, zero},
      {r3 - one, -half, zero, one, zero, zero},
      {-one, zero, zero, zero, one, zero},
      {(r3 + one) * half, -((r3 + one) * quarter), zero, zero, zero, one}};
  ref.basis = Mat(6, static_cast<Index>(dirs.size()));
  for (Index c = 0; c < ref.basis.cols(); ++c) {
    for (Index r = 0; r < 6; ++r) {
      ref.basis(r, c) = dirs[static_cast<size_t>(c)][static_cast<size_t>(r)];
    }
  }
  return expect(elim.basis.cols() == 4, "eliminated slice has 4 free columns") &&
         expect(subspace_equal(elim, ref),
                "eliminated slice equals the reference parameterization");
}

// ---------------------------------------------------------------------------
// criterion 7: the stored psd lift of the half line fails exactly the
// recession-image condition, with the {0} witness, while the one-parameter
// family identity behind it checks out at three sample points.

bool criterion7() {
  const ParsedPolyhedron in =
      parse_polyhedron_text(read_text_file("examples/halfline.poly"));
  const Lift lift =
      parse_lift_text(read_text_file("examples/psd_halfline.lift"));
  const LiftReport rep = verify_lift(in.poly, lift);
  const LiftCheck* rec = rep.find("recession-image");
  bool ok = expect(rec != nullptr, "recession-image check present") &&
            expect(rec->verdict == Verdict::failed, "recession-image failed") &&
            expect(rec->detail.find("{0}") != std::string::npos,
                   "recession witness {0}");
  for (const char* name : {"witnesses", "row-functionals", "properness"}) {
    const LiftCheck* c = rep.find(name);
    ok = ok && expect(c != nullptr && c->verdict == Verdict::verified,
                      std::string(name) + " verified");
  }
  if (!ok) return false;

  // The slice parameterized as A(t) = A0 + A1 t + A2 t^2 pairs with the row
  // functional to the affine target 1 + t.
  const std::vector<Mat> a_coeffs = {
      unflatten_cone_element(lift.cone, lift.slice.offset),
      unflatten_cone_element(lift.cone, Vec(lift.slice.basis.col(1))),
      unflatten_cone_element(lift.cone, Vec(lift.slice.basis.col(0)))};
  const std::vector<Scalar> target = {Scalar(1), Scalar(1)};
  const std::vector<Scalar> samples = {Scalar(0), Scalar(1), Scalar(2)};
  return expect(
      psd_verify_family(a_coeffs, lift.rows.at(0).dual, target, samples),
      "family identity at three samples");
}

// ---------------------------------------------------------------------------
// criterion 8: randomized property suite over at least 200 polyhedra.

using Rng = std::mt19937_64;

Vec random_point(Rng& rng, Index n, int lo, int hi) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, 3);
  Vec v(n);
  for (Index i = 0; i < n; ++i) v(i) = Scalar(num(rng), den(rng));
  return v;
}

Polyhedron random_h(Rng& rng, Index n) {
  std::uniform_int_distribution<int> rows(n == 2 ? 3 : 4, n == 2 ? 6 : 7);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> rhs(-2, 4);
  const Index m = rows(rng);
  HRep h;
  h.n = n;
  h.a = Mat(m, n);
  h.b = Vec(m);
  for (Index i = 0; i < m; ++i) {
    bool all_zero = true;
    for (Index j = 0; j < n; ++j) {
      h.a(i, j) = Scalar(coeff(rng));
      all_zero = all_zero && h.a(i, j).is_zero();
    }
    if (all_zero) h.a(i, 0) = Scalar(1);
    h.b(i) = Scalar(rhs(rng));
  }
  return Polyhedron::from_h(std::move(h));
}

Polyhedron random_v(Rng& rng, Index n, bool allow_lines) {
  std::uniform_int_distribution<int> npts(1, 4);
  std::uniform_int_distribution<int> nrays(0, 2);
  std::uniform_int_distribution<int> lined(0, 5);
  VRep v;
  v.n = n;
  const int pts = npts(rng);
  for (int i = 0; i < pts; ++i) v.points.push_back(random_point(rng, n, -3, 3));
  const int rays = nrays(rng);
  for (int i = 0; i < rays; ++i) {
    Vec r = random_point(rng, n, -2, 2);
    bool zero = true;
    for (Index j = 0; j < n; ++j) zero = zero && r(j).is_zero();
    if (!zero) v.rays.push_back(r);
  }
  if (allow_lines && lined(rng) == 0) {
    Vec l = random_point(rng, n, -2, 2);
    bool zero = true;
    for (Index j = 0; j < n; ++j) zero = zero && l(j).is_zero();
    if (!zero) v.lines.push_back(l);
  }
  return Polyhedron::from_v(std::move(v));
}

Vec negated(const Vec& v) {
  Vec out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = -v(i);
  return out;
}

bool check_instance(Rng& rng, const Polyhedron& p) {
  if (p.is_empty()) return true;
  const Index n = p.ambient_dim();

  VRep vcopy = p.vrep();
  const Polyhedron vback = Polyhedron::from_v(std::move(vcopy));
  if (!expect(polyhedra_equal(vback, p), "generator round trip")) return false;
  HRep hcopy = p.minimal_h();
  const Polyhedron hback = Polyhedron::from_h(std::move(hcopy));
  if (!expect(polyhedra_equal(hback, p), "inequality round trip")) return false;

  const PolarData pd = compute_d_sets(p);
  for (int probe = 0; probe < 20; ++probe) {
    const Vec x = random_point(rng, n, -4, 4);
    if (!expect(membership_by_d(pd, x) == contains_point(p, x),
                "membership tests agree")) {
      return false;
    }
  }

  const Vec v0 = p.vrep().points.front();
  const Polyhedron centered = translate(p, negated(v0));
  const Polyhedron once = polar_set(centered);
  if (!expect(polyhedra_equal(polar_set(once), centered),
              "polar involution")) {
    return false;
  }

  const RankTheoremReport rep = check_rank_theorem(p);
  if (!expect(rep.holds, "rank theorem")) return false;
  if (!rep.translated_cone) {
    if (!expect(rep.slack_rank == rep.pointed_dim + 1,
                "slack rank is pointed dimension plus one")) {
      return false;
    }
  }

  // the facet slack for bounded sets, the homogenization slack (which
  // carries the point-marker row) for unbounded ones
  if (dimension(p) == n && lineality_space(p).cols() == 0) {
    const SlackMatrix s =
        p.vrep().rays.empty() ? canonical_slack(p) : test_util::hom_slack(p);
    if (s.m.cols() <= 24 && exact_rank(s.m) >= 2) {
      if (!expect(is_slack_matrix(s.m).accepted,
                  "generated slack recognized")) {
        return false;
      }
    }
  }
  return true;
}

bool criterion8() {
  Rng rng(20240817);
  int nonempty = 0;
  int total = 0;
  for (int iter = 0; iter < 216; ++iter) {
    const Index n = (iter % 3 == 2) ? 3 : 2;
    const Polyhedron p =
        (iter % 2 == 0) ? random_h(rng, n) : random_v(rng, n, true);
    ++total;
    if (!p.is_empty()) ++nonempty;
    if (!check_instance(rng, p)) {
      std::cout << "    failing instance index " << iter << "\n";
      return false;
    }
  }
  std::cout << "    " << total << " instances, " << nonempty << " nonempty\n";
  return expect(total >= 200, "at least 200 instances") &&
         expect(nonempty >= 120, "generator produced enough nonempty sets");
}

// ---------------------------------------------------------------------------
// criterion 9: the psd rank lower bound equals n on the nonnegative orthant
// for n <= 6 (with its slack matrix reproduced as (0 | I)), and 3 on the
// prism.

bool criterion9() {
  for (Index n = 1; n <= 6; ++n) {
    HRep h;
    h.n = n;
    h.a = Mat::Zero(n, n);
    h.b = Vec::Zero(n);
    for (Index i = 0; i < n; ++i) h.a(i, i) = Scalar(-1);
    HRep hcopy = h;
    const Polyhedron p = Polyhedron::from_h(std::move(hcopy));
    if (!expect(psd_rank_lower_bound(p) == n, "orthant bound equals n")) {
      return false;
    }
    VRep v;
    v.n = n;
    v.points.push_back(Vec::Zero(n));
    for (Index i = 0; i < n; ++i) {
      Vec e = Vec::Zero(n);
      e(i) = Scalar(1);
      v.rays.push_back(e);
    }
    const SlackMatrix s = build_slack(p, h, v);
    bool ok = expect(s.m.rows() == n && s.m.cols() == n + 1, "slack shape");
    for (Index i = 0; ok && i < n; ++i) {
      for (Index j = 0; ok && j <= n; ++j) {
        const Scalar want = (j == i + 1) ? Scalar(1) : Scalar(0);
        ok = expect(s.m(i, j) == want, "slack entry of (0 | I)");
      }
    }
    if (!ok) return false;
  }
  const ParsedPolyhedron in =
      parse_polyhedron_text(read_text_file("examples/prism.poly"));
  return expect(psd_rank_lower_bound(in.poly) == 3, "prism bound 3");
}

struct Criterion {
  int number;
  double limit_seconds;  // 0 means no limit beyond the harness timeout
  std::function<bool()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 2;
  }
  g_cli = argv[1];
  std::cout.setf(std::ios::unitbuf);

  const std::vector<Criterion> criteria = {
      {1, 1.0, criterion1},  {2, 1.0, criterion2}, {3, 60.0, criterion3},
      {4, 0.0, criterion4},  {5, 1.0, criterion5}, {6, 5.0, criterion6},
      {7, 0.0, criterion7},  {8, 300.0, criterion8}, {9, 0.0, criterion9}};

  bool all_ok = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::cout << "    exception: " << e.what() << "\n";
      ok = false;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && c.limit_seconds > 0 && seconds > c.limit_seconds) {
      std::cout << "    time limit " << c.limit_seconds << " s exceeded\n";
      ok = false;
    }
    std::printf("criterion %d %s (%.2f s)\n", c.number, ok ? "PASS" : "FAIL",
                seconds);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
