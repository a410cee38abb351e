// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "diwidth/exact_width.hpp"
#include "diwidth/families.hpp"
#include "diwidth/pathdecomp.hpp"
#include "diwidth/properties.hpp"
#include "diwidth/rankdec.hpp"
#include "diwidth/solve.hpp"
#include "diwidth/threshold.hpp"

#include "../support/oracles.hpp"

using namespace diwidth;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int id;
  std::string description;
  double limit_seconds;  // 0 = no limit
  bool pass = true;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 8) failures.push_back(what);
    }
  }
  void expect_eq(long got, long want, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << got << ", expected " << want;
    expect(got == want, os.str());
  }
};

int finish(Criterion& c, Clock::time_point start) {
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (c.limit_seconds > 0 && secs > c.limit_seconds) {
    c.pass = false;
    std::ostringstream os;
    os << "runtime " << secs << "s exceeds limit " << c.limit_seconds << "s";
    c.failures.push_back(os.str());
  }
  std::printf("criterion %d: %s - %s (%.2fs)\n", c.id, c.pass ? "PASS" : "FAIL",
              c.description.c_str(), secs);
  for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
  return c.pass ? 0 : 1;
}

int criterion1() {
  Criterion c{1, "family values on n = 3..6", 10.0};
  auto start = Clock::now();
  for (int n = 3; n <= 6; ++n) {
    Digraph tt = transitive_tournament(n);
    c.expect_eq(dpw(tt).value, 0, "dpw(TT_" + std::to_string(n) + ")");
    c.expect_eq(solve_exact(tt, MeasureKind::DcutwFwd).value, 0, "dcutw(TT)");
    c.expect_eq(exact_dlnlc(tt).value, 1, "dlnlc(TT)");
    c.expect_eq(solve_exact(tt, MeasureKind::Dnw).value, 1, "dnw(TT)");
    c.expect_eq(solve_exact(tt, MeasureKind::Dlrw).value, 1, "dlrw(TT)");
    c.expect_eq(exact_dlcw(tt).value, 2, "dlcw(TT)");

    Digraph kb = bidirectional_complete(n);
    c.expect_eq(dpw(kb).value, n - 1, "dpw(K_bi)");
    c.expect_eq(solve_exact(kb, MeasureKind::DcutwFwd).value, (n / 2) * ((n + 1) / 2),
                "dcutw(K_bi)");
    c.expect_eq(solve_exact(kb, MeasureKind::Dnw).value, 1, "dnw(K_bi)");
    c.expect_eq(exact_dlnlc(kb).value, 1, "dlnlc(K_bi)");
    c.expect_eq(solve_exact(kb, MeasureKind::Dlrw).value, 1, "dlrw(K_bi)");

    Digraph bs = bioriented_star(n);
    c.expect_eq(solve_exact(bs, MeasureKind::DcutwFwd).value, (n + 1) / 2, "dcutw(star)");
    c.expect_eq(dpw(bs).value, 1, "dpw(star)");

    Digraph p = directed_path(n);
    c.expect_eq(dpw(p).value, 0, "dpw(path)");
    c.expect_eq(solve_exact(p, MeasureKind::DcutwFwd).value, 0, "dcutw(path)");
    c.expect_eq(solve_exact(p, MeasureKind::Dlrw).value, 1, "dlrw(path)");
    c.expect_eq(solve_exact(p, MeasureKind::Dnw).value, 2, "dnw(path)");
    c.expect_eq(exact_dlcw(p).value, 3, "dlcw(path)");

    Digraph cyc = directed_cycle(n);
    c.expect_eq(solve_exact(cyc, MeasureKind::DvsnIn).value, 1, "dvsn(cycle)");
    c.expect_eq(solve_exact(cyc, MeasureKind::DcutwFwd).value, 1, "dcutw(cycle)");
  }
  c.expect_eq(exact_dlnlc(directed_path(4)).value, 2, "dlnlc(P4)");
  c.expect_eq(exact_dlnlc(directed_path(5)).value, 3, "dlnlc(P5)");
  return finish(c, start);
}

int criterion2() {
  Criterion c{2, "exact widths of powers of paths", 5.0};
  auto start = Clock::now();
  c.expect_eq(exact_dlcw(path_power(8, 2)).value, 4, "dlcw(P8^2)");
  c.expect_eq(solve_exact(path_power(8, 2), MeasureKind::Dnw).value, 3, "dnw(P8^2)");
  c.expect_eq(exact_dlcw(path_power(4, 1)).value, 3, "dlcw(P4^1)");
  c.expect_eq(solve_exact(path_power(4, 1), MeasureKind::Dnw).value, 2, "dnw(P4^1)");
  return finish(c, start);
}

int criterion3() {
  Criterion c{3, "every bound holds on all 4096 digraphs with 4 vertices", 120.0};
  auto start = Clock::now();
  SweepReport r = sweep_properties(4, false);
  c.expect_eq(r.instances_checked, 4096, "instances");
  for (const auto& v : r.violations) c.expect(false, v.property + ": " + v.observed);
  return finish(c, start);
}

int criterion4() {
  Criterion c{4, "undirected widths equal directed widths of biorientations, n <= 5", 300.0};
  auto start = Clock::now();
  SweepReport r = check_biorientation_equalities(5);
  c.expect_eq(r.instances_checked, 1 + 2 + 4 + 11 + 34, "iso classes");
  for (const auto& v : r.violations) c.expect(false, v.property + ": " + v.observed);
  return finish(c, start);
}

int criterion5() {
  Criterion c{5, "tight instances for both expression-width bounds, n <= 5", 0};
  auto start = Clock::now();
  bool nlc_tight = false, cw_tight = false;
  for (int n = 2; n <= 5 && !(nlc_tight && cw_tight); ++n) {
    enumerate_digraphs(n, n == 5, [&](const Digraph& g) {
      if (nlc_tight && cw_tight) return;
      int nw = solve_exact(g, MeasureKind::Dnw).value;
      int nlc = exact_dlnlc(g).value;
      if (nlc == nw + 1) nlc_tight = true;
      if (!cw_tight && exact_dlcw(g).value == nlc + 1) cw_tight = true;
    });
  }
  c.expect(nlc_tight, "no digraph with nlc-width = nw + 1 found");
  c.expect(cw_tight, "no digraph with cw-width = nlc-width + 1 found");
  return finish(c, start);
}

int criterion6() {
  Criterion c{6, "threshold membership matches width one, n <= 4 plus sampled n = 5", 0};
  auto start = Clock::now();
  auto check = [&](const Digraph& g) {
    bool thr = recognize_threshold(g).is_threshold;
    int nlc = exact_dlnlc(g).value;
    int nw = solve_exact(g, MeasureKind::Dnw).value;
    c.expect(thr == (nlc == 1) && thr == (nw == 1),
             "equivalence broken: threshold=" + std::to_string(thr) + " nlc=" +
                 std::to_string(nlc) + " nw=" + std::to_string(nw));
    if (thr) {
      c.expect(exact_dlcw(g).value <= 2, "threshold graph with clique-width above 2");
      c.expect(dpw(g).value <= degree_profile(g).min_in_out(),
               "threshold graph with path-width above min degree");
    }
  };
  for (int n = 1; n <= 4; ++n) enumerate_digraphs(n, false, check);
  long index = 0;
  enumerate_digraphs(5, true, [&](const Digraph& g) {
    if (index++ % 16 == 0) check(g);
  });
  return finish(c, start);
}

int criterion7() {
  Criterion c{7, "solver and rank agree with brute-force oracles", 0};
  auto start = Clock::now();
  oracles::SplitMix rng(20240807);
  for (int trial = 0; trial < 50; ++trial) {
    Digraph g = oracles::random_digraph(6, 20 + static_cast<int>(rng.next() % 61), rng);
    for (auto kind : {MeasureKind::DvsnIn, MeasureKind::DvsnOut, MeasureKind::DcutwFwd,
                      MeasureKind::DcutwBwd, MeasureKind::Dnw, MeasureKind::Dlrw}) {
      int solver = solve_exact(g, kind).value;
      int oracle = oracles::brute_force_measure(g, kind);
      if (solver != oracle)
        c.expect(false, std::string("solver ") + to_string(kind) + " = " +
                            std::to_string(solver) + ", oracle = " + std::to_string(oracle));
    }
  }
  // every GF(4) matrix with at most 3 rows and 4 columns
  for (int rows = 1; rows <= 3 && c.pass; ++rows)
    for (int cols = 1; cols <= 4 && c.pass; ++cols) {
      const long cells = rows * cols;
      const std::uint64_t total = std::uint64_t{1} << (2 * cells);
      for (std::uint64_t code = 0; code < total; ++code) {
        Gf4Matrix m(rows, cols);
        std::uint64_t rest = code;
        for (int i = 0; i < rows; ++i)
          for (int j = 0; j < cols; ++j) {
            m.at(i, j) = Gf4(static_cast<std::uint8_t>(rest & 3));
            rest >>= 2;
          }
        if (gf4_rank(m) != oracles::brute_force_rank_gf4(m)) {
          c.expect(false, "rank mismatch on a " + std::to_string(rows) + "x" +
                              std::to_string(cols) + " matrix, code " + std::to_string(code));
          break;
        }
      }
    }
  return finish(c, start);
}

int criterion8() {
  Criterion c{8, "witnesses and conversions re-verify on 100 random digraphs, n <= 8", 0};
  auto start = Clock::now();
  oracles::SplitMix rng(20240808);
  SearchOptions xopts{10};
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.next() % 8);
    Digraph g = oracles::random_digraph(n, 15 + static_cast<int>(rng.next() % 70), rng);
    UndirectedGraph u = underlying_undirected(g);

    for (auto kind : {MeasureKind::DvsnIn, MeasureKind::DvsnOut, MeasureKind::DcutwFwd,
                      MeasureKind::DcutwBwd, MeasureKind::Dnw, MeasureKind::Dlrw}) {
      SolveResult r = solve_exact(g, kind);
      if (measure_cost(g, kind, r.witness) != r.value)
        c.expect(false, std::string("layout witness mismatch for ") + to_string(kind));
    }

    SolveResult pw = dpw(g);
    DirectedPathDecomposition d = from_layout(g, pw.witness);
    c.expect(validate(g, d).ok, "decomposition witness invalid");
    c.expect(width(d) == pw.value, "decomposition width differs from path-width");

    NlcSearchResult nlc = exact_dlnlc(g, xopts);
    c.expect(eval_nlc(nlc.witness).digraph == g, "nlc witness evaluates wrong");
    c.expect(labels_used(nlc.witness) <= nlc.value, "nlc witness label budget");

    CwSearchResult cw = exact_dlcw(g, xopts);
    c.expect(eval_cw(cw.witness).digraph == g, "cw witness evaluates wrong");
    c.expect(labels_used(cw.witness) <= cw.value, "cw witness label budget");

    SolveResult nwr = solve_exact(g, MeasureKind::Dnw);
    CaterpillarDecomposition cat = layout_to_rank_decomposition(g, nwr.witness);
    c.expect(cat.width <= measure_cost(g, MeasureKind::Dnw, nwr.witness),
             "caterpillar width exceeds the neighbourhood cost");
    c.expect(caterpillar_width(g, cat.leaf_order) == cat.width, "caterpillar width mismatch");

    ThresholdRecognition thr = recognize_threshold(g);
    if (thr.is_threshold) {
      c.expect(eval_threshold(thr.sequence) == g, "threshold sequence evaluates wrong");
      NlcExpr one = threshold_to_nlc1(thr.sequence);
      c.expect(eval_nlc(one).digraph == g, "threshold-to-nlc witness evaluates wrong");
      c.expect(eval_threshold(nlc1_to_threshold(one)) == g, "nlc-to-threshold round trip");
    }

    c.expect(eval_cw(nlc_to_cw(nlc.witness)).digraph == g, "nlc-to-cw conversion");
    c.expect(labels_used(nlc_to_cw(nlc.witness)) <= nlc.value + 1, "nlc-to-cw label bound");
    c.expect(eval_nlc(cw_to_nlc(cw.witness)).digraph == g, "cw-to-nlc conversion");
    c.expect(labels_used(cw_to_nlc(cw.witness)) <= cw.value, "cw-to-nlc label bound");
    c.expect(eval_nlc_u(drop_directions(nlc.witness)).graph == u, "nlc drop-directions");
    c.expect(eval_cw_u(drop_directions(cw.witness)).graph == u, "cw drop-directions");

    UNlcSearchResult unlc = exact_lnlc(u, xopts);
    c.expect(eval_nlc(biorient(unlc.witness)).digraph == complete_biorientation(u),
             "nlc biorientation");
    UCwSearchResult ucw = exact_lcw(u, xopts);
    c.expect(eval_cw(biorient(ucw.witness)).digraph == complete_biorientation(u),
             "cw biorientation");
  }
  return finish(c, start);
}

}  // namespace

int main() {
  int failures = 0;
  failures += criterion1();
  failures += criterion2();
  failures += criterion3();
  failures += criterion4();
  failures += criterion5();
  failures += criterion6();
  failures += criterion7();
  failures += criterion8();
  if (failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
