#pragma once

#include <climits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "diwidth/enumerate.hpp"
#include "diwidth/exact_width.hpp"
#include "diwidth/families.hpp"
#include "diwidth/pathdecomp.hpp"
#include "diwidth/solve.hpp"
#include "diwidth/threshold.hpp"

namespace diwidth {

// Every exact width value of one digraph, plus the structural flags the
// property checks condition on.
struct ValueBundle {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;
  int dpw = 0;        // directed vertex separation, in-formulation
  int dvsn_out = 0;   // out-formulation
  int dcutw = 0;      // forward cut
  int dcutw_bwd = 0;  // backward cut
  int dnw = 0;
  int dlrw = 0;
  int dlnlc = 0;
  int dlcw = 0;
  int u_pw = 0;  // values of the underlying undirected graph
  int u_cutw = 0;
  int u_nw = 0;
  int u_lrw = 0;
  int u_lnlc = 0;
  int u_lcw = 0;
  int un_max_degree = 0;
  DegreeProfile degrees;
  bool dag = false;
  bool semicomplete = false;
  bool threshold = false;
  bool k22_free = false;  // underlying graph has no complete 2x2 bipartite subgraph
  bool decomp_ok = false;  // decomposition built from the separation witness is valid
  int decomp_width = 0;
};

inline bool has_k22_subgraph(const UndirectedGraph& g) {
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      VertexMask common = g.adj_mask(a) & g.adj_mask(b) & ~vertex_bit(a) & ~vertex_bit(b);
      if (popcount(common) >= 2) return true;
    }
  return false;
}

inline ValueBundle compute_bundle(const Digraph& g, const SolveOptions& sopts = {},
                                  const SearchOptions& xopts = {}) {
  ValueBundle b;
  b.n = g.vertex_count();
  b.arcs = g.arcs();
  SolveResult pw = solve_exact(g, MeasureKind::DvsnIn, sopts);
  b.dpw = pw.value;
  b.dvsn_out = solve_exact(g, MeasureKind::DvsnOut, sopts).value;
  b.dcutw = solve_exact(g, MeasureKind::DcutwFwd, sopts).value;
  b.dcutw_bwd = solve_exact(g, MeasureKind::DcutwBwd, sopts).value;
  b.dnw = solve_exact(g, MeasureKind::Dnw, sopts).value;
  b.dlrw = solve_exact(g, MeasureKind::Dlrw, sopts).value;
  b.dlnlc = exact_dlnlc(g, xopts).value;
  b.dlcw = exact_dlcw(g, xopts).value;

  UndirectedGraph u = underlying_undirected(g);
  b.u_pw = undirected_measure(u, MeasureKind::UVsn, sopts).value;
  b.u_cutw = undirected_measure(u, MeasureKind::UCutw, sopts).value;
  b.u_nw = undirected_measure(u, MeasureKind::UNw, sopts).value;
  b.u_lrw = undirected_measure(u, MeasureKind::ULrw, sopts).value;
  b.u_lnlc = exact_lnlc(u, xopts).value;
  b.u_lcw = exact_lcw(u, xopts).value;
  b.un_max_degree = u.max_degree();

  b.degrees = degree_profile(g);
  b.dag = is_dag(g);
  b.semicomplete = b.n >= 1 && is_semicomplete(classify(g));
  b.threshold = b.n >= 1 && recognize_threshold(g).is_threshold;
  b.k22_free = !has_k22_subgraph(u);

  DirectedPathDecomposition d = from_layout(g, pw.witness);
  b.decomp_ok = validate(g, d).ok;
  b.decomp_width = width(d);
  return b;
}

struct PropertyResult {
  std::string id;
  bool applicable = true;
  bool pass = true;
  int slack = INT_MAX;  // rhs - lhs for inequalities; 0 for satisfied equalities
  std::string observed;
};

namespace detail {

inline PropertyResult prop_eq(const std::string& id, long lhs, long rhs) {
  PropertyResult r;
  r.id = id;
  r.pass = lhs == rhs;
  r.slack = 0;
  std::ostringstream os;
  os << lhs << (r.pass ? " == " : " != ") << rhs;
  r.observed = os.str();
  return r;
}

inline PropertyResult prop_le(const std::string& id, long lhs, long rhs) {
  PropertyResult r;
  r.id = id;
  r.pass = lhs <= rhs;
  r.slack = static_cast<int>(rhs - lhs);
  std::ostringstream os;
  os << lhs << (r.pass ? " <= " : " > ") << rhs;
  r.observed = os.str();
  return r;
}

inline PropertyResult prop_skip(const std::string& id) {
  PropertyResult r;
  r.id = id;
  r.applicable = false;
  r.observed = "not applicable";
  return r;
}

inline PropertyResult prop_flag(const std::string& id, bool pass, const std::string& observed) {
  PropertyResult r;
  r.id = id;
  r.pass = pass;
  r.slack = 0;
  r.observed = observed;
  return r;
}

}  // namespace detail

// Instance-level checks for every bound and equivalence the library covers.
// The two degree-scaled upper bounds on dnw and dlrw require at least one
// arc; on arcless digraphs both width values are positive while the scaled
// bound degenerates to zero, so those checks are gated.
inline std::vector<PropertyResult> check_all_properties(const ValueBundle& b) {
  using detail::prop_eq;
  using detail::prop_flag;
  using detail::prop_le;
  using detail::prop_skip;
  std::vector<PropertyResult> out;
  const bool has_arcs = !b.arcs.empty();
  const int min_deg = b.degrees.min_in_out();

  out.push_back(prop_eq("vsn-in-eq-out", b.dpw, b.dvsn_out));
  out.push_back(prop_eq("cutw-fwd-eq-bwd", b.dcutw, b.dcutw_bwd));

  out.push_back(prop_le("nw-le-nlc", b.dnw, b.dlnlc));
  out.push_back(prop_le("nlc-le-nw-plus1", b.dlnlc, b.dnw + 1));
  out.push_back(prop_le("nw-le-cw", b.dnw, b.dlcw));
  out.push_back(prop_le("cw-le-nw-plus1", b.dlcw, b.dnw + 1));
  out.push_back(prop_le("nlc-le-cw", b.dlnlc, b.dlcw));
  out.push_back(prop_le("cw-le-nlc-plus1", b.dlcw, b.dlnlc + 1));
  out.push_back(prop_le("lrw-le-nw", b.dlrw, b.dnw));
  out.push_back(prop_le("cw-le-exp-lrw", b.dlcw, (1L << (2 * (b.dlrw + 1))) - 1));

  out.push_back(prop_le("pw-le-cutw", b.dpw, b.dcutw));
  out.push_back(prop_le("cutw-le-mindeg-pw", b.dcutw, static_cast<long>(min_deg) * b.dpw));
  out.push_back(prop_le("pw-le-mindeg-nw", b.dpw, static_cast<long>(min_deg) * b.dnw));

  out.push_back(prop_le("und-pw-bound", b.dpw, b.u_pw));
  out.push_back(prop_le("und-cutw-bound", b.dcutw, b.u_cutw));
  out.push_back(prop_le("und-nw-lower", b.u_nw, b.dnw));
  out.push_back(has_arcs
                    ? prop_le("und-nw-upper", b.dnw, static_cast<long>(b.un_max_degree) * b.u_nw)
                    : prop_skip("und-nw-upper"));
  out.push_back(prop_le("und-nlc-lower", b.u_lnlc, b.dlnlc));
  out.push_back(prop_le("und-nlc-upper", b.dlnlc,
                        static_cast<long>(b.un_max_degree) * b.u_lnlc + 1));
  out.push_back(prop_le("und-cw-lower", b.u_lcw, b.dlcw));
  out.push_back(prop_le("und-cw-upper", b.dlcw, static_cast<long>(b.un_max_degree) * b.u_lcw + 1));
  out.push_back(prop_le("und-lrw-lower", b.u_lrw, b.dlrw));
  out.push_back(has_arcs ? prop_le("und-lrw-upper", b.dlrw,
                                   static_cast<long>(b.un_max_degree) * (1L << (b.u_lrw + 1)) - 1)
                         : prop_skip("und-lrw-upper"));

  {
    const bool zero_iff_dag = (b.dag == (b.dpw == 0)) && (b.dag == (b.dvsn_out == 0)) &&
                              (b.dag == (b.dcutw == 0));
    std::ostringstream os;
    os << "dag=" << b.dag << " pw=" << b.dpw << " cutw=" << b.dcutw;
    out.push_back(prop_flag("dag-iff-pw0", zero_iff_dag, os.str()));
  }

  {
    std::ostringstream os;
    os << "valid=" << b.decomp_ok << " width=" << b.decomp_width << " pw=" << b.dpw;
    out.push_back(prop_flag("pw-decomp-realizable", b.decomp_ok && b.decomp_width == b.dpw,
                            os.str()));
  }

  out.push_back(b.k22_free ? prop_le("k22-free-pw-bound", b.u_pw, 2L * b.u_lnlc)
                           : prop_skip("k22-free-pw-bound"));

  if (b.n >= 1 && b.semicomplete) {
    out.push_back(prop_le("semi-cw-le-pw2", b.dlcw, b.dpw + 2));
    out.push_back(prop_le("semi-nlc-le-pw2", b.dlnlc, b.dpw + 2));
    out.push_back(prop_le("semi-nw-le-pw2", b.dnw, b.dpw + 2));
    out.push_back(prop_le("semi-lrw-le-pw2", b.dlrw, b.dpw + 2));
  } else {
    for (const char* id : {"semi-cw-le-pw2", "semi-nlc-le-pw2", "semi-nw-le-pw2",
                           "semi-lrw-le-pw2"})
      out.push_back(prop_skip(id));
  }

  if (b.n >= 1) {
    std::ostringstream os;
    os << "threshold=" << b.threshold << " nlc=" << b.dlnlc << " nw=" << b.dnw;
    out.push_back(prop_flag("threshold-iff-nlc1",
                            (b.threshold == (b.dlnlc == 1)) && (b.threshold == (b.dnw == 1)),
                            os.str()));
    if (b.threshold) {
      out.push_back(prop_le("threshold-cw-le-2", b.dlcw, 2));
      out.push_back(prop_le("threshold-pw-le-mindeg", b.dpw, min_deg));
    } else {
      out.push_back(prop_skip("threshold-cw-le-2"));
      out.push_back(prop_skip("threshold-pw-le-mindeg"));
    }
  }

  return out;
}

inline std::vector<PropertyResult> check_all_properties(const Digraph& g) {
  return check_all_properties(compute_bundle(g));
}

struct Violation {
  std::string property;
  int n = 0;
  std::vector<std::pair<int, int>> arcs;
  std::string observed;
};

struct ExtremalWitness {
  int slack = INT_MAX;
  int n = 0;
  std::vector<std::pair<int, int>> arcs;
  std::string observed;
};

struct SweepReport {
  std::string suite;
  int n = 0;
  bool up_to_iso = false;
  long instances_checked = 0;
  std::vector<Violation> violations;
  std::map<std::string, ExtremalWitness> extremal;
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }

  void record(const Digraph& g, const std::vector<PropertyResult>& results,
              const std::vector<std::string>& only = {}) {
    for (const auto& r : results) {
      if (!r.applicable) continue;
      if (!only.empty() && std::find(only.begin(), only.end(), r.id) == only.end()) continue;
      if (!r.pass) {
        violations.push_back({r.id, g.vertex_count(), g.arcs(), r.observed});
      } else if (r.slack != INT_MAX) {
        auto& w = extremal[r.id];
        if (r.slack < w.slack) w = {r.slack, g.vertex_count(), g.arcs(), r.observed};
      }
    }
  }
};

// Runs check_all_properties over every digraph on n vertices (optionally up
// to isomorphism); `only` restricts to the given property ids.
inline SweepReport sweep_properties(int n, bool up_to_iso, const std::vector<std::string>& only = {},
                                    const SolveOptions& sopts = {}, const SearchOptions& xopts = {}) {
  SweepReport report;
  report.suite = "properties";
  report.n = n;
  report.up_to_iso = up_to_iso;
  enumerate_digraphs(n, up_to_iso, [&](const Digraph& g) {
    ++report.instances_checked;
    report.record(g, check_all_properties(compute_bundle(g, sopts, xopts)), only);
  });
  return report;
}

namespace detail {

inline void table_cell(SweepReport& report, const std::string& id, const Digraph& g, long got,
                       long want) {
  ++report.instances_checked;
  if (got != want) {
    std::ostringstream os;
    os << "value " << got << ", expected " << want;
    report.violations.push_back({id, g.vertex_count(), g.arcs(), os.str()});
  }
}

inline void strictly_increasing(SweepReport& report, const std::string& id,
                                const std::vector<long>& values) {
  ++report.instances_checked;
  for (size_t i = 1; i < values.size(); ++i)
    if (values[i] <= values[i - 1]) {
      std::ostringstream os;
      os << "sequence not strictly increasing:";
      for (long v : values) os << ' ' << v;
      report.violations.push_back({id, 0, {}, os.str()});
      return;
    }
}

}  // namespace detail

// Family columns: exact values on instances up to max_n, divergent cells as
// strict growth along three witnesses. The oriented-path rank cell is only
// reported on, never asserted: no orientation of a short path attains it.
inline SweepReport check_table1(int max_n) {
  SweepReport report;
  report.suite = "table1";
  report.n = max_n;
  SolveOptions big{22};
  SearchOptions bigx{16};

  for (int n = 2; n <= max_n; ++n) {
    Digraph tt = transitive_tournament(n);
    detail::table_cell(report, "family-tt-cutw", tt, solve_exact(tt, MeasureKind::DcutwFwd).value, 0);
    detail::table_cell(report, "family-tt-pw", tt, dpw(tt).value, 0);
    detail::table_cell(report, "family-tt-cw", tt, exact_dlcw(tt).value, 2);
    detail::table_cell(report, "family-tt-nlc", tt, exact_dlnlc(tt).value, 1);
    detail::table_cell(report, "family-tt-nw", tt, solve_exact(tt, MeasureKind::Dnw).value, 1);
    detail::table_cell(report, "family-tt-lrw", tt, solve_exact(tt, MeasureKind::Dlrw).value, 1);
  }

  for (int n = 2; n <= max_n; ++n) {
    Digraph cb = bidirectional_complete(n);
    detail::table_cell(report, "family-cb-pw", cb, dpw(cb).value, n - 1);
    detail::table_cell(report, "family-cb-cutw", cb, solve_exact(cb, MeasureKind::DcutwFwd).value,
                       (n / 2) * ((n + 1) / 2));
    detail::table_cell(report, "family-cb-cw", cb, exact_dlcw(cb).value, 2);
    detail::table_cell(report, "family-cb-nlc", cb, exact_dlnlc(cb).value, 1);
    detail::table_cell(report, "family-cb-nw", cb, solve_exact(cb, MeasureKind::Dnw).value, 1);
    detail::table_cell(report, "family-cb-lrw", cb, solve_exact(cb, MeasureKind::Dlrw).value, 1);
  }

  for (int n = 1; n <= max_n; ++n) {
    Digraph bs = bioriented_star(n);
    detail::table_cell(report, "family-bs-pw", bs, dpw(bs).value, 1);
    detail::table_cell(report, "family-bs-cutw", bs, solve_exact(bs, MeasureKind::DcutwFwd).value,
                       (n + 1) / 2);
    detail::table_cell(report, "family-bs-cw", bs, exact_dlcw(bs).value, 2);
    detail::table_cell(report, "family-bs-nlc", bs, exact_dlnlc(bs).value, 1);
    detail::table_cell(report, "family-bs-nw", bs, solve_exact(bs, MeasureKind::Dnw).value, 1);
    detail::table_cell(report, "family-bs-lrw", bs, solve_exact(bs, MeasureKind::Dlrw).value, 1);
  }

  {
    // oriented paths: DAG cells are zero for every orientation, the width
    // cells are class maxima attained by some orientation
    int best_nw = 0, best_nlc = 0, best_cw = 0, best_lrw = 0;
    for (int m = 2; m <= std::min(max_n, 6); ++m) {
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << (m - 1)); ++code) {
        Digraph g = oriented_path(m, code);
        detail::table_cell(report, "family-op-cutw", g,
                           solve_exact(g, MeasureKind::DcutwFwd).value, 0);
        detail::table_cell(report, "family-op-pw", g, dpw(g).value, 0);
        best_nw = std::max(best_nw, solve_exact(g, MeasureKind::Dnw).value);
        best_lrw = std::max(best_lrw, solve_exact(g, MeasureKind::Dlrw).value);
        best_nlc = std::max(best_nlc, exact_dlnlc(g).value);
        best_cw = std::max(best_cw, exact_dlcw(g).value);
      }
    }
    if (max_n >= 3) detail::table_cell(report, "family-op-nw", Digraph(0), best_nw, 2);
    if (max_n >= 5) detail::table_cell(report, "family-op-nlc", Digraph(0), best_nlc, 3);
    if (max_n >= 3) detail::table_cell(report, "family-op-cw", Digraph(0), best_cw, 3);
    if (best_lrw < 2)
      report.notes.push_back(
          "family-op-lrw: no orientation of a path on <= " + std::to_string(std::min(max_n, 6)) +
          " vertices attains rank-width 2; observed maximum " + std::to_string(best_lrw));
  }

  {
    // DAG columns, finite cells on powers of paths, divergent cells as
    // strict growth along the powers k = 1, 2, 3
    std::vector<long> nw, nlc, cw, lrw;
    for (int k = 1; k <= 3; ++k) {
      const int n = k * (k + 1) + 2;
      Digraph p = path_power(n, k);
      detail::table_cell(report, "family-dag-cutw", p,
                         solve_exact(p, MeasureKind::DcutwFwd, big).value, 0);
      detail::table_cell(report, "family-dag-pw", p, dpw(p, big).value, 0);
      nw.push_back(solve_exact(p, MeasureKind::Dnw, big).value);
      lrw.push_back(solve_exact(p, MeasureKind::Dlrw, big).value);
      nlc.push_back(exact_dlnlc(p, bigx).value);
      cw.push_back(exact_dlcw(p, bigx).value);
    }
    detail::strictly_increasing(report, "diverge-dag-nw", nw);
    detail::strictly_increasing(report, "diverge-dag-nlc", nlc);
    detail::strictly_increasing(report, "diverge-dag-cw", cw);
    detail::strictly_increasing(report, "diverge-dag-lrw", lrw);
  }

  {
    std::vector<long> pw_seq, cutw_seq, bs_cutw;
    for (int n = 3; n <= 5; ++n) {
      pw_seq.push_back(dpw(bidirectional_complete(n)).value);
      cutw_seq.push_back(solve_exact(bidirectional_complete(n), MeasureKind::DcutwFwd).value);
    }
    for (int n : {2, 4, 6})
      bs_cutw.push_back(solve_exact(bioriented_star(n), MeasureKind::DcutwFwd).value);
    detail::strictly_increasing(report, "diverge-cb-pw", pw_seq);
    detail::strictly_increasing(report, "diverge-cb-cutw", cutw_seq);
    detail::strictly_increasing(report, "diverge-bs-cutw", bs_cutw);
  }

  return report;
}

// Each undirected width equals its directed counterpart on the complete
// biorientation; checked for all undirected graphs up to isomorphism.
inline SweepReport check_biorientation_equalities(int max_n) {
  SweepReport report;
  report.suite = "biorientation";
  report.n = max_n;
  for (int n = 1; n <= max_n; ++n) {
    enumerate_undirected_graphs(n, true, [&](const UndirectedGraph& u) {
      ++report.instances_checked;
      Digraph b = complete_biorientation(u);
      const std::pair<std::string, std::pair<long, long>> checks[] = {
          {"bio-pw", {undirected_measure(u, MeasureKind::UVsn).value, dpw(b).value}},
          {"bio-cutw",
           {undirected_measure(u, MeasureKind::UCutw).value,
            solve_exact(b, MeasureKind::DcutwFwd).value}},
          {"bio-nw",
           {undirected_measure(u, MeasureKind::UNw).value, solve_exact(b, MeasureKind::Dnw).value}},
          {"bio-lrw",
           {undirected_measure(u, MeasureKind::ULrw).value,
            solve_exact(b, MeasureKind::Dlrw).value}},
          {"bio-nlc", {exact_lnlc(u).value, exact_dlnlc(b).value}},
          {"bio-cw", {exact_lcw(u).value, exact_dlcw(b).value}},
      };
      for (const auto& [id, pair] : checks) {
        if (pair.first != pair.second) {
          std::ostringstream os;
          os << "undirected " << pair.first << " != directed " << pair.second;
          Violation v{id, n, {}, os.str()};
          for (const auto& e : u.edges()) v.arcs.push_back(e);
          report.violations.push_back(std::move(v));
        }
      }
    });
  }
  return report;
}

}  // namespace diwidth
