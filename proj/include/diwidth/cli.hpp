#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diwidth/exact_width.hpp"
#include "diwidth/io.hpp"
#include "diwidth/solve.hpp"

namespace diwidth::cli {

// Exit codes: 0 success, 1 verification or property failure, 2 input error,
// 3 capacity exceeded.

namespace detail {

inline ParsedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open witness file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw input_error("witness file '" + path + "': " + e.what());
  }
  return j;
}

inline bool measure_from_cli_name(const std::string& name, MeasureKind& kind, bool& expression) {
  expression = false;
  if (name == "dpw" || name == "dvsn") kind = MeasureKind::DvsnIn;
  else if (name == "dcutw") kind = MeasureKind::DcutwFwd;
  else if (name == "dnw") kind = MeasureKind::Dnw;
  else if (name == "dlrw") kind = MeasureKind::Dlrw;
  else if (name == "pw" || name == "vsn") kind = MeasureKind::UVsn;
  else if (name == "cutw") kind = MeasureKind::UCutw;
  else if (name == "nw") kind = MeasureKind::UNw;
  else if (name == "lrw") kind = MeasureKind::ULrw;
  else if (name == "dlnlc" || name == "dlcw") expression = true;
  else return false;
  return true;
}

// Emits the original vertex labels when the input file did not use plain
// 0..n-1 ids; witnesses always speak in internal ids.
inline void attach_label_table(json& j, const ParsedGraph& pg) {
  for (int v = 0; v < pg.vertex_count(); ++v)
    if (pg.labels[v] != std::to_string(v)) {
      j["vertices"] = pg.labels;
      return;
    }
}

inline int cmd_compute(const std::string& measure, const std::string& file, int max_n,
                       std::ostream& out) {
  ParsedGraph pg = load_graph(file);
  MeasureKind kind{};
  bool expression = false;
  if (!measure_from_cli_name(measure, kind, expression))
    throw input_error("unknown measure '" + measure + "'");

  json j;
  j["schema"] = kSchemaTag;
  j["measure"] = measure;
  attach_label_table(j, pg);
  if (expression) {
    if (!pg.directed) throw input_error("measure '" + measure + "' needs a directed graph");
    SearchOptions xopts{max_n};
    if (measure == "dlnlc") {
      NlcSearchResult r = exact_dlnlc(pg.digraph, xopts);
      j.update(expr_to_json(r.witness));
      j["value"] = r.value;
      json order = json::array();
      for (const auto& op : r.witness.ops)
        if (op.kind != NlcOp::Kind::Relabel) order.push_back(op.vertex);
      j["layout"] = order;
    } else {
      CwSearchResult r = exact_dlcw(pg.digraph, xopts);
      j.update(expr_to_json(r.witness));
      j["value"] = r.value;
      json order = json::array();
      for (const auto& op : r.witness.ops)
        if (op.kind == CwOp::Kind::Leaf || op.kind == CwOp::Kind::Union) order.push_back(op.vertex);
      j["layout"] = order;
    }
  } else if (is_directed_kind(kind)) {
    if (!pg.directed) throw input_error("measure '" + measure + "' needs a directed graph");
    SolveOptions sopts{max_n};
    SolveResult r = solve_exact(pg.digraph, kind, sopts);
    if (kind == MeasureKind::Dlrw) {
      CaterpillarDecomposition d = layout_to_rank_decomposition(pg.digraph, r.witness);
      j.update(rankdec_to_json(d));
    } else {
      j["kind"] = "layout";
    }
    j["value"] = r.value;
    j["layout"] = layout_to_json(r.witness);
  } else {
    if (pg.directed) throw input_error("measure '" + measure + "' needs an undirected graph");
    SolveOptions sopts{max_n};
    SolveResult r = undirected_measure(pg.graph, kind, sopts);
    if (kind == MeasureKind::ULrw) {
      CaterpillarDecomposition d{r.witness.order, 0};
      d.width = caterpillar_width(pg.graph, d.leaf_order);
      j.update(rankdec_to_json(d));
    } else {
      j["kind"] = "layout";
    }
    j["value"] = r.value;
    j["layout"] = layout_to_json(r.witness);
  }
  out << j.dump(2) << '\n';
  return 0;
}

inline int cmd_generate(const std::string& family, const std::vector<std::string>& params,
                        std::ostream& out) {
  Family f;
  if (!family_from_string(family, f)) throw input_error("unknown family '" + family + "'");
  auto need = [&](size_t count) {
    if (params.size() != count)
      throw input_error("family '" + family + "' takes " + std::to_string(count) + " parameter(s)");
  };
  auto as_int = [&](const std::string& s) {
    long v;
    if (!diwidth::detail::parse_int(s, v)) throw input_error("bad integer parameter '" + s + "'");
    return static_cast<int>(v);
  };
  FamilySpec spec;
  spec.family = f;
  switch (f) {
    case Family::PathPower:
    case Family::BiorientedCompleteBipartite:
      need(2);
      spec.n = as_int(params[0]);
      spec.k = as_int(params[1]);
      break;
    case Family::OrientedPath: {
      need(2);
      spec.n = as_int(params[0]);
      const std::string& bits = params[1];
      if (static_cast<int>(bits.size()) != std::max(0, spec.n - 1))
        throw input_error("orientation must have one bit per path edge");
      for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') throw input_error("orientation bits must be 0 or 1");
        if (bits[i] == '1') spec.orientation |= std::uint64_t{1} << i;
      }
      break;
    }
    default:
      need(1);
      spec.n = as_int(params[0]);
      break;
  }
  write_digraph(out, generate(spec));
  return 0;
}

inline int cmd_recognize(const std::string& cls, const std::string& file, bool oriented,
                         std::ostream& out) {
  if (cls != "threshold") throw input_error("unknown class '" + cls + "'");
  ParsedGraph pg = load_graph(file);
  if (!pg.directed) throw input_error("threshold recognition needs a directed graph");
  ThresholdRecognition r = recognize_threshold(pg.digraph, oriented);
  json j{{"schema", kSchemaTag}, {"class", oriented ? "oriented-threshold" : "threshold"},
         {"is_threshold", r.is_threshold}};
  attach_label_table(j, pg);
  if (r.is_threshold) {
    j["sequence"] = threshold_to_json(r.sequence);
  } else {
    json residual = json::array();
    for (int v : bits(r.residual)) residual.push_back(v);
    j["residual"] = residual;
  }
  out << j.dump(2) << '\n';
  return r.is_threshold ? 0 : 1;
}

inline int fail_verification(std::ostream& out, std::ostream& err, const std::string& reason) {
  out << json{{"schema", kSchemaTag}, {"verified", false}, {"reason", reason}}.dump(2) << '\n';
  err << "verification failed: " << reason << '\n';
  return 1;
}

inline int pass_verification(std::ostream& out) {
  out << json{{"schema", kSchemaTag}, {"verified", true}}.dump(2) << '\n';
  return 0;
}

inline int cmd_witness_verify(const std::string& kind, const std::string& graph_file,
                              const std::string& witness_file, std::ostream& out,
                              std::ostream& err) {
  ParsedGraph pg = load_graph(graph_file);
  json j = load_json(witness_file);

  if (kind == "layout") {
    std::string measure = j.value("measure", "");
    MeasureKind mk{};
    bool expression = false;
    if (!measure_from_cli_name(measure, mk, expression) || expression)
      throw input_error("layout witness needs a layout measure name");
    Layout l = layout_from_json(j.at("layout"));
    int value = j.at("value").get<int>();
    if (is_directed_kind(mk) != pg.directed)
      throw input_error("measure '" + measure + "' does not match the graph kind");
    int cost = pg.directed ? measure_cost(pg.digraph, mk, l) : measure_cost(pg.graph, mk, l);
    if (cost != value)
      return fail_verification(out, err, "layout attains " + std::to_string(cost) + ", witness claims " +
                                        std::to_string(value));
    return pass_verification(out);
  }

  if (kind == "dpd") {
    if (!pg.directed) throw input_error("dpd witness needs a directed graph");
    DirectedPathDecomposition d = dpd_from_json(j);
    ValidationReport r = validate(pg.digraph, d);
    if (!r.ok) return fail_verification(out, err, r.message);
    if (j.contains("width") && width(d) != j["width"].get<int>())
      return fail_verification(out, err, "width " + std::to_string(width(d)) + ", witness claims " +
                                        std::to_string(j["width"].get<int>()));
    return pass_verification(out);
  }

  if (kind == "expr") {
    std::string ek = expr_kind(j);
    int claimed = j.contains("value") ? j["value"].get<int>() : j.value("k", 0);
    if (ek == "nlc" || ek == "cw") {
      if (!pg.directed) throw input_error("directed expression against undirected graph");
      Digraph got = ek == "nlc" ? eval_nlc(nlc_from_json(j)).digraph
                                : eval_cw(cw_from_json(j)).digraph;
      if (got != pg.digraph) return fail_verification(out, err, "expression evaluates to a different digraph");
      int used = ek == "nlc" ? labels_used(nlc_from_json(j)) : labels_used(cw_from_json(j));
      if (used > claimed)
        return fail_verification(out, err, "expression uses " + std::to_string(used) +
                                          " labels, witness claims " + std::to_string(claimed));
      return pass_verification(out);
    }
    if (ek == "nlc-u" || ek == "cw-u") {
      if (pg.directed) throw input_error("undirected expression against directed graph");
      UndirectedGraph got =
          ek == "nlc-u" ? eval_nlc_u(nlc_u_from_json(j)).graph : eval_cw_u(cw_u_from_json(j)).graph;
      if (got != pg.graph) return fail_verification(out, err, "expression evaluates to a different graph");
      return pass_verification(out);
    }
    throw input_error("unknown expression kind '" + ek + "'");
  }

  if (kind == "threshold") {
    if (!pg.directed) throw input_error("threshold witness needs a directed graph");
    Digraph got = eval_threshold(threshold_from_json(j));
    if (got != pg.digraph)
      return fail_verification(out, err, "build sequence evaluates to a different digraph");
    return pass_verification(out);
  }

  if (kind == "rankdec") {
    CaterpillarDecomposition d = rankdec_from_json(j);
    int w = pg.directed ? caterpillar_width(pg.digraph, d.leaf_order)
                        : caterpillar_width(pg.graph, d.leaf_order);
    if (w != d.width)
      return fail_verification(out, err, "caterpillar width " + std::to_string(w) + ", witness claims " +
                                        std::to_string(d.width));
    if (j.contains("value") && j["value"].get<int>() != w)
      return fail_verification(out, err, "width disagrees with the claimed value");
    return pass_verification(out);
  }

  throw input_error("unknown witness kind '" + kind + "'");
}

inline int cmd_convert(const std::string& conversion, const std::string& graph_file,
                       const std::string& witness_file, std::ostream& out) {
  auto need_graph = [&]() -> ParsedGraph {
    if (graph_file.empty())
      throw input_error("conversion '" + conversion + "' needs a graph file argument");
    return load_graph(graph_file);
  };
  json j = load_json(witness_file);
  json result;

  if (conversion == "nlc-to-cw") {
    result = expr_to_json(nlc_to_cw(nlc_from_json(j)));
  } else if (conversion == "cw-to-nlc") {
    result = expr_to_json(cw_to_nlc(cw_from_json(j)));
  } else if (conversion == "drop-directions") {
    std::string ek = expr_kind(j);
    if (ek == "nlc") result = expr_to_json(drop_directions(nlc_from_json(j)));
    else if (ek == "cw") result = expr_to_json(drop_directions(cw_from_json(j)));
    else throw input_error("drop-directions expects a directed expression");
  } else if (conversion == "biorient") {
    std::string ek = expr_kind(j);
    if (ek == "nlc-u") result = expr_to_json(biorient(nlc_u_from_json(j)));
    else if (ek == "cw-u") result = expr_to_json(biorient(cw_u_from_json(j)));
    else throw input_error("biorient expects an undirected expression");
  } else if (conversion == "layout-to-dpd") {
    ParsedGraph pg = need_graph();
    if (!pg.directed) throw input_error("layout-to-dpd needs a directed graph");
    result = dpd_to_json(from_layout(pg.digraph, layout_from_json(j.at("layout"))));
  } else if (conversion == "layout-to-rankdec") {
    ParsedGraph pg = need_graph();
    if (!pg.directed) throw input_error("layout-to-rankdec needs a directed graph");
    result = rankdec_to_json(
        layout_to_rank_decomposition(pg.digraph, layout_from_json(j.at("layout"))));
  } else if (conversion == "threshold-to-nlc1") {
    result = expr_to_json(threshold_to_nlc1(threshold_from_json(j)));
  } else if (conversion == "nlc1-to-threshold") {
    result = threshold_to_json(nlc1_to_threshold(nlc_from_json(j)));
  } else {
    throw input_error("unknown conversion '" + conversion + "'");
  }
  out << result.dump(2) << '\n';
  return 0;
}

inline int cmd_sweep(const std::string& suite, int n, bool iso, const std::string& properties,
                     std::ostream& out, std::ostream& err) {
  std::vector<std::string> only;
  if (!properties.empty()) {
    std::istringstream ss(properties);
    std::string id;
    while (std::getline(ss, id, ','))
      if (!id.empty()) only.push_back(id);
  }
  SweepReport report;
  if (suite == "properties") report = sweep_properties(n, iso, only);
  else if (suite == "table1") report = check_table1(n);
  else if (suite == "bio") report = check_biorientation_equalities(n);
  else throw input_error("unknown suite '" + suite + "'");
  out << sweep_report_to_json(report).dump(2) << '\n';
  if (!report.ok())
    err << report.violations.size() << " property violation(s), see the report\n";
  return report.ok() ? 0 : 1;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact linear width parameters for directed graphs"};
  app.require_subcommand(1);

  std::string measure, file, family, cls, kind, graph_file, witness_file, conversion;
  std::string properties, suite = "properties";
  std::vector<std::string> params;
  int max_n = 20;
  int sweep_n = 4;
  bool iso = false, oriented = false;

  CLI::App* compute = app.add_subcommand("compute", "compute a width measure with witness");
  compute->add_option("measure", measure)->required();
  compute->add_option("file", file)->required();
  compute->add_option("--max-n", max_n, "solver capacity limit");

  CLI::App* generate = app.add_subcommand("generate", "emit a family instance as graph text");
  generate->add_option("family", family)->required();
  generate->add_option("params", params);

  CLI::App* recognize = app.add_subcommand("recognize", "class membership with witness");
  recognize->add_option("class", cls)->required();
  recognize->add_option("file", file)->required();
  recognize->add_flag("--oriented", oriented, "forbid bidirectional join steps");

  CLI::App* verify = app.add_subcommand("witness-verify", "re-check an emitted witness");
  verify->add_option("kind", kind)->required();
  verify->add_option("graph", graph_file)->required();
  verify->add_option("witness", witness_file)->required();

  CLI::App* convert = app.add_subcommand("convert", "convert between witness representations");
  convert->add_option("conversion", conversion)->required();
  convert->add_option("files", params, "optional graph file, then the witness file")->expected(1, 2);

  CLI::App* sweep = app.add_subcommand("sweep", "run a property sweep, reporting violations");
  sweep->add_option("--n", sweep_n, "instance size (max instance size for table1/bio)");
  sweep->add_flag("--iso", iso, "one representative per isomorphism class");
  sweep->add_option("--properties", properties, "comma-separated property ids");
  sweep->add_option("--suite", suite, "properties, table1 or bio");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
    if (compute->parsed()) return detail::cmd_compute(measure, file, max_n, out);
    if (generate->parsed()) return detail::cmd_generate(family, params, out);
    if (recognize->parsed()) return detail::cmd_recognize(cls, file, oriented, out);
    if (verify->parsed()) return detail::cmd_witness_verify(kind, graph_file, witness_file, out, err);
    if (convert->parsed()) {
      if (params.empty()) throw input_error("convert needs a witness file");
      std::string gf = params.size() == 2 ? params[0] : "";
      return detail::cmd_convert(conversion, gf, params.back(), out);
    }
    if (sweep->parsed()) return detail::cmd_sweep(suite, sweep_n, iso, properties, out, err);
    err << "no command given\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const capacity_error& e) {
    err << "capacity error: " << e.what() << '\n';
    return 3;
  } catch (const input_error& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace diwidth::cli
