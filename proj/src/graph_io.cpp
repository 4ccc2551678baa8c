#include "bctk/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "bctk/errors.hpp"

namespace bctk {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

int parse_int(const std::string& token, int line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line, std::string("expected an integer ") + what + ", got '" + token + "'");
  return value;
}

}  // namespace

Graph parse_graph_file(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;  // -1 until the header is seen
  std::vector<Edge> edges;
  EdgeId next_id = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokens_of(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (tokens.front() == "n") {
      if (n >= 0) throw ParseError(line_no, "duplicate 'n' header");
      if (tokens.size() != 2) throw ParseError(line_no, "'n' line needs exactly one count");
      n = parse_int(tokens[1], line_no, "vertex count");
      if (n < 0) throw ParseError(line_no, "vertex count must be nonnegative");
      continue;
    }
    if (tokens.front() == "e") {
      if (n < 0) throw ParseError(line_no, "edge line before the 'n' header");
      if (tokens.size() != 3) throw ParseError(line_no, "'e' line needs exactly two endpoints");
      const int u = parse_int(tokens[1], line_no, "endpoint");
      const int v = parse_int(tokens[2], line_no, "endpoint");
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError(line_no, "endpoint outside 0.." + std::to_string(n - 1));
      edges.push_back(Edge{next_id++, u, v});
      continue;
    }
    throw ParseError(line_no, "unknown directive '" + tokens.front() + "'");
  }
  if (n < 0) throw ParseError(line_no, "missing 'n' header");
  return Graph(n, std::move(edges));
}

Graph parse_graph_file(const std::string& text) {
  std::istringstream in(text);
  return parse_graph_file(in);
}

Graph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  return parse_graph_file(in);
}

std::string render_graph_file(const Graph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges())
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

namespace {

Json edge_sets_json(const std::vector<EdgeSet>& sets) {
  Json out = Json::array();
  for (const EdgeSet& s : sets) out.push_back(s);
  return out;
}

}  // namespace

Json poly_report(const Graph& g, const Polynomial& p) {
  Json out;
  out["n"] = g.vertex_count();
  out["m"] = g.edge_count();
  out["coefficients_dense"] = p.dense();
  out["coefficients_ak"] = p.ak_view();
  return out;
}

Json bc_report(const Graph& g, const BrokenCircuitReport& report) {
  Json out;
  out["n"] = g.vertex_count();
  out["m"] = g.edge_count();
  out["broken_circuits"] = edge_sets_json(report.broken_circuits);
  out["generating_cycles"] = edge_sets_json(report.generating_cycle);
  return out;
}

Json nbc_report(const Graph& g, int k, int64_t count, const std::vector<EdgeSet>* subsets) {
  Json out;
  out["n"] = g.vertex_count();
  out["m"] = g.edge_count();
  out["k"] = k;
  out["count"] = count;
  if (subsets) out["subsets"] = edge_sets_json(*subsets);
  return out;
}

Json whitney_json(const WhitneyReport& report) {
  Json out;
  out["pass"] = report.pass;
  Json rows = Json::array();
  for (const WhitneyRow& row : report.per_k) {
    Json r;
    r["k"] = row.k;
    r["a_k"] = row.a_k;
    r["nbc"] = row.nbc;
    r["equal"] = row.equal;
    rows.push_back(std::move(r));
  }
  out["per_k"] = std::move(rows);
  return out;
}

Json lemma_entries_json(const std::vector<CheckEntry>& entries) {
  Json out = Json::array();
  for (const CheckEntry& entry : entries) {
    Json row;
    row["lemma"] = entry.check;
    row["passed"] = entry.passed;
    row["skipped"] = entry.skipped;
    if (entry.counterexample) {
      Json ce;
      ce["witness"] = entry.counterexample->witness;
      ce["detail"] = entry.counterexample->detail;
      row["counterexample"] = std::move(ce);
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json verify_report(const Graph& g, const Polynomial& p, const BrokenCircuitReport& circuits,
                   const WhitneyReport& whitney, const std::vector<CheckEntry>& entries) {
  Json out;
  out["n"] = g.vertex_count();
  out["m"] = g.edge_count();
  out["coefficients_dense"] = p.dense();
  out["coefficients_ak"] = p.ak_view();
  out["broken_circuits"] = edge_sets_json(circuits.broken_circuits);
  Json counts = Json::array();
  for (const WhitneyRow& row : whitney.per_k) counts.push_back(row.nbc);
  out["nbc_counts"] = std::move(counts);
  out["whitney"] = whitney_json(whitney);
  out["lemmas"] = lemma_entries_json(entries);
  return out;
}

Json fuzz_report(const FuzzConfig& config, const RunSummary& summary) {
  Json out;
  Json cfg;
  cfg["n_max"] = config.n_max;
  cfg["m_max"] = config.m_max;
  cfg["trials"] = config.trials;
  cfg["seed"] = config.seed;
  cfg["allow_loops"] = config.allow_loops;
  cfg["allow_parallel"] = config.allow_parallel;
  out["config"] = std::move(cfg);
  out["graphs"] = summary.graphs;
  out["failures"] = summary.total_failures();
  Json rows = Json::array();
  for (const RunSummary::Row& row : summary.rows) {
    Json r;
    r["check"] = row.check;
    r["pass"] = row.pass;
    r["fail"] = row.fail;
    r["skipped"] = row.skipped;
    rows.push_back(std::move(r));
  }
  out["checks"] = std::move(rows);
  Json fails = Json::array();
  for (const RunSummary::Failure& f : summary.failures) {
    Json r;
    r["check"] = f.check;
    r["instance"] = f.instance;
    r["minimized"] = f.minimized_instance;
    r["detail"] = f.detail;
    fails.push_back(std::move(r));
  }
  out["failure_details"] = std::move(fails);
  return out;
}

}  // namespace bctk
