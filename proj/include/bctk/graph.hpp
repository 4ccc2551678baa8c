#pragma once

// Finite multigraph with a linear order on edges, given by numeric edge ids.
// Graphs are immutable values: deletion and contraction return new graphs and
// keep the surviving edge ids (and hence the edge order) of the original.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bctk {

using VertexId = int;
using EdgeId = int;

/// One edge. Endpoints are stored normalized (u <= v); a loop has u == v, so
/// the endpoint set is {u} for loops and {u, v} otherwise.
struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const { return u == v; }
  bool same_endpoints(const Edge& other) const { return u == other.u && v == other.v; }
  bool operator==(const Edge& other) const = default;
};

class Graph {
 public:
  /// Empty graph: no vertices, no edges.
  Graph() = default;

  /// Direct constructor. Edge ids must be strictly increasing and endpoints
  /// must lie in [0, n); throws std::invalid_argument otherwise. The optional
  /// note records which operation produced this graph (diagnostics only, not
  /// part of the graph's value).
  Graph(int n, std::vector<Edge> edges, std::string note = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains_edge(EdgeId e) const;
  /// Throws std::out_of_range for an unknown edge id.
  const Edge& edge(EdgeId e) const;
  /// Index of edge e within edges(). Throws std::out_of_range when absent.
  int position_of(EdgeId e) const;

  bool is_loop(EdgeId e) const { return edge(e).is_loop(); }
  /// Distinct edges with equal endpoint sets. Throws std::invalid_argument
  /// when e == f.
  bool are_parallel(EdgeId e, EdgeId f) const;
  bool has_loop() const;
  /// No loops and no parallel pair.
  bool is_simple() const;
  /// First parallel pair (e, f) with e < f in edge order, if any.
  std::optional<std::pair<EdgeId, EdgeId>> find_parallel_pair() const;

  /// Smallest edge id. Throws std::invalid_argument on an edgeless graph.
  EdgeId min_edge() const;

  const std::string& note() const { return note_; }

  /// Serialization of the graph value (vertex count plus id:endpoint list),
  /// usable as a cache key or a diagnostic instance string.
  std::string canonical_key() const;

  /// Value equality: vertex count and edge list including ids. The note is
  /// deliberately excluded.
  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::string note_;
};

/// Builds a graph from explicit endpoint sets, assigning edge ids 0..m-1 in
/// listing order. Each set must have one or two vertices in [0, n); throws
/// std::invalid_argument otherwise.
Graph build_graph(int n, const std::vector<std::vector<VertexId>>& endpoint_sets);

/// Partition of the vertices. Classes are ordered by their minimum member,
/// which is also the rule used to renumber vertices after contraction.
struct VertexPartition {
  std::vector<std::vector<VertexId>> classes;
  std::vector<int> class_of;  // vertex -> index into classes

  VertexId class_index(VertexId v) const { return class_of.at(static_cast<size_t>(v)); }
};

/// Partition of E - {e}. The representative of a class is its maximum edge id.
/// The defining relation (x ~ y iff x == y or the endpoint sets of x and y
/// have symmetric difference equal to the endpoint set of e) is transitive on
/// simple graphs but not on arbitrary multigraphs; classes here are those of
/// the equivalence generated by the relation, and stated_relation_transitive
/// records whether the closure added anything.
struct EdgePartition {
  std::vector<std::vector<EdgeId>> classes;  // each sorted; ordered by representative
  bool stated_relation_transitive = true;

  EdgeId representative_of(EdgeId x) const;
  const std::vector<EdgeId>& class_of(EdgeId x) const;
};

/// Classes of the vertex relation induced by e: v ~ w iff v == w or {v, w} is
/// the endpoint set of e. Merges the two endpoints of a non-loop e and leaves
/// everything else alone; for a loop every class is a singleton.
VertexPartition vertex_classes_under(const Graph& g, EdgeId e);

/// Classes of the edge relation induced by e on E - {e}; see EdgePartition.
EdgePartition edge_classes_under(const Graph& g, EdgeId e);

/// G - e: same vertices, e removed, all other edges untouched.
Graph delete_edge(const Graph& g, EdgeId e);

/// G contracted at a non-loop edge e. Vertices are the classes of
/// vertex_classes_under(g, e), renumbered densely by ascending minimum
/// original vertex id. Edges are the classes of edge_classes_under(g, e),
/// each carrying the class-maximum edge id, so the edge set is a subset of
/// E(G) - {e} and inherits the edge order. Contracting in a simple graph
/// yields a simple graph. Throws std::invalid_argument for a loop.
Graph contract(const Graph& g, EdgeId e);

}  // namespace bctk
