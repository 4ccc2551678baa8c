#include "bctk/graph.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace bctk {

namespace {

// Endpoint set as a sorted array plus its size (1 for loops, 2 otherwise).
struct EndpointSet {
  std::array<VertexId, 2> elems;
  int size;
};

EndpointSet endpoint_set(const Edge& e) {
  if (e.is_loop()) return {{e.u, e.u}, 1};
  return {{e.u, e.v}, 2};
}

// Symmetric difference of two endpoint sets, as a sorted vertex list.
std::vector<VertexId> symmetric_difference(const EndpointSet& a, const EndpointSet& b) {
  std::vector<VertexId> out;
  for (int i = 0; i < a.size; ++i) {
    VertexId x = a.elems[static_cast<size_t>(i)];
    bool in_b = false;
    for (int j = 0; j < b.size; ++j) in_b = in_b || b.elems[static_cast<size_t>(j)] == x;
    if (!in_b) out.push_back(x);
  }
  for (int j = 0; j < b.size; ++j) {
    VertexId x = b.elems[static_cast<size_t>(j)];
    bool in_a = false;
    for (int i = 0; i < a.size; ++i) in_a = in_a || a.elems[static_cast<size_t>(i)] == x;
    if (!in_a) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool equals_endpoint_set(const std::vector<VertexId>& xs, const EndpointSet& s) {
  if (s.size == 1) return xs.size() == 1 && xs[0] == s.elems[0];
  return xs.size() == 2 && xs[0] == s.elems[0] && xs[1] == s.elems[1];
}

// Minimal union-find over 0..n-1.
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(a)] = b;
  }
};

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges, std::string note)
    : n_(n), edges_(std::move(edges)), note_(std::move(note)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  EdgeId prev = -1;
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.id <= prev) throw std::invalid_argument("edge ids must be strictly increasing");
    if (e.u < 0 || e.v >= n_) throw std::invalid_argument("edge endpoint out of range");
    prev = e.id;
  }
}

bool Graph::contains_edge(EdgeId e) const {
  for (const auto& edge : edges_)
    if (edge.id == e) return true;
  return false;
}

const Edge& Graph::edge(EdgeId e) const {
  return edges_[static_cast<size_t>(position_of(e))];
}

int Graph::position_of(EdgeId e) const {
  for (size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == e) return static_cast<int>(i);
  throw std::out_of_range("no edge with id " + std::to_string(e));
}

bool Graph::are_parallel(EdgeId e, EdgeId f) const {
  if (e == f) throw std::invalid_argument("are_parallel requires distinct edges");
  return edge(e).same_endpoints(edge(f));
}

bool Graph::has_loop() const {
  for (const auto& e : edges_)
    if (e.is_loop()) return true;
  return false;
}

bool Graph::is_simple() const {
  return !has_loop() && !find_parallel_pair().has_value();
}

std::optional<std::pair<EdgeId, EdgeId>> Graph::find_parallel_pair() const {
  for (size_t i = 0; i < edges_.size(); ++i)
    for (size_t j = i + 1; j < edges_.size(); ++j)
      if (edges_[i].same_endpoints(edges_[j])) return std::make_pair(edges_[i].id, edges_[j].id);
  return std::nullopt;
}

EdgeId Graph::min_edge() const {
  if (edges_.empty()) throw std::invalid_argument("min_edge of an edgeless graph");
  return edges_.front().id;  // ids are strictly increasing
}

std::string Graph::canonical_key() const {
  std::string key = "n=" + std::to_string(n_) + " edges=[";
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (i > 0) key += ",";
    key += std::to_string(edges_[i].id) + ":{" + std::to_string(edges_[i].u);
    if (!edges_[i].is_loop()) key += "," + std::to_string(edges_[i].v);
    key += "}";
  }
  key += "]";
  return key;
}

Graph build_graph(int n, const std::vector<std::vector<VertexId>>& endpoint_sets) {
  std::vector<Edge> edges;
  edges.reserve(endpoint_sets.size());
  EdgeId next = 0;
  for (const auto& set : endpoint_sets) {
    if (set.empty() || set.size() > 2)
      throw std::invalid_argument("endpoint set must have one or two vertices");
    VertexId u = set[0];
    VertexId v = set.size() == 2 ? set[1] : set[0];
    if (set.size() == 2 && u == v)
      throw std::invalid_argument("two-element endpoint set with equal vertices");
    edges.push_back(Edge{next++, u, v});
  }
  return Graph(n, std::move(edges));
}

EdgeId EdgePartition::representative_of(EdgeId x) const {
  return class_of(x).back();  // classes are sorted, max is last
}

const std::vector<EdgeId>& EdgePartition::class_of(EdgeId x) const {
  for (const auto& cls : classes)
    if (std::binary_search(cls.begin(), cls.end(), x)) return cls;
  throw std::out_of_range("edge not covered by partition");
}

VertexPartition vertex_classes_under(const Graph& g, EdgeId e) {
  const Edge& pivot = g.edge(e);
  VertexPartition part;
  part.class_of.assign(static_cast<size_t>(g.vertex_count()), -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (part.class_of[static_cast<size_t>(v)] >= 0) continue;  // already merged
    int idx = static_cast<int>(part.classes.size());
    std::vector<VertexId> cls{v};
    if (!pivot.is_loop() && v == pivot.u) cls.push_back(pivot.v);
    for (VertexId w : cls) part.class_of[static_cast<size_t>(w)] = idx;
    part.classes.push_back(std::move(cls));
  }
  return part;
}

EdgePartition edge_classes_under(const Graph& g, EdgeId e) {
  const EndpointSet pivot_set = endpoint_set(g.edge(e));
  std::vector<Edge> rest;
  for (const auto& edge : g.edges())
    if (edge.id != e) rest.push_back(edge);

  int m = static_cast<int>(rest.size());
  UnionFind uf(m);
  // The stated relation, pairwise. Classes come from its reflexive-symmetric-
  // transitive closure; on simple graphs the closure adds nothing.
  std::vector<std::pair<int, int>> related;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      auto diff = symmetric_difference(endpoint_set(rest[static_cast<size_t>(i)]),
                                       endpoint_set(rest[static_cast<size_t>(j)]));
      if (equals_endpoint_set(diff, pivot_set)) {
        related.emplace_back(i, j);
        uf.unite(i, j);
      }
    }
  }

  // Transitivity holds exactly when every same-class pair is itself related.
  std::vector<int> class_size(static_cast<size_t>(m), 0);
  for (int i = 0; i < m; ++i) class_size[static_cast<size_t>(uf.find(i))]++;
  size_t same_class_pairs = 0;
  for (int sz : class_size) same_class_pairs += static_cast<size_t>(sz) * (static_cast<size_t>(sz) - 1) / 2;
  bool transitive = same_class_pairs == related.size();

  std::vector<std::vector<EdgeId>> classes_by_root(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    classes_by_root[static_cast<size_t>(uf.find(i))].push_back(rest[static_cast<size_t>(i)].id);

  EdgePartition part;
  part.stated_relation_transitive = transitive;
  for (auto& cls : classes_by_root) {
    if (cls.empty()) continue;
    std::sort(cls.begin(), cls.end());
    part.classes.push_back(std::move(cls));
  }
  std::sort(part.classes.begin(), part.classes.end(),
            [](const auto& a, const auto& b) { return a.back() < b.back(); });
  return part;
}

Graph delete_edge(const Graph& g, EdgeId e) {
  g.edge(e);  // validate
  std::vector<Edge> edges;
  edges.reserve(g.edges().size() - 1);
  for (const auto& edge : g.edges())
    if (edge.id != e) edges.push_back(edge);
  return Graph(g.vertex_count(), std::move(edges), "delete(" + std::to_string(e) + ")");
}

Graph contract(const Graph& g, EdgeId e) {
  if (g.is_loop(e)) throw std::invalid_argument("cannot contract a loop");
  VertexPartition vp = vertex_classes_under(g, e);
  EdgePartition ep = edge_classes_under(g, e);

  std::vector<Edge> edges;
  edges.reserve(ep.classes.size());
  for (const auto& cls : ep.classes) {
    EdgeId rep = cls.back();
    const Edge& first = g.edge(cls.front());
    VertexId u = vp.class_index(first.u);
    VertexId v = vp.class_index(first.v);
    if (u > v) std::swap(u, v);
    // All members of a class map to the same endpoint classes when e is not a
    // loop; anything else is a logic error in the partition.
    for (EdgeId other : cls) {
      const Edge& oe = g.edge(other);
      VertexId ou = vp.class_index(oe.u);
      VertexId ov = vp.class_index(oe.v);
      if (ou > ov) std::swap(ou, ov);
      assert(ou == u && ov == v);
      (void)ou;
      (void)ov;
    }
    edges.push_back(Edge{rep, u, v});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  return Graph(static_cast<int>(vp.classes.size()), std::move(edges),
               "contract(" + std::to_string(e) + ")");
}

}  // namespace bctk
