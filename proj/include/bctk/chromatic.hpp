#pragma once

// Exact chromatic polynomials over 64-bit integers. The main computation is
// the deletion-contraction recursion; count_colorings_bruteforce and
// oracle_polynomial form an independent enumeration-plus-interpolation route
// used to cross-check it.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "bctk/graph.hpp"

namespace bctk {

/// Dense polynomial in the number of colors, attached to a vertex count n.
/// Coefficients are exact 64-bit integers for powers 0..n (always exactly
/// n + 1 of them). For a loop-free graph the polynomial is monic of degree n
/// and its coefficients alternate in sign; a graph with a loop has the zero
/// polynomial. All arithmetic is overflow-checked and throws OverflowError
/// rather than wrapping.
class Polynomial {
 public:
  static Polynomial zero(int vertex_count);
  /// The polynomial of the edgeless graph on n vertices: one monomial of
  /// degree n.
  static Polynomial power(int vertex_count);
  /// Coefficients listed from power 0 upward; must have vertex_count + 1
  /// entries.
  static Polynomial from_dense(int vertex_count, std::vector<int64_t> coefficients);

  int vertex_count() const { return n_; }
  const std::vector<int64_t>& dense() const { return dense_; }
  int64_t coefficient(int power) const { return dense_.at(static_cast<size_t>(power)); }

  /// Signed coefficient view: a_k is (-1)^k times the coefficient of the
  /// power n - k, for k = 0..n. Nonnegative on loop-free graphs, with
  /// a_0 = 1; identically zero when the graph has a loop.
  int64_t ak(int k) const;
  std::vector<int64_t> ak_view() const;

  bool is_zero() const;

  /// Exact evaluation by Horner's rule at a nonnegative integer.
  int64_t evaluate(int64_t lambda) const;

  /// this - other, aligned by power. other may belong to a graph with fewer
  /// vertices (as after a contraction); its vertex count must not exceed
  /// this one's.
  Polynomial minus(const Polynomial& other) const;

  bool operator==(const Polynomial& other) const = default;

  /// Rendering such as "λ^3 - 3λ^2 + 2λ"; with ascii set, "L^3 - 3L^2 + 2L".
  std::string to_string(bool ascii = false) const;

 private:
  Polynomial(int n, std::vector<int64_t> dense) : n_(n), dense_(std::move(dense)) {}

  int n_ = 0;
  std::vector<int64_t> dense_{0};
};

/// Optional memo for chromatic_polynomial, keyed on Graph::canonical_key().
using PolynomialCache = std::unordered_map<std::string, Polynomial>;

/// Chromatic polynomial by deletion and contraction. A graph with a loop has
/// the zero polynomial; an edgeless graph has the pure power; a graph with
/// parallel edges loses the larger edge of a parallel pair (same polynomial);
/// otherwise the recursion branches on the minimum edge e as
/// P(G) = P(G - e) - P(G contracted at e). The zero-vertex graph has the
/// constant polynomial 1.
Polynomial chromatic_polynomial(const Graph& g);
Polynomial chromatic_polynomial(const Graph& g, PolynomialCache& cache);

/// Number of maps from vertices to {1..lambda} with no monochromatic edge,
/// by direct enumeration with pruning (a loop forces the count to zero).
/// Guard: lambda^n must not exceed 10^8, else GuardError.
int64_t count_colorings_bruteforce(const Graph& g, int64_t lambda);

/// Interpolates the coloring counts at lambda = 0..n into the unique
/// polynomial of degree at most n, via Newton forward differences carried out
/// in exact integer arithmetic. Independent of the deletion-contraction
/// route. Guards of count_colorings_bruteforce propagate.
Polynomial oracle_polynomial(const Graph& g);

}  // namespace bctk
