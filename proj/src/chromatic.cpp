#include "bctk/chromatic.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "bctk/errors.hpp"

namespace bctk {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflowed");
  return r;
}

int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer subtraction overflowed");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflowed");
  return r;
}

constexpr int64_t kBruteforceGuard = 100'000'000;  // max lambda^n to enumerate

}  // namespace

Polynomial Polynomial::zero(int vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  return Polynomial(vertex_count, std::vector<int64_t>(static_cast<size_t>(vertex_count) + 1, 0));
}

Polynomial Polynomial::power(int vertex_count) {
  Polynomial p = zero(vertex_count);
  p.dense_.back() = 1;
  return p;
}

Polynomial Polynomial::from_dense(int vertex_count, std::vector<int64_t> coefficients) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  if (coefficients.size() != static_cast<size_t>(vertex_count) + 1)
    throw std::invalid_argument("expected exactly vertex_count + 1 coefficients");
  return Polynomial(vertex_count, std::move(coefficients));
}

int64_t Polynomial::ak(int k) const {
  if (k < 0 || k > n_) throw std::out_of_range("a_k index outside 0..n");
  int64_t c = dense_[static_cast<size_t>(n_ - k)];
  return k % 2 == 0 ? c : checked_sub(0, c);
}

std::vector<int64_t> Polynomial::ak_view() const {
  std::vector<int64_t> out(static_cast<size_t>(n_) + 1);
  for (int k = 0; k <= n_; ++k) out[static_cast<size_t>(k)] = ak(k);
  return out;
}

bool Polynomial::is_zero() const {
  return std::all_of(dense_.begin(), dense_.end(), [](int64_t c) { return c == 0; });
}

int64_t Polynomial::evaluate(int64_t lambda) const {
  if (lambda < 0) throw std::invalid_argument("evaluation point must be nonnegative");
  int64_t acc = 0;
  for (size_t i = dense_.size(); i-- > 0;) acc = checked_add(checked_mul(acc, lambda), dense_[i]);
  return acc;
}

Polynomial Polynomial::minus(const Polynomial& other) const {
  if (other.n_ > n_)
    throw std::invalid_argument("subtrahend has more vertices than minuend");
  Polynomial out = *this;
  for (size_t i = 0; i < other.dense_.size(); ++i)
    out.dense_[i] = checked_sub(out.dense_[i], other.dense_[i]);
  return out;
}

std::string Polynomial::to_string(bool ascii) const {
  const std::string var = ascii ? "L" : "λ";
  std::string out;
  for (int p = n_; p >= 0; --p) {
    int64_t c = dense_[static_cast<size_t>(p)];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    int64_t mag = c < 0 ? -c : c;  // safe: coefficients of -2^63 never render
    if (mag != 1 || p == 0) out += std::to_string(mag);
    if (p >= 1) out += var;
    if (p >= 2) out += "^" + std::to_string(p);
  }
  return out.empty() ? "0" : out;
}

namespace {

Polynomial chromatic_impl(const Graph& g, PolynomialCache* cache) {
  std::string key;
  if (cache) {
    key = g.canonical_key();
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
  }

  Polynomial result = [&] {
    if (g.has_loop()) return Polynomial::zero(g.vertex_count());
    if (g.edge_count() == 0) return Polynomial::power(g.vertex_count());
    if (auto pair = g.find_parallel_pair())
      return chromatic_impl(delete_edge(g, pair->second), cache);
    EdgeId e = g.min_edge();
    return chromatic_impl(delete_edge(g, e), cache)
        .minus(chromatic_impl(contract(g, e), cache));
  }();

  if (cache) cache->emplace(std::move(key), result);
  return result;
}

}  // namespace

Polynomial chromatic_polynomial(const Graph& g) { return chromatic_impl(g, nullptr); }

Polynomial chromatic_polynomial(const Graph& g, PolynomialCache& cache) {
  return chromatic_impl(g, &cache);
}

namespace {

// Enumerates colorings vertex by vertex; constraints[w] lists the vertices
// u <= w that must differ from w (a loop shows up as u == w, which no color
// satisfies).
int64_t count_colorings_rec(int vertex, int n, int64_t lambda,
                            const std::vector<std::vector<VertexId>>& constraints,
                            std::vector<int64_t>& color) {
  if (vertex == n) return 1;
  int64_t total = 0;
  for (int64_t c = 0; c < lambda; ++c) {
    bool ok = true;
    for (VertexId u : constraints[static_cast<size_t>(vertex)]) {
      int64_t other = u == vertex ? c : color[static_cast<size_t>(u)];
      if (other == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[static_cast<size_t>(vertex)] = c;
    total += count_colorings_rec(vertex + 1, n, lambda, constraints, color);
  }
  return total;
}

}  // namespace

int64_t count_colorings_bruteforce(const Graph& g, int64_t lambda) {
  if (lambda < 0) throw std::invalid_argument("color count must be nonnegative");
  // Guard on the raw search space lambda^n, ignoring pruning.
  int64_t space = 1;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (lambda == 0) {
      space = 0;
      break;
    }
    if (space > kBruteforceGuard / lambda) {
      space = kBruteforceGuard + 1;
      break;
    }
    space *= lambda;
  }
  if (space > kBruteforceGuard)
    throw GuardError("coloring enumeration exceeds the size guard");

  int n = g.vertex_count();
  std::vector<std::vector<VertexId>> constraints(static_cast<size_t>(n));
  for (const auto& e : g.edges()) constraints[static_cast<size_t>(e.v)].push_back(e.u);
  std::vector<int64_t> color(static_cast<size_t>(n), -1);
  return count_colorings_rec(0, n, lambda, constraints, color);
}

Polynomial oracle_polynomial(const Graph& g) {
  const int n = g.vertex_count();

  // Forward differences of the counts at lambda = 0..n.
  std::vector<__int128> diff(static_cast<size_t>(n) + 1);
  for (int lambda = 0; lambda <= n; ++lambda)
    diff[static_cast<size_t>(lambda)] = count_colorings_bruteforce(g, lambda);
  for (int j = 1; j <= n; ++j)
    for (int i = n; i >= j; --i)
      diff[static_cast<size_t>(i)] -= diff[static_cast<size_t>(i - 1)];

  // n! * P via the Newton forward form: the falling factorial ff_j(x) =
  // x(x-1)...(x-j+1) has integer coefficients, and
  // n! * P = sum_j diff[j] * (n!/j!) * ff_j. The final division by n! is
  // exact because P itself has integer coefficients.
  __int128 n_factorial = 1;
  for (int j = 2; j <= n; ++j) n_factorial *= j;

  std::vector<__int128> acc(static_cast<size_t>(n) + 1, 0);
  std::vector<__int128> ff{1};
  __int128 scale = n_factorial;  // n!/j! for the current j
  for (int j = 0; j <= n; ++j) {
    for (size_t k = 0; k < ff.size(); ++k) acc[k] += diff[static_cast<size_t>(j)] * scale * ff[k];
    if (j == n) break;
    scale /= j + 1;
    // ff *= (x - j)
    std::vector<__int128> next(ff.size() + 1, 0);
    for (size_t k = 0; k < ff.size(); ++k) {
      next[k + 1] += ff[k];
      next[k] -= ff[k] * j;
    }
    ff = std::move(next);
  }

  std::vector<int64_t> dense(static_cast<size_t>(n) + 1);
  for (size_t k = 0; k < acc.size(); ++k) {
    if (acc[k] % n_factorial != 0)
      throw std::logic_error("interpolation produced a non-integer coefficient");
    __int128 c = acc[k] / n_factorial;
    if (c > std::numeric_limits<int64_t>::max() || c < std::numeric_limits<int64_t>::min())
      throw OverflowError("interpolated coefficient exceeds 64 bits");
    dense[k] = static_cast<int64_t>(c);
  }
  return Polynomial::from_dense(n, std::move(dense));
}

}  // namespace bctk
