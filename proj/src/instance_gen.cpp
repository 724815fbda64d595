#include "dmsvp/instance_gen.hpp"

#include <array>
#include <limits>

#include "dmsvp/errors.hpp"

namespace dmsvp {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void require_delta(const Integer& delta, const Integer& minimum, const char* what) {
  if (delta < minimum) throw DomainError(std::string(what) + ": delta must be >= " + minimum.str());
}

Index small_delta(const Integer& delta, const char* what) {
  if (delta > 4096) throw DomainError(std::string(what) + ": delta too large to materialize");
  return delta.convert_to<Index>();
}

// Identity with the last row replaced by (delta-1, ..., delta-1, delta).
IntMatrix scaled_identity(Index size, const Integer& delta) {
  IntMatrix b = IntMatrix::Identity(size, size);
  for (Index j = 0; j + 1 < size; ++j) b(size - 1, j) = delta - 1;
  b(size - 1, size - 1) = delta;
  return b;
}

}  // namespace

GeneratorSeed GeneratorSeed::split(std::uint64_t stream) const {
  std::uint64_t state = seed ^ splitmix64(stream);
  return {splitmix64(state)};
}

SeededStream::SeededStream(GeneratorSeed seed) {
  std::uint64_t state = seed.seed;
  std::array<std::uint32_t, 8> words{};
  for (std::size_t i = 0; i < words.size(); i += 2) {
    const std::uint64_t w = splitmix64(state);
    words[i] = static_cast<std::uint32_t>(w);
    words[i + 1] = static_cast<std::uint32_t>(w >> 32);
  }
  std::seed_seq seq(words.begin(), words.end());
  engine_.seed(seq);
}

std::int64_t SeededStream::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw DomainError("uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(next());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
}

IndexList SeededStream::permutation(Index n) {
  IndexList p(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  for (Index i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(uniform(0, i))]);
  return p;
}

IntMatrix random_int_matrix(Index rows, Index cols, std::int64_t bound, SeededStream& stream) {
  if (rows < 0 || cols < 0 || bound < 0) throw DomainError("random_int_matrix: negative size or bound");
  IntMatrix a(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) a(i, j) = stream.uniform(-bound, bound);
  return a;
}

IntMatrix complete_digraph_incidence(Index k, bool ordered) {
  if (k < 1) throw DomainError("complete_digraph_incidence: k must be >= 1");
  const Index arcs = ordered ? k * (k - 1) : k * (k - 1) / 2;
  IntMatrix t = IntMatrix::Zero(arcs, k);
  Index r = 0;
  for (Index i = 0; i < k; ++i) {
    for (Index j = ordered ? 0 : i + 1; j < k; ++j) {
      if (i == j) continue;
      t(r, i) = 1;
      t(r, j) = -1;
      ++r;
    }
  }
  return t;
}

IntMatrix lower_bound_instance(const Integer& delta) {
  require_delta(delta, 2, "lower_bound_instance");
  const Index d = small_delta(delta, "lower_bound_instance");
  const IntMatrix t = complete_digraph_incidence(d, false).leftCols(d - 1);
  return t * scaled_identity(d - 1, delta);
}

SparsityInstance sparsity_instance(const Integer& delta) {
  require_delta(delta, 2, "sparsity_instance");
  const Index k = small_delta(delta, "sparsity_instance") - 1;
  const IntMatrix t = complete_digraph_incidence(k, true);
  const Index arcs = t.rows();
  const Index m = k * k + 1, n = m + k;

  SparsityInstance out;
  out.a = IntMatrix::Zero(m, n);
  out.b = IntVector::Ones(m);
  for (Index i = 0; i < k; ++i) {
    out.a(i, i) = 1;
    out.a(i, k + i) = 1;
    out.b(i) = 2;
  }
  out.a.block(k, 0, arcs, k) = t;
  out.a.block(k, 2 * k, arcs, arcs) = IntMatrix::Identity(arcs, arcs);
  for (Index j = 0; j < k; ++j) out.a(m - 1, j) = -1;
  out.a(m - 1, n - 1) = delta;
  return out;
}

IntMatrix random_delta_modular(const Integer& delta, Index rows, Index cols, GeneratorSeed seed) {
  require_delta(delta, 1, "random_delta_modular");
  if (cols < 1 || rows < cols) throw DimensionError("random_delta_modular: need rows >= cols >= 1");

  SeededStream network(seed.split(0)), unimodular(seed.split(1)), shuffle(seed.split(2));

  IntMatrix t = IntMatrix::Zero(rows, cols);
  t.topRows(cols) = IntMatrix::Identity(cols, cols);
  for (Index r = cols; r < rows; ++r) {
    const auto kind = (cols == 1) ? network.uniform(0, 1) : network.uniform(0, 2);
    const Index i = network.uniform(0, cols - 1);
    if (kind == 0) {
      t(r, i) = 1;
    } else if (kind == 1) {
      t(r, i) = -1;
    } else {
      Index j = network.uniform(0, cols - 2);
      if (j >= i) ++j;
      t(r, i) = 1;
      t(r, j) = -1;
    }
  }

  IntMatrix b = scaled_identity(cols, delta);
  if (cols >= 2) {
    for (Index op = 0; op < 3 * cols; ++op) {
      const Index i = unimodular.uniform(0, cols - 1);
      Index j = unimodular.uniform(0, cols - 2);
      if (j >= i) ++j;
      const Integer c = unimodular.uniform(-2, 2);
      b.row(i) += c * b.row(j);
    }
  }

  const IntMatrix a = t * b;
  return select_rows(a, shuffle.permutation(rows));
}

}  // namespace dmsvp
