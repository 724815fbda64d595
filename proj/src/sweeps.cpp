#include "dmsvp/sweeps.hpp"

#include <algorithm>

#include "dmsvp/exact_linalg.hpp"
#include "dmsvp/matrix_io.hpp"
#include "dmsvp/polyhedra.hpp"

namespace dmsvp {

namespace {

std::string describe(const IndexList& v) {
  std::string out;
  for (Index x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

}  // namespace

IndexList random_subset(Index n, Index k, SeededStream& stream) {
  IndexList perm = stream.permutation(n);
  perm.resize(static_cast<std::size_t>(k));
  std::sort(perm.begin(), perm.end());
  return perm;
}

SweepReport lemma1_sweep(std::uint64_t trials, GeneratorSeed seed) {
  SweepReport report;
  for (std::uint64_t t = 0; t < trials; ++t) {
    SeededStream stream(seed.split(t));
    const Index n = stream.uniform(1, 4);
    const Index m = stream.uniform(n, 6);
    IntMatrix a;
    do {
      a = random_int_matrix(m, n, 9, stream);
    } while (rank(a) < n);
    IndexList s;
    do {
      s = random_subset(m, n, stream);
    } while (det(select_rows(a, s)) == 0);
    // B's rows in random order so positions and row indices decouple.
    IndexList order = stream.permutation(n);
    IndexList s_perm;
    for (Index k : order) s_perm.push_back(s[static_cast<std::size_t>(k)]);

    const Index size = stream.uniform(1, n);
    const IndexList i_rows = random_subset(m, size, stream);
    const IndexList j_cols = random_subset(n, size, stream);
    ++report.trials;
    const RatioSides sides = subdet_ratio_sides(a, s_perm, i_rows, j_cols);
    if (sides.lhs != sides.rhs) {
      if (report.failures++ == 0)
        report.first_failure = "trial " + std::to_string(t) + ": S = {" + describe(s_perm) + "}, I = {" +
                               describe(i_rows) + "}, J = {" + describe(j_cols) + "}, lhs " + sides.lhs.str() +
                               " != rhs " + sides.rhs.str() + "\n" + format_matrix(a);
    }
  }
  return report;
}

SweepReport lemma2_sweep(std::uint64_t trials, GeneratorSeed seed) {
  SweepReport report;
  for (std::uint64_t t = 0; t < trials; ++t) {
    SeededStream stream(seed.split(t));
    const Index m = stream.uniform(1, 3);
    const Index n = stream.uniform(m, 6);
    IntMatrix a;
    do {
      a = random_int_matrix(m, n, 6, stream);
    } while (rank(a) < m);
    ++report.trials;
    if (!verify_lemma2(a)) {
      if (report.failures++ == 0) report.first_failure = "trial " + std::to_string(t) + "\n" + format_matrix(a);
    }
  }
  return report;
}

}  // namespace dmsvp
