#include "gpos/interval_oracle.hpp"

#include <cstdint>
#include <stdexcept>

namespace gpos {

IntervalOracle IntervalOracle::build(const Graph& g, const DistanceMatrix& d, Execution exec) {
  if (d.order() != g.order()) throw std::invalid_argument("distance matrix does not match graph order");
  const std::size_t n = g.order();
  IntervalOracle o(n);

  auto fill_row = [&](Vertex u) {
    const auto du = d.row(u);
    for (Vertex v = u + 1; v < n; ++v) {
      const auto dv = d.row(v);
      const Distance target = du[v];
      if (target < 2) continue;
      Word* out = o.bits_.data() + o.pair_index(u, v) * o.stride_;
      for (Vertex w = 0; w < n; ++w)
        if (du[w] + dv[w] == target && w != u && w != v) out[w / kWordBits] |= Word{1} << (w % kWordBits);
    }
  };

  const auto rows = static_cast<std::int64_t>(n);
  if (exec == Execution::serial) {
    for (std::int64_t u = 0; u < rows; ++u) fill_row(static_cast<Vertex>(u));
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t u = 0; u < rows; ++u) fill_row(static_cast<Vertex>(u));
  }
  return o;
}

VertexSet IntervalOracle::interval_set(Vertex u, Vertex v) const {
  VertexSet s(n_);
  const auto src = interval(u, v);
  std::copy(src.begin(), src.end(), s.words().begin());
  return s;
}

std::vector<std::size_t> IntervalOracle::membership_counts() const {
  std::vector<std::size_t> counts(n_, 0);
  for (std::size_t p = 0; p < pair_count(); ++p)
    for_each_bit(std::span<const Word>(bits_).subspan(p * stride_, stride_), [&](Vertex w) { ++counts[w]; });
  return counts;
}

std::size_t count_violations(const IntervalOracle& o, const VertexSet& s) {
  const auto m = s.members();
  std::size_t f = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (s.intersects(o.interval(m[i], m[j]))) ++f;
  return f;
}

bool is_general_position(const IntervalOracle& o, const VertexSet& s) {
  const auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (s.intersects(o.interval(m[i], m[j]))) return false;
  return true;
}

std::vector<Violation> find_violations(const IntervalOracle& o, const VertexSet& s) {
  const auto m = s.members();
  std::vector<Violation> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const auto iv = o.interval(m[i], m[j]);
      for (std::size_t w = 0; w < iv.size(); ++w)
        if (const Word hit = iv[w] & s.words()[w]; hit != 0) {
          out.push_back({m[i], m[j], static_cast<Vertex>(w * kWordBits + std::countr_zero(hit))});
          break;
        }
    }
  return out;
}

}  // namespace gpos
