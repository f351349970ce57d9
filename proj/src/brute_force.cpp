#include "gpos/exact.hpp"

#include <stdexcept>
#include <string>

namespace gpos {

namespace {

struct Enumeration {
  const IntervalOracle& o;
  VertexSet current;
  std::vector<Vertex> members;
  ExactResult result;

  bool can_add(Vertex w) const {
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (current.intersects(o.interval(members[i], w))) return false;
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (o.in_interval(members[i], members[j], w)) return false;
    }
    return true;
  }

  void extend(Vertex start) {
    ++result.nodes_explored;
    const std::size_t size = members.size();
    if (size > result.gp || (size == result.gp && current.lex_less(result.witness))) {
      result.gp = size;
      result.witness = current;
    }
    for (Vertex w = start; w < o.order(); ++w) {
      if (!can_add(w)) continue;
      current.insert(w);
      members.push_back(w);
      extend(w + 1);
      members.pop_back();
      current.erase(w);
    }
  }
};

}  // namespace

ExactResult brute_force_gp(const IntervalOracle& o) {
  if (o.order() > kBruteForceLimit)
    throw std::invalid_argument("brute force is limited to " + std::to_string(kBruteForceLimit) +
                                " vertices (graph has " + std::to_string(o.order()) + ")");
  const auto start = std::chrono::steady_clock::now();
  Enumeration e{o, VertexSet(o.order()), {}, {}};
  e.result.witness = VertexSet(o.order());
  e.extend(0);
  e.result.time = std::chrono::steady_clock::now() - start;
  return std::move(e.result);
}

}  // namespace gpos
