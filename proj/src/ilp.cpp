#include "gpos/ilp.hpp"

namespace gpos {

namespace {

// Keeps rows within the line length limits of common LP readers.
constexpr std::size_t kMaxLine = 250;

void append_term(std::string& out, std::size_t& line_start, const std::string& term, bool first) {
  const std::string piece = first ? term : " + " + term;
  if (!first && out.size() - line_start + piece.size() > kMaxLine) {
    out += "\n ";
    line_start = out.size() - 1;
    out += "+ " + term;
    return;
  }
  out += piece;
}

}  // namespace

std::int64_t IlpModel::row_activity(const IlpConstraint& c, std::span<const std::uint8_t> x) const {
  std::int64_t lhs = 0;
  for (Vertex l : c.interval) lhs += x[l];
  return lhs + big_m * (x[c.u] + x[c.v]);
}

bool IlpModel::satisfied(std::span<const std::uint8_t> x) const {
  for (const auto& c : constraints)
    if (row_activity(c, x) > rhs()) return false;
  return true;
}

std::size_t IlpModel::objective(std::span<const std::uint8_t> x) const {
  std::size_t sum = 0;
  for (std::size_t j = 0; j < n; ++j) sum += x[j];
  return sum;
}

IlpModel build_ilp(const IntervalOracle& o) {
  IlpModel m;
  m.n = o.order();
  m.big_m = static_cast<std::int64_t>(m.n);
  for (Vertex u = 0; u < m.n; ++u)
    for (Vertex v = u + 1; v < m.n; ++v) {
      const auto iv = o.interval(u, v);
      IlpConstraint c{u, v, {}};
      for_each_bit(iv, [&](Vertex w) { c.interval.push_back(w); });
      if (!c.interval.empty()) m.constraints.push_back(std::move(c));
    }
  return m;
}

std::string write_lp(const IlpModel& m) {
  std::string out = "\\ general position model, n = " + std::to_string(m.n) + "\n";
  out += "Maximize\n";
  std::size_t line_start = out.size();
  out += "obj: ";
  for (std::size_t j = 0; j < m.n; ++j) append_term(out, line_start, "x" + std::to_string(j), j == 0);
  out += "\nSubject To\n";
  const std::string big = std::to_string(m.big_m);
  for (const auto& c : m.constraints) {
    line_start = out.size();
    out += "gp_" + std::to_string(c.u) + "_" + std::to_string(c.v) + ": ";
    bool first = true;
    for (Vertex l : c.interval) {
      append_term(out, line_start, "x" + std::to_string(l), first);
      first = false;
    }
    append_term(out, line_start, big + " x" + std::to_string(c.u), false);
    append_term(out, line_start, big + " x" + std::to_string(c.v), false);
    out += " <= " + std::to_string(m.rhs()) + "\n";
  }
  out += "Binary\n";
  for (std::size_t j = 0; j < m.n; ++j) out += "x" + std::to_string(j) + "\n";
  out += "End\n";
  return out;
}

}  // namespace gpos
