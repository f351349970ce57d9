#include "gpos/exact.hpp"

#include <algorithm>
#include <numeric>

namespace gpos {

namespace {

// Search state lives in "position space": position p is the p-th vertex of the
// static branching order, so the first set bit of a candidate set is the next
// vertex to branch on.
class BranchAndBound {
 public:
  BranchAndBound(const IntervalOracle& o, const BranchAndBoundOptions& options)
      : o_(o), options_(options), n_(o.order()), stride_(words_for(n_)) {
    const auto freq = o.membership_counts();
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return freq[a] > freq[b]; });
    position_.resize(n_);
    for (Vertex p = 0; p < n_; ++p) position_[order_[p]] = p;
    build_conflicts();
  }

  ExactResult run() {
    start_ = std::chrono::steady_clock::now();
    result_.witness = VertexSet(n_);
    std::vector<Word> candidates(stride_, 0);
    for (Vertex p = 0; p < n_; ++p) set_bit(candidates.data(), p);
    // Rows are held by reference across recursion, so the outer vector must never reallocate.
    levels_.reserve(n_ + 2);
    levels_.emplace_back(n_ * stride_, 0);
    expand(0, candidates);
    result_.optimal = !stopped_;
    result_.time = std::chrono::steady_clock::now() - start_;
    return std::move(result_);
  }

 private:
  static void set_bit(Word* w, Vertex p) { w[p / kWordBits] |= Word{1} << (p % kWordBits); }
  static void clear_bit(Word* w, Vertex p) { w[p / kWordBits] &= ~(Word{1} << (p % kWordBits)); }

  std::size_t pair_index(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(a) * (2 * n_ - a - 1) / 2 + (b - a - 1);
  }
  Word* conflict(Vertex a, Vertex b) { return conflicts_.data() + pair_index(a, b) * stride_; }
  const Word* conflict(Vertex a, Vertex b) const { return conflicts_.data() + pair_index(a, b) * stride_; }

  // conflict(a, b) holds every c for which {a, b, c} is not in general position,
  // i.e. one of the three lies strictly inside the interval of the other two.
  void build_conflicts() {
    conflicts_.assign(n_ < 2 ? 0 : n_ * (n_ - 1) / 2 * stride_, 0);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v) {
        const Vertex pu = position_[u], pv = position_[v];
        for_each_bit(o_.interval(u, v), [&](Vertex w) {
          const Vertex pw = position_[w];
          set_bit(conflict(pu, pv), pw);
          set_bit(conflict(pu, pw), pv);
          set_bit(conflict(pv, pw), pu);
        });
      }
  }

  std::size_t popcount(const std::vector<Word>& set) const {
    std::size_t c = 0;
    for (Word w : set) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // Candidates compatible with the partial set are pairwise constrained: a and b
  // cannot both be added when row(a) contains b. Any admissible extension picks
  // at most one vertex per clique of that graph, so a greedy clique partition
  // bounds the extension size. Returns as soon as the count exceeds limit.
  std::size_t clique_cover(const std::vector<Word>& candidates, const std::vector<Word>& rows,
                           std::size_t limit) const {
    std::vector<Word> uncovered = candidates;
    std::vector<Word> pool(stride_);
    std::size_t cliques = 0;
    for (std::size_t w = 0; w < stride_; ++w) {
      while (uncovered[w] != 0) {
        if (++cliques > limit) return cliques;
        const auto seed = static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(uncovered[w])));
        clear_bit(uncovered.data(), seed);
        const Word* row = rows.data() + static_cast<std::size_t>(seed) * stride_;
        bool any = false;
        for (std::size_t k = 0; k < stride_; ++k) any |= (pool[k] = uncovered[k] & row[k]) != 0;
        while (any) {
          std::size_t k = 0;
          while (pool[k] == 0) ++k;
          const auto x = static_cast<Vertex>(k * kWordBits + static_cast<std::size_t>(std::countr_zero(pool[k])));
          clear_bit(uncovered.data(), x);
          const Word* rx = rows.data() + static_cast<std::size_t>(x) * stride_;
          any = false;
          for (std::size_t j = 0; j < stride_; ++j) {
            pool[j] &= rx[j];
            any |= pool[j] != 0;
          }
        }
      }
    }
    return cliques;
  }

  bool should_stop() {
    if ((result_.nodes_explored & 1023) != 0) return stopped_;
    if (options_.cancel && options_.cancel->load(std::memory_order_relaxed)) stopped_ = true;
    if (options_.time_limit && std::chrono::steady_clock::now() - start_ > *options_.time_limit) stopped_ = true;
    return stopped_;
  }

  void record_incumbent() {
    VertexSet witness(n_);
    for (Vertex p : chosen_) witness.insert(order_[p]);
    result_.gp = chosen_.size();
    result_.witness = witness;
    result_.incumbents.push_back({result_.gp, result_.nodes_explored, std::move(witness)});
  }

  void expand(std::size_t depth, std::vector<Word>& candidates) {
    ++result_.nodes_explored;
    if (chosen_.size() > result_.gp) record_incumbent();
    if (should_stop()) return;

    if (levels_.size() <= depth + 1) levels_.emplace_back(n_ * stride_, 0);
    const std::vector<Word>& rows = levels_[depth];

    while (true) {
      const std::size_t remaining = popcount(candidates);
      if (remaining == 0 || chosen_.size() + remaining <= result_.gp) return;
      if (options_.cover_bound && !chosen_.empty() &&
          chosen_.size() + clique_cover(candidates, rows, result_.gp - chosen_.size()) <= result_.gp)
        return;

      std::size_t w = 0;
      while (candidates[w] == 0) ++w;
      const auto v = static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(candidates[w])));
      clear_bit(candidates.data(), v);

      // Adding v drops every candidate that forms a bad triple with v and a
      // chosen vertex, then extends each survivor's row by its conflicts with v.
      std::vector<Word> next(stride_);
      const Word* row_v = rows.data() + static_cast<std::size_t>(v) * stride_;
      for (std::size_t k = 0; k < stride_; ++k) next[k] = candidates[k] & ~row_v[k];

      std::vector<Word>& next_rows = levels_[depth + 1];
      for_each_bit(next, [&](Vertex c) {
        const Word* src = rows.data() + static_cast<std::size_t>(c) * stride_;
        const Word* add = conflict(v, c);
        Word* dst = next_rows.data() + static_cast<std::size_t>(c) * stride_;
        for (std::size_t k = 0; k < stride_; ++k) dst[k] = src[k] | add[k];
      });

      chosen_.push_back(v);
      expand(depth + 1, next);
      chosen_.pop_back();
      if (stopped_) return;
    }
  }

  const IntervalOracle& o_;
  const BranchAndBoundOptions& options_;
  std::size_t n_;
  std::size_t stride_;
  std::vector<Vertex> order_;     // position -> vertex
  std::vector<Vertex> position_;  // vertex -> position
  std::vector<Word> conflicts_;
  std::vector<std::vector<Word>> levels_;
  std::vector<Vertex> chosen_;
  ExactResult result_;
  std::chrono::steady_clock::time_point start_;
  bool stopped_ = false;
};

}  // namespace

ExactResult branch_and_bound_gp(const IntervalOracle& o, const BranchAndBoundOptions& options) {
  return BranchAndBound(o, options).run();
}

}  // namespace gpos
