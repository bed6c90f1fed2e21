#include "linkcc/bcr.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

namespace linkcc {

UOrder UOrder::identity(int n) {
  UOrder pi;
  pi.position.resize(static_cast<std::size_t>(n));
  std::iota(pi.position.begin(), pi.position.end(), 1);
  return pi;
}

void validate_instance(const BipartiteInstance& inst) {
  if (inst.n_u < 1) throw InvalidInstance("n_u must be at least 1");
  if (inst.n_v() != 4 * inst.n_u)
    throw InvalidInstance("assignment has length " + std::to_string(inst.n_v()) + ", expected " +
                          std::to_string(4 * inst.n_u));
  std::vector<int> degree(static_cast<std::size_t>(inst.n_u) + 1, 0);
  for (int u : inst.assignment) {
    if (u < 1 || u > inst.n_u) throw InvalidInstance("assignment entry " + std::to_string(u) + " out of range");
    ++degree[static_cast<std::size_t>(u)];
  }
  for (int u = 1; u <= inst.n_u; ++u)
    if (degree[static_cast<std::size_t>(u)] != 4)
      throw InvalidInstance("U vertex " + std::to_string(u) + " has degree " +
                            std::to_string(degree[static_cast<std::size_t>(u)]));
  if (inst.budget < 0) throw InvalidInstance("budget must be nonnegative");
}

void validate_order(const UOrder& pi, int n_u) {
  if (pi.size() != n_u) throw std::invalid_argument("order has the wrong length");
  std::set<int> seen(pi.position.begin(), pi.position.end());
  if (static_cast<int>(seen.size()) != n_u || *seen.begin() != 1 || *seen.rbegin() != n_u)
    throw std::invalid_argument("order is not a permutation");
}

std::int64_t crossings_for_order(const BipartiteInstance& inst, const UOrder& pi) {
  validate_instance(inst);
  validate_order(pi, inst.n_u);
  std::int64_t total = 0;
  const auto& a = inst.assignment;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t k = j + 1; k < a.size(); ++k)
      if (a[j] != a[k] && pi.rank(a[j]) > pi.rank(a[k])) ++total;
  return total;
}

namespace {

class Search {
 public:
  Search(const BipartiteInstance& inst, bool prune) : n_(inst.n_u), prune_(prune) {
    // before_[x][y]: crossings between the edges of x and y when x is left of y.
    before_.assign(static_cast<std::size_t>(n_), std::vector<std::int64_t>(static_cast<std::size_t>(n_), 0));
    const auto& a = inst.assignment;
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t k = j + 1; k < a.size(); ++k)
        if (a[j] != a[k]) ++before_[static_cast<std::size_t>(a[k] - 1)][static_cast<std::size_t>(a[j] - 1)];
  }

  BcrResult run() {
    std::vector<int> sequence;
    std::vector<bool> placed(static_cast<std::size_t>(n_), false);
    descend(sequence, placed, 0);
    return {best_cost_, best_};
  }

 private:
  std::int64_t bound(const std::vector<bool>& placed) const {
    std::int64_t lb = 0;
    for (int x = 0; x < n_; ++x) {
      if (placed[static_cast<std::size_t>(x)]) continue;
      for (int y = 0; y < n_; ++y) {
        if (placed[static_cast<std::size_t>(y)]) {
          lb += before_[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
        } else if (y > x) {
          lb += std::min(before_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)],
                         before_[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]);
        }
      }
    }
    return lb;
  }

  void descend(std::vector<int>& sequence, std::vector<bool>& placed, std::int64_t cost) {
    if (static_cast<int>(sequence.size()) == n_) {
      UOrder pi;
      pi.position.resize(static_cast<std::size_t>(n_));
      for (int r = 0; r < n_; ++r) pi.position[static_cast<std::size_t>(sequence[static_cast<std::size_t>(r)])] = r + 1;
      if (cost < best_cost_ || (cost == best_cost_ && pi < best_)) {
        best_cost_ = cost;
        best_ = std::move(pi);
      }
      return;
    }
    // Ties must survive pruning so the smallest order can still be found.
    if (prune_ && cost + bound(placed) > best_cost_) return;
    for (int x = 0; x < n_; ++x) {
      if (placed[static_cast<std::size_t>(x)]) continue;
      std::int64_t added = 0;
      for (int y : sequence) added += before_[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
      placed[static_cast<std::size_t>(x)] = true;
      sequence.push_back(x);
      descend(sequence, placed, cost + added);
      sequence.pop_back();
      placed[static_cast<std::size_t>(x)] = false;
    }
  }

  int n_;
  bool prune_;
  std::vector<std::vector<std::int64_t>> before_;
  std::int64_t best_cost_ = std::numeric_limits<std::int64_t>::max();
  UOrder best_;
};

}  // namespace

BcrResult exact_bcr(const BipartiteInstance& inst, BcrOptions options) {
  validate_instance(inst);
  return Search(inst, options.prune).run();
}

bool decide_bcr(const BipartiteInstance& inst) { return exact_bcr(inst).minimum <= inst.budget; }

}  // namespace linkcc
