#include "linkcc/equivalence.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace linkcc {

namespace {

using Matrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

class Matcher {
 public:
  Matcher(const Matrix& a, const Matrix& b, bool signed_mode) : a_(a), b_(b), signed_(signed_mode), n_(a.rows()) {}

  bool run() {
    if (b_.rows() != n_) return false;
    refine();
    std::map<int, int> ha, hb;
    for (Eigen::Index i = 0; i < n_; ++i) {
      ++ha[color_a_[static_cast<std::size_t>(i)]];
      ++hb[color_b_[static_cast<std::size_t>(i)]];
    }
    if (ha != hb) return false;
    build_order();
    map_.assign(static_cast<std::size_t>(n_), -1);
    sign_.assign(static_cast<std::size_t>(n_), 1);
    used_.assign(static_cast<std::size_t>(n_), false);
    return extend(0);
  }

  const std::vector<Eigen::Index>& map() const { return map_; }
  const std::vector<int>& signs() const { return sign_; }

 private:
  std::int64_t cls(std::int64_t v) const { return signed_ ? (v < 0 ? -v : v) : (v % 2 != 0 ? 1 : 0); }

  // Colour refinement on the disjoint union so colours are comparable across a and b.
  void refine() {
    color_a_.assign(static_cast<std::size_t>(n_), 0);
    color_b_.assign(static_cast<std::size_t>(n_), 0);
    for (int round = 0; round < 64; ++round) {
      std::map<std::pair<int, std::vector<std::pair<std::int64_t, int>>>, int> palette;
      auto signature = [&](const Matrix& m, const std::vector<int>& col, Eigen::Index i) {
        std::vector<std::pair<std::int64_t, int>> s;
        for (Eigen::Index j = 0; j < n_; ++j)
          if (j != i) s.emplace_back(cls(m(i, j)), col[static_cast<std::size_t>(j)]);
        std::sort(s.begin(), s.end());
        return std::make_pair(col[static_cast<std::size_t>(i)], std::move(s));
      };
      std::vector<std::pair<int, std::vector<std::pair<std::int64_t, int>>>> sa, sb;
      for (Eigen::Index i = 0; i < n_; ++i) {
        sa.push_back(signature(a_, color_a_, i));
        sb.push_back(signature(b_, color_b_, i));
      }
      for (const auto& s : sa) palette.emplace(s, 0);
      for (const auto& s : sb) palette.emplace(s, 0);
      int next = 0;
      for (auto& [key, id] : palette) id = next++;
      std::vector<int> na, nb;
      for (const auto& s : sa) na.push_back(palette.at(s));
      for (const auto& s : sb) nb.push_back(palette.at(s));
      const auto classes = [](const std::vector<int>& v) { return std::set<int>(v.begin(), v.end()).size(); };
      const bool stable = classes(na) == classes(color_a_) && classes(nb) == classes(color_b_);
      color_a_ = std::move(na);
      color_b_ = std::move(nb);
      if (stable && round > 0) break;
    }
  }

  // Breadth-first over a's nonzero entries so each vertex after a root has an assigned neighbour.
  void build_order() {
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (Eigen::Index root = 0; root < n_; ++root) {
      if (seen[static_cast<std::size_t>(root)]) continue;
      std::queue<Eigen::Index> q;
      q.push(root);
      seen[static_cast<std::size_t>(root)] = true;
      while (!q.empty()) {
        const Eigen::Index i = q.front();
        q.pop();
        order_.push_back(i);
        for (Eigen::Index j = 0; j < n_; ++j)
          if (!seen[static_cast<std::size_t>(j)] && a_(i, j) != 0) {
            seen[static_cast<std::size_t>(j)] = true;
            q.push(j);
          }
      }
    }
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Eigen::Index i = order_[depth];
    for (Eigen::Index x = 0; x < n_; ++x) {
      if (used_[static_cast<std::size_t>(x)] || color_b_[static_cast<std::size_t>(x)] != color_a_[static_cast<std::size_t>(i)])
        continue;
      int sign = 0;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Eigen::Index j = order_[k];
        const std::int64_t va = a_(i, j), vb = b_(x, map_[static_cast<std::size_t>(j)]);
        if (cls(va) != cls(vb)) ok = false;
        if (!ok || !signed_ || va == 0) continue;
        const int want = ((va > 0) == (vb > 0) ? 1 : -1) * sign_[static_cast<std::size_t>(j)];
        if (sign == 0)
          sign = want;
        else if (sign != want)
          ok = false;
      }
      if (!ok) continue;
      map_[static_cast<std::size_t>(i)] = x;
      sign_[static_cast<std::size_t>(i)] = sign == 0 ? 1 : sign;
      used_[static_cast<std::size_t>(x)] = true;
      if (extend(depth + 1)) return true;
      used_[static_cast<std::size_t>(x)] = false;
      map_[static_cast<std::size_t>(i)] = -1;
    }
    return false;
  }

  const Matrix& a_;
  const Matrix& b_;
  bool signed_;
  Eigen::Index n_;
  std::vector<int> color_a_, color_b_;
  std::vector<Eigen::Index> order_;
  std::vector<Eigen::Index> map_;
  std::vector<int> sign_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<ComponentBijection> parity_linking_equivalent(const LinkDiagram& a, const LinkDiagram& b) {
  const auto la = linking_matrix(a), lb = linking_matrix(b);
  Matcher m(la.entries, lb.entries, false);
  if (!m.run()) return std::nullopt;
  ComponentBijection out;
  for (std::size_t i = 0; i < la.ids.size(); ++i) out[la.ids[i]] = lb.ids[static_cast<std::size_t>(m.map()[i])];
  return out;
}

std::optional<OrientedBijection> linking_equivalent(const LinkDiagram& a, const LinkDiagram& b) {
  const auto la = linking_matrix(a), lb = linking_matrix(b);
  Matcher m(la.entries, lb.entries, true);
  if (!m.run()) return std::nullopt;
  OrientedBijection out;
  for (std::size_t i = 0; i < la.ids.size(); ++i) {
    out.map[la.ids[i]] = lb.ids[static_cast<std::size_t>(m.map()[i])];
    out.orientation[la.ids[i]] = m.signs()[i];
  }
  return out;
}

bool check_parity_bijection(const LinkDiagram& a, const LinkDiagram& b, const ComponentBijection& map) {
  const auto la = linking_matrix(a), lb = linking_matrix(b);
  if (la.ids.size() != lb.ids.size() || map.size() != la.ids.size()) return false;
  std::set<ComponentId> image;
  for (const auto& [x, y] : map) image.insert(y);
  if (image.size() != map.size()) return false;
  for (ComponentId x : la.ids)
    for (ComponentId y : la.ids)
      if ((la(x, y) - lb(map.at(x), map.at(y))) % 2 != 0) return false;
  return true;
}

bool check_oriented_bijection(const LinkDiagram& a, const LinkDiagram& b, const OrientedBijection& m) {
  const auto la = linking_matrix(a), lb = linking_matrix(b);
  if (la.ids.size() != lb.ids.size() || m.map.size() != la.ids.size()) return false;
  std::set<ComponentId> image;
  for (const auto& [x, y] : m.map) image.insert(y);
  if (image.size() != m.map.size()) return false;
  for (ComponentId x : la.ids)
    for (ComponentId y : la.ids)
      if (x != y && la(x, y) * m.orientation.at(x) * m.orientation.at(y) != lb(m.map.at(x), m.map.at(y))) return false;
  return true;
}

}  // namespace linkcc
