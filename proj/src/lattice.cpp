#include "growthlab/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace growthlab::lattice {

int packed_position(int k, int m) {
  if (k < 1 || k > m) throw std::invalid_argument("packed_position: need 1 <= k <= m");
  return k - m - 1;
}

std::array<WhiteVertex, 3> black_to_whites(BlackVertex v) {
  return {WhiteVertex{v.x, v.n}, WhiteVertex{v.x, v.n + 1}, WhiteVertex{v.x - 1, v.n + 1}};
}

GTPattern::GTPattern(int depth) : depth_(depth) {
  if (depth < 1) throw std::invalid_argument("GTPattern depth must be >= 1");
  levels_.resize(depth);
  for (int m = 1; m <= depth; ++m) levels_[m - 1].assign(m, 0);
}

GTPattern GTPattern::packed(int depth) {
  GTPattern p(depth);
  for (int m = 1; m <= depth; ++m)
    for (int k = 1; k <= m; ++k) p.levels_[m - 1][k - 1] = packed_position(k, m);
  return p;
}

void GTPattern::check_label(int k, int m) const {
  if (m < 1 || m > depth_ || k < 1 || k > m)
    throw std::invalid_argument("GTPattern: label (k,m) out of range");
}

int GTPattern::pos(int k, int m) const {
  check_label(k, m);
  return levels_[m - 1][k - 1];
}

void GTPattern::set_pos(int k, int m, int value) {
  check_label(k, m);
  levels_[m - 1][k - 1] = value;
}

std::span<const int> GTPattern::level(int m) const {
  if (m < 1 || m > depth_) throw std::invalid_argument("GTPattern: level out of range");
  return levels_[m - 1];
}

bool GTPattern::interlaced() const {
  for (int m = 2; m <= depth_; ++m) {
    const auto& lo = levels_[m - 2];  // level m-1
    const auto& hi = levels_[m - 1];  // level m
    for (int k = 2; k <= m; ++k) {
      // x^m_{k-1} < x^{m-1}_{k-1} <= x^m_k
      if (!(hi[k - 2] < lo[k - 2] && lo[k - 2] <= hi[k - 1])) return false;
    }
  }
  return true;
}

bool GTPattern::occupied(int x, int n) const {
  if (n < 1 || n > depth_) throw std::invalid_argument("GTPattern: level out of range");
  const auto& lv = levels_[n - 1];
  return std::binary_search(lv.begin(), lv.end(), x);
}

nlohmann::json GTPattern::to_json() const {
  return nlohmann::json{{"N", depth_}, {"levels", levels_}};
}

GTPattern GTPattern::from_json(const nlohmann::json& j) {
  GTPattern p(j.at("N").get<int>());
  const auto levels = j.at("levels").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(levels.size()) != p.depth_)
    throw std::invalid_argument("GTPattern JSON: level count mismatch");
  for (int m = 1; m <= p.depth_; ++m) {
    if (static_cast<int>(levels[m - 1].size()) != m)
      throw std::invalid_argument("GTPattern JSON: level width mismatch");
    p.levels_[m - 1] = levels[m - 1];
  }
  return p;
}

namespace {

// #particles of level n strictly right of x (levels are sorted ascending).
int right_count(const GTPattern& p, int x, int n) {
  const auto lv = p.level(n);
  return static_cast<int>(lv.end() - std::upper_bound(lv.begin(), lv.end(), x));
}

}  // namespace

std::map<std::pair<int, int>, LozengeType> pattern_to_lozenges(const GTPattern& p,
                                                               const Window& w) {
  if (w.n_min < 1 || w.n_max >= p.depth() || w.n_min > w.n_max || w.x_min > w.x_max)
    throw std::invalid_argument(
        "pattern_to_lozenges: window must lie in levels [1, depth-1] of the pattern");
  std::map<std::pair<int, int>, LozengeType> out;
  for (int n = w.n_min; n <= w.n_max; ++n) {
    for (int x = w.x_min; x <= w.x_max; ++x) {
      LozengeType t;
      if (p.occupied(x, n)) {
        t = LozengeType::I;
      } else {
        // A free black takes its left white iff the (n, n+1) height gap is
        // open at x-1; interlacing makes the assignment a bijection.
        const int gap = right_count(p, x - 1, n + 1) - right_count(p, x - 1, n);
        t = (gap == 1) ? LozengeType::II : LozengeType::III;
      }
      out.emplace(std::make_pair(x, n), t);
    }
  }
  return out;
}

}  // namespace growthlab::lattice
