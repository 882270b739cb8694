#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "json.hpp"

namespace growthlab::lattice {

/// Black vertex of the honeycomb graph, at integer coordinates (x, n).
struct BlackVertex {
  int x = 0;
  int n = 0;
  auto operator<=>(const BlackVertex&) const = default;
};

/// White vertex label; the white with label (x, n) sits at the black (x, n)
/// position shifted by e1 = (1/2, -1/2).
struct WhiteVertex {
  int x = 0;
  int n = 0;
  auto operator<=>(const WhiteVertex&) const = default;
};

/// Lozenge species. The weight role binding is fixed: I-b, II-a, III-c.
enum class LozengeType { I, II, III };

constexpr char weight_role(LozengeType t) {
  switch (t) {
    case LozengeType::I: return 'b';
    case LozengeType::II: return 'a';
    case LozengeType::III: return 'c';
  }
  return '?';
}

/// Initial particle position for label (k, m): k - m - 1.
int packed_position(int k, int m);

/// The three whites adjacent to a black: offsets e1, e2, e3 in label space,
/// i.e. (x,n), (x,n+1), (x-1,n+1).
std::array<WhiteVertex, 3> black_to_whites(BlackVertex v);

/// Interlacing triangular particle array: positions x_k^m for 1 <= k <= m <= N,
/// stored densely by level.
class GTPattern {
 public:
  explicit GTPattern(int depth);
  static GTPattern packed(int depth);

  int depth() const { return depth_; }
  int pos(int k, int m) const;
  void set_pos(int k, int m, int value);
  std::span<const int> level(int m) const;

  /// True iff x^m_{k-1} < x^{m-1}_{k-1} <= x^m_k holds everywhere.
  bool interlaced() const;

  /// 1 if a particle of level n sits at x.
  bool occupied(int x, int n) const;

  nlohmann::json to_json() const;
  static GTPattern from_json(const nlohmann::json& j);

  bool operator==(const GTPattern&) const = default;

 private:
  int depth_;
  std::vector<std::vector<int>> levels_;  // levels_[m-1].size() == m
  void check_label(int k, int m) const;
};

/// Axis-aligned window of black cells, inclusive bounds.
struct Window {
  int x_min = 0, x_max = 0;
  int n_min = 1, n_max = 1;
};

/// Lozenge type at every black cell of the window. The window must satisfy
/// 1 <= n_min <= n_max <= depth-1: the type at level n is read off levels n
/// and n+1, so the top particle row has no cells below it to tile.
std::map<std::pair<int, int>, LozengeType> pattern_to_lozenges(const GTPattern& p,
                                                               const Window& w);

}  // namespace growthlab::lattice
