#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "distcomm/error.hpp"

namespace distcomm {

/// Axes of the co-occurrence cube: X cited references, Y title words, Z groups.
enum class Axis : std::uint8_t { kX = 0, kY = 1, kZ = 2 };

inline constexpr std::array<Axis, 3> kAllAxes{Axis::kX, Axis::kY, Axis::kZ};

inline char axis_name(Axis a) { return "XYZ"[static_cast<int>(a)]; }

using CellIndex = std::array<std::uint32_t, 3>;

/// Sparse table over a subset of the three cube axes. Indices of axes not in
/// the table are held at zero, so the canonical cell order (lexicographic on
/// the full index) is also lexicographic on the kept axes. Zero-valued cells
/// are never stored.
template <typename Value>
class SparseTable {
  static_assert(std::is_arithmetic_v<Value>);

 public:
  struct Cell {
    CellIndex index;
    Value value;

    friend bool operator==(const Cell&, const Cell&) = default;
  };

  using Accumulator = std::conditional_t<std::is_floating_point_v<Value>, long double, Value>;

  SparseTable() = default;

  /// Canonicalizes `cells`: sorts by index, sums duplicates in input order,
  /// drops zeros, and checks bounds and sign.
  SparseTable(std::vector<Axis> axes, std::array<std::size_t, 3> extents, std::vector<Cell> cells)
      : axes_(std::move(axes)), extents_(extents) {
    std::sort(axes_.begin(), axes_.end());
    if (std::adjacent_find(axes_.begin(), axes_.end()) != axes_.end()) {
      throw InputError("duplicate axis in table");
    }
    for (Axis a : kAllAxes) {
      if (!has_axis(a)) extents_[static_cast<int>(a)] = 1;
    }
    for (const auto& c : cells) {
      for (int d = 0; d < 3; ++d) {
        if (c.index[d] >= extents_[d]) {
          throw InputError(std::string("cell index out of range on axis ") +
                           axis_name(static_cast<Axis>(d)));
        }
      }
      if (c.value < Value{0}) throw InputError("negative cell value");
    }
    std::stable_sort(cells.begin(), cells.end(),
                     [](const Cell& a, const Cell& b) { return a.index < b.index; });
    cells_.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size();) {
      Accumulator sum{0};
      std::size_t j = i;
      for (; j < cells.size() && cells[j].index == cells[i].index; ++j) sum += cells[j].value;
      if (sum != Accumulator{0}) cells_.push_back({cells[i].index, static_cast<Value>(sum)});
      i = j;
    }
  }

  const std::vector<Axis>& axes() const { return axes_; }
  bool has_axis(Axis a) const { return std::find(axes_.begin(), axes_.end(), a) != axes_.end(); }
  std::size_t extent(Axis a) const { return extents_[static_cast<int>(a)]; }
  const std::array<std::size_t, 3>& extents() const { return extents_; }

  std::span<const Cell> cells() const { return cells_; }
  std::size_t nonzero() const { return cells_.size(); }

  /// Sum of all cells, accumulated in canonical order.
  Value total() const {
    Accumulator sum{0};
    for (const auto& c : cells_) sum += c.value;
    return static_cast<Value>(sum);
  }

  friend bool operator==(const SparseTable&, const SparseTable&) = default;

 private:
  std::vector<Axis> axes_;
  std::array<std::size_t, 3> extents_{1, 1, 1};
  std::vector<Cell> cells_;
};

/// Sums out every axis not in `keep`. Each output cell is accumulated over its
/// source cells in canonical order.
template <typename Value>
SparseTable<Value> marginal(const SparseTable<Value>& table, std::vector<Axis> keep) {
  if (keep.empty()) throw InputError("marginal: no axes to keep");
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (Axis a : keep) {
    if (!table.has_axis(a)) {
      throw InputError(std::string("marginal: axis ") + axis_name(a) + " not in table");
    }
  }
  std::array<bool, 3> kept{false, false, false};
  for (Axis a : keep) kept[static_cast<int>(a)] = true;

  using Cell = typename SparseTable<Value>::Cell;
  std::vector<Cell> projected;
  projected.reserve(table.nonzero());
  for (const auto& c : table.cells()) {
    CellIndex idx{};
    for (int d = 0; d < 3; ++d) idx[d] = kept[d] ? c.index[d] : 0;
    projected.push_back({idx, c.value});
  }
  return SparseTable<Value>(std::move(keep), table.extents(), std::move(projected));
}

}  // namespace distcomm
