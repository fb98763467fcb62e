#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace birs {

// Half-open interval [start, end) over variant indices.
struct Region {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const noexcept { return end - start; }
  bool empty() const noexcept { return end <= start; }
  bool contains(std::size_t j) const noexcept { return j >= start && j < end; }
  bool contains(const Region& other) const noexcept {
    return other.start >= start && other.end <= end;
  }
  bool overlaps(const Region& other) const noexcept {
    return start < other.end && other.start < end;
  }

  friend bool operator==(const Region&, const Region&) = default;
  friend auto operator<=>(const Region&, const Region&) = default;
};

// Sorts and merges overlapping or adjacent (gap 0) regions into maximal runs.
// Regions separated by one or more indices stay separate.
std::vector<Region> merge_regions(std::vector<Region> regions);

// Number of indices covered by the union of the regions.
std::size_t covered_count(std::span<const Region> regions);

// Per-index membership mask of length p.
std::vector<bool> coverage_mask(std::span<const Region> regions, std::size_t p);

}  // namespace birs
