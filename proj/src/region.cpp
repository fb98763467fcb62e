#include "birs/region.hpp"

#include <algorithm>

namespace birs {

std::vector<Region> merge_regions(std::vector<Region> regions) {
  std::erase_if(regions, [](const Region& r) { return r.empty(); });
  std::sort(regions.begin(), regions.end());
  std::vector<Region> merged;
  for (const Region& r : regions) {
    if (!merged.empty() && r.start <= merged.back().end) {
      merged.back().end = std::max(merged.back().end, r.end);
    } else {
      merged.push_back(r);
    }
  }
  return merged;
}

std::size_t covered_count(std::span<const Region> regions) {
  std::size_t total = 0;
  for (const Region& r : merge_regions({regions.begin(), regions.end()})) total += r.length();
  return total;
}

std::vector<bool> coverage_mask(std::span<const Region> regions, std::size_t p) {
  std::vector<bool> mask(p, false);
  for (const Region& r : regions) {
    for (std::size_t j = r.start; j < std::min(r.end, p); ++j) mask[j] = true;
  }
  return mask;
}

}  // namespace birs
