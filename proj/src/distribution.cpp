#include "slicerank/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <fmt/format.h>

#include "slicerank/error.hpp"

namespace slicerank {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

void validate_distribution(const BlockLayout& layout, const BlockDistribution& d) {
  if (d.size() != layout.blocks.size()) {
    throw InputError(fmt::format("distribution has {} entries for {} blocks", d.size(), layout.blocks.size()));
  }
  double sum = 0.0;
  for (double p : d) {
    if (!(p >= 0.0)) throw InputError("distribution has a negative or NaN entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw InputError(fmt::format("distribution sums to {}", sum));
}

std::vector<double> marginals(const BlockLayout& layout, const BlockDistribution& d, Axis axis) {
  const std::size_t a = axis_index(axis);
  std::vector<double> m(layout.part_sizes[a].size(), 0.0);
  for (std::size_t b = 0; b < layout.blocks.size(); ++b) m[layout.blocks[b][a]] += d[b];
  return m;
}

double log_p_axis(const BlockLayout& layout, const BlockDistribution& d, Axis axis) {
  const auto m = marginals(layout, d, axis);
  const auto& sizes = layout.part_sizes[axis_index(axis)];
  double out = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] > 0.0) out += m[i] * std::log(sizes[i]) - xlogx(m[i]);
  }
  return out;
}

double ObjectiveValue::log_min() const { return std::min({log_value[0], log_value[1], log_value[2]}); }
double ObjectiveValue::value(Axis a) const { return std::exp(log_value[axis_index(a)]); }
double ObjectiveValue::min_value() const { return std::exp(log_min()); }

ObjectiveValue eval_pX(const BlockLayout& layout, const BlockDistribution& d) {
  ObjectiveValue v;
  for (Axis a : kAxes) v.log_value[axis_index(a)] = log_p_axis(layout, d, a);
  return v;
}

std::vector<std::vector<std::size_t>> rotation_orbits(const BlockLayout& layout) {
  std::map<BlockKey, std::size_t> position;
  for (std::size_t b = 0; b < layout.blocks.size(); ++b) position[layout.blocks[b]] = b;
  std::vector<bool> seen(layout.blocks.size(), false);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t b = 0; b < layout.blocks.size(); ++b) {
    if (seen[b]) continue;
    std::vector<std::size_t> orbit;
    BlockKey key = layout.blocks[b];
    for (int r = 0; r < 3; ++r) {
      auto it = position.find(key);
      if (it == position.end()) {
        throw InputError(fmt::format("block ({},{},{}) has no rotated partner ({},{},{})", layout.blocks[b][0],
                                     layout.blocks[b][1], layout.blocks[b][2], key[0], key[1], key[2]));
      }
      if (!seen[it->second]) {
        seen[it->second] = true;
        orbit.push_back(it->second);
      }
      key = {key[1], key[2], key[0]};
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

BlockDistribution symmetrize(const BlockLayout& layout, const BlockDistribution& d) {
  BlockDistribution out(d.size(), 0.0);
  for (const auto& orbit : rotation_orbits(layout)) {
    double total = 0.0;
    for (std::size_t b : orbit) total += d[b];
    for (std::size_t b : orbit) out[b] = total / double(orbit.size());
  }
  return out;
}

bool is_symmetric_distribution(const BlockLayout& layout, const BlockDistribution& d, double tol) {
  for (const auto& orbit : rotation_orbits(layout)) {
    for (std::size_t b : orbit) {
      if (std::abs(d[b] - d[orbit.front()]) > tol) return false;
    }
  }
  return true;
}

}  // namespace slicerank
