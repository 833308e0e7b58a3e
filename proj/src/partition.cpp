#include "slicerank/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include <fmt/format.h>

#include "slicerank/error.hpp"

namespace slicerank {
namespace {

constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

std::vector<std::size_t> iota_range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out(hi - lo);
  std::iota(out.begin(), out.end(), lo);
  return out;
}

VariablePartition same_on_all_axes(const std::vector<Part>& parts) {
  return VariablePartition({parts, parts, parts});
}

}  // namespace

VariablePartition::VariablePartition(std::array<std::vector<Part>, 3> parts) : parts_(std::move(parts)) {
  for (Axis a : kAxes) {
    auto& owner = owner_[axis_index(a)];
    std::size_t index = 0;
    for (auto& part : parts_[axis_index(a)]) {
      if (part.members.empty()) {
        throw InputError(fmt::format("part '{}' on axis {} is empty", part.label, axis_letter(a)));
      }
      std::sort(part.members.begin(), part.members.end());
      for (std::size_t v : part.members) {
        if (v >= owner.size()) owner.resize(v + 1, kUnassigned);
        if (owner[v] != kUnassigned) {
          throw InputError(fmt::format("variable {} on axis {} is in two parts", v, axis_letter(a)));
        }
        owner[v] = index;
      }
      ++index;
    }
  }
}

void VariablePartition::validate(const std::array<std::size_t, 3>& axis_sizes) const {
  for (Axis a : kAxes) {
    const auto& owner = owner_[axis_index(a)];
    const std::size_t n = axis_sizes[axis_index(a)];
    if (owner.size() > n) {
      throw InputError(fmt::format("partition names variable {} on axis {}, which has only {} variables",
                                   owner.size() - 1, axis_letter(a), n));
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (v >= owner.size() || owner[v] == kUnassigned) {
        throw InputError(fmt::format("variable {} on axis {} is in no part", v, axis_letter(a)));
      }
    }
  }
}

BlockSet blocks(const Tensor& t, const VariablePartition& p) {
  p.validate(t.sizes());
  BlockSet out;
  for (const auto& [idx, c] : t.entries()) {
    const BlockKey key{p.part_of(Axis::X, idx.x), p.part_of(Axis::Y, idx.y), p.part_of(Axis::Z, idx.z)};
    auto it = out.find(key);
    if (it == out.end()) {
      it = out.emplace(key, Tensor({t.labels(Axis::X), t.labels(Axis::Y), t.labels(Axis::Z)})).first;
    }
    it->second.add(idx, c);
  }
  return out;
}

BlockLayout make_layout(const Tensor& t, const VariablePartition& p) {
  p.validate(t.sizes());
  BlockLayout layout;
  for (Axis a : kAxes) {
    for (const auto& part : p.parts(a)) layout.part_sizes[axis_index(a)].push_back(double(part.members.size()));
  }
  std::vector<BlockKey> keys;
  for (const auto& [idx, c] : t.entries()) {
    keys.push_back({p.part_of(Axis::X, idx.x), p.part_of(Axis::Y, idx.y), p.part_of(Axis::Z, idx.z)});
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  layout.blocks = std::move(keys);
  return layout;
}

Tensor reconstruct(const Tensor& t, const BlockSet& bs) {
  Tensor out({t.labels(Axis::X), t.labels(Axis::Y), t.labels(Axis::Z)});
  for (const auto& [key, block] : bs) {
    for (const auto& [idx, c] : block.entries()) out.add(idx, c);
  }
  return out;
}

bool is_t_symmetric_partition(const Tensor& t, const VariablePartition& p) {
  p.validate(t.sizes());
  const std::size_t k = p.num_parts(Axis::X);
  if (p.num_parts(Axis::Y) != k || p.num_parts(Axis::Z) != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const auto n = p.part(Axis::X, i).members.size();
    if (p.part(Axis::Y, i).members.size() != n || p.part(Axis::Z, i).members.size() != n) return false;
  }
  // to_prev[a][v]: the member of the same part and position on the previous axis
  // (Y -> X, Z -> Y, X -> Z).
  std::array<std::vector<std::size_t>, 3> to_prev;
  for (std::size_t a = 0; a < 3; ++a) {
    const Axis from = kAxes[a];
    const Axis to = kAxes[(a + 2) % 3];
    to_prev[a].assign(t.size(from), 0);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& src = p.part(from, i).members;
      const auto& dst = p.part(to, i).members;
      for (std::size_t r = 0; r < src.size(); ++r) to_prev[a][src[r]] = dst[r];
    }
  }
  for (const auto& [idx, c] : t.entries()) {
    const Index3 image{to_prev[1][idx.y], to_prev[2][idx.z], to_prev[0][idx.x]};
    if (t.coefficient(image) != c) return false;
  }
  return true;
}

VariablePartition trivial_partition(const std::array<std::size_t, 3>& axis_sizes) {
  std::array<std::vector<Part>, 3> parts;
  for (std::size_t a = 0; a < 3; ++a) {
    parts[a].push_back({fmt::format("{}all", axis_letter(kAxes[a])), iota_range(0, axis_sizes[a])});
  }
  return VariablePartition(std::move(parts));
}

VariablePartition singleton_partition(const std::array<std::size_t, 3>& axis_sizes) {
  std::array<std::vector<Part>, 3> parts;
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t v = 0; v < axis_sizes[a]; ++v) {
      parts[a].push_back({fmt::format("{}{}", char(std::toupper(axis_letter(kAxes[a]))), v), {v}});
    }
  }
  return VariablePartition(std::move(parts));
}

VariablePartition cw_partition(std::size_t q) {
  std::vector<Part> parts{{"0", {0}}};
  if (q > 0) parts.push_back({"1", iota_range(1, q + 1)});
  parts.push_back({"2", {q + 1}});
  return same_on_all_axes(parts);
}

VariablePartition cw_small_partition(std::size_t q) {
  if (q == 0) throw InputError("small Coppersmith-Winograd partition needs q >= 1");
  return same_on_all_axes({{"0", {0}}, {"1", iota_range(1, q + 1)}});
}

VariablePartition t112_partition(std::size_t q) {
  if (q == 0) throw InputError("t_112 partition needs q >= 1");
  std::vector<Part> xy{{"0", iota_range(0, q)}, {"1", iota_range(q, 2 * q)}};
  std::vector<Part> z{{"0", iota_range(0, q * q)}, {"1", {q * q}}, {"2", {q * q + 1}}};
  return VariablePartition({xy, xy, z});
}

VariablePartition cyclic_product_partition(const Tensor& t, const VariablePartition& p) {
  p.validate(t.sizes());
  const std::size_t kx = p.num_parts(Axis::X), ky = p.num_parts(Axis::Y), kz = p.num_parts(Axis::Z);
  const std::size_t ny = t.size(Axis::Y), nz = t.size(Axis::Z);
  std::vector<Part> parts(kx * ky * kz);
  for (std::size_t i = 0; i < kx; ++i)
    for (std::size_t j = 0; j < ky; ++j)
      for (std::size_t k = 0; k < kz; ++k) {
        parts[(i * ky + j) * kz + k].label =
            fmt::format("({},{},{})", p.part(Axis::X, i).label, p.part(Axis::Y, j).label, p.part(Axis::Z, k).label);
      }
  for (std::size_t a = 0; a < t.size(Axis::X); ++a)
    for (std::size_t b = 0; b < ny; ++b)
      for (std::size_t c = 0; c < nz; ++c) {
        const std::size_t part = (p.part_of(Axis::X, a) * ky + p.part_of(Axis::Y, b)) * kz + p.part_of(Axis::Z, c);
        parts[part].members.push_back((a * ny + b) * nz + c);
      }
  return same_on_all_axes(parts);
}

}  // namespace slicerank
