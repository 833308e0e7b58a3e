#include "slicerank/tables.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>

#include "slicerank/bounds.hpp"
#include "slicerank/error.hpp"
#include "slicerank/families.hpp"
#include "slicerank/laser.hpp"

namespace slicerank {
namespace {

constexpr std::array<double, 8> kCwSliceRank{2.7551, 3.57165, 4.34413, 5.07744, 5.77629, 6.44493, 7.08706, 7.70581};
constexpr std::array<double, 8> kCwOmega{2.16805, 2.17794, 2.19146, 2.20550, 2.21912, 2.23200, 2.24404, 2.25525};
constexpr std::array<double, 7> kCwSmallOmega{2.17795, 2.0, 2.02538, 2.06244, 2.09627, 2.12549, 2.15064};
constexpr std::array<double, 4> kTqLowerSliceRank{1.88988, 2.75510, 3.61071, 4.46157};
constexpr std::array<double, 4> kTqLowerOmega{2.17795, 2.16805, 2.15949, 2.15237};

TableRow compute_row(Family f, std::size_t q) {
  const Tensor t = family_tensor(f, q);
  const VariablePartition p = family_partition(f, q);
  const BoundReport upper = bound_partition(t, p);
  const BoundReport lower = laser_lower_bound(t, p);
  TableRow row;
  row.q = q;
  row.slice_rank = upper.value;
  row.laser_value = lower.value;
  row.minmax_value = std::stod(upper.find("minmax_value"));
  row.omega = omega_lower(*t.asymptotic_rank(), upper.value, true).value;
  row.converged = upper.diagnostics.converged && lower.diagnostics.converged;
  row.expected = golden(f, q);
  return row;
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::cw:
      return "cw";
    case Family::cw_small:
      return "cw-small";
    case Family::tq_lower:
      return "tq-lower";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  for (Family f : {Family::cw, Family::cw_small, Family::tq_lower})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

std::size_t family_q_min(Family f) { return f == Family::tq_lower ? 2 : 1; }

Tensor family_tensor(Family f, std::size_t q) {
  switch (f) {
    case Family::cw:
      return make_cw(q);
    case Family::cw_small:
      return make_cw_small(q);
    case Family::tq_lower:
      return make_cyclic_lower(q);
  }
  throw InputError("unknown family");
}

VariablePartition family_partition(Family f, std::size_t q) {
  switch (f) {
    case Family::cw:
      return cw_partition(q);
    case Family::cw_small:
      return cw_small_partition(q);
    case Family::tq_lower:
      return singleton_partition({q, q, q});
  }
  throw InputError("unknown family");
}

std::optional<Golden> golden(Family f, std::size_t q) {
  switch (f) {
    case Family::cw:
      if (q >= 1 && q <= kCwOmega.size()) return Golden{kCwSliceRank[q - 1], kCwOmega[q - 1]};
      break;
    case Family::cw_small:
      if (q >= 1 && q <= kCwSmallOmega.size()) return Golden{std::nullopt, kCwSmallOmega[q - 1]};
      break;
    case Family::tq_lower:
      if (q >= 2 && q <= 5) return Golden{kTqLowerSliceRank[q - 2], kTqLowerOmega[q - 2]};
      break;
  }
  return std::nullopt;
}

bool TableRow::tight(double tol) const { return std::abs(laser_value - slice_rank) <= tol; }

bool TableRow::matches(double tol) const {
  if (!expected) return true;
  if (expected->slice_rank && !(std::abs(slice_rank - *expected->slice_rank) <= tol)) return false;
  return std::abs(omega - expected->omega) <= tol;
}

std::vector<TableRow> compute_table(Family f, std::size_t q_min, std::size_t q_max) {
  q_min = std::max(q_min, family_q_min(f));
  if (q_max < q_min) throw InputError("empty q range");
  std::vector<std::future<TableRow>> jobs;
  for (std::size_t q = q_min; q <= q_max; ++q) jobs.push_back(std::async(std::launch::async, compute_row, f, q));
  std::vector<TableRow> rows;
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

}  // namespace slicerank
