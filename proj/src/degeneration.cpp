#include "slicerank/degeneration.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "slicerank/error.hpp"

namespace slicerank {
namespace {

using Targets = std::vector<std::vector<std::pair<std::size_t, LambdaPoly>>>;

Targets targets_of(const DegenerationMap::AxisMap& m, std::size_t n_src, std::size_t n_dst, Axis axis) {
  Targets out(n_src);
  for (const auto& [key, poly] : m) {
    const auto [src, dst] = key;
    if (src >= n_src || dst >= n_dst) {
      throw InputError(fmt::format("map on axis {} sends variable {} to {}, outside the {} -> {} variable sets",
                                   axis_letter(axis), src, dst, n_src, n_dst));
    }
    if (!poly.is_zero()) out[src].emplace_back(dst, poly);
  }
  return out;
}

std::string format_index(const Index3& i) { return fmt::format("({},{},{})", i.x, i.y, i.z); }

}  // namespace

const char* kind_name(DegenerationMap::Kind kind) {
  switch (kind) {
    case DegenerationMap::Kind::general:
      return "general";
    case DegenerationMap::Kind::monomial:
      return "monomial";
    case DegenerationMap::Kind::zeroing:
      return "zeroing";
  }
  return "?";
}

void DegenerationMap::validate() const {
  if (kind == Kind::general) return;
  for (Axis a : kAxes) {
    std::map<std::size_t, std::size_t> targets_per_source;
    for (const auto& [key, poly] : maps[axis_index(a)]) {
      if (poly.is_zero()) continue;
      if (poly.num_terms() > 1) {
        throw InputError(fmt::format("{} map on axis {} has a non-monomial entry {}", kind_name(kind),
                                     axis_letter(a), poly.to_string()));
      }
      if (++targets_per_source[key.first] > 1) {
        throw InputError(fmt::format("{} map on axis {} sends variable {} to more than one target", kind_name(kind),
                                     axis_letter(a), key.first));
      }
      if (kind == Kind::zeroing && !(poly == LambdaPoly(Rational(1)))) {
        throw InputError(fmt::format("zeroing map on axis {} has value {} outside {{0,1}}", axis_letter(a),
                                     poly.to_string()));
      }
    }
  }
}

DegenerationCheck verify_degeneration(const Tensor& t1, const Tensor& t2, const DegenerationMap& d) {
  std::array<Targets, 3> targets;
  for (Axis a : kAxes) {
    targets[axis_index(a)] = targets_of(d.maps[axis_index(a)], t1.size(a), t2.size(a), a);
  }
  std::map<Index3, LambdaPoly> image;
  for (const auto& [idx, c] : t1.entries()) {
    for (const auto& [xd, pa] : targets[0][idx.x]) {
      const LambdaPoly ca = pa * LambdaPoly(c);
      for (const auto& [yd, pb] : targets[1][idx.y]) {
        const LambdaPoly cab = ca * pb;
        for (const auto& [zd, pg] : targets[2][idx.z]) image[{xd, yd, zd}] += cab * pg;
      }
    }
  }

  // The lowest offending degree below h, reported with its first entry.
  std::size_t worst_degree = d.order;
  Index3 worst_entry;
  for (const auto& [idx, poly] : image) {
    if (poly.is_zero()) continue;
    const std::size_t low = poly.lowest_degree();
    if (low < worst_degree) {
      worst_degree = low;
      worst_entry = idx;
    }
  }
  if (worst_degree < d.order) {
    return {false, fmt::format("coefficient of lambda^{} is nonzero at entry {} (order h={})", worst_degree,
                               format_index(worst_entry), d.order)};
  }

  Tensor leading({t2.labels(Axis::X), t2.labels(Axis::Y), t2.labels(Axis::Z)});
  for (const auto& [idx, poly] : image) leading.add(idx, poly.coefficient(d.order));
  if (leading.is_zero() && !t2.is_zero()) return {false, "lambda^h coefficient is zero tensor"};
  if (!leading.same_form(t2)) {
    for (const auto& [idx, c] : leading.entries()) {
      if (t2.coefficient(idx) != c) {
        return {false, fmt::format("lambda^h coefficient differs from target at entry {}: got {}, want {}",
                                   format_index(idx), to_string(c), to_string(t2.coefficient(idx)))};
      }
    }
    for (const auto& [idx, c] : t2.entries()) {
      if (leading.coefficient(idx) != c) {
        return {false, fmt::format("lambda^h coefficient differs from target at entry {}: got 0, want {}",
                                   format_index(idx), to_string(c))};
      }
    }
  }
  return {true, ""};
}

DegenerationMap identity_map(const std::array<std::size_t, 3>& axis_sizes) {
  DegenerationMap d;
  d.kind = DegenerationMap::Kind::zeroing;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t v = 0; v < axis_sizes[a]; ++v) d.maps[a][{v, v}] = LambdaPoly(Rational(1));
  return d;
}

DegenerationMap zeroing_map(const std::array<std::vector<bool>, 3>& keep) {
  DegenerationMap d;
  d.kind = DegenerationMap::Kind::zeroing;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t v = 0; v < keep[a].size(); ++v)
      if (keep[a][v]) d.maps[a][{v, v}] = LambdaPoly(Rational(1));
  return d;
}

DegenerationMap compose(const DegenerationMap& d1, const DegenerationMap& d2) {
  using Kind = DegenerationMap::Kind;
  const std::size_t m = d2.order + 1;
  DegenerationMap out;
  out.order = m * d1.order + d2.order;
  if (d1.kind == Kind::zeroing && d2.kind == Kind::zeroing) {
    out.kind = Kind::zeroing;
  } else if (d1.kind != Kind::general && d2.kind != Kind::general) {
    out.kind = Kind::monomial;
  } else {
    out.kind = Kind::general;
  }
  for (std::size_t a = 0; a < 3; ++a) {
    std::map<std::size_t, std::vector<std::pair<std::size_t, const LambdaPoly*>>> second;
    for (const auto& [key, poly] : d2.maps[a]) second[key.first].emplace_back(key.second, &poly);
    for (const auto& [key, poly] : d1.maps[a]) {
      auto it = second.find(key.second);
      if (it == second.end()) continue;
      const LambdaPoly stretched = poly.substitute_power(m);
      for (const auto& [target, p2] : it->second) {
        LambdaPoly& slot = out.maps[a][{key.first, target}];
        slot += stretched * *p2;
      }
    }
    for (auto it = out.maps[a].begin(); it != out.maps[a].end();) {
      it = it->second.is_zero() ? out.maps[a].erase(it) : std::next(it);
    }
  }
  return out;
}

namespace {

class InducedMatchingSearch {
 public:
  explicit InducedMatchingSearch(const Tensor& t) {
    for (const auto& [idx, c] : t.entries()) entries_.push_back(idx);
    for (std::size_t a = 0; a < 3; ++a) {
      touching_[a].assign(t.size(kAxes[a]), {});
      used_[a].assign(t.size(kAxes[a]), false);
    }
    for (std::size_t e = 0; e < entries_.size(); ++e) {
      for (std::size_t a = 0; a < 3; ++a) touching_[a][entries_[e][kAxes[a]]].push_back(e);
    }
  }

  std::vector<std::size_t> run() {
    recurse(0);
    return best_;
  }

 private:
  bool free(std::size_t e) const {
    const Index3& i = entries_[e];
    return !used_[0][i.x] && !used_[1][i.y] && !used_[2][i.z];
  }

  bool inside(std::size_t g) const {
    const Index3& i = entries_[g];
    return used_[0][i.x] && used_[1][i.y] && used_[2][i.z];
  }

  void set_used(std::size_t e, bool value) {
    const Index3& i = entries_[e];
    used_[0][i.x] = value;
    used_[1][i.y] = value;
    used_[2][i.z] = value;
  }

  /// After marking e's variables used: no other term may lie inside the kept set.
  bool induced_after_adding(std::size_t e) const {
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t g : touching_[a][entries_[e][kAxes[a]]]) {
        if (g != e && inside(g)) return false;
      }
    }
    return true;
  }

  std::size_t upper_bound(std::size_t from) const {
    std::size_t count = 0;
    std::array<std::vector<bool>, 3> seen;
    std::array<std::size_t, 3> distinct{0, 0, 0};
    for (std::size_t a = 0; a < 3; ++a) seen[a].assign(used_[a].size(), false);
    for (std::size_t e = from; e < entries_.size(); ++e) {
      if (!free(e)) continue;
      ++count;
      for (std::size_t a = 0; a < 3; ++a) {
        const std::size_t v = entries_[e][kAxes[a]];
        if (!seen[a][v]) {
          seen[a][v] = true;
          ++distinct[a];
        }
      }
    }
    return std::min({count, distinct[0], distinct[1], distinct[2]});
  }

  void recurse(std::size_t from) {
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (chosen_.size() + upper_bound(from) <= best_.size()) return;
    for (std::size_t e = from; e < entries_.size(); ++e) {
      if (!free(e)) continue;
      set_used(e, true);
      if (induced_after_adding(e)) {
        chosen_.push_back(e);
        recurse(e + 1);
        chosen_.pop_back();
      }
      set_used(e, false);
      if (chosen_.size() + upper_bound(e + 1) <= best_.size()) return;
    }
  }

  std::vector<Index3> entries_;
  std::array<std::vector<std::vector<std::size_t>>, 3> touching_;
  std::array<std::vector<bool>, 3> used_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
};

}  // namespace

ZeroingSearchResult search_zeroing_independent(const Tensor& t, std::size_t n, std::size_t cap) {
  if (n == 0 || n > 2) throw InputError("zeroing search supports tensor powers n = 1 or 2");
  std::array<std::size_t, 3> sizes{};
  for (Axis a : kAxes) {
    std::size_t s = 1;
    for (std::size_t i = 0; i < n; ++i) s *= t.size(a);
    sizes[axis_index(a)] = s;
  }
  if (*std::max_element(sizes.begin(), sizes.end()) > cap) {
    throw InputError(fmt::format("zeroing search refused: T^{} has axis sizes {}x{}x{}, cap is {}", n, sizes[0],
                                 sizes[1], sizes[2], cap));
  }
  const Tensor power = tensor_power(t, n, 2);
  InducedMatchingSearch search(power);
  const auto chosen = search.run();
  ZeroingSearchResult out;
  out.size = chosen.size();
  std::vector<Index3> all;
  for (const auto& [idx, c] : power.entries()) all.push_back(idx);
  for (std::size_t e : chosen) {
    out.terms.push_back(all[e]);
    out.kept[0].push_back(all[e].x);
    out.kept[1].push_back(all[e].y);
    out.kept[2].push_back(all[e].z);
  }
  for (auto& k : out.kept) std::sort(k.begin(), k.end());
  return out;
}

}  // namespace slicerank
