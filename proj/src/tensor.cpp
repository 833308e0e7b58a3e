#include "slicerank/tensor.hpp"

#include <unordered_set>

#include "slicerank/error.hpp"

namespace slicerank {
namespace {

std::vector<std::string> default_labels(char prefix, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, prefix) + "_" + std::to_string(i));
  return out;
}

std::string pair_label(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

Index3 rotate_index(const Index3& i) { return {i.y, i.z, i.x}; }

}  // namespace

char axis_letter(Axis a) { return a == Axis::X ? 'x' : (a == Axis::Y ? 'y' : 'z'); }

Tensor::Tensor(std::size_t nx, std::size_t ny, std::size_t nz)
    : labels_{default_labels('x', nx), default_labels('y', ny), default_labels('z', nz)} {}

Tensor::Tensor(std::array<std::vector<std::string>, 3> labels) : labels_(std::move(labels)) {
  for (Axis a : kAxes) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_[axis_index(a)]) {
      if (!seen.insert(l).second) {
        throw InputError(std::string("duplicate label '") + l + "' on axis " + axis_letter(a));
      }
    }
  }
}

Rational Tensor::coefficient(const Index3& idx) const {
  auto it = entries_.find(idx);
  return it == entries_.end() ? Rational(0) : it->second;
}

void Tensor::add(const Index3& idx, const Rational& c) {
  if (idx.x >= size(Axis::X) || idx.y >= size(Axis::Y) || idx.z >= size(Axis::Z)) {
    throw InputError("term index out of range");
  }
  if (c == 0) return;
  auto [it, inserted] = entries_.try_emplace(idx, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) entries_.erase(it);
}

bool Tensor::same_form(const Tensor& other) const {
  return sizes() == other.sizes() && entries_ == other.entries_;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  std::array<std::vector<std::string>, 3> labels;
  for (Axis ax : kAxes) {
    auto& out = labels[axis_index(ax)];
    out.reserve(a.size(ax) * b.size(ax));
    for (const auto& la : a.labels(ax))
      for (const auto& lb : b.labels(ax)) out.push_back(pair_label(la, lb));
  }
  Tensor result(std::move(labels));
  const auto bs = b.sizes();
  for (const auto& [ia, ca] : a.entries()) {
    for (const auto& [ib, cb] : b.entries()) {
      result.add({ia.x * bs[0] + ib.x, ia.y * bs[1] + ib.y, ia.z * bs[2] + ib.z}, ca * cb);
    }
  }
  return result;
}

Tensor tensor_power(const Tensor& t, std::size_t n, std::size_t cap) {
  if (n == 0) throw InputError("tensor power needs n >= 1");
  if (n > cap) {
    throw InputError("tensor power n=" + std::to_string(n) + " exceeds materialization cap " +
                     std::to_string(cap));
  }
  Tensor result = t;
  for (std::size_t i = 1; i < n; ++i) result = tensor_product(result, t);
  return result;
}

Tensor direct_sum(const Tensor& a, const Tensor& b) {
  std::array<std::vector<std::string>, 3> labels;
  for (Axis ax : kAxes) {
    auto& out = labels[axis_index(ax)];
    for (const auto& l : a.labels(ax)) out.push_back("0:" + l);
    for (const auto& l : b.labels(ax)) out.push_back("1:" + l);
  }
  Tensor result(std::move(labels));
  for (const auto& [i, c] : a.entries()) result.add(i, c);
  const auto as = a.sizes();
  for (const auto& [i, c] : b.entries()) result.add({i.x + as[0], i.y + as[1], i.z + as[2]}, c);
  return result;
}

Tensor n_copies(std::size_t m, const Tensor& t) {
  std::array<std::vector<std::string>, 3> labels;
  for (Axis ax : kAxes) {
    auto& out = labels[axis_index(ax)];
    for (std::size_t copy = 0; copy < m; ++copy)
      for (const auto& l : t.labels(ax)) out.push_back(std::to_string(copy) + ":" + l);
  }
  Tensor result(std::move(labels));
  const auto s = t.sizes();
  for (std::size_t copy = 0; copy < m; ++copy) {
    for (const auto& [i, c] : t.entries()) {
      result.add({i.x + copy * s[0], i.y + copy * s[1], i.z + copy * s[2]}, c);
    }
  }
  return result;
}

Tensor add(const Tensor& a, const Tensor& b) {
  if (a.sizes() != b.sizes()) throw InputError("cannot add tensors over different variable sets");
  Tensor result = a;
  for (const auto& [i, c] : b.entries()) result.add(i, c);
  return result;
}

Tensor subtract(const Tensor& a, const Tensor& b) {
  if (a.sizes() != b.sizes()) throw InputError("cannot subtract tensors over different variable sets");
  Tensor result = a;
  for (const auto& [i, c] : b.entries()) result.add(i, -c);
  return result;
}

Tensor rotate(const Tensor& t) {
  Tensor result({t.labels(Axis::Y), t.labels(Axis::Z), t.labels(Axis::X)});
  for (const auto& [i, c] : t.entries()) result.add(rotate_index(i), c);
  if (t.asymptotic_rank()) result.set_asymptotic_rank(*t.asymptotic_rank());
  return result;
}

Tensor relabel(const Tensor& t, const Relabeling& maps) {
  std::array<std::vector<std::string>, 3> labels;
  for (Axis ax : kAxes) {
    const auto& m = maps[axis_index(ax)];
    if (m.size() != t.size(ax)) throw InputError("relabeling has the wrong length");
    auto& out = labels[axis_index(ax)];
    out.assign(m.size(), {});
    std::vector<bool> hit(m.size(), false);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] >= m.size() || hit[m[i]]) throw InputError("relabeling is not a bijection");
      hit[m[i]] = true;
      out[m[i]] = t.label(ax, i);
    }
  }
  Tensor result(std::move(labels));
  for (const auto& [i, c] : t.entries()) result.add({maps[0][i.x], maps[1][i.y], maps[2][i.z]}, c);
  if (t.asymptotic_rank()) result.set_asymptotic_rank(*t.asymptotic_rank());
  return result;
}

bool is_variable_symmetric(const Tensor& t) {
  if (t.size(Axis::X) != t.size(Axis::Y) || t.size(Axis::Y) != t.size(Axis::Z)) return false;
  // rotate_index is a bijection on stored entries exactly when T is symmetric.
  for (const auto& [i, c] : t.entries()) {
    auto it = t.entries().find(rotate_index(i));
    if (it == t.entries().end() || it->second != c) return false;
  }
  return true;
}

bool is_minimal(const Tensor& t) {
  std::array<std::vector<bool>, 3> used;
  for (Axis ax : kAxes) used[axis_index(ax)].assign(t.size(ax), false);
  for (const auto& [i, c] : t.entries()) {
    used[0][i.x] = used[1][i.y] = used[2][i.z] = true;
  }
  for (const auto& u : used)
    for (bool b : u)
      if (!b) return false;
  return true;
}

Tensor restrict_to(const Tensor& t, const std::array<std::vector<bool>, 3>& keep) {
  for (Axis ax : kAxes) {
    if (keep[axis_index(ax)].size() != t.size(ax)) throw InputError("restriction mask has the wrong length");
  }
  Tensor result({t.labels(Axis::X), t.labels(Axis::Y), t.labels(Axis::Z)});
  for (const auto& [i, c] : t.entries()) {
    if (keep[0][i.x] && keep[1][i.y] && keep[2][i.z]) result.add(i, c);
  }
  return result;
}

Trimmed trim(const Tensor& t) {
  std::array<std::vector<bool>, 3> used;
  for (Axis ax : kAxes) used[axis_index(ax)].assign(t.size(ax), false);
  for (const auto& [i, c] : t.entries()) {
    used[0][i.x] = used[1][i.y] = used[2][i.z] = true;
  }
  Trimmed out;
  Relabeling position;
  std::array<std::vector<std::string>, 3> labels;
  for (Axis ax : kAxes) {
    const auto k = axis_index(ax);
    position[k].assign(t.size(ax), 0);
    for (std::size_t i = 0; i < t.size(ax); ++i) {
      if (!used[k][i]) continue;
      position[k][i] = out.kept[k].size();
      out.kept[k].push_back(i);
      labels[k].push_back(t.label(ax, i));
    }
  }
  out.tensor = Tensor(std::move(labels));
  for (const auto& [i, c] : t.entries()) {
    out.tensor.add({position[0][i.x], position[1][i.y], position[2][i.z]}, c);
  }
  return out;
}

Tensor cyclic_product(const Tensor& t) {
  const std::size_t nx = t.size(Axis::X), ny = t.size(Axis::Y), nz = t.size(Axis::Z);
  std::vector<std::string> labels;
  labels.reserve(nx * ny * nz);
  for (std::size_t a = 0; a < nx; ++a)
    for (std::size_t b = 0; b < ny; ++b)
      for (std::size_t c = 0; c < nz; ++c)
        labels.push_back("(" + t.label(Axis::X, a) + "," + t.label(Axis::Y, b) + "," + t.label(Axis::Z, c) + ")");
  Tensor result({labels, labels, labels});
  auto flat = [&](std::size_t a, std::size_t b, std::size_t c) { return (a * ny + b) * nz + c; };
  // Factor r contributes one term e_r; the x-variable collects (e1.x, e2.y, e3.z),
  // the y-variable (e3.x, e1.y, e2.z) and the z-variable (e2.x, e3.y, e1.z).
  for (const auto& [e1, c1] : t.entries()) {
    for (const auto& [e2, c2] : t.entries()) {
      const Rational c12 = c1 * c2;
      for (const auto& [e3, c3] : t.entries()) {
        result.add({flat(e1.x, e2.y, e3.z), flat(e3.x, e1.y, e2.z), flat(e2.x, e3.y, e1.z)}, c12 * c3);
      }
    }
  }
  return result;
}

}  // namespace slicerank
