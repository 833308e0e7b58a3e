#include "slicerank/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "slicerank/error.hpp"
#include "slicerank/families.hpp"
#include "slicerank/rank.hpp"

namespace slicerank {
namespace {

std::string num(double v) { return fmt::format("{:.12g}", v); }

std::string join_distribution(const BlockLayout& layout, const BlockDistribution& p) {
  std::string out;
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (!out.empty()) out += ",";
    const auto& k = layout.blocks[b];
    out += fmt::format("T{}.{}.{}:{:.10g}", k[0], k[1], k[2], p[b]);
  }
  return out;
}

double entropy2(double k) { return -xlogx(k) - xlogx(1.0 - k); }

}  // namespace

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::slice_rank_upper:
      return "slice_rank_upper";
    case Quantity::slice_rank_lower:
      return "slice_rank_lower";
    case Quantity::omega_lower:
      return "omega_lower";
    case Quantity::value_V:
      return "value_V";
  }
  return "?";
}

LaserRates laser_rates(const BlockLayout& layout, const BlockDistribution& p) {
  LaserRates r;
  r.p = p;
  for (double m : marginals(layout, p, Axis::X)) r.multiplicity_log_rate -= xlogx(m);
  for (std::size_t b = 0; b < p.size(); ++b) {
    r.side_log_rate += 0.5 * p[b] * std::log(layout.part_sizes[0][layout.blocks[b][0]]);
  }
  r.independent_log_rate = log_p_axis(layout, p, Axis::X);
  return r;
}

void BoundReport::add(const std::string& key, double value) { certificate.emplace_back(key, num(value)); }

std::string BoundReport::find(const std::string& key) const {
  for (const auto& [k, v] : certificate)
    if (k == key) return v;
  return "";
}

std::string to_line(const BoundReport& r) {
  std::string cert;
  for (const auto& [k, v] : r.certificate) {
    if (!cert.empty()) cert += ";";
    cert += k + "=" + v;
  }
  std::string cites;
  for (const auto& c : r.inputs_asserted) {
    if (!cites.empty()) cites += "; ";
    cites += c;
  }
  return fmt::format("{}\t{:.10g}\t{}\t{}\t{}", quantity_name(r.quantity), r.value, r.method, cert.empty() ? "-" : cert,
                     cites.empty() ? "-" : cites);
}

BoundReport bound_mu_sum(const Tensor& t, const std::vector<Tensor>& parts) {
  if (parts.empty()) throw InputError("decomposition has no parts");
  Tensor sum({t.labels(Axis::X), t.labels(Axis::Y), t.labels(Axis::Z)});
  for (const auto& part : parts) {
    if (part.sizes() != t.sizes()) throw InputError("decomposition part is over different variable sets");
    for (const auto& [idx, c] : part.entries()) sum.add(idx, c);
  }
  if (!sum.same_form(t)) {
    const Tensor diff = subtract(sum, t);
    const auto& [idx, c] = *diff.entries().begin();
    throw InputError(fmt::format("parts do not sum to T: entry ({},{},{}) differs by {}", idx.x, idx.y, idx.z,
                                 to_string(c)));
  }
  BoundReport r;
  r.quantity = Quantity::slice_rank_upper;
  r.method = "mu-sum";
  std::string measures;
  for (const auto& part : parts) {
    const std::uint64_t mu = part.is_zero() ? 0 : measure(part);
    r.value += std::cbrt(double(mu));
    measures += (measures.empty() ? "" : ",") + std::to_string(mu);
  }
  r.add("parts", std::to_string(parts.size()));
  r.add("measures", measures);
  return r;
}

BoundReport bound_partition(const Tensor& t, const VariablePartition& p) {
  const BlockLayout layout = make_layout(t, p);
  if (layout.blocks.empty()) throw InputError("tensor is zero");
  BoundReport r;
  r.quantity = Quantity::slice_rank_upper;
  const MinmaxResult mm = maximize_minmax(layout);
  if (is_t_symmetric_partition(t, p)) {
    const SymmetricResult sym = maximize_symmetric(layout);
    r.method = "partition-symmetric";
    r.value = sym.value.value(Axis::X);
    r.distribution = sym.p;
    r.diagnostics = sym.diagnostics;
    r.add("kkt_residual", sym.kkt_residual);
    r.add("minmax_value", mm.value.min_value());
    r.add("minmax_gap", mm.diagnostics.gap);
    r.diagnostics.converged = sym.diagnostics.converged && mm.diagnostics.converged;
  } else {
    r.method = "partition-minmax";
    r.value = mm.value.min_value();
    r.distribution = mm.p;
    r.diagnostics = mm.diagnostics;
    r.add("weights", fmt::format("{:.6g},{:.6g},{:.6g}", mm.weights[0], mm.weights[1], mm.weights[2]));
  }
  r.add("blocks", std::to_string(layout.blocks.size()));
  r.add("gap", r.diagnostics.gap);
  r.add("iterations", std::to_string(r.diagnostics.iterations));
  r.add("p", join_distribution(layout, r.distribution));
  return r;
}

BoundReport bound_remove_x(const Tensor& t, const Tensor& a, const Tensor& b, double s_tilde_b) {
  if (a.sizes() != t.sizes() || b.sizes() != t.sizes() || !add(a, b).same_form(t)) {
    throw InputError("A + B does not equal T");
  }
  if (a.is_zero() || b.is_zero()) throw InputError("remove-an-x needs nonzero A and B");
  const double sa = double(x_rank(a));
  const double ma = double(m_value(a));
  const double sb = double(x_rank(b));
  if (!(s_tilde_b > 0.0) || s_tilde_b > sb * (1 + 1e-12)) {
    throw InputError(fmt::format("asserted S~(B) = {} must lie in (0, S_x(B) = {}]", s_tilde_b, sb));
  }
  const double sB = std::min(s_tilde_b, sb);
  const double num_p = std::log(sb / sB);
  const double den_p = std::log(ma / sa) + num_p;
  if (!(den_p > 0.0)) {
    throw InapplicableError("remove-an-x exponent p is 0/0: m(A) = S_x(A) and S_x(B) = S~(B)");
  }
  const double p = num_p / den_p;
  const double log_printed = (1.0 - p) * (std::log(ma) - std::log(sa)) - (p < 1.0 ? (1.0 - p) * std::log(1.0 - p) : 0.0) -
                             xlogx(p);

  // Rate max_k H(k) + min(k log S_x(A) + (1-k) log S_x(B), k log m(A) + (1-k) log S~(B)).
  // The first line is the minimum for k >= p, the second for k <= p.
  auto line1 = [&](double k) { return k * std::log(sa) + (1.0 - k) * std::log(sb); };
  auto line2 = [&](double k) { return k * std::log(ma) + (1.0 - k) * std::log(sB); };
  const double k1 = sa / (sa + sb);
  const double k2 = ma / (ma + sB);
  const double branch1 = k1 >= p ? std::log(sa + sb) : entropy2(p) + line1(p);
  const double branch2 = k2 <= p ? std::log(ma + sB) : entropy2(p) + line2(p);
  const double rate = std::max(branch1, branch2);

  BoundReport r;
  r.quantity = Quantity::slice_rank_upper;
  r.method = "remove-x";
  r.value = std::exp(rate);
  r.add("S_x(A)", sa);
  r.add("m(A)", ma);
  r.add("S_x(B)", sb);
  r.add("S~(B)", sB);
  r.add("p", p);
  r.add("k_max", branch1 >= branch2 ? (k1 >= p ? k1 : p) : (k2 <= p ? k2 : p));
  r.add("printed_closed_form", std::exp(log_printed));
  r.inputs_asserted.push_back(fmt::format("S~(B) <= {:.10g} (caller supplied)", s_tilde_b));
  return r;
}

BoundReport omega_lower(const RankFact& rank, double s_upper, bool symmetric) {
  const double big_r = rank.value;
  if (!(big_r > 1.0)) throw InputError("omega bound needs R~ > 1");
  if (!(s_upper > 1.0)) throw InputError("omega bound needs an S~ upper bound > 1");
  if (s_upper > big_r * (1.0 + 1e-12)) {
    throw InputError(fmt::format("S~ upper bound {} exceeds R~ = {}, contradicting S~ <= R~", s_upper, big_r));
  }
  const double s = std::min(s_upper, big_r);
  BoundReport r;
  r.quantity = Quantity::omega_lower;
  r.method = symmetric ? "omega-symmetric" : "omega-general";
  const double raw = symmetric ? 2.0 * std::log(big_r) / std::log(s)
                               : 6.0 * std::log(big_r) / (std::log(s) + 2.0 * std::log(big_r));
  r.value = std::max(2.0, raw);
  r.add("R~", big_r);
  r.add("S~_upper", s);
  r.add("unclamped", raw);
  r.inputs_asserted.push_back(fmt::format("R~ {} {:.10g}: {}", rank.lower_bound_only ? ">=" : "=", big_r,
                                          rank.citation.empty() ? "caller supplied" : rank.citation));
  return r;
}

double matmul_asymptotic_slice_rank(std::size_t a, std::size_t b, std::size_t c) {
  return double(a) * double(b) * double(c) / double(std::max({a, b, c}));
}

T112Analysis analyze_t112(std::size_t q) {
  if (q == 0) throw InputError("t_112 needs q >= 1");
  T112Analysis out;
  out.q = q;
  const double qq = double(q) * double(q);
  auto g = [&](double v) { return 2.0 * std::log(2.0 * q) + 2.0 * v * std::log(qq) - xlogx(2.0 * v) - xlogx(1.0 - 2.0 * v) + (1.0 - 2.0 * v) * std::log(2.0); };
  auto dg = [&](double v) { return 2.0 * std::log(qq) - 2.0 * std::log(2.0 * v) + 2.0 * std::log(0.5 - v); };
  const Maximum1D m = maximize_1d(g, dg, 0.0, 0.5);
  out.argmax_v = m.argmax;
  out.value_1d = std::exp(m.value);
  out.stationary_v = qq / (2.0 * qq + 4.0);
  out.stated_v = qq / (2.0 * qq + 2.0);
  out.closed_form = 4.0 * qq * (qq + 2.0);

  const Tensor t = make_t112(q);
  const VariablePartition p = t112_partition(q);
  const ProductResult prod = maximize_product(make_layout(t, p));
  out.value_product = std::exp(prod.value.log_value[0] + prod.value.log_value[1] + prod.value.log_value[2]);
  out.product_diagnostics = prod.diagnostics;

  const Tensor ts = cyclic_product(t);
  const VariablePartition ps = cyclic_product_partition(t, p);
  const SymmetricResult sym = maximize_symmetric(make_layout(ts, ps));
  out.value_symmetric = sym.value.value(Axis::X);
  out.symmetric_diagnostics = sym.diagnostics;

  out.v23 = std::cbrt(out.value_symmetric);
  out.v23_closed_form = std::pow(2.0, 2.0 / 3.0) * std::pow(double(q), 2.0 / 3.0) * std::cbrt(qq + 2.0);
  return out;
}

BoundReport value_t112(std::size_t q) {
  const T112Analysis a = analyze_t112(q);
  BoundReport r;
  r.quantity = Quantity::value_V;
  r.method = "t112-value";
  r.value = a.v23;
  r.diagnostics = a.symmetric_diagnostics;
  r.diagnostics.converged = a.symmetric_diagnostics.converged && a.product_diagnostics.converged;
  r.add("tau", "2/3");
  r.add("S~(t_s)", a.value_symmetric);
  r.add("S~(t_s)_product", a.value_product);
  r.add("S~(t_s)_1d", a.value_1d);
  r.add("closed_form_4q^2(q^2+2)", a.closed_form);
  r.add("argmax_v", a.argmax_v);
  r.add("stationary_v", a.stationary_v);
  r.add("stated_v", a.stated_v);
  r.add("V_closed_form", a.v23_closed_form);
  return r;
}

double t112_value_lower(std::size_t q, double tau) {
  return std::pow(2.0, 2.0 / 3.0) * std::pow(double(q), tau) * std::cbrt(std::pow(double(q), 3.0 * tau) + 2.0);
}

double t112_value_upper(std::size_t q, double tau) {
  const double qq = double(q) * double(q);
  const double v23 = std::pow(2.0, 2.0 / 3.0) * std::pow(double(q), 2.0 / 3.0) * std::cbrt(qq + 2.0);
  return std::pow(v23, 1.5 * tau);
}

double cw_log_f(double v) { return -xlogx(v) - xlogx(2.0 / 3.0 - 2.0 * v) - xlogx(1.0 / 3.0 + v); }

double cw_log_objective(std::size_t q, double v) {
  return 2.0 * (1.0 / 3.0 - v) * std::log(double(q)) + cw_log_f(v);
}

double cw_log_objective_derivative(std::size_t q, double v) {
  return -2.0 * std::log(double(q)) - std::log(v) + 2.0 * std::log(2.0 / 3.0 - 2.0 * v) - std::log(1.0 / 3.0 + v);
}

AppendixResult appendix_analysis(std::size_t q_max) {
  if (q_max < 9) throw InputError("appendix check needs q_max >= 9");
  AppendixResult out;
  out.floor = std::numeric_limits<double>::infinity();
  for (std::size_t q = 1; q <= 8; ++q) {
    const Maximum1D m = maximize_1d([q](double v) { return cw_log_objective(q, v); },
                                    [q](double v) { return cw_log_objective_derivative(q, v); }, 0.0, 1.0 / 3.0);
    out.v.push_back(m.argmax);
    out.omega.push_back(2.0 * std::log(double(q + 2)) / m.value);
    out.floor = std::min(out.floor, out.omega.back());
  }
  out.v_nonincreasing = std::is_sorted(out.v.rbegin(), out.v.rend());
  out.v8 = out.v.back();
  out.f_v8 = std::exp(cw_log_f(out.v8));
  out.relaxed_increasing = true;
  out.relaxed_above_floor = true;
  for (std::size_t q = 9; q <= q_max; ++q) {
    const double bound = 2.0 * std::log(double(q + 2)) / std::log(std::pow(double(q), 2.0 / 3.0) * out.f_v8);
    if (!out.relaxed.empty() && !(bound > out.relaxed.back())) out.relaxed_increasing = false;
    if (!(bound >= kAppendixFloor)) out.relaxed_above_floor = false;
    out.relaxed.push_back(bound);
    out.floor = std::min(out.floor, bound);
  }
  return out;
}

BoundReport appendix_floor(std::size_t q_max) {
  const AppendixResult a = appendix_analysis(q_max);
  BoundReport r;
  r.quantity = Quantity::omega_lower;
  r.method = "appendix-floor";
  r.value = a.floor;
  r.add("q_max", std::to_string(q_max));
  r.add("v_8", fmt::format("{:.12f}", a.v8));
  r.add("f(v_8)", a.f_v8);
  r.add("relaxed_q9", a.relaxed.front());
  r.add("v_nonincreasing", a.v_nonincreasing ? "yes" : "no");
  r.add("relaxed_increasing", a.relaxed_increasing ? "yes" : "no");
  r.inputs_asserted.push_back("R~(CW_{q,sigma}) = q+2 (known result)");
  return r;
}

}  // namespace slicerank
