#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slicerank/optimizer.hpp"
#include "slicerank/partition.hpp"
#include "slicerank/tensor.hpp"

namespace slicerank {

enum class Quantity { slice_rank_upper, slice_rank_lower, omega_lower, value_V };

const char* quantity_name(Quantity q);

/// Exponential rates (natural log, per tensor power) of the Laser Method
/// degeneration for a symmetric distribution p.
struct LaserRates {
  BlockDistribution p;
  double multiplicity_log_rate = 0.0;  // -sum_i p(X_i) log p(X_i)
  double side_log_rate = 0.0;          // (1/2) sum_b p(b) log |X_i(b)|
  double independent_log_rate = 0.0;   // log p_X

  /// multiplicity + 2 side - independent; zero up to rounding.
  double identity_residual() const {
    return multiplicity_log_rate + 2.0 * side_log_rate - independent_log_rate;
  }
};

LaserRates laser_rates(const BlockLayout& layout, const BlockDistribution& p);

struct BoundReport {
  Quantity quantity = Quantity::slice_rank_upper;
  double value = 0.0;
  std::string method;
  std::vector<std::pair<std::string, std::string>> certificate;
  std::vector<std::string> inputs_asserted;
  std::optional<LaserRates> rates;
  BlockDistribution distribution;
  OptimizerDiagnostics diagnostics{0, 0.0, true};
  /// The value is simultaneously an upper and a lower bound on S~.
  bool tight = false;

  void add(const std::string& key, const std::string& value) { certificate.emplace_back(key, value); }
  void add(const std::string& key, double value);
  /// Empty string when the key is absent.
  std::string find(const std::string& key) const;
};

/// `quantity<TAB>value<TAB>method<TAB>k=v;k=v<TAB>citations` on one line.
std::string to_line(const BoundReport& r);

/// S~(T) <= sum_i mu(T_i)^(1/3) for an exact decomposition T = sum_i T_i.
BoundReport bound_mu_sum(const Tensor& t, const std::vector<Tensor>& parts);

/// S~(T) <= max over block distributions of min(p_X, p_Y, p_Z). For a
/// T-symmetric partition the symmetric optimum is reported and the max-min
/// optimum is attached as a cross-check.
BoundReport bound_partition(const Tensor& t, const VariablePartition& p);

/// The remove-an-x bound for T = A + B, given an asserted upper bound
/// s_tilde_b on S~(B). See README for the rate that is reported.
BoundReport bound_remove_x(const Tensor& t, const Tensor& a, const Tensor& b, double s_tilde_b);

/// Lower bound on omega_u from an asserted asymptotic rank and an upper bound
/// on S~: 2 log R / log s when symmetric, else 6 log R / (log s + 2 log R).
/// Clamped to at least 2.
BoundReport omega_lower(const RankFact& rank, double s_upper, bool symmetric);

/// S~(<a,b,c>) = abc / max(a,b,c).
double matmul_asymptotic_slice_rank(std::size_t a, std::size_t b, std::size_t c);

struct T112Analysis {
  std::size_t q = 0;
  double argmax_v = 0.0;        // maximizer of the one-parameter objective
  double stationary_v = 0.0;    // q^2 / (2q^2 + 4), root of its derivative
  double stated_v = 0.0;        // q^2 / (2q^2 + 2)
  double value_1d = 0.0;        // objective at argmax_v
  double value_product = 0.0;   // max of p_X p_Y p_Z on the t_112 partition
  double value_symmetric = 0.0; // symmetric optimum on t_s with the product partition
  double closed_form = 0.0;     // 4 q^2 (q^2 + 2)
  double v23 = 0.0;             // V_{2/3} = value_symmetric^(1/3)
  double v23_closed_form = 0.0; // 2^{2/3} q^{2/3} (q^2 + 2)^{1/3}
  OptimizerDiagnostics product_diagnostics;
  OptimizerDiagnostics symmetric_diagnostics;
};

/// Three independent routes to S~(t_s) for t_s = t_112 (x) rot(t_112) (x) rot^2(t_112).
T112Analysis analyze_t112(std::size_t q);
BoundReport value_t112(std::size_t q);

/// Known lower bound 2^{2/3} q^tau (q^{3 tau} + 2)^{1/3} on V_tau(t_112).
double t112_value_lower(std::size_t q, double tau);
/// Upper bound V_{2/3}^{3 tau / 2} on V_tau(t_112).
double t112_value_upper(std::size_t q, double tau);

/// The one-parameter symmetric objective of CW_q on the standard partition,
/// log of q^{2(1/3-v)} f(v), and its derivative in v.
double cw_log_objective(std::size_t q, double v);
double cw_log_objective_derivative(std::size_t q, double v);
/// log f(v) = -v log v - (2/3-2v) log(2/3-2v) - (1/3+v) log(1/3+v).
double cw_log_f(double v);

struct AppendixResult {
  std::vector<double> v;      // v_q, q = 1..8
  std::vector<double> omega;  // table omega bound, q = 1..8
  bool v_nonincreasing = false;
  double v8 = 0.0;
  double f_v8 = 0.0;
  std::vector<double> relaxed;  // relaxed bound for q = 9..q_max
  bool relaxed_increasing = false;
  bool relaxed_above_floor = false;
  double floor = 0.0;  // min over all q <= q_max
};

inline constexpr double kAppendixFloor = 2.16805;

AppendixResult appendix_analysis(std::size_t q_max);
BoundReport appendix_floor(std::size_t q_max);

}  // namespace slicerank
