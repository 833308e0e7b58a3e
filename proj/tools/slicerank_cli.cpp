#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "slicerank/bounds.hpp"
#include "slicerank/degeneration.hpp"
#include "slicerank/error.hpp"
#include "slicerank/families.hpp"
#include "slicerank/laser.hpp"
#include "slicerank/rank.hpp"
#include "slicerank/tables.hpp"
#include "slicerank/text_format.hpp"

namespace {

using namespace slicerank;

enum Exit : int { kPass = 0, kMismatch = 1, kNoConvergence = 2, kParse = 3, kInapplicable = 4 };

enum class Format { plain, tsv };

struct Options {
  Format format = Format::plain;
  std::uint64_t seed = 1;
  std::size_t q_max = 0;
  std::size_t q = 0;
  double tol = 0.0;
  std::string family;
  std::string mode = "partition";
  std::vector<std::string> files;
  std::string out_prefix;
  std::vector<std::size_t> block;
  bool assume_degeneration = false;
};

const char* status(bool ok) { return ok ? "PASS" : "FAIL"; }

void print_report(const BoundReport& r, Format format) {
  if (format == Format::tsv) {
    std::cout << to_line(r) << '\n';
    return;
  }
  if (r.method == "laser") {
    std::cout << fmt::format("S~ = Q~ = {:.5f} (tight)\n", r.value);
  } else {
    std::cout << fmt::format("S~ <= {:.5f} ({})\n", r.value, r.method);
  }
  for (const auto& [k, v] : r.certificate) std::cout << "  " << k << " = " << v << '\n';
  for (const auto& a : r.inputs_asserted) std::cout << "  assumes: " << a << '\n';
  std::cout << fmt::format("  converged = {}\n", r.diagnostics.converged ? "yes" : "no");
}

int cmd_table(const Options& o) {
  const auto family = parse_family(o.family);
  if (!family) throw InputError("unknown family '" + o.family + "' (expected cw, cw-small or tq-lower)");
  const double tol = o.tol > 0.0 ? o.tol : kGoldenTolerance;
  const std::size_t q_min = family_q_min(*family);
  const std::size_t q_max = o.q_max > 0 ? o.q_max : (*family == Family::cw ? 8 : (*family == Family::cw_small ? 7 : 5));
  if (q_max < q_min) throw InputError(fmt::format("--qmax must be at least {}", q_min));
  const auto rows = compute_table(*family, q_min, q_max);
  bool all_match = true;
  bool all_converged = true;
  if (o.format == Format::plain) std::cout << fmt::format("{:>3}  {:>10}  {:>11}  {}\n", "q", "slice_rank", "omega_lower", "status");
  for (const auto& row : rows) {
    const bool ok = row.matches(tol) && row.tight();
    const char* st = !row.expected ? (row.tight() ? "n/a" : "FAIL") : status(ok);
    all_match = all_match && (row.expected ? ok : row.tight());
    all_converged = all_converged && row.converged;
    if (o.format == Format::tsv) {
      std::cout << fmt::format("{}\t{:.10g}\t{:.10g}\t{}\t{:.10g}\t{:.10g}\n", row.q, row.slice_rank, row.omega, st,
                               row.laser_value, row.minmax_value);
    } else {
      std::cout << fmt::format("{:>3}  {:>10.5f}  {:>11.5f}  {}\n", row.q, row.slice_rank, row.omega, st);
    }
  }
  if (!all_converged) return kNoConvergence;
  return all_match ? kPass : kMismatch;
}

int cmd_t112(const Options& o) {
  const std::size_t q = o.q > 0 ? o.q : 2;
  const T112Analysis a = analyze_t112(q);
  const double tol = o.tol > 0.0 ? o.tol : 1e-6;
  auto rel = [](double x, double y) { return std::abs(x - y) / std::abs(y); };
  const bool value_ok = rel(a.value_symmetric, a.closed_form) <= tol && rel(a.value_product, a.closed_form) <= tol &&
                        rel(a.value_1d, a.closed_form) <= tol;
  const bool v_ok = rel(a.v23, a.v23_closed_form) <= tol;
  const bool stationary_ok = std::abs(a.argmax_v - a.stationary_v) <= 1e-8;
  const bool stated_ok = std::abs(a.argmax_v - a.stated_v) <= 1e-8;
  if (o.format == Format::tsv) {
    std::cout << to_line(value_t112(q)) << '\n';
  } else {
    std::cout << fmt::format("q = {}\n", q);
    std::cout << fmt::format("S~(t_s) symmetric optimizer   {:.10f}\n", a.value_symmetric);
    std::cout << fmt::format("S~(t_s) product optimizer     {:.10f}\n", a.value_product);
    std::cout << fmt::format("S~(t_s) one-parameter         {:.10f}\n", a.value_1d);
    std::cout << fmt::format("4q^2(q^2+2)                   {:.10f}  {}\n", a.closed_form, status(value_ok));
    std::cout << fmt::format("V_2/3                         {:.10f}\n", a.v23);
    std::cout << fmt::format("2^(2/3) q^(2/3) (q^2+2)^(1/3) {:.10f}  {}\n", a.v23_closed_form, status(v_ok));
    std::cout << fmt::format("argmax v                      {:.12f}\n", a.argmax_v);
    std::cout << fmt::format("q^2/(2q^2+4)                  {:.12f}  {}\n", a.stationary_v, status(stationary_ok));
    std::cout << fmt::format("q^2/(2q^2+2)                  {:.12f}  {}\n", a.stated_v, status(stated_ok));
  }
  if (!a.product_diagnostics.converged || !a.symmetric_diagnostics.converged) return kNoConvergence;
  return value_ok && v_ok && stationary_ok && stated_ok ? kPass : kMismatch;
}

int cmd_appendix(const Options& o) {
  const std::size_t q_max = o.q_max > 0 ? o.q_max : 1000;
  const AppendixResult a = appendix_analysis(q_max);
  const bool floor_ok = a.floor >= kAppendixFloor && a.relaxed_above_floor;
  if (o.format == Format::tsv) {
    std::cout << to_line(appendix_floor(q_max)) << '\n';
  } else {
    std::cout << fmt::format("v_8 = {:.12f}\n", a.v8);
    std::cout << fmt::format("f(v_8) = {:.8f}\n", a.f_v8);
    std::cout << fmt::format("relaxed bound at q=9 = {:.8f}\n", a.relaxed.front());
    std::cout << fmt::format("v_q nonincreasing for q=1..8: {}\n", a.v_nonincreasing ? "yes" : "no");
    std::cout << fmt::format("relaxed bound increasing for q=9..{}: {}\n", q_max, a.relaxed_increasing ? "yes" : "no");
    std::cout << fmt::format("floor over q<={} = {:.8f} >= {:.5f} {}\n", q_max, a.floor, kAppendixFloor, status(floor_ok));
  }
  return floor_ok && a.relaxed_increasing && a.v_nonincreasing ? kPass : kMismatch;
}

/// Slices T along the X parts of P, one tensor per part, over T's variable sets.
std::vector<Tensor> x_part_slices(const Tensor& t, const VariablePartition& p) {
  std::vector<Tensor> out;
  for (const auto& part : p.parts(Axis::X)) {
    std::array<std::vector<bool>, 3> keep{std::vector<bool>(t.size(Axis::X), false),
                                          std::vector<bool>(t.size(Axis::Y), true),
                                          std::vector<bool>(t.size(Axis::Z), true)};
    for (std::size_t v : part.members) keep[0][v] = true;
    out.push_back(restrict_to(t, keep));
  }
  return out;
}

int cmd_bound(const Options& o) {
  if (o.files.size() != 2) throw InputError("bound needs a tensor file and a partition file");
  const Tensor t = read_tensor_file(o.files[0]);
  const VariablePartition p = read_partition_file(o.files[1]);
  p.validate(t.sizes());
  BoundReport r;
  if (o.mode == "partition") {
    r = bound_partition(t, p);
  } else if (o.mode == "laser") {
    r = laser_lower_bound(t, p, o.assume_degeneration, o.seed);
  } else if (o.mode == "mu-sum") {
    r = bound_mu_sum(t, x_part_slices(t, p));
  } else if (o.mode == "remove-x") {
    if (p.num_parts(Axis::X) < 2) throw InapplicableError("remove-x needs at least two X parts");
    const Tensor a = x_part_slices(t, p).front();
    const Tensor b = subtract(t, a);
    double s_tilde_b = double(x_rank(b));
    if (!b.is_zero()) s_tilde_b = std::min(s_tilde_b, bound_partition(b, p).value);
    r = bound_remove_x(t, a, b, s_tilde_b);
  } else {
    throw InputError("unknown mode '" + o.mode + "' (expected partition, mu-sum, remove-x or laser)");
  }
  print_report(r, o.format);
  return r.diagnostics.converged ? kPass : kNoConvergence;
}

int cmd_verify(const Options& o) {
  if (o.files.size() != 3) throw InputError("verify-degeneration needs source, target and map files");
  const Tensor t1 = read_tensor_file(o.files[0]);
  const Tensor t2 = read_tensor_file(o.files[1]);
  const DegenerationMap d = read_degeneration_map_file(o.files[2]);
  const DegenerationCheck c = verify_degeneration(t1, t2, d);
  if (c.ok) {
    std::cout << fmt::format("OK order h={}\n", d.order);
    return kPass;
  }
  std::cout << "FAIL " << c.diagnostic << '\n';
  return kMismatch;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

int cmd_emit(const Options& o) {
  Tensor t;
  VariablePartition p;
  if (o.family == "t112") {
    t = make_t112(o.q);
    p = t112_partition(o.q);
  } else {
    const auto family = parse_family(o.family);
    if (!family) throw InputError("unknown family '" + o.family + "' (expected cw, cw-small, tq-lower or t112)");
    t = family_tensor(*family, o.q);
    p = family_partition(*family, o.q);
  }
  const std::string prefix = o.out_prefix.empty() ? o.family + std::to_string(o.q) : o.out_prefix;
  std::ostringstream ts, ps;
  write_tensor(ts, t);
  write_partition(ps, p);
  write_file(prefix + ".tensor", ts.str());
  write_file(prefix + ".partition", ps.str());
  std::cout << prefix << ".tensor\n" << prefix << ".partition\n";
  if (!o.block.empty()) {
    if (o.block.size() != 3) throw InputError("--block takes three part indices");
    const BlockKey key{o.block[0], o.block[1], o.block[2]};
    const BlockSet bs = blocks(t, p);
    const auto it = bs.find(key);
    if (it == bs.end()) throw InputError(fmt::format("block ({},{},{}) is zero or out of range", key[0], key[1], key[2]));
    std::array<std::vector<bool>, 3> keep;
    for (Axis a : kAxes) {
      keep[axis_index(a)].assign(t.size(a), false);
      for (std::size_t v : p.part(a, key[axis_index(a)]).members) keep[axis_index(a)][v] = true;
    }
    const std::string stem = fmt::format("{}_block{}{}{}", prefix, key[0], key[1], key[2]);
    std::ostringstream bt, bm;
    write_tensor(bt, it->second);
    write_degeneration_map(bm, zeroing_map(keep));
    write_file(stem + ".tensor", bt.str());
    write_file(stem + ".map", bm.str());
    std::cout << stem << ".tensor\n" << stem << ".map\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slice rank bounds, laser-readiness checks and omega lower bounds for 3-tensors"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  const std::map<std::string, Format> formats{{"plain", Format::plain}, {"tsv", Format::tsv}};
  app.add_option("--format", o.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--seed", o.seed, "Seed for randomized searches");

  auto* table = app.add_subcommand("table", "Reproduce a table of slice rank and omega bounds");
  table->add_option("family", o.family, "cw, cw-small or tq-lower")->required();
  table->add_option("--qmax", o.q_max, "Largest q")->check(CLI::PositiveNumber);
  table->add_option("--tol", o.tol, "Golden comparison tolerance")->check(CLI::PositiveNumber);

  auto* t112 = app.add_subcommand("t112", "Value of t_112 at tau = 2/3 by three routes");
  t112->add_option("--q", o.q, "q")->check(CLI::PositiveNumber);
  t112->add_option("--tol", o.tol, "Relative tolerance")->check(CLI::PositiveNumber);

  auto* appendix = app.add_subcommand("appendix", "Floor of the CW omega bound over all q");
  appendix->add_option("--qmax", o.q_max, "Largest q checked (>= 9)")->check(CLI::Range(9, 100000000));

  auto* bound = app.add_subcommand("bound", "Bound S~ of a tensor file under a partition file");
  bound->add_option("--mode", o.mode, "partition, mu-sum, remove-x or laser");
  bound->add_flag("--assume-degeneration", o.assume_degeneration, "Accept block degenerations as given (laser)");
  bound->add_option("files", o.files, "tensor file, partition file")->required()->expected(2);

  auto* verify = app.add_subcommand("verify-degeneration", "Check a degeneration map between two tensor files");
  verify->add_option("files", o.files, "source tensor, target tensor, map")->required()->expected(3);

  auto* emit = app.add_subcommand("emit", "Write a family tensor and its partition to files");
  emit->add_option("family", o.family, "cw, cw-small, tq-lower or t112")->required();
  emit->add_option("--q", o.q, "q")->required()->check(CLI::NonNegativeNumber);
  emit->add_option("--out", o.out_prefix, "Output path prefix");
  emit->add_option("--block", o.block, "Also write block i j k and its zeroing map")->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*table) return cmd_table(o);
    if (*t112) return cmd_t112(o);
    if (*appendix) return cmd_appendix(o);
    if (*bound) return cmd_bound(o);
    if (*verify) return cmd_verify(o);
    if (*emit) return cmd_emit(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const InapplicableError& e) {
    std::cerr << "inapplicable: " << e.what() << '\n';
    return kInapplicable;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
  return kParse;
}
