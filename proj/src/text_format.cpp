#include "slicerank/text_format.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "slicerank/error.hpp"

namespace slicerank {
namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

/// Non-empty lines with comments stripped, split on whitespace.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream words(text);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(std::move(w));
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::size_t parse_index(const Line& line, const std::string& token) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line.number, "expected a nonnegative integer, got '" + token + "'");
  return value;
}

Rational parse_coefficient(const Line& line, const std::string& token) {
  try {
    return parse_rational(token);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line.number, e.what());
  }
}

std::optional<Axis> axis_from(const std::string& s) {
  if (s == "x" || s == "X") return Axis::X;
  if (s == "y" || s == "Y") return Axis::Y;
  if (s == "z" || s == "Z") return Axis::Z;
  return std::nullopt;
}

template <typename T>
T with_file(const std::string& path, T (*reader)(std::istream&)) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return reader(in);
}

}  // namespace

Tensor read_tensor(std::istream& in) {
  std::array<std::optional<std::size_t>, 3> sizes;
  std::optional<Tensor> t;
  for (const Line& line : tokenize(in)) {
    const auto& tok = line.tokens;
    if (tok[0] == "xvars" || tok[0] == "yvars" || tok[0] == "zvars") {
      if (t) throw ParseError(line.number, "header after the first term");
      if (tok.size() != 2) throw ParseError(line.number, "expected '" + tok[0] + " n'");
      const std::size_t a = tok[0][0] == 'x' ? 0 : (tok[0][0] == 'y' ? 1 : 2);
      if (sizes[a]) throw ParseError(line.number, "duplicate " + tok[0] + " header");
      sizes[a] = parse_index(line, tok[1]);
      continue;
    }
    if (!t) {
      if (!sizes[0] || !sizes[1] || !sizes[2]) throw ParseError(line.number, "term before xvars/yvars/zvars headers");
      t.emplace(*sizes[0], *sizes[1], *sizes[2]);
    }
    if (tok.size() != 4) throw ParseError(line.number, "expected 'i j k coefficient'");
    const Index3 idx{parse_index(line, tok[0]), parse_index(line, tok[1]), parse_index(line, tok[2])};
    if (idx.x >= *sizes[0] || idx.y >= *sizes[1] || idx.z >= *sizes[2]) {
      throw ParseError(line.number, fmt::format("index ({},{},{}) out of range", idx.x, idx.y, idx.z));
    }
    t->add(idx, parse_coefficient(line, tok[3]));
  }
  if (!t) {
    if (!sizes[0] || !sizes[1] || !sizes[2]) throw ParseError(0, "missing xvars/yvars/zvars headers");
    t.emplace(*sizes[0], *sizes[1], *sizes[2]);
  }
  return *t;
}

void write_tensor(std::ostream& out, const Tensor& t) {
  out << "xvars " << t.size(Axis::X) << "\nyvars " << t.size(Axis::Y) << "\nzvars " << t.size(Axis::Z) << "\n";
  for (const auto& [idx, c] : t.entries()) out << idx.x << ' ' << idx.y << ' ' << idx.z << ' ' << to_string(c) << '\n';
}

VariablePartition read_partition(std::istream& in) {
  std::array<std::vector<Part>, 3> parts;
  for (const Line& line : tokenize(in)) {
    const auto& tok = line.tokens;
    const auto axis = axis_from(tok[0]);
    if (!axis) throw ParseError(line.number, "expected axis x, y or z, got '" + tok[0] + "'");
    if (tok.size() < 3) throw ParseError(line.number, "expected 'axis label index ...'");
    Part part{tok[1], {}};
    for (std::size_t i = 2; i < tok.size(); ++i) part.members.push_back(parse_index(line, tok[i]));
    parts[axis_index(*axis)].push_back(std::move(part));
  }
  try {
    return VariablePartition(std::move(parts));
  } catch (const InputError& e) {
    throw ParseError(0, e.what());
  }
}

void write_partition(std::ostream& out, const VariablePartition& p) {
  for (Axis a : kAxes) {
    for (const auto& part : p.parts(a)) {
      out << axis_letter(a) << ' ' << part.label;
      for (std::size_t v : part.members) out << ' ' << v;
      out << '\n';
    }
  }
}

DegenerationMap read_degeneration_map(std::istream& in) {
  DegenerationMap d;
  bool saw_kind = false;
  for (const Line& line : tokenize(in)) {
    const auto& tok = line.tokens;
    const std::string& head = tok[0];
    if (head == "order") {
      if (tok.size() != 2) throw ParseError(line.number, "expected 'order h'");
      d.order = parse_index(line, tok[1]);
      continue;
    }
    if (head == "kind") {
      if (tok.size() != 2) throw ParseError(line.number, "expected 'kind general|monomial|zeroing'");
      if (tok[1] == "general") d.kind = DegenerationMap::Kind::general;
      else if (tok[1] == "monomial") d.kind = DegenerationMap::Kind::monomial;
      else if (tok[1] == "zeroing") d.kind = DegenerationMap::Kind::zeroing;
      else throw ParseError(line.number, "unknown kind '" + tok[1] + "'");
      saw_kind = true;
      continue;
    }
    const bool poly_form = !head.empty() && head.back() == 'P';
    const std::string name = poly_form ? head.substr(0, head.size() - 1) : head;
    std::size_t axis;
    if (name == "alpha") axis = 0;
    else if (name == "beta") axis = 1;
    else if (name == "gamma") axis = 2;
    else throw ParseError(line.number, "unknown directive '" + head + "'");
    if (tok.size() < 3) throw ParseError(line.number, "expected '" + head + " src dst ...'");
    const std::pair<std::size_t, std::size_t> key{parse_index(line, tok[1]), parse_index(line, tok[2])};
    LambdaPoly& slot = d.maps[axis][key];
    if (poly_form) {
      for (std::size_t i = 3; i < tok.size(); ++i) {
        const auto colon = tok[i].find(':');
        if (colon == std::string::npos) throw ParseError(line.number, "expected exponent:coefficient, got '" + tok[i] + "'");
        slot.add_term(parse_index(line, tok[i].substr(0, colon)), parse_coefficient(line, tok[i].substr(colon + 1)));
      }
    } else {
      if (tok.size() != 5) throw ParseError(line.number, "expected '" + head + " src dst exponent coefficient'");
      slot.add_term(parse_index(line, tok[3]), parse_coefficient(line, tok[4]));
    }
  }
  for (auto& m : d.maps) {
    for (auto it = m.begin(); it != m.end();) it = it->second.is_zero() ? m.erase(it) : std::next(it);
  }
  if (!saw_kind) d.kind = DegenerationMap::Kind::general;
  try {
    d.validate();
  } catch (const InputError& e) {
    throw ParseError(0, e.what());
  }
  return d;
}

void write_degeneration_map(std::ostream& out, const DegenerationMap& d) {
  static constexpr const char* kNames[] = {"alpha", "beta", "gamma"};
  out << "kind " << kind_name(d.kind) << '\n';
  for (std::size_t a = 0; a < 3; ++a) {
    for (const auto& [key, poly] : d.maps[a]) {
      out << kNames[a] << "P " << key.first << ' ' << key.second;
      for (const auto& [e, c] : poly.terms()) out << ' ' << e << ':' << to_string(c);
      out << '\n';
    }
  }
  out << "order " << d.order << '\n';
}

Tensor read_tensor_file(const std::string& path) { return with_file<Tensor>(path, &read_tensor); }
VariablePartition read_partition_file(const std::string& path) {
  return with_file<VariablePartition>(path, &read_partition);
}
DegenerationMap read_degeneration_map_file(const std::string& path) {
  return with_file<DegenerationMap>(path, &read_degeneration_map);
}

}  // namespace slicerank
