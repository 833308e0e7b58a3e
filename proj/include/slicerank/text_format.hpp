#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "slicerank/degeneration.hpp"
#include "slicerank/partition.hpp"
#include "slicerank/tensor.hpp"

namespace slicerank {

// All formats are line oriented and whitespace separated; '#' starts a comment.
//
// Tensor:      xvars n / yvars n / zvars n, then one term per line `i j k coeff`
//              with 0-based indices and coeff an integer or num/den.
// Partition:   one part per line `axis label index index ...`, axis in {x,y,z}.
// Degeneration map:
//              `alpha src dst exponent coeff` adds coeff * L^exponent to alpha(src, dst),
//              `alphaP src dst exp:coeff exp:coeff ...` gives a whole polynomial,
//              likewise beta / gamma for Y / Z, `order h`, and optionally
//              `kind general|monomial|zeroing`.
//
// Readers throw ParseError with the 1-based line number.

Tensor read_tensor(std::istream& in);
void write_tensor(std::ostream& out, const Tensor& t);

VariablePartition read_partition(std::istream& in);
void write_partition(std::ostream& out, const VariablePartition& p);

DegenerationMap read_degeneration_map(std::istream& in);
void write_degeneration_map(std::ostream& out, const DegenerationMap& d);

Tensor read_tensor_file(const std::string& path);
VariablePartition read_partition_file(const std::string& path);
DegenerationMap read_degeneration_map_file(const std::string& path);

}  // namespace slicerank
