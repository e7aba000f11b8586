#pragma once

#include "mfg/spectral.hpp"

#include <iosfwd>
#include <string>

namespace mfg {

// Plain-text field format with exact round-trip:
//   header line: d K N_t T
//   one line per coefficient: t-index, k components (d of them), re, im
void write_field(std::ostream& os, const SpaceTimeField& f);
SpaceTimeField read_field(std::istream& is);

void write_field_file(const std::string& path, const SpaceTimeField& f);
SpaceTimeField read_field_file(const std::string& path);

// 17-significant-digit decimal form that round-trips any double
std::string format_double(double x);

} // namespace mfg
