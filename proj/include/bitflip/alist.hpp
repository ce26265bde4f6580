#pragma once

#include <string>

#include "bitflip/gf2.hpp"

namespace bitflip {

// Plain-text sparse parity-check interchange format:
//   line 1: "N M" (columns rows)     line 2: "cmax rmax"
//   line 3: N column weights         line 4: M row weights
//   N lines of 1-based row indices per column, zero-padded to cmax,
//   M lines of 1-based column indices per row, zero-padded to rmax.
// The writer emits exactly this layout; write(parse(x)) == x for files it
// produced.
BinaryMatrix parse_alist(const std::string& text);
std::string write_alist(const BinaryMatrix& h);

BinaryMatrix read_alist_file(const std::string& path);
void write_alist_file(const std::string& path, const BinaryMatrix& h);

}  // namespace bitflip
