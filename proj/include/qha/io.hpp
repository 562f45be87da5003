#pragma once

#include <string>

#include "qha/operators.hpp"
#include "qha/phase_space.hpp"

namespace qha {

/// Grid/operator/window container files. Layout, byte-exact:
///   line 1: ASCII magic ("QHAGRID1" | "QHAOP1" | "QHAVEC1") + '\n'
///   line 2: single-line JSON header {"N":...,"L":...,"kind":...} + '\n'
///   payload: little-endian float64 (re, im) pairs, row-major; N^2 pairs
///            for grids/operators, N pairs for windows.
/// Readers validate the magic, the header fields, and the exact payload
/// length; FileFormatError messages name the offending byte offset.

void write_symbol(const std::string& path, const SymbolGrid& s);
SymbolGrid read_symbol(const std::string& path);

void write_operator(const std::string& path, const OperatorMatrix& t);
OperatorMatrix read_operator(const std::string& path);

void write_window(const std::string& path, const WindowVector& w);
WindowVector read_window(const std::string& path);

}  // namespace qha
