#pragma once

#include <iosfwd>
#include <string>

#include "tri/trigraph.hpp"

namespace tri {

// `.tri` text format:
//
//   trigraph <n>
//   <u> <v> <s>      one line per pair, s in {+, 0, -}
//
// Omitted pairs are strongly anti-adjacent, `#` starts a comment, vertices are
// 0-indexed. The writer emits every pair whose value is not `-`, in
// lexicographic pair order.

/// Throws InputError with a line number on malformed input.
Trigraph read_tri(std::istream& in);
Trigraph parse_tri(const std::string& text);
Trigraph load_tri(const std::string& path);

void write_tri(std::ostream& out, const Trigraph& g);
std::string format_tri(const Trigraph& g);

}  // namespace tri
