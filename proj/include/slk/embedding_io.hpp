#pragma once

#include <iosfwd>
#include <string>

#include "slk/geometry.hpp"

namespace slk {

/// Embedding file format, version 1:
/// {
///   "format_version": 1,
///   "n": 6,
///   "vertices": [[xn,xd,yn,yd,zn,zd], ...],   // n entries, vertex i at index i-1
///   "bends": { "i-j": [[xn,xd,yn,yd,zn,zd], ...], ... }   // optional
/// }
/// Coordinates are integer-pair rationals. Unknown top-level fields are
/// rejected. Throws ParseError with a location hint on malformed input.
PLEmbedding read_embedding(std::istream& in, const std::string& source_name = "<stream>");
PLEmbedding read_embedding_file(const std::string& path);

void write_embedding(std::ostream& out, const PLEmbedding& e);
void write_embedding_file(const std::string& path, const PLEmbedding& e);

} // namespace slk
