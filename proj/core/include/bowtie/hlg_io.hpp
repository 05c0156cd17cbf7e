#pragma once

#include <iosfwd>
#include <string>

#include "bowtie/hypergraph.hpp"

namespace bowtie {

// HLG v1 text format:
//   line 1:      n r t m
//   lines 2..m+1: r space-separated vertex ids (any order; stored sorted)
// Trailing blank lines are tolerated; anything else malformed raises
// ParseError with a 1-based line number. Parsing checks line shape and
// vertex ranges only; run validate() for the pairwise invariants.
LinearHypergraph parse_hlg(std::istream& in);
LinearHypergraph parse_hlg_string(const std::string& text);
LinearHypergraph read_hlg_file(const std::string& path);

// Canonical serialization: sorted edges, single spaces, '\n' line endings.
std::string to_hlg_string(const LinearHypergraph& g);
void write_hlg_file(const std::string& path, const LinearHypergraph& g);

// Digest of a file's raw bytes (fnv1a64 hex); certificates embed this to pin
// the instance they were computed from.
std::string file_digest(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace bowtie
