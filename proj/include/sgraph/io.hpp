#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sgraph/signed_graph.hpp"

namespace sgraph {

/// Malformed input. line/column are 1-based; 0 means "not applicable".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// .sg text format
//
//   n m
//   u v s        (m lines, 1-based, u < v, s in {+,-})
//
// Lines whose first character is '#' are comments. Blank lines are ignored
// on input and never written.

std::string to_sg(const SignedGraph& g);
SignedGraph parse_sg(std::string_view text);

/// Parses consecutive `n m` / `u v` blocks (the unsigned variant of .sg).
/// Every edge is returned positive.
std::vector<SignedGraph> parse_unsigned_sg_list(std::string_view text);

SignedGraph read_sg_file(const std::filesystem::path& path);
void write_sg_file(const std::filesystem::path& path, const SignedGraph& g);

// graph6
//
// N(n) followed by R(x): N(n) is one byte n+63 for n <= 62, byte 126 and
// three 6-bit groups for n <= 258047, else bytes 126 126 and six groups.
// R(x) packs the upper triangle column by column (x(0,1), x(0,2), x(1,2),
// x(0,3), ...), big-endian within each 6-bit group, zero padded, each group
// emitted as value+63. Signs are not encoded; parsed edges are positive.

std::string to_graph6(const SignedGraph& g);
SignedGraph parse_graph6(std::string_view record);

/// Reads a graph list: graph6 records one per line (optional `>>graph6<<`
/// header), or unsigned .sg blocks. The format is detected from the first
/// non-comment line.
std::vector<SignedGraph> ingest_graph_list(const std::filesystem::path& path);
std::vector<SignedGraph> ingest_graph_list_text(std::string_view text);

}  // namespace sgraph
