#pragma once

#include <stdexcept>
#include <string>

namespace lchord {

enum class Errc {
  syntax,
  self_loop,
  duplicate_edge,
  vertex_out_of_range,
  edge_count_mismatch,
  empty_set,
  unknown_vertex,
  existing_edge,
  incomplete_holes,
  not_a_hole_cover,
  nc_violation,
  invalid_partition,
  not_chordal,
  not_subgraph,
  limit_exceeded,
  invalid_argument,
  malformed_cover,
  efl_wrong_size,
  efl_not_clique,
  efl_not_edge_disjoint,
  efl_union_mismatch,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Input text rejected by a parser. Line and column are 1-based; column is 0
/// when the diagnostic applies to a whole line.
class ParseError : public Error {
 public:
  ParseError(Errc code, int line, int column, const std::string& what);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace lchord
