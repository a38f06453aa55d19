#include "lchord/error.hpp"

namespace lchord {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::syntax: return "syntax";
    case Errc::self_loop: return "self_loop";
    case Errc::duplicate_edge: return "duplicate_edge";
    case Errc::vertex_out_of_range: return "vertex_out_of_range";
    case Errc::edge_count_mismatch: return "edge_count_mismatch";
    case Errc::empty_set: return "empty_set";
    case Errc::unknown_vertex: return "unknown_vertex";
    case Errc::existing_edge: return "existing_edge";
    case Errc::incomplete_holes: return "incomplete_holes";
    case Errc::not_a_hole_cover: return "not_a_hole_cover";
    case Errc::nc_violation: return "nc_violation";
    case Errc::invalid_partition: return "invalid_partition";
    case Errc::not_chordal: return "not_chordal";
    case Errc::not_subgraph: return "not_subgraph";
    case Errc::limit_exceeded: return "limit_exceeded";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::malformed_cover: return "malformed_cover";
    case Errc::efl_wrong_size: return "efl_wrong_size";
    case Errc::efl_not_clique: return "efl_not_clique";
    case Errc::efl_not_edge_disjoint: return "efl_not_edge_disjoint";
    case Errc::efl_union_mismatch: return "efl_union_mismatch";
  }
  return "unknown";
}

static std::string located(int line, int column, const std::string& what) {
  std::string out = "line " + std::to_string(line);
  if (column > 0) out += ", column " + std::to_string(column);
  return out + ": " + what;
}

ParseError::ParseError(Errc code, int line, int column, const std::string& what)
    : Error(code, located(line, column, what)), line_(line), column_(column) {}

}  // namespace lchord
