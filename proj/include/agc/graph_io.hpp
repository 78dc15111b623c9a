#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "agc/graph.hpp"

namespace agc {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + message),
        line(line_no) {}
};

/*
 * Graph file format (UTF-8, line oriented):
 *
 *   actors <count>
 *   <id> <blocked|unblocked>[ root]     one line per actor
 *   edges
 *   <src-id> <dst-id>                   one line per edge
 *
 * Lines whose first non-space character is '#' are comments; blank lines are
 * ignored. The actor section may be absent for an empty actor set. Duplicate
 * edges are de-duplicated silently. A root declared blocked is normalized to
 * unblocked and reported through *warnings.
 */
ActorGraph parse_graph(std::string_view text, std::vector<std::string>* warnings = nullptr);

std::string serialize_graph(const ActorGraph& g);

// Same file format; passive roots are written unblocked, other nodes blocked.
// When a map is given, the actor-to-node table is appended as comments.
std::string serialize_passive(const PassiveGraph& p, const NodeMap* map = nullptr);

// DOT export. Roots render as triangles; unblocked actors bold, blocked
// actors dashed. Passive nodes carry object/queue labels when a paired map
// is supplied.
std::string to_dot(const ActorGraph& g);
std::string to_dot(const PassiveGraph& p, const NodeMap* map = nullptr);

ActorGraph load_graph_file(const std::string& path, std::vector<std::string>* warnings = nullptr);
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace agc
