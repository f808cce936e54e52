#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "sfvs/graph.hpp"

namespace sfvs {

class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// Text format, 1-indexed vertices, '#' starts a comment:
//   p sfvs <n> <m>
//   k <k>
//   e <u> <v>     (m lines)
//   t <v>
//   m <u> <v>     (must repeat an e pair)
// Parsed ids are shifted down by one.
Instance parse_instance(std::istream& in);
Instance parse_instance_string(const std::string& text);
Instance read_instance_file(const std::string& path);

// Canonical form: live vertices renumbered 1..n in ascending id order, edges,
// terminals and marks sorted.
std::string serialize(const Instance& inst);

// Solution: one 1-indexed id per line, or the token NO. nullopt means NO.
std::optional<VertexSet> parse_solution(std::istream& in);
std::optional<VertexSet> read_solution_file(const std::string& path);
std::string serialize_solution(const std::optional<VertexSet>& s);

} // namespace sfvs
