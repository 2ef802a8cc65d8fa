#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chernob/germs.hpp"

namespace chernob {

// Structured contents of a problem file. Keys: "variables", "equations",
// "partition", and exactly one of "collection" / "maps".
//
//   variables: x, y, z
//   equations: x^2+y^2+z^2
//   partition: 2
//   collection: [dx] [dy; y*dx]
//
// '#' starts a comment; polynomials and 1-forms use the expression
// grammars; forms/polynomials inside a block are separated by ';'.
struct ProblemFile {
  std::vector<std::string> variables;
  std::vector<std::string> equations;
  std::vector<int> partition;
  std::vector<std::vector<std::string>> collection;
  std::vector<std::vector<std::string>> maps;

  bool uses_maps() const { return !maps.empty(); }
};

ProblemFile parse_problem_text(const std::string& text);
ProblemFile load_problem_file(const std::string& path);

// Serializes back to problem-file text; parse_problem_text of the result
// reproduces the structure.
std::string problem_file_text(const ProblemFile& file);

// A validated problem: the germ and the collection, plus a canonical
// echo of the input that re-parses to an equivalent problem.
struct Problem {
  VarietyGerm variety;
  FormCollection collection;
  ProblemFile echo;
};

// Validates shapes (n >= 1, partition sums to n, block sizes) and parses
// every polynomial / 1-form; error messages carry the offending key.
Problem build_problem(const ProblemFile& file);

}  // namespace chernob
