#ifndef FREESTAR_PROBLEM_HPP
#define FREESTAR_PROBLEM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freestar/groebner.hpp"
#include "freestar/repvar.hpp"

namespace freestar {

// Parsed problem file: field, variable count, generators, truncation
// degree, optional q and named matrix tuples / vectors.
struct ProblemFile {
  FieldMode field = FieldMode::Rational;
  int g = 1;
  std::vector<Polynomial> generators;
  int degree = 0;
  std::optional<Rational> q;
  std::map<std::string, MatrixTuple> matrices;
  std::map<std::string, std::vector<Scalar>> vectors;
};

ProblemFile load_problem(const std::string& path);
ProblemFile parse_problem(const std::string& json_text);

}  // namespace freestar

#endif
