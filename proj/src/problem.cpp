#include "freestar/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "freestar/parser.hpp"

namespace freestar {

using nlohmann::json;

ProblemFile parse_problem(const std::string& text) {
  json j = json::parse(text);
  ProblemFile pf;

  std::string field = j.at("field").get<std::string>();
  if (field == "Q") pf.field = FieldMode::Rational;
  else if (field == "Qi") pf.field = FieldMode::GaussianRational;
  else throw PreconditionError("problem field must be \"Q\" or \"Qi\"");

  pf.g = j.at("g").get<int>();
  if (pf.g < 1) throw PreconditionError("problem needs g >= 1");

  if (j.contains("generators"))
    for (const auto& s : j.at("generators"))
      pf.generators.push_back(parse_poly(s.get<std::string>(), pf.g, pf.field));

  pf.degree = j.value("degree", 0);
  if (j.contains("q")) pf.q = Rational::from_string(j.at("q").get<std::string>());

  if (j.contains("matrices")) {
    for (const auto& [name, tup] : j.at("matrices").items()) {
      MatrixTuple t;
      t.g = pf.g;
      t.field = pf.field;
      if (!tup.is_array() || tup.size() != static_cast<size_t>(pf.g))
        throw PreconditionError("matrix tuple '" + name + "' needs g matrices");
      for (const auto& mat : tup) {
        int n = static_cast<int>(mat.size());
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) {
          const auto& row = mat.at(static_cast<size_t>(i));
          if (static_cast<int>(row.size()) != n)
            throw PreconditionError("matrix '" + name + "' is not square");
          for (int k = 0; k < n; ++k)
            m.at(i, k) = parse_scalar(row.at(static_cast<size_t>(k)).get<std::string>(), pf.field);
        }
        t.n = n;
        t.X.push_back(std::move(m));
      }
      for (const auto& m : t.X)
        if (m.rows() != t.n) throw PreconditionError("matrix tuple '" + name + "' sizes differ");
      pf.matrices.emplace(name, std::move(t));
    }
  }

  if (j.contains("vectors")) {
    for (const auto& [name, vec] : j.at("vectors").items()) {
      std::vector<Scalar> v;
      for (const auto& e : vec) v.push_back(parse_scalar(e.get<std::string>(), pf.field));
      pf.vectors.emplace(name, std::move(v));
    }
  }
  return pf;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open problem file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

}  // namespace freestar
