#pragma once

// Quadratic-linear-constant algebra presentations and the JSON file format.
//
// A relation stores "quadratic + linear + constant = 0". The bracket of the
// algebra is alpha = -linear and the constant part of the bracket is
// beta = -constant.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "braidcalc/expr.hpp"
#include "braidcalc/linalg.hpp"

namespace braidcalc {

struct Relation {
  Tensor quadratic;  // degree 2
  Tensor linear;     // degree 1
  Scalar constant;

  // quadratic + linear + constant as a single inhomogeneous tensor.
  Tensor full() const;
  bool operator==(const Relation& o) const = default;
};

struct AlgebraPresentation {
  std::string name;
  std::string symbol = "q";
  std::map<std::string, Scalar> parameters;
  std::vector<std::string> generators;
  std::vector<Relation> relations;

  int size() const { return static_cast<int>(generators.size()); }
  // Index of a generator name, or -1.
  int generator_index(std::string_view g) const;
  LetterNamer namer() const { return index_namer(generators); }
  // Span of the quadratic parts.
  Subspace quadratic_space() const;
  // Throws Error when a word uses an undeclared letter or a part has the
  // wrong degree.
  void validate() const;
  bool operator==(const AlgebraPresentation& o) const = default;
};

AlgebraPresentation parse_algebra_json(std::string_view text);
AlgebraPresentation load_algebra_file(const std::string& path);
// Canonical JSON: sorted keys, two-space indentation, trailing newline.
std::string serialize_algebra(const AlgebraPresentation& p);

}  // namespace braidcalc
