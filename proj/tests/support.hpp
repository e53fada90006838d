#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "conesep/vector.hpp"

namespace test_support {

inline conesep::Vector V(std::initializer_list<const char*> xs) {
  std::vector<conesep::Scalar> c;
  for (const char* x : xs) c.push_back(conesep::Scalar::parse(x));
  return conesep::Vector(c);
}

inline conesep::Functional F(std::initializer_list<const char*> xs) { return conesep::to_functional(V(xs)); }

}  // namespace test_support
