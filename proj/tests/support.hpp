#pragma once

#include <gammalab/polynomial.hpp>

#include <string>
#include <vector>

namespace testing_support {

inline gammalab::UniPoly P(const std::string& text) { return gammalab::parse_poly(text); }

inline std::vector<gammalab::Scalar> V(std::initializer_list<long> values) {
  std::vector<gammalab::Scalar> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace testing_support
