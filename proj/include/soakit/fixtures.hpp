#pragma once

#include <string>
#include <vector>

#include "soakit/io.hpp"

namespace soakit {

struct Fixture {
  std::string name;
  std::string description;
  ArrayFile file;
};

/// Built-in reference arrays: "soa-8-3-8", "soa-54-5-27-iii", "soa-54-5-27-iv".
const std::vector<Fixture>& fixtures();

/// Throws ParameterError for an unknown name.
const Fixture& fixture(const std::string& name);

}  // namespace soakit
