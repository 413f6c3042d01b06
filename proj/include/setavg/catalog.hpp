#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "setavg/multivariate.hpp"
#include "setavg/operators.hpp"

namespace setavg {

// Built-in set-valued functions on [0, 1]:
//   grow      [0, 1+x]                    Lip(1, 1)
//   slide     [x, 1+x]                    Lip(2, 1)
//   split     [0, 1] u [2, 2+x]           Lip(1, 1)
//   holder    [0, 1+sqrt(x)]              Lip(1, 1/2), sqrt to 60 dyadic bits
//   constant  [0, 1]                      Lip(0, 1)
SampledSVF builtin_svf(std::string_view name);
std::vector<std::string> builtin_svf_names();

// Built-in planar set-valued functions:
//   plane     [0, 1 + x + y]   Lip(sqrt 2, 1) in the Euclidean norm
PlanarSVF builtin_planar_svf(std::string_view name);

}  // namespace setavg
