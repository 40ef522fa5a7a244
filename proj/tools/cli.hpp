// Copyright 2026 The siegelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>

#include "siegelab/complex.hpp"
#include "siegelab/maps.hpp"

namespace siegelab::cli {

/// Runs one command line. Returns 0 on success, 1 on usage errors and 2 on
/// runtime errors.
int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "golden", a decimal, or continued-fraction terms "[0;1,2,...]".
double parse_theta(const std::string& text);

/// "re,im" or a bare real number.
Complex parse_complex(const std::string& text);

MapFamily parse_family(const std::string& family, const std::string& theta, const std::string& lambda);

/// $SIEGELAB_OUTPUT_DIR, or the working directory when unset.
std::string default_output_dir();

}  // namespace siegelab::cli
