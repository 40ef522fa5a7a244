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

#include <stdexcept>
#include <string>

namespace siegelab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SIEGELAB_DEFINE_ERROR(Name)   \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

SIEGELAB_DEFINE_ERROR(InvalidArgument);
SIEGELAB_DEFINE_ERROR(DomainError);
SIEGELAB_DEFINE_ERROR(NearSingularValue);
SIEGELAB_DEFINE_ERROR(NoConvergence);
SIEGELAB_DEFINE_ERROR(SmallDivisorBlowup);
SIEGELAB_DEFINE_ERROR(DegenerateOrbit);
SIEGELAB_DEFINE_ERROR(SingularValueOnBoundary);
SIEGELAB_DEFINE_ERROR(LiftDidNotClose);
SIEGELAB_DEFINE_ERROR(ExperimentDegenerate);
SIEGELAB_DEFINE_ERROR(DegenerateInterval);
SIEGELAB_DEFINE_ERROR(PointOnSlit);
SIEGELAB_DEFINE_ERROR(Disconnected);
SIEGELAB_DEFINE_ERROR(CriticalCycle);
SIEGELAB_DEFINE_ERROR(EvalAtZero);
SIEGELAB_DEFINE_ERROR(IoError);

#undef SIEGELAB_DEFINE_ERROR

/// Raised by pull_back_nu; carries the node whose degree does not divide.
class NotDivisible : public Error {
 public:
  NotDivisible(std::string node, const std::string& what) : Error(what), node_(std::move(node)) {}
  const std::string& node() const { return node_; }

 private:
  std::string node_;
};

}  // namespace siegelab
