// Copyright 2026 The qroute authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qroute {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define QROUTE_ERROR_TYPE(Name)                                  \
  struct Name : Error {                                          \
    explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
  }

QROUTE_ERROR_TYPE(MultiQubitPrimitivePresent);
QROUTE_ERROR_TYPE(InvalidPermutation);
QROUTE_ERROR_TYPE(TooManyQubits);
QROUTE_ERROR_TYPE(DimensionMismatch);
QROUTE_ERROR_TYPE(QubitCountMismatch);
QROUTE_ERROR_TYPE(NonLinearGate);
QROUTE_ERROR_TYPE(UnsupportedControlledW);
QROUTE_ERROR_TYPE(TargetNotFound);
QROUTE_ERROR_TYPE(RoleUnsupported);
QROUTE_ERROR_TYPE(InvalidPlacement);
QROUTE_ERROR_TYPE(IdentityString);
QROUTE_ERROR_TYPE(InvalidCoupling);
QROUTE_ERROR_TYPE(Unreachable);
QROUTE_ERROR_TYPE(MissingPair);
QROUTE_ERROR_TYPE(SingularConfusion);
QROUTE_ERROR_TYPE(NotUnitary);
QROUTE_ERROR_TYPE(EmptyFamily);
QROUTE_ERROR_TYPE(IncompatibleSlot);
QROUTE_ERROR_TYPE(AllShotsRejected);

#undef QROUTE_ERROR_TYPE

}  // namespace qroute
