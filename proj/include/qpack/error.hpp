// Copyright 2026 The qpack Authors.
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

#include <stdexcept>
#include <string>

namespace qpack {

/// Base of every error thrown by qpack. Precondition violations on user input
/// surface as one of the subclasses below so callers can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QPACK_DEFINE_ERROR(Name)          \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

QPACK_DEFINE_ERROR(NotPrimePower);
QPACK_DEFINE_ERROR(InvalidModulus);
QPACK_DEFINE_ERROR(DivisionByZero);
QPACK_DEFINE_ERROR(ElementOutOfField);
QPACK_DEFINE_ERROR(ZeroSlope);
QPACK_DEFINE_ERROR(ZeroLambda);
QPACK_DEFINE_ERROR(CountOutOfRange);
QPACK_DEFINE_ERROR(MalformedStructure);
QPACK_DEFINE_ERROR(NotUniform);
QPACK_DEFINE_ERROR(NotTriangleFree);
QPACK_DEFINE_ERROR(OutOfRange);
QPACK_DEFINE_ERROR(ConditionsFailed);
QPACK_DEFINE_ERROR(AlphaOutOfRange);
QPACK_DEFINE_ERROR(FormatError);

#undef QPACK_DEFINE_ERROR

}  // namespace qpack
