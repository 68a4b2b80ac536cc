// Copyright 2026 The biaspres Authors
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

#ifndef BIASPRES_TESTS_CODES_H
#define BIASPRES_TESTS_CODES_H

// Reference codes shared by the CSS test suites.

#include "biaspres/binary_code.h"

namespace biaspres::oracle {

/// {0000, 1111}.
inline BinaryCode repetition4() { return BinaryCode::from_strings({"1111"}); }

/// Even-weight [4, 3] code.
inline BinaryCode even_weight4() { return BinaryCode::from_strings({"1100", "0110", "0011"}); }

/// [7, 4] Hamming code whose parity checks are the columns 1..7 in binary.
inline BinaryCode hamming7() { return BinaryCode::from_strings({"1110000", "1001100", "0101010", "1101001"}); }

/// Its dual, the [7, 3] simplex code.
inline BinaryCode simplex7() { return BinaryCode::from_strings({"0001111", "0110011", "1010101"}); }

}  // namespace biaspres::oracle

#endif
