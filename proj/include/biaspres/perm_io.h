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

#ifndef BIASPRES_PERM_IO_H
#define BIASPRES_PERM_IO_H

#include <istream>
#include <ostream>
#include <string>

#include "biaspres/bp_verify.h"

namespace biaspres {

/// Permutation-with-phases text format:
///   n <qubits>                      (optional when at least one mapping line is present)
///   <s-bits> -> <t-bits> phase=<radians>
/// Strings without a line map to themselves with phase 0. The listed
/// mappings must extend to a bijection.
PermutationWithPhases read_permutation(std::istream &in);
void write_permutation(std::ostream &out, const PermutationWithPhases &p);

PermutationWithPhases read_permutation_file(const std::string &path);
void write_permutation_file(const std::string &path, const PermutationWithPhases &p);

}  // namespace biaspres

#endif
