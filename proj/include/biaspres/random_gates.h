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

#ifndef BIASPRES_RANDOM_GATES_H
#define BIASPRES_RANDOM_GATES_H

#include <cstdint>
#include <random>
#include <vector>

#include "biaspres/bp_verify.h"
#include "biaspres/unitary.h"

namespace biaspres {

/// Uniformly random permutation of {0, ..., dim - 1}.
std::vector<uint64_t> random_permutation(size_t dim, std::mt19937_64 &rng);

/// Uniform random permutation of basis strings with phases uniform in [0, 2pi).
PermutationWithPhases random_bias_preserving(size_t num_qubits, std::mt19937_64 &rng);

/// Haar-distributed unitary (QR of a complex Ginibre matrix with phase fix).
Unitary random_unitary(size_t num_qubits, std::mt19937_64 &rng);

/// Normalized state with Gaussian amplitudes on every basis string.
StateVector random_state(size_t num_qubits, std::mt19937_64 &rng);

/// Normalized state supported on a uniformly random nonempty subset of basis strings.
StateVector random_sparse_state(size_t num_qubits, std::mt19937_64 &rng);

}  // namespace biaspres

#endif
