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

#ifndef BIASPRES_DISTANCE_H
#define BIASPRES_DISTANCE_H

#include <span>

#include "biaspres/unitary.h"

namespace biaspres {

/// Largest singular value of `m`.
double operator_norm(const Matrix &m);

/// E(U, V) = max over unit |psi> of ||(U - V)|psi>||. Throws on dimension mismatch.
double worst_case_error(const Unitary &u, const Unitary &v);

/// min over phi of E(U, e^{i phi} V).
///
/// With W = V^dag U having eigenphases lambda_j, ||U - e^{i phi} V|| equals
/// max_j |e^{i lambda_j} - e^{i phi}|, minimized by centring phi on the
/// shortest arc that covers every eigenphase.
double worst_case_error_up_to_phase(const Unitary &u, const Unitary &v);

/// Given angles on the circle, returns min over phi of max_j |e^{i a_j} - e^{i phi}|.
/// Returns 0 for an empty span.
double min_max_chord(std::span<const double> angles);

}  // namespace biaspres

#endif
