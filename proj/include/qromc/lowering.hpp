// Copyright 2026 The qromc Authors
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

#include "qromc/circuit.hpp"

namespace qromc {

/// True when every gate is an Rx, Ry, Rz or positively controlled CX.
bool is_uniform(const Circuit &circuit);

/// Rewrites the circuit over {Rx, Ry, Rz, CX}, exact up to global phase.
/// Rotation angles in the output are normalized into (-pi, pi].
/// Throws InvalidArgument on X-family gates with more than two controls or
/// rotations with more than one control (run lower_mcx first).
Circuit lower_uniform(const Circuit &circuit);

/// Angle congruent to `angle` modulo 2*pi, in (-pi, pi].
double normalize_angle(double angle);

}  // namespace qromc
