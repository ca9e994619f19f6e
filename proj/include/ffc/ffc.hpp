// Copyright 2026 The ffcirc Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Umbrella include.
 */
#pragma once

#include "builder.hpp"
#include "circuit.hpp"
#include "conventions.hpp"
#include "dynamics.hpp"
#include "gates.hpp"
#include "linalg.hpp"
#include "oracle.hpp"
#include "pauli.hpp"
#include "serialization.hpp"
#include "spectrum.hpp"
#include "statevector.hpp"
