// Copyright 2026 The ft422 Authors
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

#ifndef FT422_CIRCUIT_IO_H
#define FT422_CIRCUIT_IO_H

#include <string>

#include "ft422/circuit.h"
#include "json.hpp"

namespace ft422 {

// Circuit JSON:
//   {"name": str, "n_qubits": int, "readout_order": [int],
//    "ops": [{"kind": str, "qubits": [int], "segment": str,
//             "param_turns": "p/q"   // GPI and GPI2 only
//            }]}
// Qubits are 0-based. Barriers appear as ops with an empty qubit list.

nlohmann::json circuit_to_json(const Circuit &circuit);
/// Throws UsageError on schema violations or invalid ops.
Circuit circuit_from_json(const nlohmann::json &j);

/// One op per line, 1-based qubit names, e.g. "GPI(1/8) q1  ; oracle".
std::string circuit_to_text(const Circuit &circuit);

}  // namespace ft422

#endif
