// Copyright 2026 The qcop authors
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

#include <string>

#include "qcop/channel.hpp"
#include "qcop/discord.hpp"

namespace qcop::io {

// Channel files: {"d": int, "kind": "kraus"|"choi"|"identity"|"unitary"|
// "cloning"|"transpose_cloning"|"semi_classical"|"hamiltonian"|"mixture",
// ...kind-specific fields...} with complex entries as [re, im]. Mixtures
// nest two channel objects under "ch1"/"ch2" with weight "p".
//
// Syntax errors, non-finite numbers and shape-inconsistent payloads raise
// ParseError with line or field anchors; physically invalid parameters
// (e.g. out-of-range c, incomplete POVM) raise ValidationError from the
// channel constructors.
QuantumChannel parse_channel(const std::string& text, const std::string& origin = "<input>");
QuantumChannel load_channel(const std::string& path);
std::string channel_to_json(const QuantumChannel& ch);

// State files: {"dA": int, "dB": int, "rho": [[..[re,im]..]..]} or, for two
// qubits, {"pauli_r": 4x4 real array}.
BipartiteState parse_state(const std::string& text, const std::string& origin = "<input>");
BipartiteState load_state(const std::string& path);

}  // namespace qcop::io
