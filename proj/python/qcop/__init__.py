# Copyright 2026 The qcop authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Commutativity-preservation analysis for finite-dimensional quantum channels."""

from qcop._core import (
    CapError,
    Channel,
    ParseError,
    ValidationError,
    a_discord_projective,
    analyze,
    basis,
    cloning_mixture_check,
    commuting_pair_probe,
    cop_degree,
    discord_creation_check,
    discord_demo_r_matrix,
    discord_demo_unitary,
    discord_increase_demo,
    geometric_a_discord,
    k_matrix,
    k_spectrum,
    mixture_cop_degree,
    qubit_cop_criterion,
    structure_constant,
    verify_haar_average,
    witness_expectations,
    witness_expectations_oracle,
    zero_a_discord,
)

__all__ = [
    "CapError",
    "Channel",
    "ParseError",
    "ValidationError",
    "a_discord_projective",
    "analyze",
    "basis",
    "cloning_mixture_check",
    "commuting_pair_probe",
    "cop_degree",
    "discord_creation_check",
    "discord_demo_r_matrix",
    "discord_demo_unitary",
    "discord_increase_demo",
    "geometric_a_discord",
    "k_matrix",
    "k_spectrum",
    "mixture_cop_degree",
    "qubit_cop_criterion",
    "structure_constant",
    "verify_haar_average",
    "witness_expectations",
    "witness_expectations_oracle",
    "zero_a_discord",
]

__version__ = "0.1.0"
