# Copyright 2026 The ipskit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Zero-error information-preserving structures of quantum channels."""

import json

from ipskit import _ipskit
from ipskit._ipskit import (  # noqa: F401
    Channel,
    InputError,
    NumericalError,
    adjacency_edges,
    adjoint,
    apply,
    asymptotic_projector,
    code_fixture,
    code_fixture_names,
    compose,
    embed_classical,
    fixed_space,
    fixture,
    fixture_names,
    graph_to_channel,
    helstrom_probability,
    is_correctable,
    is_cptp,
    is_fixed,
    is_noiseless,
    max_zero_error_code,
    shape,
    superoperator,
    trace_norm,
    transpose_channel,
)


def noiseless_ips(channel, seed=0):
    return json.loads(_ipskit.noiseless_ips(channel, seed))


def unitarily_noiseless_ips(channel, seed=0):
    return json.loads(_ipskit.unitarily_noiseless_ips(channel, seed))


def unconditional_ips(channel, seed=0):
    return json.loads(_ipskit.unconditional_ips(channel, seed))


def is_preserved(states, channel):
    return json.loads(_ipskit.is_preserved(states, channel))
