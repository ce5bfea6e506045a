# Copyright 2026 The netcert Authors
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

"""Network incompatibility certificates via inflation.

Thin wrapper over the compiled ``_netcert`` module. JSON documents are exchanged as Python
objects here and as strings in the extension.
"""

import json

from netcert._netcert import (
    BootstrapResult,
    CountsTable,
    DataError,
    Distribution,
    InflationModel,
    Network,
    NetworkError,
    SolveReport,
    Witness,
    WitnessError,
    bootstrap,
    certify,
    counts_distribution,
    critical_visibility,
    extract,
    fixture,
    ghz6_network,
    ghz_distribution,
    ghz_two_input,
    load_counts,
    load_witness,
    sample_counts,
    save_witness,
    trident_distribution,
    trident_network,
    trident_two_input,
)

__all__ = [
    "BootstrapResult",
    "CountsTable",
    "DataError",
    "Distribution",
    "InflationModel",
    "Network",
    "NetworkError",
    "SolveReport",
    "Witness",
    "WitnessError",
    "bootstrap",
    "certify",
    "counts_distribution",
    "critical_visibility",
    "extract",
    "fixture",
    "ghz6_network",
    "ghz_distribution",
    "ghz_two_input",
    "load_counts",
    "load_witness",
    "network",
    "sample_counts",
    "save_witness",
    "trident_distribution",
    "trident_network",
    "trident_two_input",
    "witness",
]

__version__ = "0.1.0"


def network(doc):
    """Builds a Network from a dict or a JSON string."""
    return Network.from_json(doc if isinstance(doc, str) else json.dumps(doc))


def witness(doc):
    """Builds a Witness from a dict or a JSON string."""
    return Witness.from_json(doc if isinstance(doc, str) else json.dumps(doc))
