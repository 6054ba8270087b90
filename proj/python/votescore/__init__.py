# Copyright 2026 The votescore Authors
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

"""Exact and homogeneous Dodgson / Young election scores."""

from ._core import (
    Graph,
    Profile,
    SetFamily,
    VoteScoreError,
    alpha,
    amplify_for_winner,
    condorcet_winner,
    dodgson_score,
    dodgson_score_bruteforce,
    dodgson_star_score,
    homogeneity_check,
    inc_to_mspc,
    is_winner,
    kappa,
    mspc_to_young_ranking,
    ranks_at_least,
    replicate,
    restrict,
    scores,
    tally,
    verify_reduction_chain,
    young_score,
    young_score_bruteforce,
    young_star_score,
)

__all__ = [
    "Graph",
    "Profile",
    "SetFamily",
    "VoteScoreError",
    "alpha",
    "amplify_for_winner",
    "condorcet_winner",
    "dodgson_score",
    "dodgson_score_bruteforce",
    "dodgson_star_score",
    "homogeneity_check",
    "inc_to_mspc",
    "is_winner",
    "kappa",
    "mspc_to_young_ranking",
    "ranks_at_least",
    "replicate",
    "restrict",
    "scores",
    "tally",
    "verify_reduction_chain",
    "young_score",
    "young_score_bruteforce",
    "young_star_score",
]
