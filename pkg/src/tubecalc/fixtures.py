"""Packaged coloured-quiver fixtures for the rank-3 running example.

The tube fixtures realise the nine cells of quasilength <= 3 of the
rank-3 tube over the four-vertex tame quiver, under the identification

    Q_0 = tube_0_1,  Q_1 = tube_1_1,  Q_2 = tube_2_1,

matching the tube coordinates used by `running_example_config`.  The
`*lambda*` fixtures live over the mutated quiver of the cluster-tilted
algebra, whose commutativity constraints are in `Q_LAMBDA_RELATIONS`.
"""

from __future__ import annotations

from importlib import resources

from .coords import TubeCoord
from .replab import ColouredQuiver, parse_coloured_quiver


def load_fixture(name: str) -> ColouredQuiver:
    text = resources.files("tubecalc.data").joinpath(f"{name}.cq").read_text()
    return parse_coloured_quiver(text)


def fixture_text(name: str) -> str:
    return resources.files("tubecalc.data").joinpath(f"{name}.cq").read_text()


TUBE_FIXTURES = {
    TubeCoord(i, l): f"tube_{i}_{l}" for i in range(3) for l in range(1, 4)
}

PREPROJECTIVE_FIXTURES = {"P_1": "p1", "P_4": "p4"}

# Zero-relations around the oriented three-cycle of the mutated quiver:
# each two-step path through the starred arrow vanishes.
Q_LAMBDA_RELATIONS = (
    ((1, ("dstar", "c")),),
    ((1, ("c", "b")),),
    ((1, ("b", "dstar")),),
)

# Vertex order of the mutated quiver, as summand labels of the running
# configuration: projectives at 1 and 4, tube summands at 2 and 3.
RUNNING_VERTEX_ORDER = ("P_1", TubeCoord(2, 1), TubeCoord(1, 2), "P_4")
