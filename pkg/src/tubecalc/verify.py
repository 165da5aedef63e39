"""Self-contained verification suites behind `tubecalc verify` and the
acceptance tests.

Each suite checks one exact combinatorial statement, most of them against
an independent route (case tables transcribed literally, the serial-module
oracle, the mesh recurrence, intertwiner solves).  All randomized suites
are deterministic given the seed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .classify import (
    classify,
    classify_grid,
    factors_u,
    factors_v,
    factors_v_both,
    factors_w,
    region_of_u,
    region_of_v,
    region_of_v_both,
    region_of_w,
)
from .config import RegionKind, TubeConfig, random_config, running_example_config
from .coords import TubeCoord, tau
from .decompose import companions, d_vector, decompose, diamond_cells
from .dimvec import dim_vector, mesh_residuals, mesh_table
from .fixtures import (
    PREPROJECTIVE_FIXTURES,
    Q_LAMBDA_RELATIONS,
    RUNNING_VERTEX_ORDER,
    TUBE_FIXTURES,
    load_fixture,
)
from .hom import hom_dim_tube, serial_oracle_hom_dim
from .replab import (
    build_representation,
    check_relations,
    colour_dim_vector,
    decomposable_over_field,
    enumerate_reps,
    hom_dim_reps,
)

SUITES = (
    "homlow",
    "dimhom",
    "oracle",
    "grid",
    "pHfactor",
    "pthree",
    "counterexample",
    "seeds",
)


@dataclass
class SuiteResult:
    name: str
    ok: bool
    checks: int
    seconds: float
    failure: str | None = None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        msg = f"{status} {self.name}: {self.checks} checks in {self.seconds:.2f}s"
        if self.failure:
            msg += f" | first counterexample: {self.failure}"
        return msg


def _result(name, start, checks, failure=None):
    return SuiteResult(name, failure is None, checks, time.time() - start, failure)


# -- criterion 1: low-quasilength case tables --------------------------------


def _case_table_from_low_source(r, i, l, j, m):
    """Hom(M(i,l), M(j,m)) for l <= r-1, literally by interval case analysis."""
    if 1 <= m <= l - 1:
        return 1 if _between(r, j, i + l - m, i + l - 1) else 0
    if m >= l:
        return 1 if _between(r, j, i, i + l - 1) else 0
    return 0


def _case_table_to_low_target(r, j, m, i, l):
    """Hom(M(j,m), M(i,l)) for l <= r-1, literally by interval case analysis."""
    if 1 <= m <= l - 1:
        return 1 if _between(r, j, i - m + 1, i) else 0
    if m >= l:
        return 1 if _between(r, j, i - m + 1, i - m + l) else 0
    return 0


def _between(r, j, lo, hi):
    """Is j congruent to a member of [lo, hi] mod r (hi - lo < r assumed)?"""
    return (j - lo) % r <= (hi - lo) % r


def suite_homlow() -> SuiteResult:
    start = time.time()
    checks = 0
    for r in range(2, 9):
        for i in range(r):
            for l in range(1, r):
                for j in range(r):
                    for m in range(1, 3 * r + 1):
                        x, y = TubeCoord(i, l), TubeCoord(j, m)
                        want_a = _case_table_from_low_source(r, i, l, j, m)
                        if hom_dim_tube(r, x, y) != want_a:
                            return _result(
                                "homlow", start, checks,
                                f"Hom({x},{y}) at r={r}: formula != case (a) value {want_a}",
                            )
                        want_b = _case_table_to_low_target(r, j, m, i, l)
                        if hom_dim_tube(r, y, x) != want_b:
                            return _result(
                                "homlow", start, checks,
                                f"Hom({y},{x}) at r={r}: formula != case (b) value {want_b}",
                            )
                        checks += 2
    return _result("homlow", start, checks)


# -- criterion 2: End / Hom(-, tau -) / Hom(-, tau^2 -) tables ---------------


def suite_dimhom() -> SuiteResult:
    start = time.time()
    checks = 0
    for r in range(2, 9):
        for i in range(r):
            for l in range(1, 2 * r + 1):
                x = TubeCoord(i, l)
                want_end = 1 if l <= r else 2
                if hom_dim_tube(r, x, x) != want_end:
                    return _result("dimhom", start, checks, f"End({x}) at r={r} != {want_end}")
                checks += 1
                if l <= 2 * r - 1:
                    want_tau = 0 if l <= r - 1 else 1
                    if hom_dim_tube(r, x, tau(r, x)) != want_tau:
                        return _result("dimhom", start, checks, f"Hom({x},tau) at r={r} != {want_tau}")
                    checks += 1
                if l <= 2 * r - 2:
                    want_tau2 = 0 if l <= r - 2 else 1
                    if hom_dim_tube(r, x, tau(r, x, 2)) != want_tau2:
                        return _result("dimhom", start, checks, f"Hom({x},tau^2) at r={r} != {want_tau2}")
                    checks += 1
    return _result("dimhom", start, checks)


# -- criterion 3: serial-module oracle equivalence ---------------------------


def suite_oracle() -> SuiteResult:
    start = time.time()
    checks = 0
    for r in (2, 3, 4):
        for i1 in range(r):
            for l1 in range(1, 2 * r + 1):
                for i2 in range(r):
                    for l2 in range(1, 2 * r + 1):
                        x, y = TubeCoord(i1, l1), TubeCoord(i2, l2)
                        a = hom_dim_tube(r, x, y)
                        b = serial_oracle_hom_dim(r, x, y)
                        if a != b:
                            return _result(
                                "oracle", start, checks,
                                f"r={r} Hom({x},{y}): formula {a} != oracle {b}",
                            )
                        checks += 1
    return _result("oracle", start, checks)


# -- criterion 4: the hand-encoded reference grid ----------------------------

REFERENCE_GRID = {
    (0, 1): "black-circle", (1, 1): "x", (2, 1): "black-circle",
    (0, 2): "x", (1, 2): "black-square", (2, 2): "black-square",
    (0, 3): "gray-circle", (1, 3): "white-square", (2, 3): "gray-circle",
    (0, 4): "gray-circle", (1, 4): "gray-circle", (2, 4): "white-square",
    (0, 5): "white-circle", (1, 5): "white-square", (2, 5): "white-square",
}


def suite_grid() -> SuiteResult:
    start = time.time()
    cfg = running_example_config()
    checks = 0
    for rec in classify_grid(cfg, 5):
        want = REFERENCE_GRID[(rec.coord.i, rec.coord.l)]
        if rec.symbol() != want:
            return _result(
                "grid", start, checks,
                f"cell {rec.coord}: {rec.symbol()} != expected {want}",
            )
        checks += 1
    return _result("grid", start, checks)


# -- criteria 5 and 6: factorisation predicates and rigid => Schurian --------


def _random_configs(rng, count, min_rank, max_rank, force_max_wing=False, labels=()):
    out = []
    while len(out) < count:
        r = rng.randint(min_rank, max_rank)
        out.append(random_config(rng, r, force_max_wing=force_max_wing, labels=labels))
    return out


def suite_p_hfactor(seed: int = 0, configs: int = 100) -> SuiteResult:
    start = time.time()
    rng = random.Random(seed)
    checks = 0
    for cfg in _random_configs(rng, configs, 2, 12):
        r = cfg.rank
        for l in range(1, 4 * r + 1):
            for i in range(r):
                x = TubeCoord(i, l)
                pairs = []
                if l >= r + 1:
                    pairs.append(("u", factors_u(cfg, x), region_of_u(cfg, x)))
                if l >= r:
                    pairs.append(("v", factors_v(cfg, x), region_of_v(cfg, x)))
                    pairs.append(("v_both", factors_v_both(cfg, x), region_of_v_both(cfg, x)))
                if l >= r - 1:
                    pairs.append(("w", factors_w(cfg, x), region_of_w(cfg, x)))
                for name, shift_val, region_val in pairs:
                    if shift_val != region_val:
                        return _result(
                            "pHfactor", start, checks,
                            f"{name} at {x}, config {sorted(cfg.tau_t_summands)} r={r}: "
                            f"shift {shift_val} != region {region_val}",
                        )
                    checks += 1
                if not cfg.is_deleted(x):
                    rec = classify(cfg, x, with_strong=False)
                    if rec.rigid and not rec.tau_rigid and not rec.schurian:
                        return _result(
                            "pHfactor", start, checks,
                            f"{x} rigid-not-tau-rigid but not Schurian, config "
                            f"{sorted(cfg.tau_t_summands)} r={r}",
                        )
                    checks += 1
    return _result("pHfactor", start, checks)


# -- criteria 7 and 10: three-part identity and strong-Schurian bound --------


def suite_pthree(seed: int = 0, configs: int = 100) -> SuiteResult:
    start = time.time()
    rng = random.Random(seed)
    checks = 0
    for n in range(configs):
        r = rng.randint(3, 9)
        cfg = random_config(rng, r, force_max_wing=True, labels=("u0", "u1"))
        t0 = tau(r, cfg.wing_roots[0], -1)
        # closed form vs mesh recurrence, all valid meshes up to 3r
        bad = mesh_residuals(cfg, 3 * r)
        if bad:
            m, lhs, rhs = bad[0]
            return _result(
                "pthree", start, checks,
                f"mesh recurrence fails at {m}, config {sorted(cfg.tau_t_summands)} r={r}",
            )
        checks += 1
        table = mesh_table(cfg, 2 * r)
        for c, vec in table.items():
            if vec.entries != dim_vector(cfg, c).entries:
                return _result(
                    "pthree", start, checks,
                    f"mesh table differs from closed form at {c} r={r}",
                )
        checks += 1
        for m in diamond_cells(cfg):
            comp = companions(cfg, m)
            lhs = dim_vector(cfg, m)
            rhs = dim_vector(cfg, comp.x).add(dim_vector(cfg, comp.y)).add(
                dim_vector(cfg, comp.z)
            ).bump(t0, 1)
            if lhs.entries != rhs.entries:
                return _result(
                    "pthree", start, checks,
                    f"three-part identity fails at {m}, config "
                    f"{sorted(cfg.tau_t_summands)} r={r}",
                )
            decompose(cfg, m)  # raises ConsistencyFailure on any violation
            if m.l <= r - 1:
                dv = d_vector(cfg, m)
                if any(v < 0 for v in dv.values):
                    return _result("pthree", start, checks, f"negative d-vector entry at {m} r={r}")
            checks += 3
        for c in cfg.region_members(RegionKind("h", 0)):
            if any(v > 1 for v in dim_vector(cfg, c).values):
                return _result(
                    "pthree", start, checks,
                    f"entry > 1 on the top region at {c}, config "
                    f"{sorted(cfg.tau_t_summands)} r={r}",
                )
            checks += 1
    return _result("pthree", start, checks)


# -- criterion 8: the counterexample ------------------------------------------


def suite_counterexample() -> SuiteResult:
    start = time.time()
    cfg = running_example_config()
    checks = 0
    m = TubeCoord(2, 2)
    if dim_vector(cfg, m).as_tuple(RUNNING_VERTEX_ORDER) != (1, 2, 2, 1):
        return _result("counterexample", start, checks, f"dimension vector of {m} wrong")
    checks += 1
    if d_vector(cfg, m).as_tuple(RUNNING_VERTEX_ORDER) != (1, 2, 1, 1):
        return _result("counterexample", start, checks, f"denominator vector of {m} wrong")
    checks += 1
    il3 = load_fixture("ilambda3")
    if tuple(colour_dim_vector(il3).values()) != (1, 2, 2, 1):
        return _result("counterexample", start, checks, "injective fixture dims wrong")
    checks += 1
    if not check_relations(build_representation(il3), Q_LAMBDA_RELATIONS):
        return _result("counterexample", start, checks, "injective fixture breaks relations")
    checks += 1
    base = il3.base
    dims = {"1": 1, "2": 2, "3": 1, "4": 1}
    count = 0
    for rep in enumerate_reps(base, dims, 2):
        count += 1
        if not decomposable_over_field(rep, 2):
            return _result(
                "counterexample", start, checks,
                f"indecomposable rep with dims (1,2,1,1) found: {rep.maps}",
            )
        checks += 1
    if count != 64:
        return _result("counterexample", start, checks, f"expected 64 reps, saw {count}")
    checks += 1
    return _result("counterexample", start, checks)


# -- criterion 9: fixture agreement and preprojective seeds ------------------


def suite_seeds() -> SuiteResult:
    start = time.time()
    checks = 0
    reps = {c: build_representation(load_fixture(n)) for c, n in TUBE_FIXTURES.items()}
    for cx, rx in reps.items():
        for cy, ry in reps.items():
            got = hom_dim_reps(rx, ry)
            want = hom_dim_tube(3, cx, cy)
            if got != want:
                return _result(
                    "seeds", start, checks,
                    f"fixture Hom({cx},{cy}): intertwiner {got} != tube formula {want}",
                )
            checks += 1
    for label, name in PREPROJECTIVE_FIXTURES.items():
        p = build_representation(load_fixture(name))
        seeds = tuple(hom_dim_reps(p, reps[TubeCoord(j, 1)]) for j in range(3))
        if seeds != (0, 0, 1):
            return _result("seeds", start, checks, f"{label} seeds {seeds} != (0, 0, 1)")
        checks += 1
    return _result("seeds", start, checks)


_SUITE_FUNCS = {
    "homlow": lambda seed: suite_homlow(),
    "dimhom": lambda seed: suite_dimhom(),
    "oracle": lambda seed: suite_oracle(),
    "grid": lambda seed: suite_grid(),
    "pHfactor": lambda seed: suite_p_hfactor(seed),
    "pthree": lambda seed: suite_pthree(seed),
    "counterexample": lambda seed: suite_counterexample(),
    "seeds": lambda seed: suite_seeds(),
}


def run_suite(name: str, seed: int = 0) -> list[SuiteResult]:
    if name == "all":
        return [_SUITE_FUNCS[s](seed) for s in SUITES]
    if name not in _SUITE_FUNCS:
        raise KeyError(name)
    return [_SUITE_FUNCS[name](seed)]
