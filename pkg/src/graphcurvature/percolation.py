"""Clique survival under random vertex or edge deletion.

Keep each vertex (site mode) or each edge (bond mode) independently with
probability p. A (k+1)-clique of the host survives iff all of its k+1
vertices, resp. all of its k(k+1)/2 edges, are kept, so by linearity

    E_p[v_k of decimated graph] = v_k * p^(k+1)          (site)
    E_p[v_k of decimated graph] = v_k * p^(k(k+1)/2)     (bond)

and averaging over p uniform in [0,1] gives survival ratios 1/(k+2) and
1/(k(k+1)/2 + 1) regardless of the host. The Monte Carlo route samples p
fresh per trial unless a fixed p is requested.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

import numpy as np

from .cliques import cliques_of_size, count_cliques
from .graphs import Graph, induced_subgraph
from .trials import DEFAULT_SEED, TrialPlan, mean_and_stderr, sum_vectors

MODES = ("site", "bond")


def _check_mode(mode: str):
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def _check_p(p: float):
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"keep probability must lie in [0, 1], got {p}")


def site_decimate(
    G: Graph, p: float, seed: int | np.random.Generator = 0
) -> tuple[Graph, tuple[int, ...]]:
    """Keep each vertex with probability p; return the induced graph and kept ids."""
    _check_p(p)
    rng = np.random.default_rng(seed)
    kept = tuple(int(v) for v in np.flatnonzero(rng.random(G.n) < p))
    return induced_subgraph(G, kept), kept


def bond_decimate(G: Graph, p: float, seed: int | np.random.Generator = 0) -> Graph:
    """Keep each edge with probability p; all vertices stay."""
    _check_p(p)
    rng = np.random.default_rng(seed)
    r = rng.random(len(G.edges))
    edges = [e for e, keep in zip(G.edges, r < p) if keep]
    return Graph.from_edges(G.n, edges)


@dataclass(frozen=True)
class PercolationTrial:
    """One decimation outcome: the surviving graph at a given p."""

    mode: str
    p: float
    surviving: Graph
    kept_vertices: tuple[int, ...] | None = None


def run_percolation_trial(
    G: Graph, mode: str, p: float, seed: int | np.random.Generator = 0
) -> PercolationTrial:
    _check_mode(mode)
    if mode == "site":
        sub, kept = site_decimate(G, p, seed)
        return PercolationTrial(mode=mode, p=p, surviving=sub, kept_vertices=kept)
    return PercolationTrial(mode=mode, p=p, surviving=bond_decimate(G, p, seed))


def survival_exponent(k: int, mode: str) -> int:
    """Number of independent keep events a (k+1)-clique needs."""
    _check_mode(mode)
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    return k + 1 if mode == "site" else comb(k + 1, 2)


@dataclass(frozen=True)
class SurvivalPolynomial:
    """E_p[number of surviving (k+1)-cliques] = coefficient * p^exponent."""

    k: int
    mode: str
    coefficient: int
    exponent: int

    def value(self, p):
        return self.coefficient * p**self.exponent

    def integral(self) -> Fraction:
        """Integral over p in [0,1], the expected survivor count at uniform p."""
        return Fraction(self.coefficient, self.exponent + 1)


def exact_survival_polynomial(G: Graph, k: int, mode: str = "site") -> SurvivalPolynomial:
    """Expected survivor count as an exact polynomial in p, by linearity."""
    _check_mode(mode)
    fvec = count_cliques(G)
    vk = fvec[k] if k < len(fvec) else 0
    return SurvivalPolynomial(k=k, mode=mode, coefficient=vk, exponent=survival_exponent(k, mode))


def _clique_event_masks(G: Graph, k: int, mode: str) -> tuple[list[int], int]:
    """Per-clique bitmasks of required keep events, and the event count.

    Site events are vertices; bond events are edge indices into G.edges.
    A host clique survives decimation iff its whole event mask is kept,
    which is exactly v_k of the decimated graph since decimation cannot
    create cliques.
    """
    vertex_masks = cliques_of_size(G, k + 1)
    if mode == "site":
        return vertex_masks, G.n
    edge_index = {e: i for i, e in enumerate(G.edges)}
    masks = []
    for cm in vertex_masks:
        verts = [i for i in range(G.n) if cm >> i & 1]
        m = 0
        for a in range(len(verts)):
            for b in range(a + 1, len(verts)):
                m |= 1 << edge_index[(verts[a], verts[b])]
        masks.append(m)
    return masks, len(G.edges)


@dataclass(frozen=True)
class SurvivalEstimate:
    """Monte Carlo estimate of the clique survival ratio for one (host, k)."""

    mode: str
    k: int
    trials: int
    host_count: int
    estimate: float
    stderr: float | None
    exact: Fraction | float
    master_seed: int

    def to_json_dict(self) -> dict:
        exact = self.exact
        return {
            "mode": self.mode,
            "k": self.k,
            "trials": self.trials,
            "host_count": self.host_count,
            "estimate": self.estimate,
            "stderr": self.stderr,
            "exact": str(exact) if isinstance(exact, Fraction) else exact,
            "master_seed": self.master_seed,
        }


@dataclass(frozen=True)
class SurvivalReport:
    summary: SurvivalEstimate
    rows: tuple[dict, ...]

    def to_json_dict(self) -> dict:
        return {"summary": self.summary.to_json_dict(), "rows": list(self.rows)}


def clique_survival_integral(
    G: Graph,
    k: int,
    trials: int,
    seed: int = DEFAULT_SEED,
    mode: str = "site",
    workers: int = 1,
    fixed_p: float | None = None,
    row_limit: int = 0,
) -> SurvivalReport:
    """Monte Carlo survival ratio of (k+1)-cliques under random decimation.

    Each trial draws p uniformly in [0,1] (or uses ``fixed_p``), decimates,
    and counts the fraction of host cliques that survive. Trial t consumes
    only the (seed, t) stream: the p draw first when p is random, then one
    uniform per vertex or edge. Totals are exact integers, so the result is
    identical for any worker count. The exact column is 1/(exponent+1)
    when p is random and p^exponent at a fixed p.

    ``row_limit`` includes per-trial rows for the first trials in the
    report, for inspection or CSV output.
    """
    _check_mode(mode)
    if fixed_p is not None:
        _check_p(fixed_p)
    masks, n_events = _clique_event_masks(G, k, mode)
    vk = len(masks)
    if vk == 0:
        raise ValueError(f"host graph has no {k}-simplices to decimate")
    plan = TrialPlan(samples=trials, master_seed=seed, workers=workers)
    row_limit = min(row_limit, trials)

    def simulate(t: int) -> tuple[float, int]:
        """(p, survivor count) for trial t, reproducible from the plan."""
        rng = plan.trial_rng(t)
        p = fixed_p if fixed_p is not None else float(rng.random())
        r = rng.random(n_events)
        kept = 0
        for i in np.flatnonzero(r < p):
            kept |= 1 << int(i)
        return p, sum(1 for cm in masks if cm & kept == cm)

    def run_chunk(chunk: range) -> tuple[int, ...]:
        s_sum = 0
        s_sq = 0
        for t in chunk:
            _, s = simulate(t)
            s_sum += s
            s_sq += s * s
        return (s_sum, s_sq)

    s_sum, s_sq = plan.map_reduce(run_chunk, sum_vectors)
    mean_count, se_count = mean_and_stderr(s_sum, s_sq, trials)
    exponent = survival_exponent(k, mode)
    exact: Fraction | float
    exact = Fraction(1, exponent + 1) if fixed_p is None else fixed_p**exponent
    summary = SurvivalEstimate(
        mode=mode,
        k=k,
        trials=trials,
        host_count=vk,
        estimate=mean_count / vk,
        stderr=None if se_count is None else se_count / vk,
        exact=exact,
        master_seed=seed,
    )
    rows = []
    for t in range(row_limit):
        p, s = simulate(t)
        row: dict = {"trial": t, "ratio": s / vk}
        if fixed_p is None:
            row["p"] = p
        rows.append(row)
    return SurvivalReport(summary=summary, rows=tuple(rows))


def survival_grid(
    G: Graph,
    k: int,
    trials: int,
    seed: int = DEFAULT_SEED,
    mode: str = "site",
    grid: Sequence[float] = (0.1, 0.3, 0.5, 0.7, 0.9),
    workers: int = 1,
) -> tuple[dict, ...]:
    """Mean survival ratio at each p of a grid, one row per grid point.

    All points share the same trial streams (common random numbers), which
    keeps the sweep deterministic and smooths the sampled curve.
    """
    rows = []
    for p in grid:
        rep = clique_survival_integral(
            G, k, trials, seed=seed, mode=mode, workers=workers, fixed_p=float(p)
        )
        s = rep.summary
        rows.append({"p": float(p), "ratio": s.estimate, "stderr": s.stderr, "exact": s.exact})
    return tuple(rows)
