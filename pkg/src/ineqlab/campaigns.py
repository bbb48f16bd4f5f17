"""Seeded verification campaigns.

Trial k of a campaign with master seed `seed` draws everything from the
sub-seed ``seed ^ k``, so summaries are reproducible bit-for-bit and the
trials can be evaluated in any order.  A trial counts as a violation when
its slack falls below -tol, where tol is the report's own relative
tolerance unless a fixed override is given.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .bw import bw_slack, bw_spectral_slack, maximize_ratio
from .ddvv import SymmetricTuple, ddvv_slack
from .errors import InputRejected
from .seeded import RandomStream, sub_seed


@dataclass(frozen=True)
class CampaignSummary:
    trials_run: int
    violations: int
    min_slack: float
    argmin_seed: int
    wall_time_ms: int


class _Tracker:
    def __init__(self):
        self.violations = 0
        self.min_slack = float("inf")
        self.argmin_seed = 0

    def update(self, slack: float, tol: float, trial_seed: int) -> None:
        if slack < -tol:
            self.violations += 1
        if slack < self.min_slack:
            self.min_slack = slack
            self.argmin_seed = trial_seed

    def summary(self, trials: int, t0: float) -> CampaignSummary:
        return CampaignSummary(
            trials_run=trials,
            violations=self.violations,
            min_slack=self.min_slack,
            argmin_seed=self.argmin_seed,
            wall_time_ms=int((time.perf_counter() - t0) * 1000.0),
        )


def _check_config(trials: int, n: int, m: Optional[int] = None) -> None:
    if trials < 1:
        raise InputRejected("trials must be >= 1")
    if not 1 <= n <= 12:
        raise InputRejected(f"n = {n} outside the documented cap 1..12")
    if m is not None and not 1 <= m <= 12:
        raise InputRejected(f"m = {m} outside the documented cap 1..12")


def run_ddvv_campaign(seed: int, trials: int, n: int, m: int,
                      tol_override: Optional[float] = None) -> CampaignSummary:
    """Random-tuple campaign for the DDVV inequality."""
    _check_config(trials, n, m)
    t0 = time.perf_counter()
    track = _Tracker()
    for k in range(trials):
        tseed = sub_seed(seed, k)
        stream = RandomStream(tseed)
        t = SymmetricTuple.from_matrices(stream.symmetric_tuple(n, m))
        rep = ddvv_slack(t)
        track.update(rep.slack, tol_override if tol_override is not None else rep.tol, tseed)
    return track.summary(trials, t0)


@dataclass(frozen=True)
class BwCampaignSummary:
    commutator: CampaignSummary
    spectral: CampaignSummary


def run_bw_campaign(seed: int, trials: int, n: int,
                    tol_override: Optional[float] = None) -> BwCampaignSummary:
    """Random-pair campaign checking both forms of the commutator bound."""
    _check_config(trials, n)
    t0 = time.perf_counter()
    pair_track = _Tracker()
    spec_track = _Tracker()
    for k in range(trials):
        tseed = sub_seed(seed, k)
        stream = RandomStream(tseed)
        x = stream.gaussian_matrix(n)
        y = stream.gaussian_matrix(n)
        rep = bw_slack(x, y)
        pair_track.update(rep.slack, tol_override if tol_override is not None else rep.tol, tseed)
        spec = bw_spectral_slack(x)
        spec_track.update(spec.slack, tol_override if tol_override is not None else spec.tol,
                          tseed)
    return BwCampaignSummary(
        commutator=pair_track.summary(trials, t0),
        spectral=spec_track.summary(trials, t0),
    )


def run_search_campaign(seed: int, seeds: int, n: int, max_iters: int):
    """Run the alternating ratio search once per sub-seed; returns all results."""
    if seeds < 1:
        raise InputRejected("need at least one search seed")
    if not 2 <= n <= 12:
        raise InputRejected(f"n = {n} outside the documented cap 2..12")
    return [maximize_ratio(n, sub_seed(seed, k), max_iters) for k in range(seeds)]
