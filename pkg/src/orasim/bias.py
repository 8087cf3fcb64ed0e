"""Exact modulus-event probabilities and conditional weight expectations.

All quantities are evaluated with integer binomials and
:class:`fractions.Fraction` and converted to ``float`` only at the API
boundary, so parameters such as ``(180, 14, 30)`` incur no cancellation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Literal

import numpy as np

from .schemes import SchemeKind, SchemeParams

__all__ = [
    "SumDistribution",
    "BiasTable",
    "prob_sum",
    "sum_distribution",
    "prob_mod_event",
    "prob_g",
    "conditional_expected_weight",
    "expected_weight_all_g",
    "response_bias_table",
    "response_distribution",
    "guess_probability",
]

Event = Literal["mod", "no_mod", "unconditional"]


@lru_cache(maxsize=None)
def _prob_sum_exact(y: int, g: int, d: int) -> Fraction:
    # inclusion-exclusion over the number of weights forced past d - 1
    if g == 0:
        return Fraction(int(y == 0))
    if y < 0 or y > (d - 1) * g:
        return Fraction(0)
    total = 0
    for s in range(y // d + 1):
        total += (-1) ** s * comb(g, s) * comb(y - s * d + g - 1, g - 1)
    return Fraction(total, d**g)


def prob_sum(y: int, g: int, d: int) -> float:
    """Probability that ``g`` uniform weights in ``[0, d)`` sum to ``y``.

    Returns 0 for ``y`` outside ``[0, (d - 1) * g]``.
    """
    if d < 2 or g < 1:
        raise ValueError(f"need d >= 2 and g >= 1 (d={d}, g={g})")
    return float(_prob_sum_exact(y, g, d))


@dataclass(frozen=True)
class SumDistribution:
    d: int
    g: int
    exact: tuple[Fraction, ...]

    @property
    def probs(self) -> np.ndarray:
        return np.array([float(p) for p in self.exact])

    def __getitem__(self, y: int) -> float:
        if 0 <= y < len(self.exact):
            return float(self.exact[y])
        return 0.0


@lru_cache(maxsize=None)
def sum_distribution(g: int, d: int) -> SumDistribution:
    return SumDistribution(d, g, tuple(_prob_sum_exact(y, g, d) for y in range((d - 1) * g + 1)))


def _p_no_mod_exact(g: int, d: int) -> Fraction:
    if g == 0:
        return Fraction(1)
    return sum((_prob_sum_exact(y, g, d) for y in range(min(d, (d - 1) * g + 1))), Fraction(0))


def prob_mod_event(g: int, d: int) -> tuple[float, float]:
    """``(Pr(Y < d | g), Pr(Y >= d | g))``.  ``g == 0`` is the empty event."""
    if g < 0:
        raise ValueError(f"g must be >= 0, got {g}")
    p = _p_no_mod_exact(g, d)
    return float(p), float(1 - p)


def _prob_g_exact(g: int, n: int, k: int, l: int) -> Fraction:
    if g < 0 or g > min(k, l) or l - g > n - k:
        return Fraction(0)
    return Fraction(comb(n - k, l - g) * comb(k, g), comb(n, l))


def prob_g(g: int, params: SchemeParams) -> float:
    """Hypergeometric chance that a window holds exactly ``g`` secret items."""
    return float(_prob_g_exact(g, params.n, params.k, params.l))


def _cond_weight_exact(g: int, d: int, event: Event) -> Fraction:
    if event == "unconditional":
        return Fraction(d - 1, 2)
    dist = sum_distribution(g, d).exact
    if event == "no_mod":
        ys = range(min(d, len(dist)))
    elif event == "mod":
        ys = range(d, len(dist))
    else:
        raise ValueError(f"unknown event {event!r}")
    mass = sum((dist[y] for y in ys), Fraction(0))
    first = sum((y * dist[y] for y in ys), Fraction(0))
    return first / mass / g


def conditional_expected_weight(g: int, d: int, event: Event) -> float:
    """Expected weight of one secret item given ``g`` present and the event.

    Raises
    ------
    ValueError
        For ``g < 1``, or ``event == "mod"`` with ``g == 1`` (one weight
        below ``d`` can never force a reduction).
    """
    if g < 1:
        raise ValueError(f"g must be >= 1, got {g}")
    if event == "mod" and g < 2:
        raise ValueError("the modulus event is impossible with a single secret item")
    return float(_cond_weight_exact(g, d, event))


def expected_weight_all_g(params: SchemeParams, event: Event) -> float:
    """Per-g conditional weights averaged over the window's ``g`` distribution.

    Only the ``g`` for which the event can occur enter the average, with the
    ``Pr(G = g)`` weights renormalised over them.  The empty window is a
    no-modulus round carrying zero secret weight, so it contributes 0 to the
    ``no_mod`` average.
    """
    if event == "unconditional":
        return (params.d - 1) / 2
    gs = range(2, params.max_g + 1) if event == "mod" else range(0, params.max_g + 1)
    num = Fraction(0)
    den = Fraction(0)
    for g in gs:
        w = _prob_g_exact(g, params.n, params.k, params.l)
        den += w
        if g:
            num += w * _cond_weight_exact(g, params.d, event)
    return float(num / den)


def _response_given_sum(params: SchemeParams, y: int, g: int, include_flip: bool) -> dict[int, float]:
    """Distribution of the submitted response for raw sum ``y`` with ``g`` secrets."""
    d = params.d
    if params.kind is SchemeKind.BC:
        if g == 0:
            return {r: 1.0 / d for r in range(d)}
        return {y % d: 1.0}
    if params.kind is SchemeKind.FT:
        return {int(g > 0 and (y % d) >= d // 2): 1.0}
    base = y % 2
    eta = params.eta if include_flip and g > 0 else 0.0
    out = {base: 1.0 - eta}
    if eta:
        out[1 - base] = eta
    return out


@dataclass(frozen=True)
class BiasTable:
    """Modulus-event likelihoods indexed by submitted response.

    Arrays indexed ``[r, g]`` span ``g = 0..max_g``; entries where the
    response cannot occur are NaN.
    """

    params: SchemeParams
    p_mod_given_rg: np.ndarray
    p_r_given_g: np.ndarray
    p_mod_given_r: np.ndarray
    p_r: np.ndarray

    def p_mod(self, r: int, g: int | None = None) -> float:
        if g is None:
            return float(self.p_mod_given_r[r])
        return float(self.p_mod_given_rg[r, g])

    def p_no_mod(self, r: int, g: int | None = None) -> float:
        return 1.0 - self.p_mod(r, g)


def _joint_given_g(params: SchemeParams, g: int, include_flip: bool) -> tuple[np.ndarray, np.ndarray]:
    R = params.response_space
    p_r = np.zeros(R)
    p_r_mod = np.zeros(R)
    for y, py in enumerate(sum_distribution(g, params.d).exact if g else (Fraction(1),)):
        for r, pr in _response_given_sum(params, y, g, include_flip).items():
            p = float(py) * pr
            p_r[r] += p
            if y >= params.d:
                p_r_mod[r] += p
    return p_r, p_r_mod


def response_bias_table(params: SchemeParams, include_flip: bool = True) -> BiasTable:
    """Exact ``Pr(modulus | response, g)`` and its ``g``-aggregated form.

    The aggregate weights each ``g`` (empty window included) by
    ``Pr(G = g)``.  ``include_flip=False`` drops the ``hb`` noise channel.
    """
    R = params.response_space
    G = params.max_g
    p_r_g = np.zeros((R, G + 1))
    p_mod_rg = np.full((R, G + 1), np.nan)
    tot_r = np.zeros(R)
    tot_r_mod = np.zeros(R)
    for g in range(G + 1):
        p_r, p_r_mod = _joint_given_g(params, g, include_flip)
        p_r_g[:, g] = p_r
        ok = p_r > 0
        p_mod_rg[ok, g] = p_r_mod[ok] / p_r[ok]
        w = prob_g(g, params)
        tot_r += w * p_r
        tot_r_mod += w * p_r_mod
    with np.errstate(invalid="ignore", divide="ignore"):
        agg = np.where(tot_r > 0, tot_r_mod / tot_r, np.nan)
    return BiasTable(params, p_mod_rg, p_r_g, agg, tot_r)


def response_distribution(params: SchemeParams) -> np.ndarray:
    """Marginal ``Pr(response = r)`` over windows, weights and noise."""
    return response_bias_table(params).p_r


def guess_probability(params: SchemeParams) -> float:
    """Per-round success of always submitting the most likely response."""
    return float(response_distribution(params).max())
