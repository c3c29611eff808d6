"""Tolerance policy and real-root extraction for low-degree polynomials.

Coefficients are always given highest degree first (the ``numpy.roots``
convention).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class Tolerance:
    """Relative tolerances shared by every construction.

    ``eps_construct`` applies to quantities produced in closed form,
    ``eps_iterative`` to anything that went through a fit or an iteration.
    Roots closer than ``eps_construct ** cluster_scale`` (times the root
    magnitude scale) are merged into a single multiple root.
    """

    eps_construct: float = 1e-9
    eps_iterative: float = 1e-7
    cluster_scale: float = 0.5

    def __post_init__(self):
        if min(self.eps_construct, self.eps_iterative, self.cluster_scale) <= 0:
            raise ValueError("tolerances must be strictly positive")
        if self.eps_construct > self.eps_iterative:
            raise ValueError("eps_construct must not exceed eps_iterative")

    @property
    def cluster_eps(self) -> float:
        return self.eps_construct ** self.cluster_scale


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class RootSet:
    """Real roots with multiplicities, strictly increasing by value."""

    roots: tuple[tuple[float, int], ...] = field(default_factory=tuple)
    degree: int = 0

    def __post_init__(self):
        if sum(m for _, m in self.roots) > self.degree:
            raise ValueError("multiplicities exceed the degree")
        values = [r for r, _ in self.roots]
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError("roots must be strictly increasing")

    @property
    def values(self) -> list[float]:
        return [r for r, _ in self.roots]

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.roots)

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


def _normalized(coeffs: Sequence[float]) -> np.ndarray:
    p = np.asarray(coeffs, dtype=float).ravel()
    if p.size == 0 or not np.all(np.isfinite(p)):
        raise ValueError("indeterminate")
    big = np.max(np.abs(p))
    if big == 0.0:
        raise ValueError("indeterminate")
    # scale by a power of two so rescaled inputs give bit-identical roots
    p = np.ldexp(p, -np.frexp(big)[1])
    # leading terms this small only carry roots near infinity
    nz = np.nonzero(np.abs(p) > 1e-14 * np.max(np.abs(p)))[0]
    return p[nz[0]:]


def _residual_scale(p: np.ndarray, r: float) -> float:
    # max |c_i r^i|: equals max |c_i| for |r| <= 1 and follows the dominant
    # term for large roots, keeping the bound meaningful under rounding
    powers = np.abs(r) ** np.arange(p.size - 1, -1, -1)
    return float(np.max(np.abs(p) * powers))


def _newton(p: np.ndarray, x: float, iters: int = 8) -> float:
    dp = np.polyder(p)
    best, best_val = x, abs(np.polyval(p, x))
    for _ in range(iters):
        d = np.polyval(dp, x)
        if d == 0.0:
            break
        x = x - np.polyval(p, x) / d
        val = abs(np.polyval(p, x))
        if val < best_val:
            best, best_val = x, val
        if val == 0.0:
            break
    return float(best)


def solve_polynomial(coeffs: Sequence[float], tol: Tolerance = DEFAULT_TOL) -> RootSet:
    """Real roots of a polynomial of degree at most four.

    Candidates come from companion-matrix eigenvalues. Eigenvalues whose
    imaginary part is below the clustering threshold are kept, near-equal
    candidates are merged (so a double root split by rounding into a close
    real pair, or a tiny-imaginary complex pair, comes back once with
    multiplicity 2), and each cluster of multiplicity ``m`` is polished by
    Newton on the ``m-1``-th derivative, where it is a simple root.

    Raises:
        ValueError: ``"indeterminate"`` for the zero polynomial,
            ``"unsupported degree"`` above four.
    """
    p = _normalized(coeffs)
    degree = p.size - 1
    if degree > 4:
        raise ValueError("unsupported degree")
    if degree == 0:
        return RootSet((), 0)

    eig = np.roots(p)
    mag_scale = max(1.0, float(np.max(np.abs(eig))))
    thresh = tol.cluster_eps * mag_scale
    cand = sorted(float(z.real) for z in eig if abs(z.imag) <= thresh)

    clusters: list[list[float]] = []
    for x in cand:
        if clusters and x - clusters[-1][-1] <= thresh:
            clusters[-1].append(x)
        else:
            clusters.append([x])

    out: list[tuple[float, int]] = []
    for cl in clusters:
        mult = len(cl)
        x = float(np.mean(cl))
        q = p
        for _ in range(mult - 1):
            q = np.polyder(q)
        x = _newton(q, x)
        if abs(np.polyval(p, x)) <= tol.eps_construct * _residual_scale(p, x):
            out.append((x, mult))

    merged: list[tuple[float, int]] = []
    for x, m in out:
        if merged and x <= merged[-1][0]:
            # polishing can reorder two clusters that sat right at the threshold
            px, pm = merged.pop()
            merged.append(((px * pm + x * m) / (pm + m), pm + m))
        else:
            merged.append((x, m))
    return RootSet(tuple(merged), degree)


def square_decompose_quartic(
    coeffs: Sequence[float], tol: Tolerance = DEFAULT_TOL
) -> tuple[tuple[float, float, float], float]:
    """Write a quartic as ``q(t)**2`` for a quadratic ``q``.

    ``q`` is fixed by the top three coefficients; the residual is the largest
    mismatch on the last two, relative to the largest quartic coefficient.
    A residual of zero certifies the quartic is a perfect square.
    """
    a4, a3, a2, a1, a0 = (float(c) for c in coeffs)
    if not a4 > 0.0:
        raise ValueError("not a positive quartic")
    alpha = np.sqrt(a4)
    beta = a3 / (2.0 * alpha)
    gamma = (a2 - beta * beta) / (2.0 * alpha)
    scale = max(abs(a4), abs(a3), abs(a2), abs(a1), abs(a0))
    residual = max(abs(2.0 * beta * gamma - a1), abs(gamma * gamma - a0)) / scale
    return (float(alpha), float(beta), float(gamma)), float(residual)
