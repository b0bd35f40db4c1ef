"""Level values, nested level-set families, and chain-to-function construction.

For f with distinct values mu_1 < ... < mu_p, the i-th level family is
F_i = {X : f(X) <= mu_i}.  These nest strictly:

    ∅ = F_0 ⊂ F_1 ⊂ ... ⊂ F_p = 2^E

Conversely, a strictly nested chain of families induces an integer-valued
function (value i on F_i \\ F_{i-1}).  The induced function is accepted only
if it satisfies the equal-value condition Qh; chains failing that are
rejected rather than repaired.
"""

from __future__ import annotations

from dataclasses import dataclass

from .conditions import ConditionId, ConditionWitness, _make_witness
from .core import INTEGERS, GroundSet, OrdinalValue, SetFunction


class ChainError(ValueError):
    """A family chain violates nesting or does not induce a Qh function."""


@dataclass(frozen=True)
class LevelValues:
    """The distinct values of f, strictly increasing."""

    mu: tuple[OrdinalValue, ...]

    @property
    def p(self) -> int:
        return len(self.mu)


@dataclass(frozen=True)
class LevelChain:
    """Families F_0, ..., F_p as sorted mask tuples; F_0 is empty."""

    families: tuple[tuple[int, ...], ...]

    @property
    def p(self) -> int:
        return len(self.families) - 1


def levels(f: SetFunction) -> LevelValues:
    return LevelValues(tuple(OrdinalValue(f.codomain, k) for k in f.distinct_keys()))


def level_family(f: SetFunction, i: int) -> tuple[int, ...]:
    """Masks with f(X) <= mu_i, ascending; i = 0 gives the empty family."""
    mu = f.distinct_keys()
    if not 0 <= i <= len(mu):
        raise ValueError(f"level index must be in [0, {len(mu)}], got {i}")
    if i == 0:
        return ()
    cut = mu[i - 1]
    return tuple(m for m in range(f.size) if f.values[m] <= cut)


def family_chain(f: SetFunction) -> LevelChain:
    """The full chain F_0 ⊂ F_1 ⊂ ... ⊂ F_p; strict nesting holds because every mu_i is attained."""
    mu = f.distinct_keys()
    fams: list[tuple[int, ...]] = [()]
    for cut in mu:
        fams.append(tuple(m for m in range(f.size) if f.values[m] <= cut))
    return LevelChain(tuple(fams))


def check_qh(f: SetFunction) -> ConditionWitness | None:
    """Scan equal-value pairs for the Qh condition; None means it holds.

    Independent of the generic pairwise scanner: subsets are grouped by value
    and only pairs inside a group are examined.  The reported witness is still
    the lexicographically smallest violating (X, Y).
    """
    groups: dict[object, list[int]] = {}
    for m, v in enumerate(f.values):
        groups.setdefault(v, []).append(m)
    vals = f.values
    best: tuple[int, int] | None = None
    for members in groups.values():
        if len(members) < 2:
            continue
        for x in members:
            vx = vals[x]
            for y in members:
                if x == y:
                    continue
                vu, vi = vals[x | y], vals[x & y]
                if vu >= vx and vi >= vx and not (vu == vx and vi == vx):
                    if best is None or (x, y) < best:
                        best = (x, y)
    if best is None:
        return None
    x, y = best
    return _make_witness(f, ConditionId.QH, (x, y, x | y, x & y))


def qh_from_chain(ground: GroundSet, chain: LevelChain) -> SetFunction:
    """Build the integer function taking value i on F_i \\ F_{i-1}.

    The chain must start empty, end with the full power set, and nest
    strictly.  The induced function is validated with :func:`check_qh`; a
    chain whose induced function fails is rejected with :class:`ChainError`,
    since only chains arising from genuinely hierarchical level structures
    are guaranteed to induce one.  On acceptance, ``family_chain`` of the
    result reproduces the input chain.
    """
    fams = [tuple(sorted(set(fam))) for fam in chain.families]
    if not fams or fams[0] != ():
        raise ChainError("chain must start with the empty family")
    full = tuple(range(ground.size))
    if fams[-1] != full:
        raise ChainError("chain must end with the full power set")
    for i, fam in enumerate(fams):
        for m in fam:
            ground.check_mask(m)
        if i > 0:
            prev = set(fams[i - 1])
            if not prev < set(fam):
                raise ChainError(f"families must nest strictly; level {i} does not extend level {i - 1}")
    values = [0] * ground.size
    for i in range(1, len(fams)):
        for m in set(fams[i]) - set(fams[i - 1]):
            values[m] = i
    f = SetFunction(ground, INTEGERS, tuple(values))
    w = check_qh(f)
    if w is not None:
        raise ChainError(
            "chain does not induce a function satisfying the equal-value condition; "
            f"first witness at X={ground.subset_str(w.x)!r}, Y={ground.subset_str(w.y)!r}"
        )
    return f
