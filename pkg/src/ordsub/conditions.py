"""Ordinal submodularity conditions and classification.

A set function f on a Boolean lattice, into a totally ordered codomain, is
tested pairwise over X, Y against:

    Q1:  f(X) <= f(X∩Y)  implies  f(X∪Y) <= f(Y)
    Q2:  f(X) <  f(X∩Y)  implies  f(X∪Y) <  f(Y)
    Q3:  f(X) <  f(X∩Y)  implies  f(X∪Y) <= f(Y)
    Q4:  max(f(X), f(Y)) >= min(f(X∪Y), f(X∩Y))
    Qh:  f(X) == f(Y)    implies  f(X∪Y) == f(X∩Y) == f(X),
                                  or f(X∪Y) < f(X), or f(X∩Y) < f(X)

Quasisubmodular means Q1 and Q2 jointly.  The conditions are evaluated in
their disjunctive forms (e.g. Q1 at a pair is "f(X) > f(X∩Y) or
f(X∪Y) <= f(Y)"), so vacuous hypotheses count as satisfied.

Pairs are scanned in lexicographic (X, Y) mask order and the first violation
is reported as a witness, which makes witnesses deterministic.  Pairs where
X and Y are comparable (one contains the other) can never violate any of the
conditions above, so the scanners only visit incomparable pairs; the first
violation is unchanged.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Mapping, Sequence

from .core import OrdinalValue, RawKey, SetFunction
from .parallel import min_over_chunks, split_ranges

Pair = tuple[int, int, int, int]  # (X, Y, X|Y, X&Y)


class ConditionId(enum.Enum):
    Q1 = "Q1"
    Q2 = "Q2"
    Q3 = "Q3"
    Q4 = "Q4"
    QH = "Qh"
    QUASI = "QuasiSubmodular"
    ORDINARY = "OrdinarySubmodular"
    INJECTIVE = "Injective"

    def __str__(self) -> str:
        return self.value


PAIRWISE_CONDITIONS = (
    ConditionId.Q1,
    ConditionId.Q2,
    ConditionId.Q3,
    ConditionId.Q4,
    ConditionId.QH,
)


@lru_cache(maxsize=None)
def pair_table(n: int) -> tuple[Pair, ...]:
    """All 4**n ordered pairs (X, Y, X|Y, X&Y) in lexicographic (X, Y) order."""
    size = 1 << n
    return tuple((x, y, x | y, x & y) for x in range(size) for y in range(size))


@lru_cache(maxsize=None)
def incomparable_pair_table(n: int) -> tuple[Pair, ...]:
    """The pairs with X ⊄ Y and Y ⊄ X, in lexicographic order."""
    return tuple(p for p in pair_table(n) if p[0] != p[3] and p[1] != p[3])


def holds_at_pair_raw(cond: ConditionId, vx: RawKey, vy: RawKey, vu: RawKey, vi: RawKey) -> bool:
    """Evaluate one condition at a single pair, given the four lattice values."""
    if cond is ConditionId.Q1:
        return vx > vi or vu <= vy
    if cond is ConditionId.Q2:
        return vx >= vi or vu < vy
    if cond is ConditionId.Q3:
        return vx >= vi or vu <= vy
    if cond is ConditionId.Q4:
        return max(vx, vy) >= min(vu, vi)
    if cond is ConditionId.QH:
        return vx != vy or (vu == vx and vi == vx) or vu < vx or vi < vx
    if cond is ConditionId.ORDINARY:
        return vx + vy >= vu + vi
    if cond is ConditionId.INJECTIVE:
        return vx != vy
    raise ValueError(f"{cond} has no pairwise form")


# Violation scanners over raw value tables.  Each returns the first failing
# pair (X, Y, X|Y, X&Y) in the given pair sequence, or None.  Kept as separate
# tight loops; these run hundreds of thousands of times in the exhaustive
# suites.

def _q1_violation(vals: Sequence[RawKey], pairs: Sequence[Pair]) -> Pair | None:
    for p in pairs:
        if vals[p[0]] <= vals[p[3]] and vals[p[2]] > vals[p[1]]:
            return p
    return None


def _q2_violation(vals: Sequence[RawKey], pairs: Sequence[Pair]) -> Pair | None:
    for p in pairs:
        if vals[p[0]] < vals[p[3]] and vals[p[2]] >= vals[p[1]]:
            return p
    return None


def _q3_violation(vals: Sequence[RawKey], pairs: Sequence[Pair]) -> Pair | None:
    for p in pairs:
        if vals[p[0]] < vals[p[3]] and vals[p[2]] > vals[p[1]]:
            return p
    return None


def _q4_violation(vals: Sequence[RawKey], pairs: Sequence[Pair]) -> Pair | None:
    for x, y, u, i in pairs:
        vx, vy = vals[x], vals[y]
        hi = vx if vx >= vy else vy
        if vals[u] > hi and vals[i] > hi:
            return (x, y, u, i)
    return None


def _qh_violation(vals: Sequence[RawKey], pairs: Sequence[Pair]) -> Pair | None:
    for x, y, u, i in pairs:
        vx = vals[x]
        if vx == vals[y]:
            vu, vi = vals[u], vals[i]
            if vu >= vx and vi >= vx and not (vu == vx and vi == vx):
                return (x, y, u, i)
    return None


def _ordinary_violation(vals: Sequence[RawKey], pairs: Sequence[Pair]) -> Pair | None:
    for x, y, u, i in pairs:
        if vals[x] + vals[y] < vals[u] + vals[i]:
            return (x, y, u, i)
    return None


_VIOLATION_SCANNERS: dict[ConditionId, Callable[[Sequence[RawKey], Sequence[Pair]], Pair | None]] = {
    ConditionId.Q1: _q1_violation,
    ConditionId.Q2: _q2_violation,
    ConditionId.Q3: _q3_violation,
    ConditionId.Q4: _q4_violation,
    ConditionId.QH: _qh_violation,
    ConditionId.ORDINARY: _ordinary_violation,
}


def _quasi_violation(vals: Sequence[RawKey], pairs: Sequence[Pair]) -> tuple[Pair, ConditionId] | None:
    """First pair failing Q1 or Q2, tagged with which of the two failed."""
    for x, y, u, i in pairs:
        vx, vi = vals[x], vals[i]
        if vx < vi:
            if vals[u] >= vals[y]:
                return (x, y, u, i), ConditionId.Q2
        elif vx == vi:
            if vals[u] > vals[y]:
                return (x, y, u, i), ConditionId.Q1
    return None


def condition_violation(cond: ConditionId, vals: Sequence[RawKey], n: int) -> tuple[Pair, ConditionId] | None:
    """First violating pair for a raw value table, or None.

    Returns the pair together with the condition actually violated (only
    relevant for QuasiSubmodular, which reports Q1 or Q2).
    """
    pairs = incomparable_pair_table(n)
    if cond is ConditionId.QUASI:
        return _quasi_violation(vals, pairs)
    hit = _VIOLATION_SCANNERS[cond](vals, pairs)
    return None if hit is None else (hit, cond)


def raw_flag(cond: ConditionId, vals: Sequence[RawKey], n: int) -> bool:
    """Does a raw value table satisfy the condition everywhere?"""
    if cond is ConditionId.INJECTIVE:
        return len(set(vals)) == len(vals)
    return condition_violation(cond, vals, n) is None


@dataclass(frozen=True)
class ConditionWitness:
    """A pair (X, Y) whose four lattice values violate a condition.

    ``condition`` is the condition whose defining comparison fails on the
    recorded values; for a QuasiSubmodular check this is Q1 or Q2.  The pair
    is the lexicographically smallest violating one by (X, Y) mask.
    """

    condition: ConditionId
    x: int
    y: int
    v_x: OrdinalValue
    v_y: OrdinalValue
    v_union: OrdinalValue
    v_inter: OrdinalValue

    def reproduces(self) -> bool:
        """Re-evaluate the defining comparison on the stored values."""
        return not holds_at_pair_raw(
            self.condition, self.v_x.key, self.v_y.key, self.v_union.key, self.v_inter.key
        )

    def to_json(self, f: SetFunction) -> dict:
        enc = f.codomain.json_encode
        return {
            "condition": self.condition.value,
            "X": f.ground.subset_str(self.x),
            "Y": f.ground.subset_str(self.y),
            "values": [enc(self.v_x.key), enc(self.v_y.key), enc(self.v_union.key), enc(self.v_inter.key)],
        }


def _make_witness(f: SetFunction, cond: ConditionId, pair: Pair) -> ConditionWitness:
    x, y, u, i = pair
    return ConditionWitness(cond, x, y, f.value(x), f.value(y), f.value(u), f.value(i))


def holds_at_pair(f: SetFunction, cond: ConditionId, x: int, y: int) -> bool:
    """Evaluate one condition at the single pair (X, Y)."""
    f.ground.check_mask(x)
    f.ground.check_mask(y)
    if cond is ConditionId.QUASI:
        return holds_at_pair(f, ConditionId.Q1, x, y) and holds_at_pair(f, ConditionId.Q2, x, y)
    vals = f.values
    return holds_at_pair_raw(cond, vals[x], vals[y], vals[x | y], vals[x & y])


def _scan_parallel(
    scan: Callable[[Sequence[Pair]], tuple[Pair, ConditionId] | None],
    pairs: Sequence[Pair],
    threads: int,
) -> tuple[Pair, ConditionId] | None:
    """Run a chunked pair scan; the reported hit is the global lexicographic minimum."""
    if threads <= 1 or len(pairs) < 2:
        return scan(pairs)
    chunks = [pairs[lo:hi] for lo, hi in split_ranges(len(pairs), threads)]
    hits = min_over_chunks(scan, chunks, threads, key=lambda h: (h[0][0], h[0][1]))
    return hits


def check_condition(f: SetFunction, cond: ConditionId, threads: int = 1) -> ConditionWitness | None:
    """None if the condition holds for all pairs; otherwise the first witness.

    Accepts Q1..Q4, Qh and QuasiSubmodular.  The witness is lexicographically
    minimal by (X, Y) and identical regardless of ``threads``.
    """
    if cond not in PAIRWISE_CONDITIONS and cond is not ConditionId.QUASI:
        raise ValueError(f"check_condition does not handle {cond}; see is_ordinary_submodular / is_injective")
    vals = f.values
    pairs = incomparable_pair_table(f.n)
    if cond is ConditionId.QUASI:
        hit = _scan_parallel(lambda ps: _quasi_violation(vals, ps), pairs, threads)
    else:
        scanner = _VIOLATION_SCANNERS[cond]

        def scan(ps: Sequence[Pair]) -> tuple[Pair, ConditionId] | None:
            p = scanner(vals, ps)
            return None if p is None else (p, cond)

        hit = _scan_parallel(scan, pairs, threads)
    if hit is None:
        return None
    pair, failed = hit
    return _make_witness(f, failed, pair)


def iter_witnesses(f: SetFunction, cond: ConditionId) -> Iterator[ConditionWitness]:
    """Every violating pair in lexicographic order (the full-witness-list mode)."""
    if cond is ConditionId.QUASI:
        for x, y, u, i in incomparable_pair_table(f.n):
            for sub in (ConditionId.Q1, ConditionId.Q2):
                if not holds_at_pair_raw(sub, f.values[x], f.values[y], f.values[u], f.values[i]):
                    yield _make_witness(f, sub, (x, y, u, i))
                    break
        return
    scanner = _VIOLATION_SCANNERS[cond]
    for p in incomparable_pair_table(f.n):
        if scanner(f.values, (p,)) is not None:
            yield _make_witness(f, cond, p)


def check_ordinary_submodular(f: SetFunction, threads: int = 1) -> ConditionWitness | None:
    """None iff f(X) + f(Y) >= f(X∪Y) + f(X∩Y) for all pairs (exact arithmetic).

    Only defined for numeric codomains; labels have no additive structure.
    """
    if not f.codomain.is_numeric:
        raise ValueError("ordinary submodularity needs a numeric codomain (integer or rational)")
    vals = f.values
    pairs = incomparable_pair_table(f.n)

    def scan(ps: Sequence[Pair]) -> tuple[Pair, ConditionId] | None:
        p = _ordinary_violation(vals, ps)
        return None if p is None else (p, ConditionId.ORDINARY)

    hit = _scan_parallel(scan, pairs, threads)
    return None if hit is None else _make_witness(f, ConditionId.ORDINARY, hit[0])


def is_ordinary_submodular(f: SetFunction, threads: int = 1) -> bool:
    return check_ordinary_submodular(f, threads=threads) is None


def injective_witness(f: SetFunction) -> ConditionWitness | None:
    """First pair of distinct subsets sharing a value, in lexicographic order."""
    seen: dict[RawKey, int] = {}
    best: tuple[int, int] | None = None
    for m, v in enumerate(f.values):
        if v in seen:
            cand = (seen[v], m)
            if best is None or cand < best:
                best = cand
        else:
            seen[v] = m
    if best is None:
        return None
    x, y = best
    return _make_witness(f, ConditionId.INJECTIVE, (x, y, x | y, x & y))


def is_injective(f: SetFunction) -> bool:
    """Whether f takes 2**n pairwise distinct values (induces a linear order)."""
    return len(set(f.values)) == len(f.values)


@dataclass(frozen=True)
class ClassReport:
    """Flags for every condition, plus the first witness per failed one.

    ``flags[ConditionId.ORDINARY]`` is None when the codomain has no additive
    structure (labels); every other flag is a bool.  Construction asserts the
    implication lattice (Quasi ⇒ Q1 ∧ Q2, Q1 ⇒ Q3, Q2 ⇒ Q3, Q3 ⇒ Q4,
    Ordinary ⇒ Quasi, Injective ⇒ Qh); a violation means the checker itself
    is broken.
    """

    flags: Mapping[ConditionId, bool | None]
    witnesses: Mapping[ConditionId, ConditionWitness]

    def __post_init__(self) -> None:
        g = self.flags.get
        checks = [
            (not g(ConditionId.QUASI)) or (g(ConditionId.Q1) and g(ConditionId.Q2)),
            (not g(ConditionId.Q1)) or g(ConditionId.Q3),
            (not g(ConditionId.Q2)) or g(ConditionId.Q3),
            (not g(ConditionId.Q3)) or g(ConditionId.Q4),
            (not g(ConditionId.ORDINARY)) or g(ConditionId.QUASI),
            (not g(ConditionId.INJECTIVE)) or g(ConditionId.QH),
        ]
        if not all(checks):
            raise RuntimeError(f"condition checker bug: implication lattice violated in {dict(self.flags)}")

    def flag(self, cond: ConditionId) -> bool | None:
        return self.flags[cond]

    def ordinal_vector(self) -> tuple[bool, ...]:
        """Flags of the purely ordinal conditions (Q1..Q4, Qh, Quasi, Injective).

        This is the vector preserved by strictly increasing value relabelings;
        ordinary submodularity depends on sums, so it is excluded.
        """
        return tuple(
            self.flags[c]
            for c in (
                ConditionId.Q1,
                ConditionId.Q2,
                ConditionId.Q3,
                ConditionId.Q4,
                ConditionId.QH,
                ConditionId.QUASI,
                ConditionId.INJECTIVE,
            )
        )

    def to_json(self, f: SetFunction, include_witnesses: bool = False) -> dict:
        out: dict = {c.value: self.flags[c] for c in ConditionId}
        if include_witnesses:
            out["witnesses"] = {
                c.value: w.to_json(f) for c, w in self.witnesses.items()
            }
        return out


def classify(f: SetFunction, threads: int = 1) -> ClassReport:
    """Evaluate every condition on f and collect first witnesses for failures."""
    flags: dict[ConditionId, bool | None] = {}
    witnesses: dict[ConditionId, ConditionWitness] = {}
    for cond in PAIRWISE_CONDITIONS + (ConditionId.QUASI,):
        w = check_condition(f, cond, threads=threads)
        flags[cond] = w is None
        if w is not None:
            witnesses[cond] = w
    if f.codomain.is_numeric:
        w = check_ordinary_submodular(f, threads=threads)
        flags[ConditionId.ORDINARY] = w is None
        if w is not None:
            witnesses[ConditionId.ORDINARY] = w
    else:
        flags[ConditionId.ORDINARY] = None
    w = injective_witness(f)
    flags[ConditionId.INJECTIVE] = w is None
    if w is not None:
        witnesses[ConditionId.INJECTIVE] = w
    return ClassReport(flags, witnesses)


def pairwise_q3_equivalence(f: SetFunction) -> bool:
    """Diagnostic: [every pair satisfies Q1 or Q2] ⟺ [Q3 holds everywhere].

    The two predicates are equivalent for every set function; this recomputes
    both sides independently and reports whether they agree.
    """
    vals = f.values
    lhs = all(
        holds_at_pair_raw(ConditionId.Q1, vals[x], vals[y], vals[u], vals[i])
        or holds_at_pair_raw(ConditionId.Q2, vals[x], vals[y], vals[u], vals[i])
        for x, y, u, i in pair_table(f.n)
    )
    rhs = check_condition(f, ConditionId.Q3) is None
    return lhs == rhs
