"""Merging disjoint classes into few large parts, each drawn from at most
two classes, plus the forest-partition pipeline built on top of it.

Class and part indices are 0-based throughout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BadParameters, InvalidColoring, OverlappingSets, UnreachableCaseII
from .graph import Graph
from .partitioners import Partition


def merge_quota(k: int, ell: int, n: int) -> int:
    """The guaranteed lower bound floor((2n + k - ell) / (k + ell - 1)) on
    merged part sizes (exact integer arithmetic)."""
    if not 1 <= ell < k:
        raise BadParameters(f"need 1 <= ell < k, got ell={ell}, k={k}")
    if n < 0:
        raise BadParameters(f"need n >= 0, got {n}")
    return (2 * n + k - ell) // (k + ell - 1)


def merge_threshold(k: int, ell: int, n: int, q: int) -> int:
    """ceil(n - (k + ell - 1) q / 2): how many parts are owed size q+1."""
    return n - ((k + ell - 1) * q) // 2


def lemma_quota_step(k: int, ell: int, n: int) -> tuple[int, int, int, bool]:
    """One induction step of the quota arithmetic.

    Returns (q, n', q', identity_holds) where n' = n - q and q' is the
    quota for k - 1 classes and ell - 1 parts. identity_holds confirms both
    facts the step relies on: q' = q + 1 exactly when the threshold reaches
    ell - 1, and n - (k+ell-1)q/2 = n' - (k+ell-3)q/2 in exact rationals.
    """
    if ell < 2:
        raise BadParameters(f"need ell >= 2, got {ell}")
    q = merge_quota(k, ell, n)
    n_prime = n - q
    q_prime = (2 * n_prime + k - ell) // (k + ell - 3)
    bump = merge_threshold(k, ell, n, q) >= ell - 1
    first = (q_prime == q + 1) if bump else (q_prime == q)
    second = (Fraction(n) - Fraction((k + ell - 1) * q, 2)
              == Fraction(n_prime) - Fraction((k + ell - 3) * q, 2))
    return q, n_prime, q_prime, first and second


@dataclass(frozen=True)
class MergeInput:
    classes: tuple[tuple[int, ...], ...]
    ell: int

    def __post_init__(self):
        k = len(self.classes)
        if not 1 <= self.ell < k:
            raise BadParameters(f"need 1 <= ell < k, got ell={self.ell}, k={k}")
        seen: set[int] = set()
        for c in self.classes:
            cs = set(c)
            overlap = seen & cs
            if overlap:
                raise OverlappingSets(
                    f"classes share elements {sorted(overlap)}")
            seen |= cs

    @classmethod
    def of(cls, classes: Iterable[Iterable[int]], ell: int) -> "MergeInput":
        return cls(tuple(tuple(sorted(c)) for c in classes), ell)


@dataclass(frozen=True)
class MergeResult:
    """(B0, B1..B_ell) with provenance: which <=2 classes each part draws
    from, which k-ell-1 classes hold B0, and the quota/threshold pair."""
    B0: tuple[int, ...]
    B: tuple[tuple[int, ...], ...]
    provenance: tuple[tuple[int, ...], ...]
    I: tuple[int, ...]
    q: int
    r: int

    def to_json(self) -> dict:
        return {
            "B0": list(self.B0),
            "B": [{"members": list(b), "from": list(p)}
                  for b, p in zip(self.B, self.provenance)],
            "I": list(self.I),
            "q": self.q,
            "r": self.r,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def proposition_merge(inp: MergeInput) -> MergeResult:
    """Partition the union of the classes into (B0, B1..B_ell) meeting the
    quota bounds, recursing on ell.

    At each level: with one part left, merge the two largest classes; with
    more, split one class pair at exactly the quota and recurse on the
    k - 1 remaining classes; when every class already exceeds the quota,
    output the classes themselves. Parts are returned sorted by descending
    size so the (q+1)/(q) bounds hold positionally.
    """
    classes = inp.classes
    k = len(classes)
    n = sum(len(c) for c in classes)
    q = merge_quota(k, inp.ell, n)
    r = merge_threshold(k, inp.ell, n, q)

    indexed = [(i, tuple(sorted(c))) for i, c in enumerate(classes)]
    b0, bs, idx_set = _merge_level(indexed, inp.ell)

    bs.sort(key=lambda item: -len(item[0]))
    result = MergeResult(
        B0=tuple(sorted(b0)),
        B=tuple(tuple(sorted(b)) for b, _ in bs),
        provenance=tuple(prov for _, prov in bs),
        I=tuple(sorted(idx_set)),
        q=q,
        r=r,
    )
    _assert_merge_invariants(inp, result, n)
    return result


def _merge_level(indexed: list[tuple[int, tuple[int, ...]]], ell: int):
    """Returns (B0 elements, [(part elements, provenance)], I as a set of
    original class indices)."""
    # canonical processing order (size desc, then contents) makes the output
    # parts invariant under permutation of the input classes
    indexed = sorted(indexed, key=lambda t: (-len(t[1]), t[1]))
    k = len(indexed)
    n = sum(len(c) for _, c in indexed)
    q = merge_quota(k, ell, n)

    if ell == 1:
        best = None
        for i in range(k):
            for j in range(i + 1, k):
                size = len(indexed[i][1]) + len(indexed[j][1])
                if best is None or size > best[0]:
                    best = (size, i, j)
        _, i, j = best
        oi, ci = indexed[i]
        oj, cj = indexed[j]
        prov = tuple(o for o, c in ((oi, ci), (oj, cj)) if c)
        part = list(ci) + list(cj)
        b0 = [x for t, (_, c) in enumerate(indexed) if t not in (i, j) for x in c]
        idx_set = {o for t, (o, _) in enumerate(indexed) if t not in (i, j)}
        return b0, [(part, prov)], idx_set

    for i in range(k):
        ai = len(indexed[i][1])
        if ai > q:
            continue
        for j in range(k):
            if j == i or ai + len(indexed[j][1]) < q:
                continue
            oi, ci = indexed[i]
            oj, cj = indexed[j]
            take = cj[:q - ai]
            rest = cj[q - ai:]
            prov = tuple(o for o, c in ((oi, ci), (oj, take)) if c)
            part = list(ci) + list(take)
            remaining = [
                (indexed[t][0], rest if t == j else indexed[t][1])
                for t in range(k) if t != i
            ]
            b0, bs, idx_set = _merge_level(remaining, ell - 1)
            bs.append((part, prov))
            return b0, bs, idx_set

    # No split pair exists: every class must already exceed the quota.
    if any(len(c) <= q for _, c in indexed):
        raise UnreachableCaseII(
            "neither a split pair nor all-classes-large holds; "
            "this indicates a bug")
    bs = [(list(c), (o,)) for o, c in indexed[:ell - 1]]
    oi, ci = indexed[ell - 1]
    oj, cj = indexed[ell]
    bs.append((list(ci) + list(cj),
               tuple(o for o, c in ((oi, ci), (oj, cj)) if c)))
    b0 = [x for _, c in indexed[ell + 1:] for x in c]
    idx_set = {o for o, _ in indexed[ell + 1:]}
    return b0, bs, idx_set


def _assert_merge_invariants(inp: MergeInput, res: MergeResult, n: int) -> None:
    universe = sorted(x for c in inp.classes for x in c)
    got = sorted(list(res.B0) + [x for b in res.B for x in b])
    assert got == universe, "merge output is not a partition of the union"
    assert len(res.B) == inp.ell
    for b, prov in zip(res.B, res.provenance):
        assert len(prov) <= 2
        allowed = set().union(*(inp.classes[p] for p in prov)) if prov else set()
        assert set(b) <= allowed or not b
    for pos, b in enumerate(res.B, start=1):
        need = res.q + 1 if pos <= res.r else res.q
        assert len(b) >= need, f"part {pos} has {len(b)} < {need}"
    assert len(res.I) == len(inp.classes) - inp.ell - 1
    allowed0 = set().union(*(inp.classes[p] for p in res.I)) if res.I else set()
    assert set(res.B0) <= allowed0


def equitable_merge(classes: Iterable[Iterable[int]]) -> list[tuple[int, ...]]:
    """Merge k disjoint classes into k - 1 parts whose sizes differ by at
    most one (exactly n mod (k-1) parts get the larger size)."""
    classes = [tuple(sorted(c)) for c in classes]
    inp = MergeInput.of(classes, ell=len(classes) - 1)
    res = proposition_merge(inp)
    assert res.B0 == (), "B0 must be empty when ell = k - 1"
    n = sum(len(c) for c in inp.classes)
    k = len(inp.classes)
    lo, extra = divmod(n, k - 1)
    sizes = sorted((len(b) for b in res.B), reverse=True)
    assert sizes == [lo + 1] * extra + [lo] * (k - 1 - extra), \
        f"sizes {sizes} not equitable for n={n}, k={k}"
    return [tuple(b) for b in res.B]


def partition_2forests_1graph(g: Graph, coloring) -> Partition:
    """Equitable 3-partition (B0', B1', B2') with parts 1 and 2 inducing
    forests, from an acyclic 5-coloring.

    ``coloring`` is a Coloring or a list of 5 independent vertex sets whose
    pairwise unions induce forests. The two merged parts are trimmed to the
    target size by dropping highest-id vertices.
    """
    from .coloring import Coloring, validate_coloring

    if hasattr(coloring, "classes"):
        classes = [tuple(sorted(c)) for c in coloring.classes]
    else:
        classes = [tuple(sorted(c)) for c in coloring]
    if len(classes) != 5:
        raise InvalidColoring(f"expected 5 color classes, got {len(classes)}")
    report = validate_coloring(g, Coloring(classes=tuple(classes), kind="acyclic"))
    if not report.passed:
        raise InvalidColoring(
            "supplied coloring is not a valid acyclic 5-coloring",
            report=report)

    res = proposition_merge(MergeInput.of(classes, ell=2))
    n = g.n
    t = n // 3 + (1 if n % 3 == 2 else 0)
    b1 = sorted(res.B[0])[:t]
    b2 = sorted(res.B[1])[:t]
    used = set(b1) | set(b2)
    b0 = sorted(v for v in range(n) if v not in used)
    return Partition(parts=(tuple(b0), tuple(b1), tuple(b2)))
