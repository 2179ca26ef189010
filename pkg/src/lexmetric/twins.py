"""Twin points and the special twin classes entering the product dimension formula.

Two points are twins when every third point sees them at equal distance.
Twinness is an equivalence; all members of a non-singleton class sit at one
common gap from each other and share their nearness. A two-point space is a
single non-singleton class: the defining condition quantifies over an empty
set of third points.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .construct import gravitational
from .resolving import DEFAULT_ENUMERATION_CAP, metric_dimension
from .space import FiniteMetricSpace, nearness_point


@dataclass(frozen=True)
class TwinPartition:
    """The twin equivalence classes of a space.

    ``classes`` partitions the point set; members and classes are sorted by
    label. ``gap`` and ``class_nearness`` hold, for each non-singleton class,
    the common within-class distance and the members' shared nearness.
    """

    classes: tuple[tuple[str, ...], ...]
    gap: dict[tuple[str, ...], float]
    class_nearness: dict[tuple[str, ...], float]

    @property
    def non_singleton_classes(self) -> tuple[tuple[str, ...], ...]:
        return tuple(c for c in self.classes if len(c) > 1)


def _twin_matrix(space: FiniteMetricSpace) -> np.ndarray:
    d = space.dist
    tau = space.tolerance
    n = space.n
    twins = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            mask = np.ones(n, dtype=bool)
            mask[i] = mask[j] = False
            twins[i, j] = twins[j, i] = bool(
                (np.abs(d[i, mask] - d[j, mask]) <= tau).all()
            )
    return twins


def twin_classes(space: FiniteMetricSpace) -> TwinPartition:
    """Partition the points into twin equivalence classes.

    The relation is computed pairwise and then verified to be transitive;
    with exact tables it always is, but tolerance chains could break it, and
    a broken partition raises rather than being silently repaired.
    """
    twins = _twin_matrix(space)
    n = space.n
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(n):
        for j in range(i + 1, n):
            if twins[i, j]:
                parent[find(i)] = find(j)

    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    for members in groups.values():
        for a, b in itertools.combinations(members, 2):
            if not twins[a, b]:
                raise ValueError(
                    "twin relation is not transitive at this tolerance: "
                    f"{space.points[a]!r} and {space.points[b]!r} are linked but not twins"
                )

    classes = tuple(
        sorted(
            (tuple(sorted(space.points[i] for i in members)) for members in groups.values()),
            key=lambda c: c[0],
        )
    )
    gap: dict[tuple[str, ...], float] = {}
    class_nearness: dict[tuple[str, ...], float] = {}
    for cls in classes:
        if len(cls) == 1:
            continue
        pairwise = [space.d(u, v) for u, v in itertools.combinations(cls, 2)]
        if max(pairwise) - min(pairwise) > 2 * space.tolerance:
            raise ValueError(f"within-class distances of {cls!r} are not constant")
        near = [nearness_point(space, u) for u in cls]
        if max(near) - min(near) > 2 * space.tolerance:
            raise ValueError(f"within-class nearness of {cls!r} is not constant")
        gap[cls] = space.d(cls[0], cls[1])
        class_nearness[cls] = near[0]
    return TwinPartition(classes, gap, class_nearness)


def is_twins_free(space: FiniteMetricSpace) -> bool:
    """True when every twin class is a singleton."""
    return all(len(c) == 1 for c in twin_classes(space).classes)


class BasisCheck(NamedTuple):
    """One fiber basis and the unique far witness found for it, if any."""

    basis: tuple[str, ...]
    witness: str | None


@dataclass(frozen=True)
class SpecialClassSet:
    """The non-singleton twin classes whose fibers always admit a far witness.

    ``evidence`` records, per examined class and member, the checked fiber
    bases with their witness (or the first basis that failed, which is what
    excluded the class).
    """

    member_classes: tuple[tuple[str, ...], ...]
    evidence: dict[tuple[str, ...], dict[str, tuple[BasisCheck, ...]]]


def special_classes(
    base: FiniteMetricSpace,
    second: FiniteMetricSpace,
    max_enumeration_points: int = DEFAULT_ENUMERATION_CAP,
) -> SpecialClassSet:
    """Which non-singleton twin classes of ``base`` contribute extra landmarks.

    A class with gap L qualifies when for every member x and every metric
    basis of that member's fiber (``second`` capped at twice the nearness of
    x) some fiber point sits at capped distance exactly L from all basis
    points. Each member is checked in full rather than one representative.
    The witness is unique whenever it exists, because two of them would be
    unresolved by the basis; a duplicate therefore raises.

    Needs the complete basis list of each fiber, so it inherits the
    enumeration cap and refuses larger second factors outright instead of
    approximating.
    """
    tol = max(base.tolerance, second.tolerance)
    partition = twin_classes(base)
    members_out: list[tuple[str, ...]] = []
    evidence: dict[tuple[str, ...], dict[str, tuple[BasisCheck, ...]]] = {}
    for cls in partition.non_singleton_classes:
        gap = partition.gap[cls]
        per_member: dict[str, tuple[BasisCheck, ...]] = {}
        qualifies = True
        for x in cls:
            fib = gravitational(second, nearness_point(base, x))
            result = metric_dimension(
                fib, enumerate_all=True, max_enumeration_points=max_enumeration_points
            )
            checks: list[BasisCheck] = []
            member_ok = True
            assert result.all_bases is not None
            for basis in result.all_bases:
                hits = [
                    z
                    for z in fib.points
                    if all(abs(fib.d(z, s) - gap) <= tol for s in basis)
                ]
                if len(hits) > 1:
                    raise ValueError(
                        f"far witness for fiber basis {basis!r} is not unique: {hits!r}"
                    )
                witness = hits[0] if hits else None
                checks.append(BasisCheck(basis, witness))
                if witness is None:
                    member_ok = False
                    break
            per_member[x] = tuple(checks)
            if not member_ok:
                qualifies = False
                break
        evidence[cls] = per_member
        if qualifies:
            members_out.append(cls)
    return SpecialClassSet(tuple(members_out), evidence)
