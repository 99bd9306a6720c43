from __future__ import annotations

from typing import Iterable

from ..errors import InputError


def hall_check(X_size: int, Y_size: int, adjacency: Iterable[tuple[int, int]]
               ) -> tuple[bool, dict[int, int] | frozenset[int]]:
    """Decide whether ``X = {0..X_size-1}`` can be matched into ``Y``.

    Returns ``(True, matching)`` with an X-saturating matching ``x -> y``,
    or ``(False, S)`` with a set ``S`` of X-vertices whose neighbourhood is
    smaller than ``S`` (found from the alternating paths of a maximum matching).
    """
    if X_size < 0 or Y_size < 0:
        raise InputError("side sizes must be non-negative")
    nbrs: list[list[int]] = [[] for _ in range(X_size)]
    for x, y in adjacency:
        if not (0 <= x < X_size and 0 <= y < Y_size):
            raise InputError(f"pair ({x}, {y}) is out of range")
        if y not in nbrs[x]:
            nbrs[x].append(y)
    for ys in nbrs:
        ys.sort()
    owner: dict[int, int] = {}

    def augment(x: int, seen: set[int]) -> bool:
        for y in nbrs[x]:
            if y in seen:
                continue
            seen.add(y)
            if y not in owner or augment(owner[y], seen):
                owner[y] = x
                return True
        return False

    free = [x for x in range(X_size) if not augment(x, set())]
    if not free:
        return True, {x: y for y, x in sorted(owner.items())}
    # X-vertices reachable from an unmatched one by alternating paths
    S = {free[0]}
    stack = [free[0]]
    while stack:
        x = stack.pop()
        for y in nbrs[x]:
            z = owner.get(y)
            if z is not None and z not in S:
                S.add(z)
                stack.append(z)
    return False, frozenset(S)


def neighbourhood(adjacency: Iterable[tuple[int, int]], S: Iterable[int]) -> set[int]:
    xs = set(S)
    return {y for x, y in adjacency if x in xs}
