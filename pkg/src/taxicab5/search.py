"""Exhaustive collision search for w^e + x^e = y^e + z^e in a box of Gaussian integers.

Every unordered pair {p, q} of box points is keyed by the exact value of
p^e + q^e.  Keys shared by two or more pairs give solutions.  Each solution
is reduced to the minimal element of its symmetry orbit, so a class is
reported once no matter how many of its orbit elements fall in the box.

The work is split into shards by the index of p.  Shards run in separate
processes when ``shards > 1``; the merged result does not depend on the
shard count.
"""

from __future__ import annotations

import json
import os
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .gaussint import GaussInt
from .quadruple import Quadruple, verify_solution

Pt = tuple[int, int]
Quad = tuple[Pt, Pt, Pt, Pt]


@dataclass(frozen=True)
class SearchConfig:
    bound: int
    exponent: int = 5
    shards: int = 1
    include_zero: bool = False

    def __post_init__(self) -> None:
        if self.bound < 1:
            raise ValueError("bound must be >= 1")
        if self.shards < 1:
            raise ValueError("shards must be >= 1")
        if self.exponent < 1:
            raise ValueError("exponent must be >= 1")


@dataclass(frozen=True)
class SolutionClass:
    representative: Quadruple
    orbit_size: int
    sum: GaussInt

    def sort_key(self) -> tuple:
        return (self.sum.norm(), self.representative.key())

    def to_record(self) -> dict:
        q = self.representative
        return {
            "w": q.w.to_json(),
            "x": q.x.to_json(),
            "y": q.y.to_json(),
            "z": q.z.to_json(),
            "sum": self.sum.to_json(),
            "orbit_size": self.orbit_size,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_record(), separators=(",", ":"))


@dataclass
class SearchReport:
    config: SearchConfig
    classes: list[SolutionClass]
    points: int
    pairs: int
    collision_keys: int
    seconds: float = field(default=0.0, compare=False)


# -- orbit machinery on raw (re, im) tuples ---------------------------------

def _rot(p: Pt) -> Pt:
    return (-p[1], p[0])


def _orbit(q: Quad) -> set[Quad]:
    w, x, y, z = q
    out = set()
    for _ in range(2):
        for _ in range(4):
            for a, b in (((w, x), (y, z)), ((y, z), (w, x))):
                for p0, p1 in ((a[0], a[1]), (a[1], a[0])):
                    for p2, p3 in ((b[0], b[1]), (b[1], b[0])):
                        out.add((p0, p1, p2, p3))
            w, x, y, z = _rot(w), _rot(x), _rot(y), _rot(z)
        w, x, y, z = ((t[0], -t[1]) for t in (w, x, y, z))
    return out


def _canonical(q: Quad) -> Quad:
    return min(_orbit(q))


def _to_raw(q: Quadruple) -> Quad:
    return tuple(t.key() for t in q.terms())  # type: ignore[return-value]


def _from_raw(q: Quad, exponent: int) -> Quadruple:
    return Quadruple(*(GaussInt(*t) for t in q), exponent=exponent)


def solution_orbit(q: Quadruple) -> list[Quadruple]:
    """All distinct images of q under pair swaps, pair exchange, conjugation and unit scaling."""
    return [_from_raw(t, q.exponent) for t in sorted(_orbit(_to_raw(q)))]


def canonicalize_solution(q: Quadruple) -> Quadruple:
    if not verify_solution(q):
        raise ValueError(f"not a solution: {q}")
    return _from_raw(_canonical(_to_raw(q)), q.exponent)


def make_class(q: Quadruple) -> SolutionClass:
    if not verify_solution(q):
        raise ValueError(f"not a solution: {q}")
    raw = _to_raw(q)
    orbit = _orbit(raw)
    rep = _from_raw(min(orbit), q.exponent)
    return SolutionClass(rep, len(orbit), rep.lhs())


# -- enumeration -------------------------------------------------------------

def box_points(bound: int, include_zero: bool = False) -> list[Pt]:
    """Box points sorted by (re, im)."""
    r = range(-bound, bound + 1)
    return [(a, b) for a in r for b in r if include_zero or a or b]


def _powers(points: list[Pt], exponent: int) -> list[Pt]:
    return [(GaussInt(*p) ** exponent).key() for p in points]


def _shard_groups(powers: list[Pt], shard: int, shards: int) -> dict[Pt, list[tuple[int, int]]]:
    groups: dict[Pt, list[tuple[int, int]]] = defaultdict(list)
    n = len(powers)
    for i in range(shard, n, shards):
        ar, ai = powers[i]
        for j in range(i, n):
            br, bi = powers[j]
            groups[(ar + br, ai + bi)].append((i, j))
    return groups


def _shard_task(args: tuple[list[Pt], int, int]) -> dict[Pt, list[tuple[int, int]]]:
    return dict(_shard_groups(*args))


def _merge(parts: Iterable[dict[Pt, list[tuple[int, int]]]]) -> dict[Pt, list[tuple[int, int]]]:
    merged: dict[Pt, list[tuple[int, int]]] = defaultdict(list)
    for part in parts:
        for k, v in part.items():
            merged[k].extend(v)
    return merged


def search(cfg: SearchConfig) -> SearchReport:
    t0 = time.perf_counter()
    points = box_points(cfg.bound, cfg.include_zero)
    powers = _powers(points, cfg.exponent)

    tasks = [(powers, s, cfg.shards) for s in range(cfg.shards)]
    if cfg.shards == 1:
        parts = [_shard_task(tasks[0])]
    else:
        workers = min(cfg.shards, os.cpu_count() or 1)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_shard_task, tasks))
    groups = _merge(parts)
    pairs = sum(len(v) for v in groups.values())

    seen: set[Quad] = set()
    reps: dict[Quad, int] = {}
    collision_keys = 0
    for key in sorted(groups):
        members = groups[key]
        if len(members) < 2:
            continue
        collision_keys += 1
        members.sort()
        for (i, j), (k, l) in combinations(members, 2):
            quad = (points[i], points[j], points[k], points[l])
            if quad in seen or sorted(quad[:2]) == sorted(quad[2:]):
                continue
            orbit = _orbit(quad)
            seen |= orbit
            reps[min(orbit)] = len(orbit)

    classes = []
    for rep, size in reps.items():
        q = _from_raw(rep, cfg.exponent)
        classes.append(SolutionClass(q, size, q.lhs()))
    classes.sort(key=SolutionClass.sort_key)
    return SearchReport(cfg, classes, len(points), pairs, collision_keys,
                        time.perf_counter() - t0)


def run_search(cfg: SearchConfig) -> list[SolutionClass]:
    return search(cfg).classes
