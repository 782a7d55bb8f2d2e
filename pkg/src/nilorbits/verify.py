"""Property suites runnable from the command line (``nilorbits verify``)."""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import factorial

from .linalg import commutator, contains
from .oracle import (
    in_orbit_closure, is_nilpotent, jordan_nilpotent, jordan_type,
    orbit_dimension_by_rank, random_conjugate, sl2_triple,
)
from .partitions import Partition, dominates, partitions_of
from .poset import build_poset, chain_codimensions, orbit_dimension, orbit_dimension_formula
from .quiver import (
    check_relations, flag_from_point, is_stable, is_stable_surjective, kp_project,
    maffei_dims, random_relation_point,
)
from .reduction import OrbitPair, all_canonical_forms, complement, label_by_reduction
from .slices import slodowy_slice
from .specht import specht_module


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def _first_failure(items, predicate) -> str:
    for item in items:
        if not predicate(item):
            return f"counterexample {item}"
    return ""


def _check(name, items, predicate) -> Check:
    bad = _first_failure(items, predicate)
    return Check(name, not bad, bad)


def _pairs(n_max):
    for n in range(1, n_max + 1):
        parts = list(partitions_of(n))
        for lam in parts:
            for mu in parts:
                yield mu, lam


def suite_poset(rng: random.Random) -> list[Check]:
    parts = [p for n in range(1, 9) for p in partitions_of(n)]
    small = [p for n in range(1, 7) for p in partitions_of(n)]
    return [
        _check("orbit_dimension equals n^2 - sum of squared columns (n<=8)", parts,
               lambda p: orbit_dimension(p) == orbit_dimension_formula(p)),
        _check("every chain from (n) has the same codimension sum (n<=8)", parts,
               lambda p: chain_codimensions(p) == {p.n * p.n - p.n - orbit_dimension_formula(p)}),
        _check("orbit dimension agrees with centralizer rank (n<=6)", small,
               lambda p: orbit_dimension(p) == orbit_dimension_by_rank(p)),
        _check("covers are dominated and codim matches label (n<=8)",
               [e for n in range(1, 9) for e in build_poset(n).edges],
               lambda e: dominates(e.target, e.source) and e.codim == e.label.codimension
               and orbit_dimension(e.source) - orbit_dimension(e.target) == e.codim),
    ]


def suite_oracle(rng: random.Random) -> list[Check]:
    small = [p for n in range(1, 6) for p in partitions_of(n)]
    return [
        _check("closure by ranks equals dominance (n<=6)", _pairs(6),
               lambda mu_lam: in_orbit_closure(jordan_nilpotent(mu_lam[0]), mu_lam[1])
               == dominates(*mu_lam)),
        _check("sl2-triple relations (n<=7)",
               [p for n in range(1, 8) for p in partitions_of(n)],
               lambda p: sl2_triple(p).check()),
        _check("jordan_type is conjugation invariant (n<=5)", small,
               lambda p: jordan_type(random_conjugate(jordan_nilpotent(p), rng)) == p),
    ]


def suite_slices(rng: random.Random) -> list[Check]:
    parts = [p for n in range(2, 7) for p in partitions_of(n)]

    def commutes(p):
        chart = slodowy_slice(p)
        y = chart.triple.Y
        return all(commutator(b, y).is_zero() and b.trace() == 0 for b in chart.basis)

    return [
        _check("slice dimension is the orbit codimension (n<=6)", parts,
               lambda p: slodowy_slice(p).dimension == p.n * p.n - 1 - orbit_dimension(p)),
        _check("slice directions centralize Y and are traceless (n<=5)",
               [p for p in parts if p.n <= 5], commutes),
    ]


def suite_quiver(rng: random.Random, samples: int = 200) -> list[Check]:
    parts = [p for n in range(1, 5) for p in partitions_of(n) if p.n >= 2]
    failures = []
    for _ in range(samples):
        lam = rng.choice(parts)
        point = random_relation_point(lam, rng)
        if not check_relations(point):
            failures.append(f"relations fail for {lam}")
            continue
        x = kp_project(point)
        if not (is_nilpotent(x) and x.trace() == 0 and dominates(jordan_type(x), lam)):
            failures.append(f"bad projection for {lam}")
        stable = is_stable(point)
        if stable != is_stable_surjective(point):
            failures.append(f"stability criteria disagree for {lam}")
        if stable:
            _, flags = flag_from_point(point)
            r = point.data.r
            ok = all(len(f) == sum(r[:i]) for i, f in enumerate(flags))
            ok = ok and all(contains(flags[i - 1], x.apply(u))
                            for i in range(1, len(flags)) for u in flags[i])
            if not ok:
                failures.append(f"flag conditions fail for {lam}")
    out = [Check(f"{samples} random relation points (n<=4)", not failures,
                 failures[0] if failures else "")]
    trivial = [(lam, Partition([1] * n)) for n in range(1, 9) for lam in partitions_of(n)]

    def kp_dims(pair):
        lam, mu = pair
        d = maffei_dims(lam, mu)
        return list(d.v) == [lam.n - sum(d.r[:i]) for i in range(1, d.m)]

    out.append(_check("mu trivial gives v_i = n - (r_1+...+r_i) (n<=8)", trivial, kp_dims))
    out.append(_check("complement symmetry of (v, w) (n<=8)",
                      complement_symmetry_cases(8), complement_symmetry_holds))
    return out


def complement_symmetry_cases(n_max: int):
    """Pairs (lam, mu) with lam_1 > mu_1, so that m = lam_1 and t = len(mu) fit."""
    for mu, lam in _pairs(n_max):
        if dominates(mu, lam) and lam[0] > mu[0]:
            yield lam, mu


def complement_symmetry_holds(pair) -> bool:
    """With m = lam_1, t = len(mu): v^c_i = v_{m-i} and w^c_i = w_{m-i}.

    The complement uses r^c_j = t - r_{m+1-j}, the columns of lam^c in the
    order induced from r.
    """
    lam, mu = pair
    m, t = lam[0], len(mu)
    c = complement(OrbitPair(lam, mu), t, m)
    d = maffei_dims(lam, mu)
    dc = maffei_dims(c.lam, c.mu, [t - x for x in reversed(d.r)])
    return dc.v == tuple(reversed(d.v)) and dc.w == tuple(reversed(d.w))


def suite_reduction(rng: random.Random) -> list[Check]:
    edges = [e for n in range(1, 10) for e in build_poset(n).edges]
    pairs = [(lam, mu) for mu, lam in _pairs(8) if dominates(mu, lam)]
    sample = rng.sample(pairs, min(300, len(pairs)))
    return [
        _check("reduction label equals cover label (n<=9)", edges,
               lambda e: label_by_reduction(e.source, e.target) == e.label),
        _check("deletions are confluent (sample, n<=8)", sample,
               lambda p: len(all_canonical_forms(OrbitPair(*p))) == 1),
    ]


def suite_specht(rng: random.Random) -> list[Check]:
    return [
        _check("sum of squared dimensions is n! (n<=5)", range(1, 6),
               lambda n: sum(specht_module(p).dimension ** 2 for p in partitions_of(n))
               == factorial(n)),
    ]


SUITES = {
    "poset": suite_poset,
    "oracle": suite_oracle,
    "slices": suite_slices,
    "quiver": suite_quiver,
    "reduction": suite_reduction,
    "specht": suite_specht,
}


def run_suite(name: str, seed: int = 0) -> list[Check]:
    if name == "all":
        return [c for key in SUITES for c in run_suite(key, seed)]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    return SUITES[name](random.Random(seed))
