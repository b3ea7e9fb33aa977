"""Finite monomial matrix groups and the age-criterion verdict engine.

A monomial matrix is a permutation matrix with root-of-unity entries.
The element (perm, exponents) over root order m is the matrix that sends
basis vector e_i to zeta_m^{exponents[i]} * e_{perm[i]}, i.e. the entry
at (perm[i], i) is zeta_m^{exponents[i]}. Permutations are stored
0-based internally; the on-disk form uses 1-based images.

Eigenvalues stay exact throughout: a cycle of length l whose entry
exponents sum to K contributes the l-th roots of zeta_m^K, recorded as
Fractions of a full turn, so the canonical/terminal decision never
touches floating point.

Closure construction is single-writer; every produced value is
immutable, and the analysis scan is read-only, so verdicts and closed
groups can be shared freely across threads.
"""

from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass, replace
from fractions import Fraction
from math import lcm
from pathlib import Path

from .ages import EigenExponents, age, is_quasi_reflection
from .errors import GroupTooLargeError, QuasiReflectionError

DEFAULT_CLOSURE_CAP = 20000
CLOSURE_CAP_ENV = "QC_CLOSURE_CAP"


@dataclass(frozen=True)
class MonomialElement:
    """One monomial matrix: 0-based permutation images plus entry exponents."""

    perm: tuple[int, ...]
    exponents: tuple[int, ...]

    def describe(self) -> str:
        """Stable 1-based descriptor used in reports and error messages."""
        images = ",".join(str(i + 1) for i in self.perm)
        exps = ",".join(str(k) for k in self.exponents)
        return f"perm[{images}] exp[{exps}]"


@dataclass(frozen=True)
class MonomialRep:
    """A monomial group given by generators, with an optional closure cache."""

    dimension: int
    root_order: int
    generators: tuple[MonomialElement, ...]
    elements: tuple[MonomialElement, ...] | None = None

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError(f"dimension must be >= 1, got {self.dimension}")
        if self.root_order < 1:
            raise ValueError(f"root order must be >= 1, got {self.root_order}")
        for gen in self.generators:
            self._check_element(gen)

    def _check_element(self, g: MonomialElement) -> None:
        if sorted(g.perm) != list(range(self.dimension)):
            raise ValueError(f"not a permutation of 0..{self.dimension - 1}: {g.perm}")
        if len(g.exponents) != self.dimension:
            raise ValueError(
                f"need {self.dimension} exponents, got {len(g.exponents)}"
            )
        if any(not 0 <= k < self.root_order for k in g.exponents):
            raise ValueError(
                f"exponents must lie in [0, {self.root_order}): {g.exponents}"
            )

    def identity(self) -> MonomialElement:
        return MonomialElement(
            tuple(range(self.dimension)), (0,) * self.dimension
        )

    def multiply(self, a: MonomialElement, b: MonomialElement) -> MonomialElement:
        """Matrix product a @ b: e_i -> zeta^{b_i} e_{pb(i)} -> ... under a."""
        m = self.root_order
        perm = tuple(a.perm[b.perm[i]] for i in range(self.dimension))
        exps = tuple(
            (b.exponents[i] + a.exponents[b.perm[i]]) % m
            for i in range(self.dimension)
        )
        return MonomialElement(perm, exps)

    @property
    def order(self) -> int:
        if self.elements is None:
            raise ValueError("group is not closed yet; call close_group first")
        return len(self.elements)


@dataclass(frozen=True)
class SingularityVerdict:
    """Outcome of the age-criterion scan over one finite group."""

    canonical: bool
    terminal: bool
    gorenstein: bool
    index: int
    group_order: int
    min_age: Fraction | None  # None for the trivial group (no witnesses)
    witness: str | None
    quasi_reflections: tuple[str, ...] = ()

    def __post_init__(self):
        if self.terminal and not self.canonical:
            raise ValueError("terminal verdict requires canonical")
        if self.gorenstein and self.index != 1:
            raise ValueError("Gorenstein verdict requires index 1")


def configured_cap(cap: int | None = None) -> int:
    """Resolve the closure cap: explicit argument, else env, else default."""
    if cap is not None:
        return cap
    env = os.environ.get(CLOSURE_CAP_ENV)
    return int(env) if env else DEFAULT_CLOSURE_CAP


def close_group(rep: MonomialRep, cap: int | None = None) -> MonomialRep:
    """Multiplicative closure of the generators, in breadth-first order.

    The identity comes first; each frontier element is multiplied on the
    right by the generators in their given order, which fixes the element
    ordering used for witness reporting. Raises GroupTooLargeError as
    soon as the closure would exceed the cap.
    """
    cap = configured_cap(cap)
    ident = rep.identity()
    seen = {ident}
    ordered = [ident]
    frontier = deque([ident])
    while frontier:
        current = frontier.popleft()
        for gen in rep.generators:
            product = rep.multiply(current, gen)
            if product in seen:
                continue
            if len(seen) >= cap:
                raise GroupTooLargeError(
                    f"group closure exceeded the cap of {cap} elements", cap=cap
                )
            seen.add(product)
            ordered.append(product)
            frontier.append(product)
    return replace(rep, elements=tuple(ordered))


def _cycles(perm: tuple[int, ...]) -> list[list[int]]:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = perm[i]
        cycles.append(cycle)
    return cycles


def _perm_sign(perm: tuple[int, ...]) -> int:
    return -1 if (len(perm) - len(_cycles(perm))) % 2 else 1


def element_eigen_exponents(g: MonomialElement, root_order: int) -> EigenExponents:
    """Exact eigenvalue exponents of ``g`` at its own order.

    Each length-l cycle with entry-exponent sum K contributes the l-th
    roots of zeta_m^K: turn fractions (K + m*j) / (m*l) for j < l. The
    element order is the lcm of the reduced denominators, and every
    fraction rescales to an integer exponent at that order.
    """
    m = root_order
    turns: list[Fraction] = []
    for cycle in _cycles(g.perm):
        length = len(cycle)
        k_sum = sum(g.exponents[i] for i in cycle) % m
        for j in range(length):
            turns.append(Fraction(k_sum + m * j, m * length))
    order = lcm(*(f.denominator for f in turns))
    exps = tuple(int(f * order) for f in turns)
    return EigenExponents(order, exps)


def det_turn(g: MonomialElement, root_order: int) -> Fraction:
    """det(g) as an exact fraction of a full turn: det = exp(2 pi i turn)."""
    turn = Fraction(sum(g.exponents), root_order)
    if _perm_sign(g.perm) < 0:
        turn += Fraction(1, 2)
    return turn % 1


def analyze(rep: MonomialRep) -> SingularityVerdict:
    """Age-criterion verdict for a closed monomial group.

    canonical: every non-identity element has age >= 1; terminal: strictly
    greater. gorenstein: the determinant character is trivial; the index
    is that character's order. The witness is the first element of
    minimal age in closure order. Quasi-reflections abort the analysis:
    the quotient is not taken in that regime.
    """
    if rep.elements is None:
        raise ValueError("group is not closed yet; call close_group first")
    m = rep.root_order
    ident = rep.identity()

    scanned = []
    quasi = []
    for g in rep.elements:
        if g == ident:
            continue
        exps = element_eigen_exponents(g, m)
        if is_quasi_reflection(exps):
            quasi.append(g.describe())
        scanned.append((g, exps))
    if quasi:
        raise QuasiReflectionError(
            f"group contains {len(quasi)} quasi-reflection(s): " + "; ".join(quasi),
            elements=tuple(quasi),
        )

    min_age: Fraction | None = None
    witness: str | None = None
    for g, exps in scanned:
        _, a = age(exps)
        if min_age is None or a < min_age:
            min_age = a
            witness = g.describe()

    index = lcm(1, *(det_turn(g, m).denominator for g in rep.elements))
    return SingularityVerdict(
        canonical=min_age is None or min_age >= 1,
        terminal=min_age is None or min_age > 1,
        gorenstein=index == 1,
        index=index,
        group_order=len(rep.elements),
        min_age=min_age,
        witness=witness,
    )


def rep_from_dict(data: dict) -> MonomialRep:
    """Build a representation from the canonical JSON form.

    Expected shape::

        {"dimension": N, "root_order": M,
         "generators": [{"perm": [1-based images], "exponents": [k_1..k_N]}]}

    ``exponents`` may be omitted per generator and defaults to zeros.
    """
    try:
        dimension = int(data["dimension"])
        root_order = int(data["root_order"])
        raw_gens = data["generators"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"representation file is missing field: {exc}") from exc
    generators = []
    for entry in raw_gens:
        try:
            images = entry["perm"]
            exps = tuple(
                int(k) % root_order
                for k in entry.get("exponents", [0] * dimension)
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed generator entry {entry!r}") from exc
        if sorted(images) != list(range(1, dimension + 1)):
            raise ValueError(
                f"perm must list each of 1..{dimension} exactly once: {images}"
            )
        perm = tuple(i - 1 for i in images)
        generators.append(MonomialElement(perm, exps))
    return MonomialRep(
        dimension=dimension, root_order=root_order, generators=tuple(generators)
    )


def load_rep_file(path: str | Path) -> MonomialRep:
    """Read a representation from a JSON file (see ``rep_from_dict``)."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValueError(f"representation file {path} is not valid JSON: {exc}") from exc
    return rep_from_dict(data)
