"""Frames, homogenization, exact homology and the cellular-resolution test."""

from __future__ import annotations

from typing import Mapping

from .algebra import Chain, ComplexDesc
from .lattice import Exponent, divides, lcm


class SquareNonzero(ValueError):
    """The boundary of the boundary of ``key`` does not vanish."""

    def __init__(self, key):
        super().__init__(f"boundary does not square to zero at {key!r}")
        self.key = key


class Frame(ComplexDesc):
    """A based complex with a rank-one degree 0 whose degree-1 basis
    elements all map to the degree-0 generator with coefficient 1.

    ``generators`` maps every degree-1 key to its monomial (an exponent).
    """

    def __init__(self, basis, boundary, generators: Mapping[object, Exponent]):
        super().__init__(basis, boundary)
        if min(self.basis, default=0) < 0:
            raise ValueError("frames live in non-negative degrees")
        if len(self.basis.get(0, [])) != 1:
            raise ValueError("a frame has a rank one degree-0 term")
        (unit_key,) = self.basis[0]
        for key in self.basis.get(1, []):
            if dict(self.boundary[key]) != {unit_key: 1}:
                raise ValueError(f"degree-1 element {key!r} must map to the unit with coefficient 1")
            if key not in generators:
                raise ValueError(f"missing generator multidegree for {key!r}")
        self.generators = {k: tuple(generators[k]) for k in self.basis.get(1, [])}

    @classmethod
    def from_complex(cls, cx: ComplexDesc) -> "Frame":
        if cx.mdeg is None:
            raise ValueError("complex carries no multidegrees")
        return cls(cx.basis, cx.boundary, {k: cx.mdeg[k] for k in cx.basis.get(1, [])})


class MultigradedComplex(ComplexDesc):
    """Homogenized frame: multidegrees plus monomial boundary coefficients.

    The coefficient of ``u`` in the boundary of ``v`` is the frame scalar
    times the monomial mdeg(v) / mdeg(u).
    """

    def entry(self, v, u) -> tuple:
        scalar = self.boundary[v].get(u, 0)
        if not scalar:
            return 0, None
        mv, mu = self.mdeg[v], self.mdeg[u]
        if not divides(mu, mv):
            raise ValueError(f"{mu} does not divide {mv}")
        return scalar, tuple(a - b for a, b in zip(mv, mu))

    def frame(self) -> ComplexDesc:
        """Forget the grading: set every variable to 1."""
        return ComplexDesc(self.basis, self.boundary)

    def generator_mdegs(self) -> list[Exponent]:
        return [self.mdeg[k] for k in self.basis.get(1, [])]


def homogenize(frame: Frame) -> MultigradedComplex:
    n = len(next(iter(frame.generators.values()))) if frame.generators else 0
    mdeg = {}
    for k, keys in frame.basis.items():
        for v in keys:
            if k == 0:
                mdeg[v] = (0,) * n
            elif k == 1:
                mdeg[v] = frame.generators[v]
            else:
                faces = [mdeg[u] for u in frame.boundary[v]]
                if not faces:
                    raise ValueError(f"{v!r} in degree {k} has empty boundary; lcm of nothing only allowed in degree 0")
                mdeg[v] = lcm(faces)
    return MultigradedComplex(frame.basis, frame.boundary, mdeg)


def rational_homology(cx: ComplexDesc, check: bool = True) -> dict[int, int]:
    """Dimensions of homology over the rationals in every degree."""
    if check:
        bad = cx.square_zero_witness()
        if bad is not None:
            raise SquareNonzero(bad)
    ranks = {k: cx.boundary_rank(k) for k in cx.degrees}
    return {k: len(cx.basis[k]) - ranks[k] - ranks.get(k + 1, 0) for k in cx.degrees}


def is_acyclic(cx: ComplexDesc) -> bool:
    return not any(rational_homology(cx, check=False).values())


def restrict_leq(cx: ComplexDesc, m: Exponent) -> ComplexDesc:
    """Subcomplex of basis elements whose multidegree divides ``m``."""
    if cx.mdeg is None:
        raise ValueError("complex carries no multidegree labels")
    return cx.restrict(lambda key: divides(cx.mdeg[key], m))


def lcm_lattice(gens: list[Exponent]) -> list[Exponent]:
    """All lcms of non-empty subsets of ``gens``, deduplicated and sorted."""
    seen = set(gens)
    frontier = list(seen)
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                m = lcm([a, g])
                if m not in seen:
                    seen.add(m)
                    new.append(m)
        frontier = new
    return sorted(seen, key=lambda m: (sum(m), m))


def is_cellular_resolution(cx: ComplexDesc):
    """(True, None) when every restriction to an lcm-lattice multidegree is
    acyclic; otherwise (False, witness) for the first failing multidegree."""
    if cx.mdeg is None:
        raise ValueError("complex carries no multidegree labels")
    gens = sorted({cx.mdeg[k] for k in cx.basis.get(1, [])})
    for m in lcm_lattice(gens):
        if not any(m):
            continue
        sub = restrict_leq(cx, m)
        hom = rational_homology(sub, check=False)
        for k, h in hom.items():
            if h:
                return False, {"multidegree": list(m), "homology_degree": k, "dimension": h}
    return True, None


def strand_homology(cx: ComplexDesc, m: Exponent) -> dict[int, int]:
    return rational_homology(restrict_leq(cx, m), check=False)


def koszul_frame(n: int) -> Frame:
    """Taylor/Koszul frame on the variables x_1..x_n (generators e_i)."""
    from itertools import combinations

    basis = {0: [()]}
    boundary = {(): Chain()}
    for k in range(1, n + 1):
        basis[k] = list(combinations(range(n), k))
        for s in basis[k]:
            ch = Chain()
            for t in range(k):
                ch.add_term(s[:t] + s[t + 1:], (-1) ** t)
            boundary[s] = ch
    gens = {(i,): tuple(1 if j == i else 0 for j in range(n)) for i in range(n)}
    return Frame(basis, boundary, gens)
