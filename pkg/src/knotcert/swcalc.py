"""Formal Seiberg-Witten calculus on a homology lattice.

An SW invariant is a finitely supported integer function on a quotient
lattice Z^rank / <relations>; torus surgery multiplies it by an Alexander
polynomial with t standing for twice the torus class.  Everything is
exact: class vectors are canonicalized against an integer echelon basis
of the relation span, so equality of classes and of whole invariants is
structural.

The surgery multiplier is applied for the *doubled* knot K # K by
default, matching the two-strand knotting the certifier models; pass
double=False to apply a raw K instead.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass

from .intmat import DimensionMismatch, in_rational_span, reduce_mod_lattice, row_lattice_basis
from .knots import Knot, Sum, alexander, knot_to_spec
from .laurent import LaurentPoly


class TorsionTorusClass(ValueError):
    """Surgery along a finite-order torus class: the product formula does not apply."""


@dataclass(frozen=True)
class HomologyLattice:
    """Z^rank modulo the integer span of the relation vectors."""

    rank: int
    relations: tuple[tuple[int, ...], ...]

    def __init__(self, rank: int, relations=()):
        if rank < 1:
            raise ValueError("lattice rank must be >= 1")
        rels = tuple(tuple(operator.index(x) for x in rel) for rel in relations)
        for rel in rels:
            if len(rel) != rank:
                raise DimensionMismatch(f"relation {rel} does not have length {rank}")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "relations", rels)
        object.__setattr__(self, "_basis", tuple(tuple(r) for r in row_lattice_basis(rels)))

    @classmethod
    def free(cls, rank: int) -> "HomologyLattice":
        return cls(rank, ())

    @classmethod
    def cyclic_cover(cls, degree: int) -> "HomologyLattice":
        """Z^degree modulo the single relation e_1 + ... + e_degree = 0."""
        if degree < 2:
            raise ValueError("cover degree must be >= 2")
        return cls(degree, ((1,) * degree,))

    def canonicalize(self, vec) -> tuple[int, ...]:
        v = tuple(operator.index(x) for x in vec)
        if len(v) != self.rank:
            raise DimensionMismatch(f"vector {v} does not have length {self.rank}")
        return reduce_mod_lattice(self._basis, v)

    def zero(self) -> "HClass":
        return HClass(self, (0,) * self.rank)

    def basis_class(self, i: int) -> "HClass":
        vec = [0] * self.rank
        vec[i] = 1
        return HClass(self, tuple(vec))

    def to_json_dict(self) -> dict:
        return {"rank": self.rank, "relations": [list(r) for r in self.relations]}


@dataclass(frozen=True)
class HClass:
    """A homology class, stored by its canonical representative."""

    lattice: HomologyLattice
    vec: tuple[int, ...]

    def __init__(self, lattice: HomologyLattice, vec):
        object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "vec", lattice.canonicalize(vec))

    def __add__(self, other: "HClass") -> "HClass":
        self._check(other)
        return HClass(self.lattice, tuple(a + b for a, b in zip(self.vec, other.vec)))

    def __neg__(self) -> "HClass":
        return HClass(self.lattice, tuple(-a for a in self.vec))

    def scale(self, k: int) -> "HClass":
        return HClass(self.lattice, tuple(k * a for a in self.vec))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.vec)

    def _check(self, other: "HClass") -> None:
        if self.lattice != other.lattice:
            raise DimensionMismatch("classes live in different lattices")

    def __str__(self) -> str:
        return str(list(self.vec))


def has_infinite_order(lattice: HomologyLattice, c: HClass) -> bool:
    """True iff no positive multiple of c is zero in the quotient.

    Exact criterion: c has finite order iff it lies in the rational span
    of the relations (the zero class has order 1, hence finite).
    """
    if c.lattice != lattice:
        raise DimensionMismatch("class does not live in the given lattice")
    return not in_rational_span(lattice.relations, c.vec)


class SwPolynomial:
    """Finitely supported integer function on a homology lattice."""

    __slots__ = ("lattice", "_terms")

    def __init__(self, lattice: HomologyLattice, terms=None):
        self.lattice = lattice
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for cls, coeff in items:
                coeff = int(coeff)
                if coeff == 0:
                    continue
                vec = cls.vec if isinstance(cls, HClass) else lattice.canonicalize(cls)
                if isinstance(cls, HClass) and cls.lattice != lattice:
                    raise DimensionMismatch("term class lives in a different lattice")
                new = clean.get(vec, 0) + coeff
                if new:
                    clean[vec] = new
                else:
                    del clean[vec]
        self._terms = clean

    @classmethod
    def zero(cls, lattice: HomologyLattice) -> "SwPolynomial":
        return cls(lattice)

    @classmethod
    def k3_like(cls, lattice: HomologyLattice) -> "SwPolynomial":
        """The single-basic-class invariant {0 -> 1}."""
        return cls(lattice, {lattice.zero(): 1})

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> list[tuple[HClass, int]]:
        return [
            (HClass(self.lattice, vec), coeff)
            for vec, coeff in sorted(self._terms.items())
        ]

    def coefficient(self, c: HClass) -> int:
        return self._terms.get(c.vec, 0)

    def term_count(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SwPolynomial):
            return NotImplemented
        return self.lattice == other.lattice and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.lattice, tuple(sorted(self._terms.items()))))

    def translated(self, shift: HClass, scalar: int = 1) -> "SwPolynomial":
        """scalar * (group-ring product by the class shift)."""
        out: dict[tuple[int, ...], int] = {}
        for vec, coeff in self._terms.items():
            key = self.lattice.canonicalize(tuple(a + b for a, b in zip(vec, shift.vec)))
            new = out.get(key, 0) + scalar * coeff
            if new:
                out[key] = new
            else:
                del out[key]
        result = SwPolynomial(self.lattice)
        result._terms = out
        return result

    def __add__(self, other: "SwPolynomial") -> "SwPolynomial":
        if self.lattice != other.lattice:
            raise DimensionMismatch("polynomials live in different lattices")
        out = dict(self._terms)
        for vec, coeff in other._terms.items():
            new = out.get(vec, 0) + coeff
            if new:
                out[vec] = new
            else:
                del out[vec]
        result = SwPolynomial(self.lattice)
        result._terms = out
        return result

    def to_json_dict(self) -> dict:
        return {
            "lattice": self.lattice.to_json_dict(),
            "terms": [
                {"class": list(vec), "coeff": coeff}
                for vec, coeff in sorted(self._terms.items())
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict, lattice: HomologyLattice | None = None) -> "SwPolynomial":
        if lattice is None:
            lat = data["lattice"]
            lattice = HomologyLattice(lat["rank"], tuple(tuple(r) for r in lat["relations"]))
        return cls(lattice, [(tuple(t["class"]), t["coeff"]) for t in data["terms"]])

    def __repr__(self) -> str:
        inner = ", ".join(f"{list(v)}: {c}" for v, c in sorted(self._terms.items()))
        return f"SwPolynomial({{{inner}}})"


def basic_classes(sw: SwPolynomial) -> frozenset[HClass]:
    """The support of the invariant."""
    return frozenset(HClass(sw.lattice, vec) for vec in sw._terms)


def fs_surgery(sw: SwPolynomial, torus: HClass, delta: LaurentPoly) -> SwPolynomial:
    """Multiply the invariant by delta(t) with t^n acting as a shift by 2n*torus.

    Requires the torus class to have infinite order (the product
    formula's applicability condition) and delta to be in symmetric
    normal form; both are checked, not assumed.
    """
    if torus.lattice != sw.lattice:
        raise DimensionMismatch("torus class lives in a different lattice")
    if not has_infinite_order(sw.lattice, torus):
        raise TorsionTorusClass(
            f"torus class {torus} has finite order; surgery formula not certified applicable"
        )
    if delta != delta.symmetric_normalize():
        raise ValueError("delta must be symmetric-normalized")
    result = SwPolynomial.zero(sw.lattice)
    for n, coeff in sorted(delta.coeffs.items()):
        result = result + sw.translated(torus.scale(2 * n), coeff)
    return result


def multi_torus_surgery(
    sw: SwPolynomial, tori: list[HClass], delta: LaurentPoly
) -> SwPolynomial:
    """Apply fs_surgery along each torus in turn with the same multiplier.

    The group ring is commutative, so the result is independent of the
    order of the tori.
    """
    if not tori:
        raise ValueError("need at least one torus class")
    result = sw
    for torus in tori:
        result = fs_surgery(result, torus, delta)
    return result


@dataclass(frozen=True)
class DistinctnessCertificate:
    """Pairwise-distinctness record for a family of surgered invariants.

    verdict is True iff every pair of resulting SW polynomials differs.
    Count distinctness (the coarser test) is recorded separately.
    """

    lattice: HomologyLattice
    knot_specs: tuple[str, ...]
    polynomials: tuple[SwPolynomial, ...]
    basic_class_counts: tuple[int, ...]
    pairwise_distinct: tuple[tuple[bool, ...], ...]
    pairwise_count_distinct: tuple[tuple[bool, ...], ...]
    verdict: bool
    doubled: bool

    def to_json_dict(self) -> dict:
        return {
            "lattice": self.lattice.to_json_dict(),
            "entries": [
                {
                    "knot": spec,
                    "sw_terms": sw.to_json_dict()["terms"],
                    "basic_class_count": count,
                }
                for spec, sw, count in zip(
                    self.knot_specs, self.polynomials, self.basic_class_counts
                )
            ],
            "pairwise_distinct": [list(row) for row in self.pairwise_distinct],
            "pairwise_count_distinct": [list(row) for row in self.pairwise_count_distinct],
            "verdict": "pass" if self.verdict else "fail",
            "doubled": self.doubled,
            "input_assumptions": {
                "sw0_conjugation_symmetry": "assumed, not enforced",
            },
        }


def certify_family_distinct(
    sw0: SwPolynomial,
    torus_spec: list[HClass],
    knots: list[Knot],
    double: bool = True,
) -> DistinctnessCertificate:
    """Surger sw0 along the given tori for each knot and compare all pairs.

    Each knot K contributes the multiplier Alexander(K # K) (the doubled
    knot; the two-strand knotting always inserts the double), or
    Alexander(K) itself when double=False for expert use.
    """
    if sw0.is_zero():
        raise ValueError("base SW polynomial must be nonzero")
    polys = []
    specs = []
    for knot in knots:
        delta = alexander(Sum(knot, knot)) if double else alexander(knot)
        polys.append(multi_torus_surgery(sw0, torus_spec, delta))
        specs.append(knot_to_spec(knot))
    counts = [sw.term_count() for sw in polys]
    n = len(polys)
    distinct = tuple(
        tuple(i != j and polys[i] != polys[j] for j in range(n)) for i in range(n)
    )
    count_distinct = tuple(
        tuple(i != j and counts[i] != counts[j] for j in range(n)) for i in range(n)
    )
    verdict = all(distinct[i][j] for i in range(n) for j in range(n) if i != j)
    return DistinctnessCertificate(
        lattice=sw0.lattice,
        knot_specs=tuple(specs),
        polynomials=tuple(polys),
        basic_class_counts=tuple(counts),
        pairwise_distinct=distinct,
        pairwise_count_distinct=count_distinct,
        verdict=verdict,
        doubled=double,
    )
