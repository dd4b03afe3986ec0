"""Finitely presented groups: abelianization, coset enumeration, quotients.

The certification pattern throughout: a finite statement about a
presentation is only ever reported when it has a finite witness -- a
closed coset table (re-verified relator by relator), a Smith normal
form, or an explicit surjection onto a finite group.  Enumeration that
runs out of cosets is reported as inconclusive, never as evidence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import kernels
from .intmat import IntMatrix, smith_normal_form

DEFAULT_MAX_COSETS = 100_000

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Word:
    """A freely reduced word; letters are (generator index, exponent +/-1)."""

    letters: tuple[tuple[int, int], ...]

    def __init__(self, letters=()):
        reduced: list[tuple[int, int]] = []
        for gen, exp in letters:
            if exp not in (1, -1):
                raise ValueError(f"letter exponent must be +/-1, got {exp}")
            if gen < 0:
                raise ValueError(f"negative generator index {gen}")
            if reduced and reduced[-1] == (gen, -exp):
                reduced.pop()
            else:
                reduced.append((gen, exp))
        object.__setattr__(self, "letters", tuple(reduced))

    @classmethod
    def from_syllables(cls, syllables) -> "Word":
        """Build from (generator, exponent) pairs with arbitrary exponents."""
        letters: list[tuple[int, int]] = []
        for gen, exp in syllables:
            step = 1 if exp > 0 else -1
            letters.extend((gen, step) for _ in range(abs(exp)))
        return cls(letters)

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse e.g. "a^5 b^5", "a^-2b", "aba^-1b^-1"; letters are a..z."""
        syllables: list[tuple[int, int]] = []
        i = 0
        text = text.strip()
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch not in _LETTERS:
                raise ValueError(f"expected a generator letter at {i} in {text!r}")
            gen = _LETTERS.index(ch)
            i += 1
            exp = 1
            if i < len(text) and text[i] == "^":
                i += 1
                start = i
                if i < len(text) and text[i] == "-":
                    i += 1
                while i < len(text) and text[i].isdigit():
                    i += 1
                if i == start or text[start:i] == "-":
                    raise ValueError(f"expected an exponent at {start} in {text!r}")
                exp = int(text[start:i])
            syllables.append((gen, exp))
        return cls.from_syllables(syllables)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.letters * n)

    def exponent_sums(self, n_generators: int) -> list[int]:
        sums = [0] * n_generators
        for gen, exp in self.letters:
            sums[gen] += exp
        return sums

    def max_generator(self) -> int:
        return max((g for g, _ in self.letters), default=-1)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        parts = []
        for gen, exp in self._syllables():
            name = _LETTERS[gen]
            parts.append(name if exp == 1 else f"{name}^{exp}")
        return " ".join(parts)

    def _syllables(self) -> list[tuple[int, int]]:
        out: list[tuple[int, int]] = []
        for gen, exp in self.letters:
            if out and out[-1][0] == gen:
                out[-1] = (gen, out[-1][1] + exp)
            else:
                out.append((gen, exp))
        return out


def word(text: str) -> Word:
    return Word.parse(text)


@dataclass(frozen=True)
class Presentation:
    """<x_0, ..., x_{n-1} | relators>."""

    n_generators: int
    relators: tuple[Word, ...]

    def __init__(self, n_generators: int, relators=()):
        if n_generators < 1:
            raise ValueError("need at least one generator")
        rels = tuple(r if isinstance(r, Word) else Word.parse(r) for r in relators)
        for r in rels:
            if r.max_generator() >= n_generators:
                raise ValueError(f"relator {r} uses a generator beyond the first {n_generators}")
        object.__setattr__(self, "n_generators", n_generators)
        object.__setattr__(self, "relators", rels)

    def __str__(self) -> str:
        gens = ", ".join(_LETTERS[i] for i in range(self.n_generators))
        rels = ", ".join(str(r) for r in self.relators)
        return f"< {gens} | {rels} >"

    def to_json_dict(self) -> dict:
        return {
            "n_generators": self.n_generators,
            "relators": [str(r) for r in self.relators],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Presentation":
        return cls(data["n_generators"], tuple(data["relators"]))


def parse_presentation(text: str, n_generators: int | None = None) -> Presentation:
    """Parse comma-separated relators, e.g. "a^5 b^5, a^3 b^2, b^3 a^2"."""
    rels = [Word.parse(part) for part in text.split(",") if part.strip()]
    if n_generators is None:
        n_generators = max((r.max_generator() for r in rels), default=0) + 1
        n_generators = max(n_generators, 1)
    return Presentation(n_generators, tuple(rels))


# -- abelianization ---------------------------------------------------


def abelianization(p: Presentation) -> list[int]:
    """Invariant factors of the abelianized group: d_1 | d_2 | ..., 0 = free Z.

    Smith normal form of the relator exponent-sum matrix; factors equal
    to 1 are dropped, one trailing 0 per free rank.
    """
    rows = [r.exponent_sums(p.n_generators) for r in p.relators]
    if not rows:
        return [0] * p.n_generators
    diagonal = smith_normal_form(IntMatrix(rows, cols=p.n_generators)).diagonal
    torsion = [d for d in diagonal if d > 1]
    free_rank = p.n_generators - sum(1 for d in diagonal if d != 0)
    return torsion + [0] * free_rank


def abelian_torsion_order(invariants: list[int]) -> int:
    order = 1
    for d in invariants:
        if d:
            order *= d
    return order


# -- coset enumeration ------------------------------------------------


@dataclass(frozen=True)
class EnumerationResult:
    """Outcome of a coset enumeration over the trivial subgroup.

    finite=True means the table closed: order is |G| and table is the
    live coset table (columns alternate generator, inverse).  finite=
    False means the coset limit was hit, which proves nothing.
    """

    finite: bool
    max_cosets: int
    order: int | None = None
    table: tuple[tuple[int, ...], ...] | None = None
    cosets_used: int = 0

    def to_json_dict(self, table_limit: int = 64) -> dict:
        out: dict = {
            "status": "finite" if self.finite else "inconclusive",
            "max_cosets": self.max_cosets,
            "cosets_used": self.cosets_used,
        }
        if self.finite:
            out["order"] = self.order
            if self.order is not None and self.order <= table_limit:
                out["table"] = [list(row) for row in self.table]
        return out


def _relator_letters(p: Presentation) -> tuple[tuple[int, ...], ...]:
    # letter encoding: 2g for generator g, 2g+1 for its inverse
    out = []
    for r in p.relators:
        if r.letters:
            out.append(tuple(2 * g if e == 1 else 2 * g + 1 for g, e in r.letters))
    return tuple(out)


def coset_enumeration(p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> EnumerationResult:
    """Systematic HLT enumeration over the trivial subgroup.

    Deterministic: identical inputs give identical tables, whichever
    kernel backend is active.  A closed table is re-verified against
    every relator at every coset before being reported.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    n_letters = 2 * p.n_generators
    closed, table, used = kernels.hlt_enumerate(n_letters, _relator_letters(p), max_cosets)
    if not closed:
        return EnumerationResult(finite=False, max_cosets=max_cosets, cosets_used=used)
    result = EnumerationResult(
        finite=True,
        max_cosets=max_cosets,
        order=len(table),
        table=tuple(table),
        cosets_used=used,
    )
    _verify_table(p, result.table)
    return result


def _verify_table(p: Presentation, table: tuple[tuple[int, ...], ...]) -> None:
    """Independent post-hoc check of a closed coset table.

    Completeness, mutually inverse columns, and closure of every relator
    at every coset.  Any failure is an internal error, never a verdict.
    """
    n = len(table)
    n_letters = 2 * p.n_generators
    for c, row in enumerate(table):
        if len(row) != n_letters:
            raise RuntimeError("coset table has a malformed row")
        for x, d in enumerate(row):
            if not 0 <= d < n:
                raise RuntimeError("coset table is not closed")
            if table[d][x ^ 1] != c:
                raise RuntimeError("coset table columns are not mutually inverse")
    for rel in _relator_letters(p):
        for c in range(n):
            at = c
            for x in rel:
                at = table[at][x]
            if at != c:
                raise RuntimeError("closed coset table fails a relator; enumeration bug")


# -- cyclicity certification ------------------------------------------

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CyclicityCertificate:
    """Three-valued verdict for "the group is cyclic of order n".

    Pass is certified by |G| = n from a closed coset table together with
    abelianization Z/n: equal orders force G to be abelian, hence cyclic.
    """

    verdict: str
    order_target: int
    abelian_invariants: tuple[int, ...]
    reason: str
    enumeration: EnumerationResult | None = None

    def to_json_dict(self) -> dict:
        out = {
            "verdict": self.verdict,
            "order_target": self.order_target,
            "abelian_invariants": list(self.abelian_invariants),
            "reason": self.reason,
        }
        if self.enumeration is not None:
            out["enumeration"] = self.enumeration.to_json_dict()
        return out


def is_cyclic_of_order(
    p: Presentation, n: int, max_cosets: int = DEFAULT_MAX_COSETS
) -> CyclicityCertificate:
    if n < 1:
        raise ValueError("order must be >= 1")
    ab = abelianization(p)
    expected = [n] if n > 1 else []
    if ab != expected:
        return CyclicityCertificate(
            FAIL, n, tuple(ab),
            f"abelianization is {ab or '[trivial]'}, not Z/{n}",
        )
    enum = coset_enumeration(p, max_cosets)
    if not enum.finite:
        return CyclicityCertificate(
            INCONCLUSIVE, n, tuple(ab),
            f"coset enumeration hit the {max_cosets}-coset limit",
            enum,
        )
    if enum.order != n:
        return CyclicityCertificate(
            FAIL, n, tuple(ab), f"group order is {enum.order}, not {n}", enum
        )
    return CyclicityCertificate(
        PASS, n, tuple(ab),
        f"order {n} equals the abelianization order, so the group is Z/{n}",
        enum,
    )


# -- finite quotients --------------------------------------------------


@dataclass(frozen=True)
class FiniteGroupTable:
    """A finite group given by its multiplication table.

    table[x][y] is the product xy; element 0 is the identity.  The table
    is validated on construction (identity, inverses, associativity), so
    a bad built-in can never silently certify anything.
    """

    name: str
    table: tuple[tuple[int, ...], ...]
    generators: tuple[int, ...]
    element_names: tuple[str, ...]

    def __post_init__(self):
        n = self.order
        for x in range(n):
            if self.table[0][x] != x or self.table[x][0] != x:
                raise ValueError(f"{self.name}: element 0 is not an identity")
        for x in range(n):
            if not any(self.table[x][y] == 0 for y in range(n)):
                raise ValueError(f"{self.name}: element {x} has no inverse")
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if self.table[self.table[x][y]][z] != self.table[x][self.table[y][z]]:
                        raise ValueError(f"{self.name}: multiplication is not associative")
        if self.generated_by(self.generators) != frozenset(range(n)):
            raise ValueError(f"{self.name}: designated generators do not generate")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inverse(self, x: int) -> int:
        for y in range(self.order):
            if self.table[x][y] == 0:
                return y
        raise ValueError(f"{self.name}: element {x} has no inverse")

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[x][y] == self.table[y][x] for x in range(n) for y in range(n))

    def generated_by(self, elements) -> frozenset[int]:
        closure = {0}
        frontier = [0]
        gens = [int(e) for e in elements] + [self.inverse(int(e)) for e in elements]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.table[x][g]
                if y not in closure:
                    closure.add(y)
                    frontier.append(y)
        return frozenset(closure)

    def evaluate_word(self, w: Word, images: tuple[int, ...]) -> int:
        out = 0
        for gen, exp in w.letters:
            img = images[gen] if exp == 1 else self.inverse(images[gen])
            out = self.table[out][img]
        return out


def quaternion_group() -> FiniteGroupTable:
    """Q8 = {1, -1, i, -i, j, -j, k, -k}, generated by i and j."""
    names = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
    # element = (sign, axis) with axis 0 -> 1, 1 -> i, 2 -> j, 3 -> k
    def unpack(e):
        return (-1 if e % 2 else 1), e // 2

    def pack(sign, axis):
        return 2 * axis + (0 if sign == 1 else 1)

    # i*j = k, j*k = i, k*i = j; x*x = -1 for x in {i, j, k}
    axis_mul = {}
    for a in range(4):
        axis_mul[(0, a)] = (1, a)
        axis_mul[(a, 0)] = (1, a)
    for a in (1, 2, 3):
        axis_mul[(a, a)] = (-1, 0)
    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        axis_mul[(a, b)] = (1, c)
        axis_mul[(b, a)] = (-1, c)

    table = []
    for x in range(8):
        sx, ax = unpack(x)
        row = []
        for y in range(8):
            sy, ay = unpack(y)
            s, a = axis_mul[(ax, ay)]
            row.append(pack(sx * sy * s, a))
        table.append(tuple(row))
    return FiniteGroupTable("Q8", tuple(table), (2, 4), names)


def dihedral_group(n: int) -> FiniteGroupTable:
    """D_n of order 2n: r^n = s^2 = 1, s r s = r^-1; generated by r, s."""
    if n < 3:
        raise ValueError("dihedral group needs n >= 3")
    # element r^a s^b -> index a + n*b
    table = []
    names = []
    for b in (0, 1):
        for a in range(n):
            rotation = "" if a == 0 else ("r" if a == 1 else f"r^{a}")
            names.append((rotation + ("s" if b else "")) or "1")
    for x in range(2 * n):
        a, b = x % n, x // n
        row = []
        for y in range(2 * n):
            c, d = y % n, y // n
            e = (a + (c if b == 0 else -c)) % n
            row.append(e + n * ((b + d) % 2))
        table.append(tuple(row))
    return FiniteGroupTable(f"D{n}", tuple(table), (1, n), tuple(names))


def symmetric_group_s3() -> FiniteGroupTable:
    """S3 as permutations of {0,1,2}, generated by (01) and (012)."""
    perms = sorted(itertools.permutations(range(3)))
    index = {perm: i for i, perm in enumerate(perms)}
    # sort puts the identity first
    def compose(f, g):  # (f*g)(x) = f(g(x))
        return tuple(f[g[x]] for x in range(3))

    table = tuple(
        tuple(index[compose(f, g)] for g in perms) for f in perms
    )
    names = tuple("".join(map(str, perm)) for perm in perms)
    return FiniteGroupTable("S3", table, (index[(1, 0, 2)], index[(1, 2, 0)]), names)


def builtin_groups() -> dict[str, FiniteGroupTable]:
    """The finite targets shipped with the certifier."""
    groups = {"Q8": quaternion_group(), "S3": symmetric_group_s3()}
    for n in (3, 4, 5, 6):
        groups[f"D{n}"] = dihedral_group(n)
    return groups


@dataclass(frozen=True)
class Homomorphism:
    """Generator images of a relator-respecting map into a finite group."""

    target: FiniteGroupTable
    images: tuple[int, ...]
    surjective: bool

    def image_names(self) -> tuple[str, ...]:
        return tuple(self.target.element_names[i] for i in self.images)

    def to_json_dict(self) -> dict:
        return {
            "target": self.target.name,
            "target_order": self.target.order,
            "images": list(self.image_names()),
            "surjective": self.surjective,
        }


def find_finite_quotient(
    p: Presentation, target: FiniteGroupTable, require_surjective: bool = True
) -> Homomorphism | None:
    """Exhaustive search for a homomorphism onto the target.

    Scans all order^n_generators image tuples in index order and returns
    the first that satisfies every relator (and generates the target,
    unless require_surjective is False).  A surjection onto a
    non-abelian target certifies the presented group non-abelian.
    """
    everything = frozenset(range(target.order))
    for images in itertools.product(range(target.order), repeat=p.n_generators):
        if all(target.evaluate_word(r, images) == 0 for r in p.relators):
            surjective = target.generated_by(images) == everything
            if surjective or not require_surjective:
                return Homomorphism(target, images, surjective)
    return None
