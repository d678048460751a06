"""Targets, approximation sets, and the approximation-error functional.

A target is a point xi = (xi_0, ..., xi_n) of certified reals with xi_0 != 0;
the error of a nonzero integer point x against it is

    L(x) = max_{1 <= k <= n} |xi_0 x_k - xi_k x_0|.

Approximation sets restrict which integer points compete: the full lattice,
congruence conditions on individual coordinates, or an explicit sublattice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from . import rigorous
from .errors import AmbientMismatch, DomainError, SchemaError, ZeroPoint
from .rigorous import RigorousReal


@dataclass(frozen=True)
class IntegerPoint:
    """A canonical nonzero integer vector: first nonzero coordinate positive."""

    coords: tuple[int, ...]
    norm_sq: int

    @classmethod
    def canonical(cls, coords: Iterable[int]) -> "IntegerPoint":
        c = tuple(int(v) for v in coords)
        if all(v == 0 for v in c):
            raise ZeroPoint("the zero vector has no canonical form")
        for v in c:
            if v != 0:
                if v < 0:
                    c = tuple(-w for w in c)
                break
        return cls(c, sum(v * v for v in c))

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]


class ApproxSet:
    """Base class for the sets of integer points allowed to approximate."""

    kind = "abstract"

    def member(self, coords: Sequence[int]) -> bool:
        raise NotImplementedError

    def describe(self) -> dict:
        raise NotImplementedError


class FullLattice(ApproxSet):
    kind = "full"

    def member(self, coords: Sequence[int]) -> bool:
        return True

    def describe(self) -> dict:
        return {"type": "full"}

    def __repr__(self):
        return "FullLattice()"


class CongruenceSet(ApproxSet):
    """Points whose listed coordinates lie in given residue classes mod m."""

    kind = "congruence"

    def __init__(self, modulus: int, residues: Mapping[int, Iterable[int]]):
        if modulus < 2:
            raise DomainError("congruence modulus must be >= 2")
        self.modulus = int(modulus)
        self.residues: dict[int, frozenset[int]] = {}
        for idx, rs in residues.items():
            rset = frozenset(int(r) % self.modulus for r in rs)
            if not rset:
                raise DomainError(f"empty residue list for coordinate {idx}")
            self.residues[int(idx)] = rset

    def allowed(self, index: int, value: int) -> bool:
        rs = self.residues.get(index)
        return rs is None or (value % self.modulus) in rs

    def member(self, coords: Sequence[int]) -> bool:
        return all(self.allowed(i, v) for i, v in enumerate(coords))

    def describe(self) -> dict:
        return {
            "type": "congruence",
            "modulus": self.modulus,
            "residues": {str(k): sorted(v) for k, v in sorted(self.residues.items())},
        }

    def __repr__(self):
        return f"CongruenceSet(mod {self.modulus}, {dict(self.residues)})"


class Sublattice(ApproxSet):
    """The integer span of an explicit full-column-rank basis."""

    kind = "sublattice"

    def __init__(self, basis: Sequence[Sequence[int]]):
        vecs = [tuple(int(v) for v in row) for row in basis]
        if not vecs:
            raise DomainError("sublattice basis must be nonempty")
        dim = len(vecs[0])
        if any(len(v) != dim for v in vecs):
            raise AmbientMismatch("sublattice basis vectors differ in length")
        self.basis = tuple(vecs)
        self.ambient = dim
        if self._rank() != len(vecs):
            raise DomainError("sublattice basis vectors must be linearly independent")

    def _rank(self) -> int:
        rows = [[Fraction(v) for v in vec] for vec in self.basis]
        rank = 0
        for col in range(self.ambient):
            piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            for r in range(len(rows)):
                if r != rank and rows[r][col] != 0:
                    f = rows[r][col] / rows[rank][col]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
            rank += 1
        return rank

    def member(self, coords: Sequence[int]) -> bool:
        if len(coords) != self.ambient:
            raise AmbientMismatch(
                f"point has dimension {len(coords)}, lattice ambient is {self.ambient}"
            )
        # solve sum_j c_j basis_j = coords over Q, then demand integrality
        rows = [[Fraction(vec[i]) for vec in self.basis] + [Fraction(coords[i])]
                for i in range(self.ambient)]
        ncols = len(self.basis)
        rank = 0
        pivots = []
        for col in range(ncols):
            piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            for r in range(len(rows)):
                if r != rank and rows[r][col] != 0:
                    f = rows[r][col] / rows[rank][col]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
            pivots.append(col)
            rank += 1
        for r in range(rank, len(rows)):
            if rows[r][ncols] != 0:
                return False  # not even in the rational span
        for r, col in enumerate(pivots):
            c = rows[r][ncols] / rows[r][col]
            if c.denominator != 1:
                return False
        return True

    def describe(self) -> dict:
        return {"type": "sublattice", "basis": [list(v) for v in self.basis]}

    def __repr__(self):
        return f"Sublattice({[list(v) for v in self.basis]})"


class TargetPoint:
    """A certified-real target (xi_0, ..., xi_n), xi_0 != 0.

    Linear independence of the coordinates over Q is asserted by the caller,
    not verified; enumeration detects violations opportunistically.
    """

    def __init__(self, coords: Sequence[RigorousReal], description: Optional[dict] = None):
        coords = tuple(coords)
        if len(coords) < 2:
            raise DomainError("a target needs at least two coordinates")
        if rigorous.sign(coords[0], cap=4096) in (0, None):
            raise DomainError("xi_0 must be certified nonzero")
        self.coords = coords
        self.n = len(coords) - 1
        self.description = description or {}
        self._ratio_cache: dict[int, RigorousReal] = {}
        self._snapshots: dict[int, list[tuple[int, int]]] = {}

    def ratio(self, k: int) -> RigorousReal:
        """Enclosure of xi_k / xi_0."""
        if k not in self._ratio_cache:
            self._ratio_cache[k] = self.coords[k] / self.coords[0]
        return self._ratio_cache[k]

    def saturation_flags(self) -> tuple[bool, ...]:
        """Per coordinate: True when the enclosure cannot shrink further."""
        return tuple(c.saturated for c in self.coords)

    def exact_values(self) -> tuple[Optional[Fraction], ...]:
        """Per coordinate: the exact rational value, or None when irrational/unknown."""
        return tuple(c.lo if c.is_exact else None for c in self.coords)

    def snapshot(self, bits: int) -> list[tuple[int, int]]:
        """Integer bounds [lo, hi]/2^bits for every coordinate, cached."""
        snap = self._snapshots.get(bits)
        if snap is None:
            snap = [rigorous.dyadic_bounds(c, bits) for c in self.coords]
            self._snapshots[bits] = snap
        return snap

    def ratio_snapshot(self, bits: int) -> list[tuple[int, int]]:
        key = -bits  # separate cache namespace from coordinate snapshots
        snap = self._snapshots.get(key)
        if snap is None:
            snap = [rigorous.dyadic_bounds(self.ratio(k), bits)
                    for k in range(1, self.n + 1)]
            self._snapshots[key] = snap
        return snap

    def __repr__(self):
        return f"TargetPoint(n={self.n}, ~{[float(c) for c in self.coords]})"


def l_value(target: TargetPoint, point: Union[IntegerPoint, Sequence[int]],
            cap: int | None = None) -> RigorousReal:
    """Enclosure of max_k |xi_0 x_k - xi_k x_0| for a nonzero integer point."""
    coords = point.coords if isinstance(point, IntegerPoint) else tuple(int(v) for v in point)
    if len(coords) != target.n + 1:
        raise AmbientMismatch(
            f"point has {len(coords)} coordinates, target has {target.n + 1}"
        )
    if all(v == 0 for v in coords):
        raise ZeroPoint("L is undefined at the zero vector")
    xi0 = target.coords[0]
    x0 = coords[0]
    branches = [abs(xi0 * coords[k] - target.coords[k] * x0)
                for k in range(1, target.n + 1)]
    return rigorous.maximum(*branches)


# ---------------------------------------------------------------------------
# configuration documents

def _coord_from_doc(doc) -> RigorousReal:
    if not isinstance(doc, dict) or "type" not in doc:
        raise SchemaError(f"coordinate must be an object with a 'type': {doc!r}")
    t = doc["type"]
    if t == "rational":
        if "value" not in doc:
            raise SchemaError("rational coordinate needs 'value'")
        try:
            return rigorous.rational(Fraction(str(doc["value"])))
        except (ValueError, ZeroDivisionError) as e:
            raise SchemaError(f"bad rational {doc['value']!r}: {e}") from None
    if t == "decimal":
        if "value" not in doc:
            raise SchemaError("decimal coordinate needs 'value'")
        try:
            return rigorous.decimal_literal(str(doc["value"]))
        except (ValueError, DomainError) as e:
            raise SchemaError(f"bad decimal {doc['value']!r}: {e}") from None
    if t == "algebraic":
        if "minpoly" not in doc or "interval" not in doc:
            raise SchemaError("algebraic coordinate needs 'minpoly' and 'interval'")
        coeffs = doc["minpoly"]
        if (not isinstance(coeffs, list) or len(coeffs) < 2
                or not all(isinstance(c, int) for c in coeffs)):
            raise SchemaError("'minpoly' must be a list of >= 2 integers, low degree first")
        iv = doc["interval"]
        if not isinstance(iv, list) or len(iv) != 2:
            raise SchemaError("'interval' must be [lo, hi]")
        try:
            lo, hi = Fraction(str(iv[0])), Fraction(str(iv[1]))
        except (ValueError, ZeroDivisionError) as e:
            raise SchemaError(f"bad interval endpoint: {e}") from None
        return rigorous.algebraic_root(coeffs, (lo, hi))
    if t == "expr":
        if "op" not in doc or "args" not in doc:
            raise SchemaError("expr coordinate needs 'op' and 'args'")
        op = doc["op"]
        if op not in ("+", "-", "*", "/"):
            raise SchemaError(f"expr op must be one of + - * /, got {op!r}")
        args = doc["args"]
        if not isinstance(args, list) or len(args) < 2:
            raise SchemaError("expr needs at least two args")
        vals = [_coord_from_doc(a) for a in args]
        acc = vals[0]
        for v in vals[1:]:
            if op == "+":
                acc = acc + v
            elif op == "-":
                acc = acc - v
            elif op == "*":
                acc = acc * v
            else:
                acc = acc / v
        return acc
    raise SchemaError(f"unknown coordinate type {t!r}")


def _approx_set_from_doc(doc) -> ApproxSet:
    if doc is None:
        return FullLattice()
    if not isinstance(doc, dict) or "type" not in doc:
        raise SchemaError("'S' must be an object with a 'type'")
    t = doc["type"]
    if t == "full":
        return FullLattice()
    if t == "congruence":
        if "modulus" not in doc or "residues" not in doc:
            raise SchemaError("congruence set needs 'modulus' and 'residues'")
        if not isinstance(doc["modulus"], int):
            raise SchemaError("'modulus' must be an integer")
        res = doc["residues"]
        if not isinstance(res, dict):
            raise SchemaError("'residues' must map coordinate index to residue list")
        try:
            residues = {int(k): [int(r) for r in v] for k, v in res.items()}
        except (TypeError, ValueError) as e:
            raise SchemaError(f"bad residues: {e}") from None
        try:
            return CongruenceSet(doc["modulus"], residues)
        except DomainError as e:
            raise SchemaError(str(e)) from None
    if t == "sublattice":
        if "basis" not in doc or not isinstance(doc["basis"], list):
            raise SchemaError("sublattice set needs a 'basis' list")
        try:
            return Sublattice(doc["basis"])
        except (DomainError, AmbientMismatch) as e:
            raise SchemaError(str(e)) from None
    raise SchemaError(f"unknown approximation-set type {t!r}")


def load_target(doc: dict) -> tuple[TargetPoint, ApproxSet]:
    """Build (target, approximation set) from a configuration document."""
    if not isinstance(doc, dict):
        raise SchemaError("configuration must be a JSON object")
    if "n" not in doc or not isinstance(doc["n"], int) or doc["n"] < 1:
        raise SchemaError("'n' must be an integer >= 1")
    if "coords" not in doc or not isinstance(doc["coords"], list):
        raise SchemaError("'coords' must be a list")
    coords_doc = doc["coords"]
    if len(coords_doc) != doc["n"] + 1:
        raise SchemaError(
            f"expected {doc['n'] + 1} coordinates for n={doc['n']}, got {len(coords_doc)}"
        )
    coords = [_coord_from_doc(c) for c in coords_doc]
    approx = _approx_set_from_doc(doc.get("S"))
    if isinstance(approx, Sublattice) and approx.ambient != doc["n"] + 1:
        raise SchemaError(
            f"sublattice ambient dimension {approx.ambient} != n+1 = {doc['n'] + 1}"
        )
    try:
        target = TargetPoint(coords, description=doc)
    except DomainError as e:
        raise SchemaError(str(e)) from None
    return target, approx
