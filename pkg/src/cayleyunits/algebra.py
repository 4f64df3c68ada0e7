"""Exact group-algebra arithmetic over the rational numbers.

Elements are finitely supported rational combinations of group
elements. Everything is exact: coefficients are fractions, products
are table lookups, and invertibility questions reduce to Gaussian
elimination on the left-regular representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .groups import FiniteGroup, Orientation

_ZERO = Fraction(0)
_ONE = Fraction(1)


class GroupMismatchError(ValueError):
    """Operands belong to algebras over different groups."""


def _check_same_group(left: FiniteGroup, right: FiniteGroup) -> None:
    if left != right:
        raise GroupMismatchError(f"groups differ: {left.name} vs {right.name}")


class AlgebraElement:
    """A rational combination of the elements of a finite group.

    Instances are treated as immutable: all arithmetic returns new
    elements and zero coefficients are never stored, so equality is
    plain dictionary equality.
    """

    __slots__ = ("group", "coeff")

    def __init__(self, group: FiniteGroup, coeff=None) -> None:
        self.group = group
        stored: dict[int, Fraction] = {}
        if coeff:
            items = coeff.items() if isinstance(coeff, dict) else coeff
            for g, c in items:
                if not 0 <= g < group.order:
                    raise ValueError(f"element index {g} is out of range for {group.name}")
                f = c if isinstance(c, Fraction) else Fraction(c)
                if f:
                    stored[g] = stored.get(g, _ZERO) + f
            for g in [g for g, c in stored.items() if not c]:
                del stored[g]
        self.coeff = stored

    @classmethod
    def zero(cls, group: FiniteGroup) -> "AlgebraElement":
        return cls(group)

    @classmethod
    def one(cls, group: FiniteGroup) -> "AlgebraElement":
        return cls(group, {group.identity: _ONE})

    @classmethod
    def basis_element(cls, group: FiniteGroup, g: int) -> "AlgebraElement":
        """The group element g as an algebra element."""
        return cls(group, {g: _ONE})

    def coefficient(self, g: int) -> Fraction:
        return self.coeff.get(g, _ZERO)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.coeff))

    def __bool__(self) -> bool:
        return bool(self.coeff)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.group == other.group and self.coeff == other.coeff

    def __add__(self, other) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        _check_same_group(self.group, other.group)
        out = dict(self.coeff)
        for g, c in other.coeff.items():
            out[g] = out.get(g, _ZERO) + c
        return AlgebraElement(self.group, out)

    def __sub__(self, other) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        _check_same_group(self.group, other.group)
        out = dict(self.coeff)
        for g, c in other.coeff.items():
            out[g] = out.get(g, _ZERO) - c
        return AlgebraElement(self.group, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.group, {g: -c for g, c in self.coeff.items()})

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            _check_same_group(self.group, other.group)
            mul = self.group.mul
            out: dict[int, Fraction] = {}
            for g, a in self.coeff.items():
                row = mul[g]
                for h, b in other.coeff.items():
                    k = row[h]
                    out[k] = out.get(k, _ZERO) + a * b
            return AlgebraElement(self.group, out)
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return AlgebraElement(self.group, {g: c * f for g, c in self.coeff.items()})
        return NotImplemented

    def __rmul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"AlgebraElement({self.group.name}: {self})"


def format_element(a: AlgebraElement) -> str:
    """Canonical printable form, e.g. ``-1/3 + 2/3*x - x^2``.

    Terms are ordered by element index; the output parses back to an
    equal element.
    """
    if not a.coeff:
        return "0"
    parts: list[str] = []
    for g in sorted(a.coeff):
        c = a.coeff[g]
        body = _term_body(a.group, g, abs(c))
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def _term_body(group: FiniteGroup, g: int, magnitude: Fraction) -> str:
    if g == group.identity:
        return str(magnitude)
    name = group.names[g]
    if magnitude == 1:
        return name
    return f"{magnitude}*{name}"


def involute_classical(a: AlgebraElement) -> AlgebraElement:
    """The linear extension of g -> g^-1."""
    inv = a.group.inv
    return AlgebraElement(a.group, {inv[g]: c for g, c in a.coeff.items()})


def involute_oriented(a: AlgebraElement, orientation: Orientation) -> AlgebraElement:
    """The linear extension of g -> sign(g) * g^-1."""
    _check_same_group(a.group, orientation.group)
    inv = a.group.inv
    sign = orientation.sign
    return AlgebraElement(a.group, {inv[g]: c * sign[g] for g, c in a.coeff.items()})


def involute(a: AlgebraElement, orientation: Orientation | None = None) -> AlgebraElement:
    """Oriented involution when an orientation is given, classical otherwise."""
    if orientation is None:
        return involute_classical(a)
    return involute_oriented(a, orientation)


def is_skew(a: AlgebraElement, orientation: Orientation | None = None) -> bool:
    """Whether the involution negates ``a``."""
    return involute(a, orientation) == -a


def is_unitary(u: AlgebraElement, orientation: Orientation | None = None) -> bool:
    """Whether the involute of ``u`` is its inverse.

    Checking u * u^* = 1 is enough: in a finite-dimensional algebra a
    one-sided inverse is two-sided (left multiplication by u is a
    square matrix, and a surjective square matrix is bijective).
    """
    return u * involute(u, orientation) == AlgebraElement.one(u.group)


@dataclass(frozen=True)
class SkewGenerator:
    """A member of the spanning set of the skew-symmetric elements.

    kind "L1": q*(g - g^-1) for g of order above 2 with sign +1.
    kind "L2": q*g for self-inverse g with sign -1.
    kind "L3": g + g^-1 for g of order above 2 with sign -1.

    The scalar q is supplied when the generator is materialized; kind
    "L3" only materializes with q = 1 (rational multiples of it are
    still skew, but carry no closed-form unit).
    """

    kind: str
    group: FiniteGroup
    base: int

    @property
    def base_name(self) -> str:
        return self.group.names[self.base]


def skew_basis(group: FiniteGroup, orientation: Orientation | None = None) -> list[SkewGenerator]:
    """Spanning generators of the skew-symmetric elements, no duplicates.

    For each pair {g, g^-1} only the smaller index is kept. Without an
    orientation the classical involution is meant, and only "L1"
    generators occur.
    """
    sign = None
    if orientation is not None:
        _check_same_group(group, orientation.group)
        sign = orientation.sign
    out: list[SkewGenerator] = []
    for g in group.elements():
        gi = group.inv[g]
        s = 1 if sign is None else sign[g]
        if g == gi:
            if s == -1:
                out.append(SkewGenerator("L2", group, g))
            continue
        if gi < g:
            continue
        out.append(SkewGenerator("L1" if s == 1 else "L3", group, g))
    return out


def materialize(sg: SkewGenerator, q=1) -> AlgebraElement:
    """The algebra element of a skew generator, scaled by q where allowed."""
    f = Fraction(q)
    group = sg.group
    g, gi = sg.base, sg.group.inv[sg.base]
    if sg.kind == "L1":
        return AlgebraElement(group, {g: f, gi: -f})
    if sg.kind == "L2":
        return AlgebraElement(group, {g: f})
    if sg.kind == "L3":
        if f != 1:
            raise ValueError("sum generators only materialize with q = 1")
        return AlgebraElement(group, {g: _ONE, gi: _ONE})
    raise ValueError(f"unknown skew generator kind {sg.kind!r}")


def regular_representation(a: AlgebraElement) -> list[list[Fraction]]:
    """Matrix of left multiplication by ``a`` in the group-element basis.

    Column g holds the coefficients of a*g, so the assignment is
    multiplicative: the matrix of a product is the product of the
    matrices, and ``a`` is invertible exactly when the matrix is.
    """
    n = a.group.order
    mul = a.group.mul
    mat = [[_ZERO] * n for _ in range(n)]
    for h, c in a.coeff.items():
        row = mul[h]
        for g in range(n):
            mat[row[g]][g] += c
    return mat


def solve_linear(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """One exact solution of matrix * x = rhs, or None when inconsistent.

    Gaussian elimination with partial pivoting on the magnitude of the
    rational entries; free variables are set to zero.
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    work = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        best_row, best_mag = -1, _ZERO
        for i in range(r, m):
            mag = abs(work[i][c])
            if mag > best_mag:
                best_row, best_mag = i, mag
        if best_row < 0:
            continue
        work[r], work[best_row] = work[best_row], work[r]
        prow = work[r]
        pv = prow[c]
        for i in range(r + 1, m):
            f = work[i][c]
            if f:
                f /= pv
                wi = work[i]
                for j in range(c, n + 1):
                    wi[j] -= f * prow[j]
        pivots.append((r, c))
        r += 1
    for i in range(r, m):
        if work[i][n]:
            return None
    x = [_ZERO] * n
    for pr, pc in reversed(pivots):
        row = work[pr]
        s = row[n]
        for j in range(pc + 1, n):
            if row[j] and x[j]:
                s -= row[j] * x[j]
        x[pc] = s / row[pc]
    return x


def oracle_inverse(a: AlgebraElement) -> AlgebraElement | None:
    """Two-sided inverse by exact linear algebra, or None.

    Solves the regular-representation system for a right inverse and
    re-checks the product before returning; a one-sided inverse is
    two-sided here because the algebra is finite dimensional.
    """
    group = a.group
    mat = regular_representation(a)
    rhs = [_ZERO] * group.order
    rhs[group.identity] = _ONE
    x = solve_linear(mat, rhs)
    if x is None:
        return None
    b = AlgebraElement(group, dict(enumerate(x)))
    if a * b != AlgebraElement.one(group):
        raise ArithmeticError("solver returned a vector that is not an inverse")
    return b


def element_to_json(a: AlgebraElement) -> dict:
    """Canonical payload: coefficients sorted by element index.

    Values are exact rational strings; the denominator is omitted when
    it is 1.
    """
    return {
        "group": a.group.name,
        "coeffs": [
            {"elem": a.group.names[g], "value": str(a.coeff[g])} for g in sorted(a.coeff)
        ],
    }


def element_from_json(group: FiniteGroup, data: dict) -> AlgebraElement:
    """Rebuild an element from its canonical payload."""
    if data.get("group") != group.name:
        raise GroupMismatchError(
            f"payload is for group {data.get('group')!r}, not {group.name!r}"
        )
    coeff: dict[int, Fraction] = {}
    for entry in data.get("coeffs", []):
        g = group.index_of(entry["elem"])
        if g in coeff:
            raise ValueError(f"duplicate coefficient for element {entry['elem']!r}")
        coeff[g] = Fraction(entry["value"])
    return AlgebraElement(group, coeff)
