"""Sparse multivariate polynomials with exact coefficients.

A polynomial is a sparse map from exponent vectors to nonzero canonical
coefficients.  The zero polynomial is the empty map.  All arithmetic is
exact; there is no floating point anywhere in this module.

Representation:
    terms: dict[tuple[int, ...], int]
        Keys are exponent vectors of length ``arity`` with nonnegative
        entries.  Values are canonical integers of ``ring`` and never zero.

Polynomials are immutable by convention: no public method mutates
``terms``, and arithmetic always builds a new object.

GridSpec lives here too: a finite evaluation grid S_1 x ... x S_n whose
per-variable sets keep their stored order.  Order matters downstream
("first k elements" conventions and the odometer enumeration order), so
sets are tuples, not frozensets.
"""

from __future__ import annotations

import itertools
from math import prod
from typing import Iterable, Mapping, Sequence

from .errors import (
    ArityMismatchError,
    RingMismatchError,
    ZeroPolynomialError,
)
from .ring import RingElem, RingSpec

Exponents = tuple[int, ...]


def _coerce_value(ring: RingSpec, v) -> int:
    if isinstance(v, RingElem):
        if v.ring != ring:
            raise RingMismatchError(f"value from {v.ring} used in {ring}")
        return v.value
    return ring.canon(int(v))


class Polynomial:
    """A sparse polynomial in ``arity`` variables over ``ring``."""

    __slots__ = ("arity", "ring", "terms")

    def __init__(self, arity: int, ring: RingSpec, terms: Mapping[Exponents, int] | None = None):
        if arity < 0:
            raise ValueError("arity must be nonnegative")
        clean: dict[Exponents, int] = {}
        for exps, c in (terms or {}).items():
            key = tuple(int(e) for e in exps)
            if len(key) != arity:
                raise ArityMismatchError(f"exponent vector {key} has length {len(key)}, expected {arity}")
            if any(e < 0 for e in key):
                raise ValueError(f"negative exponent in {key}")
            v = _coerce_value(ring, c)
            if v:
                prev = clean.get(key)
                if prev is None:
                    clean[key] = v
                else:
                    # duplicate keys from caller-provided mappings are summed
                    s = ring.add(prev, v)
                    if s:
                        clean[key] = s
                    else:
                        del clean[key]
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, arity: int, ring: RingSpec) -> "Polynomial":
        return cls(arity, ring)

    @classmethod
    def constant(cls, arity: int, ring: RingSpec, c) -> "Polynomial":
        return cls(arity, ring, {(0,) * arity: c})

    @classmethod
    def variable(cls, arity: int, ring: RingSpec, index: int) -> "Polynomial":
        if not 0 <= index < arity:
            raise ArityMismatchError(f"variable index {index} out of range for arity {arity}")
        exps = tuple(1 if i == index else 0 for i in range(arity))
        return cls(arity, ring, {exps: 1})

    @classmethod
    def monomial(cls, arity: int, ring: RingSpec, exps: Sequence[int], c=1) -> "Polynomial":
        return cls(arity, ring, {tuple(exps): c})

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> set[Exponents]:
        return set(self.terms)

    def coefficient(self, exps: Sequence[int]) -> RingElem:
        return RingElem(self.ring, self.terms.get(tuple(exps), 0))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.arity, self.ring) == (other.arity, other.ring) and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, self.ring, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- arithmetic --------------------------------------------------------

    def _check_peer(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"mixed rings {self.ring} and {other.ring}")
        if self.arity != other.arity:
            raise ArityMismatchError(f"mixed arities {self.arity} and {other.arity}")

    def __add__(self, other):
        if isinstance(other, (int, RingElem)):
            other = Polynomial.constant(self.arity, self.ring, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_peer(other)
        add = self.ring.add
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = add(out.get(exps, 0), c)
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return Polynomial(self.arity, self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.neg
        return Polynomial(self.arity, self.ring, {e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, RingElem)):
            other = Polynomial.constant(self.arity, self.ring, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, RingElem)):
            c = _coerce_value(self.ring, other)
            mul = self.ring.mul
            return Polynomial(self.arity, self.ring, {e: mul(v, c) for e, v in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_peer(other)
        add, mul = self.ring.add, self.ring.mul
        out: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                s = add(out.get(key, 0), mul(c1, c2))
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return Polynomial(self.arity, self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.arity, self.ring, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base_needed = e > 1
            e >>= 1
            if base_needed and e:
                base = base * base
        return result

    # -- evaluation --------------------------------------------------------

    def _point_values(self, point: Sequence) -> tuple[int, ...]:
        if len(point) != self.arity:
            raise ArityMismatchError(f"point of length {len(point)} for arity {self.arity}")
        return tuple(_coerce_value(self.ring, v) for v in point)

    def evaluate(self, point: Sequence) -> RingElem:
        """Evaluate at a point of ring elements (or plain ints)."""
        return RingElem(self.ring, self.eval_raw(self._point_values(point)))

    def eval_raw(self, values: tuple[int, ...]) -> int:
        """Evaluate at canonical integer values.  Fast path; no validation."""
        m = self.ring.modulus
        total = 0
        if m:
            for exps, c in self.terms.items():
                t = c
                for v, e in zip(values, exps):
                    if e:
                        t = t * pow(v, e, m) % m
                total += t
            return total % m
        for exps, c in self.terms.items():
            t = c
            for v, e in zip(values, exps):
                if e:
                    t *= v ** e
            total += t
        return total

    # -- degrees -----------------------------------------------------------

    def degrees(self) -> tuple[tuple[int, ...], int]:
        """(partial degrees per variable, total degree).  Zero polynomial
        has no degrees and raises ZeroPolynomialError."""
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no degrees")
        partial = tuple(max(e[i] for e in self.terms) for i in range(self.arity))
        total = max(sum(e) for e in self.terms)
        return partial, total

    def partial_degree(self, index: int) -> int:
        return self.degrees()[0][index]

    def total_degree(self) -> int:
        return self.degrees()[1]

    # -- rendering ---------------------------------------------------------

    def render(self, names: Sequence[str] | None = None) -> str:
        """Canonical text form, parseable back by the expression grammar.

        Terms are ordered by descending (total degree, exponents).  Over Z,
        negative coefficients fold into the +/- chain; over modular rings
        every coefficient prints as its canonical representative.
        """
        if not self.terms:
            return "0"
        if names is None:
            names = [f"x{i + 1}" for i in range(self.arity)]
        elif len(names) != self.arity:
            raise ArityMismatchError("wrong number of variable names")
        signed = self.ring.modulus is None
        parts: list[str] = []
        for exps in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[exps]
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag, sign = (abs(c), "-" if c < 0 else "+") if signed else (c, "+")
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self.render()!r} over {self.ring})"


# -- structure helpers ------------------------------------------------------


def decompose_by_variable(f: Polynomial, var: int) -> list[Polynomial]:
    """Write f as sum of x_var^k * h_k and return [h_0, ..., h_d].

    Each h_k is free of x_var (exponent zero there) but keeps the full
    arity.  The top coefficient h_d is nonzero; interior gaps are zero
    polynomials.  Decomposing the zero polynomial is an error since it has
    no top coefficient.
    """
    if f.is_zero:
        raise ZeroPolynomialError("cannot decompose the zero polynomial")
    if not 0 <= var < f.arity:
        raise ArityMismatchError(f"variable index {var} out of range")
    layers: dict[int, dict[Exponents, int]] = {}
    for exps, c in f.terms.items():
        k = exps[var]
        base = exps[:var] + (0,) + exps[var + 1:]
        layers.setdefault(k, {})[base] = c
    top = max(layers)
    return [Polynomial(f.arity, f.ring, layers.get(k, {})) for k in range(top + 1)]


def recompose(hs: Sequence[Polynomial], var: int) -> Polynomial:
    """Inverse of decompose_by_variable: sum of x_var^k * h_k."""
    if not hs:
        raise ValueError("nothing to recompose")
    arity, ring = hs[0].arity, hs[0].ring
    out: dict[Exponents, int] = {}
    add = ring.add
    for k, h in enumerate(hs):
        for exps, c in h.terms.items():
            key = exps[:var] + (exps[var] + k,) + exps[var + 1:]
            s = add(out.get(key, 0), c)
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return Polynomial(arity, ring, out)


def divide_linear(f: Polynomial, var: int, a) -> tuple[Polynomial, Polynomial]:
    """Divide f by the monic linear factor (x_var - a).

    Returns (q, r) with f == q * (x_var - a) + r and r free of x_var.
    Works over any of the supported rings because the divisor is monic.
    Synthetic division on the x_var-layers of f: b_{k-1} = c_k + a * b_k.
    """
    a = _coerce_value(f.ring, a)
    if f.is_zero:
        z = Polynomial.zero(f.arity, f.ring)
        return z, z
    layers = decompose_by_variable(f, var)
    d = len(layers) - 1
    if d == 0:
        return Polynomial.zero(f.arity, f.ring), f
    cur = layers[d]
    q_layers = [Polynomial.zero(f.arity, f.ring)] * d
    q_layers[d - 1] = cur
    for k in range(d - 1, 0, -1):
        cur = layers[k] + cur * a
        q_layers[k - 1] = cur
    r = layers[0] + cur * a
    return recompose(q_layers, var), r


class GridSpec:
    """A finite grid S_1 x ... x S_n of ring elements, in stored order.

    Each set is a tuple of distinct canonical values.  Distinctness is
    checked after canonicalization, so {-1, 4} is rejected over F_5.
    """

    __slots__ = ("ring", "sets")

    def __init__(self, ring: RingSpec, sets: Iterable[Iterable]):
        clean = []
        for i, s in enumerate(sets):
            vals = tuple(_coerce_value(ring, v) for v in s)
            if not vals:
                raise ValueError(f"grid set {i + 1} is empty")
            if len(set(vals)) != len(vals):
                raise ValueError(f"grid set {i + 1} has repeated elements after canonicalization: {vals}")
            clean.append(vals)
        if not clean:
            raise ValueError("a grid needs at least one variable")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "sets", tuple(clean))

    def __setattr__(self, name, value):
        raise AttributeError("GridSpec is immutable")

    @classmethod
    def from_text(cls, text: str, ring: RingSpec) -> "GridSpec":
        """Parse the grid text format: one variable per line (or per
        ';'-separated segment), elements separated by commas, where an
        element is an integer or an inclusive range ``a..b``.  Blank
        segments are ignored."""
        sets = []
        for lineno, line in enumerate(text.replace(";", "\n").splitlines(), 1):
            line = line.strip()
            if not line:
                continue
            elems: list[int] = []
            try:
                for tok in line.split(","):
                    tok = tok.strip()
                    if ".." in tok:
                        lo, hi = (int(part) for part in tok.split("..", 1))
                        if hi < lo:
                            raise ValueError
                        elems.extend(range(lo, hi + 1))
                    else:
                        elems.append(int(tok))
            except ValueError:
                raise ValueError(f"bad grid element on line {lineno}: {line!r}") from None
            sets.append(elems)
        return cls(ring, sets)

    @property
    def arity(self) -> int:
        return len(self.sets)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.sets)

    def size(self) -> int:
        return prod(self.sizes)

    def points(self):
        """All grid points in odometer order (last variable fastest)."""
        return itertools.product(*self.sets)

    def __eq__(self, other):
        if not isinstance(other, GridSpec):
            return NotImplemented
        return self.ring == other.ring and self.sets == other.sets

    def __hash__(self):
        return hash((self.ring, self.sets))

    def __repr__(self) -> str:
        return f"GridSpec({self.sets} over {self.ring})"


def vanishing_poly(grid: GridSpec, var: int) -> Polynomial:
    """The monic polynomial prod_{a in S_var} (x_var - a).

    Vanishes exactly on S_var (over a domain); monic by construction, so it
    can divide over any supported ring.
    """
    if not 0 <= var < grid.arity:
        raise ArityMismatchError(f"variable index {var} out of range")
    ring = grid.ring
    out = Polynomial.constant(grid.arity, ring, 1)
    x = Polynomial.variable(grid.arity, ring, var)
    for a in grid.sets[var]:
        out = out * (x - a)
    return out


def check_compatible(f: Polynomial, grid: GridSpec):
    """Raise unless f and grid share ring and arity."""
    if f.ring != grid.ring:
        raise RingMismatchError(f"polynomial over {f.ring}, grid over {grid.ring}")
    if f.arity != grid.arity:
        raise ArityMismatchError(f"polynomial arity {f.arity}, grid arity {grid.arity}")
