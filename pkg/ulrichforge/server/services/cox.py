"""
UlrichForge - Cox Ring Service
The bigraded coordinate algebra k[z, w, t0, t1] of F_e with
deg z = (1, 0), deg w = (1, e), deg t0 = deg t1 = (0, 1).

A form of degree (a, b) is a combination of monomials z^p w^q t0^k0 t1^k1 with
p + q = a and q*e + k0 + k1 = b; the w-exponent q picks the summand O(b - qe)
of the pushforward, so the basis size is h^0(O(a, b)).
"""
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, NamedTuple, Sequence

import numpy as np

from config import settings
from schemas.field import FieldSpec
from schemas.lattice import DivisorClass
from services.xla import ExactMatrix
from utils.errors import NonTorusPointError

QQ_SAMPLE_BOUND = 10


class Monomial(NamedTuple):
    """z^p w^q t0^k0 t1^k1."""
    p: int
    q: int
    k0: int
    k1: int

    @property
    def k(self) -> int:
        return self.k0 + self.k1

    def degree(self, e: int) -> DivisorClass:
        return DivisorClass(a=self.p + self.q, b=self.q * e + self.k, e=e)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.p + other.p, self.q + other.q, self.k0 + other.k0, self.k1 + other.k1)

    def order_key(self) -> tuple:
        return (self.q, self.p, self.k1)


@lru_cache(maxsize=settings.ULRICH_COHOMOLOGY_CACHE)
def _basis_pairs(e: int, a: int, b: int) -> tuple:
    out = []
    if a < 0:
        return tuple(out)
    for q in range(a + 1):
        k = b - q * e
        if k < 0:
            continue
        for k1 in range(k + 1):
            out.append(Monomial(a - q, q, k - k1, k1))
    out.sort(key=Monomial.order_key)
    return tuple(out)


@lru_cache(maxsize=settings.ULRICH_COHOMOLOGY_CACHE)
def _index(e: int, a: int, b: int) -> dict:
    return {m: i for i, m in enumerate(_basis_pairs(e, a, b))}


def monomial_basis(d: DivisorClass) -> List[Monomial]:
    """All monomials of degree d, ordered by (q, p, k1)."""
    return list(_basis_pairs(d.e, d.a, d.b))


def basis_index(d: DivisorClass) -> dict:
    """Monomial -> position in monomial_basis(d). Shared; do not mutate."""
    return _index(d.e, d.a, d.b)


def cache_clear() -> None:
    _basis_pairs.cache_clear()
    _index.cache_clear()


def _normalize(value, field: FieldSpec):
    if field.is_rational:
        q = Fraction(value)
        return q.numerator if q.denominator == 1 else q
    return int(value) % field.prime


class Form:
    """A bihomogeneous element of the Cox ring."""

    def __init__(self, degree: DivisorClass, terms: Dict[Monomial, object], field: FieldSpec):
        self.degree = degree
        self.field = field
        self.terms: Dict[Monomial, object] = {}
        for mono, coeff in terms.items():
            if mono.degree(degree.e) != degree:
                raise ValueError(f"monomial {mono} does not have degree {degree.pair()}")
            c = _normalize(coeff, field)
            if c != 0:
                self.terms[mono] = c

    @classmethod
    def zero(cls, degree: DivisorClass, field: FieldSpec) -> "Form":
        return cls(degree, {}, field)

    @classmethod
    def monomial(cls, mono: Monomial, e: int, field: FieldSpec, coeff=1) -> "Form":
        return cls(mono.degree(e), {mono: coeff}, field)

    @classmethod
    def from_vector(cls, degree: DivisorClass, vector: Sequence, field: FieldSpec) -> "Form":
        basis = monomial_basis(degree)
        if len(vector) != len(basis):
            raise ValueError("coefficient vector does not match the basis")
        return cls(degree, dict(zip(basis, vector)), field)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficients(self) -> list:
        """Coordinates in monomial_basis(self.degree)."""
        return [self.terms.get(m, 0) for m in monomial_basis(self.degree)]

    def __add__(self, other: "Form") -> "Form":
        if other.degree != self.degree:
            raise ValueError("cannot add forms of different degree")
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, 0) + c
        return Form(self.degree, terms, self.field)

    def __mul__(self, other):
        if not isinstance(other, Form):
            return Form(self.degree, {m: c * other for m, c in self.terms.items()}, self.field)
        terms: Dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                terms[m] = terms.get(m, 0) + c1 * c2
        return Form(self.degree + other.degree, terms, self.field)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return self.degree == other.degree and self.field == other.field and self.terms == other.terms

    def __repr__(self) -> str:
        return f"Form(deg={self.degree.pair()}, terms={len(self.terms)}, field={self.field.tag()})"


def multiplication_matrix(s: Form, source: DivisorClass) -> ExactMatrix:
    """Matrix of 'multiply by s' from the basis of source to the basis of source + deg s."""
    target = source + s.degree
    src = monomial_basis(source)
    tgt = basis_index(target)
    mat = ExactMatrix.zeros(len(tgt), len(src), s.field)
    data = mat.data
    for col, mono in enumerate(src):
        for smono, c in s.terms.items():
            row = tgt[mono * smono]
            data[row, col] = data[row, col] + c
    if not s.field.is_rational:
        data %= s.field.prime
    return mat


def sample_form(d: DivisorClass, field: FieldSpec, rng: np.random.Generator) -> Form:
    """A general form: every basis monomial gets a uniform draw (zeros allowed)."""
    basis = monomial_basis(d)
    if not basis:
        return Form.zero(d, field)
    if field.is_rational:
        draws = rng.integers(-QQ_SAMPLE_BOUND, QQ_SAMPLE_BOUND + 1, size=len(basis))
    else:
        draws = rng.integers(0, field.prime, size=len(basis))
    return Form(d, {m: int(c) for m, c in zip(basis, draws)}, field)


def sample_torus_point(field: FieldSpec, rng: np.random.Generator) -> tuple:
    if field.is_rational:
        vals = rng.integers(1, QQ_SAMPLE_BOUND + 1, size=4) * rng.choice([-1, 1], size=4)
    else:
        vals = rng.integers(1, field.prime, size=4)
    return tuple(int(v) for v in vals)


def evaluate(f: Form, point: Sequence) -> object:
    """Value of f at (z, w, t0, t1); all coordinates must be nonzero."""
    if len(point) != 4:
        raise ValueError("a point has four coordinates (z, w, t0, t1)")
    if f.field.is_rational:
        coords = [Fraction(x) for x in point]
    else:
        coords = [int(x) % f.field.prime for x in point]
    if any(c == 0 for c in coords):
        raise NonTorusPointError(point)
    z, w, t0, t1 = coords
    total = 0
    for m, c in f.terms.items():
        if f.field.is_rational:
            total += c * z ** m.p * w ** m.q * t0 ** m.k0 * t1 ** m.k1
        else:
            p = f.field.prime
            total += c * pow(z, m.p, p) * pow(w, m.q, p) * pow(t0, m.k0, p) * pow(t1, m.k1, p)
    return _normalize(total, f.field)
