"""Additive maps from a finite ring into a bimodule over it.

An additive map between Z/mZ-modules is automatically Z/mZ-linear: scalar
action is repeated addition, so additivity pins the whole scalar action down.
(The test suite samples this fact rather than leaving it folklore.)  Maps are
therefore stored as exact coordinate matrices, codomain rank by domain rank,
acting on coordinate columns.

Map *spaces* - e.g. all derivations of a given ring - are handled elsewhere as
solution modules over the row-major flattening of these matrices; the helpers
``to_flat`` / ``from_flat`` fix that flattening order once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import ResidueMatrix, mat_add, mat_mul, mat_vec
from .rings import (
    Bimodule,
    RingDescriptor,
    RingElement,
    act_left,
    act_right,
    bimodule_rank,
    matrix_ring,
    ring_rank,
)


def as_bimodule(codomain):
    """Accept a ring descriptor or a bimodule; rings mean themselves."""
    if isinstance(codomain, RingDescriptor):
        return Bimodule.regular(codomain)
    if isinstance(codomain, Bimodule):
        return codomain
    raise ValueError("codomain must be a ring descriptor or a bimodule")


@dataclass(frozen=True)
class AdditiveMap:
    domain: RingDescriptor
    codomain: Bimodule
    matrix: ResidueMatrix

    def __post_init__(self):
        if self.matrix.rows != bimodule_rank(self.codomain):
            raise ValueError("matrix row count must equal codomain rank")
        if self.matrix.cols != ring_rank(self.domain):
            raise ValueError("matrix column count must equal domain rank")
        if self.matrix.modulus != self.domain.m:
            raise ValueError("matrix modulus must match the ring modulus")

    def apply(self, x):
        """Image of a domain element; accepts a RingElement or raw coords."""
        coords = x.coords if isinstance(x, RingElement) else tuple(x)
        return mat_vec(self.matrix, coords)

    def __call__(self, x):
        return self.apply(x)

    def __add__(self, other):
        self._match(other)
        return AdditiveMap(self.domain, self.codomain, mat_add(self.matrix, other.matrix))

    def __sub__(self, other):
        self._match(other)
        return AdditiveMap(self.domain, self.codomain, mat_add(self.matrix, other.matrix, -1))

    def _match(self, other):
        if not isinstance(other, AdditiveMap):
            raise ValueError("expected an additive map")
        if other.domain != self.domain or other.codomain != self.codomain:
            raise ValueError("map descriptor mismatch")

    def is_zero(self):
        return not any(self.matrix.entries)

    def to_flat(self):
        """Row-major flattening used throughout for map-space modules."""
        return self.matrix.entries

    def to_json(self):
        return {
            "domain": self.domain.to_json(),
            "codomain": self.codomain.to_json(),
            "matrix": self.matrix.to_json(),
        }

    @classmethod
    def from_json(cls, obj):
        return cls(
            RingDescriptor.from_json(obj["domain"]),
            Bimodule.from_json(obj["codomain"]),
            ResidueMatrix.from_json(obj["matrix"]),
        )

    @classmethod
    def from_flat(cls, domain, codomain, flat):
        codomain = as_bimodule(codomain)
        rows = bimodule_rank(codomain)
        cols = ring_rank(domain)
        m = domain.m
        return cls(domain, codomain, ResidueMatrix(m, rows, cols, tuple(v % m for v in flat)))


def zero_map(domain, codomain):
    codomain = as_bimodule(codomain)
    mat = ResidueMatrix.zeros(domain.m, bimodule_rank(codomain), ring_rank(domain))
    return AdditiveMap(domain, codomain, mat)


def identity_map(ring):
    bim = Bimodule.regular(ring)
    return AdditiveMap(ring, bim, ResidueMatrix.identity(ring.m, ring_rank(ring)))


def compose(f, g):
    """f after g; g's codomain must be its ring acting on itself."""
    if g.codomain != Bimodule.regular(f.domain):
        raise ValueError("inner codomain does not match outer domain")
    return AdditiveMap(g.domain, f.codomain, mat_mul(f.matrix, g.matrix))


def inner_derivation(codomain, m_coords):
    """The derivation a |-> a.m - m.a for a fixed module element m."""
    codomain = as_bimodule(codomain)
    ring = codomain.ring
    n = ring.m
    cols = []
    for j in range(ring_rank(ring)):
        basis = tuple(1 if k == j else 0 for k in range(ring_rank(ring)))
        am = act_left(codomain, basis, m_coords)
        ma = act_right(codomain, m_coords, basis)
        cols.append(tuple((x - y) % n for x, y in zip(am, ma)))
    rows = [[col[t] for col in cols] for t in range(bimodule_rank(codomain))]
    return AdditiveMap(ring, codomain, ResidueMatrix.from_rows(n, rows) if rows else ResidueMatrix.zeros(n, 0, 0))


def right_multiplier(codomain, c_coords):
    """The map a |-> a.c; for central c this satisfies the zero-product
    hypothesis, and for any c it is a generalized derivation."""
    codomain = as_bimodule(codomain)
    ring = codomain.ring
    n = ring.m
    cols = []
    for j in range(ring_rank(ring)):
        basis = tuple(1 if k == j else 0 for k in range(ring_rank(ring)))
        cols.append(act_left(codomain, basis, c_coords))
    rows = [[col[t] for col in cols] for t in range(bimodule_rank(codomain))]
    return AdditiveMap(ring, codomain, ResidueMatrix.from_rows(n, rows) if rows else ResidueMatrix.zeros(n, 0, 0))


def lift_map(d, n):
    """Entrywise lift of a base-ring map to the n x n matrix ring over it.

    The lifted map sends the matrix with (i, j) entry x to the matrix with
    (i, j) entry d(x); its matrix is block diagonal with n^2 copies of d.
    Base maps into the base ring itself lift into the matrix ring; base maps
    into a genuine base bimodule lift into matrices over that bimodule.
    """
    base = d.domain
    ring = matrix_ring(n, base)
    if d.codomain == Bimodule.regular(base):
        codomain = Bimodule.regular(ring)
    else:
        codomain = Bimodule.matrix_over(ring, d.codomain)
    rb = ring_rank(base)
    rn = bimodule_rank(d.codomain)
    m = base.m
    dm = d.matrix
    rows = [[0] * (n * n * rb) for _ in range(n * n * rn)]
    for cell in range(n * n):
        for u in range(rn):
            for v in range(rb):
                rows[cell * rn + u][cell * rb + v] = dm.entry(u, v)
    return AdditiveMap(ring, codomain, ResidueMatrix.from_rows(m, rows))
