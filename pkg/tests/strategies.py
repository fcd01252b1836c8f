"""Shared hypothesis strategies: small valid algebras in random bases."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from liecomm.catalog import make, parse_family
from liecomm.corpus import random_invertible
from liecomm.gfq import GF
from liecomm.lie_core import change_basis

# (family, largest q to use) keeping q^n small enough for brute force
FAMILIES = [
    ("heisenberg:1", 5),
    ("heisenberg:2", 3),
    ("affine2", 9),
    ("l55", 3),
    ("l57", 3),
    ("l67_2", 2),
    ("heisenberg:1+abelian:1", 4),
    ("affine2+abelian:1", 5),
    ("affine2+affine2", 3),
    ("abelian:3", 4),
]


@st.composite
def algebras(draw, families=FAMILIES, qs=(2, 3, 4, 5, 7, 8, 9)):
    family, qmax = draw(st.sampled_from([f for f in families if f[1] >= min(qs)]))
    q = draw(st.sampled_from([q for q in qs if q <= qmax]))
    F = GF(q)
    L = make(parse_family(family, F))
    if draw(st.booleans()):
        rng = random.Random(draw(st.integers(0, 2**32)))
        L = change_basis(L, random_invertible(F, L.dim, rng))
    return L


@st.composite
def vectors(draw, L):
    return tuple(draw(st.integers(0, L.field.q - 1)) for _ in range(L.dim))
