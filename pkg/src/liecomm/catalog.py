"""Named algebras and their closed-form commutativity degrees.

Family strings (used by the CLI and the corpus) look like ``heisenberg:2``,
``abelian:3``, ``affine2``, ``l55``, ``l57``, ``l67_2``; a ``+`` joins
summands, e.g. ``heisenberg:1+abelian:2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParams
from .gfq import Field
from .lie_core import LieAlgebra, algebra_create, direct_sum

FAMILIES = ("Abelian", "Heisenberg", "Affine2", "L55", "L57", "L67_2", "DirectSum")

_ALIASES = {
    "abelian": "Abelian",
    "a": "Abelian",
    "heisenberg": "Heisenberg",
    "h": "Heisenberg",
    "affine2": "Affine2",
    "l55": "L55",
    "l57": "L57",
    "l67_2": "L67_2",
}

_DESCRIPTIONS = {
    "Abelian": "A(n): n-dimensional abelian",
    "Heisenberg": "H(m): [x_i, y_i] = z, basis x_1..x_m, y_1..y_m, z",
    "Affine2": "<x, y | [x, y] = x>",
    "L55": "L_{5,5}: [x1,x2]=x3, [x1,x3]=x5, [x2,x4]=x5",
    "L57": "L_{5,7}: [x1,x2]=x3, [x1,x3]=x4, [x1,x4]=x5",
    "L67_2": "L^(2)_{6,7}(0): [x1,x2]=x5, [x3,x4]=x5+x6, [x1,x3]=x6",
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]
    field: Field
    parts: tuple[FamilySpec, ...] = ()

    def label(self) -> str:
        if self.family == "DirectSum":
            return "+".join(p.label() for p in self.parts)
        if self.family == "Abelian":
            return f"A({self.params[0]})"
        if self.family == "Heisenberg":
            return f"H({self.params[0]})"
        return self.family

    def key(self) -> str:
        """Canonical family string; parses back to an equal spec."""
        if self.family == "DirectSum":
            return "+".join(p.key() for p in self.parts)
        base = self.family.lower()
        return base + "".join(f":{p}" for p in self.params)


def parse_family(text: str, F: Field) -> FamilySpec:
    parts = [s.strip() for s in text.split("+")]
    specs = []
    for part in parts:
        name, *args = part.split(":")
        fam = _ALIASES.get(name.strip().lower())
        if fam is None:
            raise InvalidParams(f"unknown family {name!r}")
        try:
            params = tuple(int(a) for a in args)
        except ValueError:
            raise InvalidParams(f"bad parameters in {part!r}") from None
        specs.append(FamilySpec(fam, params, F))
    for s in specs:
        _check_params(s)
    if len(specs) == 1:
        return specs[0]
    return FamilySpec("DirectSum", (), F, tuple(specs))


def _check_params(spec: FamilySpec) -> None:
    fam, params = spec.family, spec.params
    if fam == "Abelian":
        if len(params) != 1 or params[0] < 0:
            raise InvalidParams("Abelian takes one parameter n >= 0")
    elif fam == "Heisenberg":
        if len(params) != 1 or params[0] < 1:
            raise InvalidParams("Heisenberg takes one parameter m >= 1")
    elif fam == "DirectSum":
        if not spec.parts:
            raise InvalidParams("DirectSum needs at least one part")
        for p in spec.parts:
            if p.field != spec.field:
                raise InvalidParams("direct sum parts over different fields")
            _check_params(p)
    elif fam in ("Affine2", "L55", "L57", "L67_2"):
        if params:
            raise InvalidParams(f"{fam} takes no parameters")
    else:
        raise InvalidParams(f"unknown family {fam!r}")


def abelian(n: int, F: Field) -> LieAlgebra:
    return make(FamilySpec("Abelian", (n,), F))


def heisenberg(m: int, F: Field) -> LieAlgebra:
    return make(FamilySpec("Heisenberg", (m,), F))


def affine2(F: Field) -> LieAlgebra:
    return make(FamilySpec("Affine2", (), F))


def l55(F: Field) -> LieAlgebra:
    return make(FamilySpec("L55", (), F))


def l57(F: Field) -> LieAlgebra:
    return make(FamilySpec("L57", (), F))


def l67_2(F: Field) -> LieAlgebra:
    return make(FamilySpec("L67_2", (), F))


def make(spec: FamilySpec) -> LieAlgebra:
    _check_params(spec)
    F = spec.field
    fam = spec.family
    if fam == "Abelian":
        return algebra_create(F, spec.params[0], [], spec.label())
    if fam == "Heisenberg":
        m = spec.params[0]
        z = 2 * m + 1
        return algebra_create(F, z, [(i, m + i, z, 1) for i in range(1, m + 1)], spec.label())
    if fam == "Affine2":
        return algebra_create(F, 2, [(1, 2, 1, 1)], spec.label())
    if fam == "L55":
        return algebra_create(F, 5, [(1, 2, 3, 1), (1, 3, 5, 1), (2, 4, 5, 1)], spec.label())
    if fam == "L57":
        return algebra_create(F, 5, [(1, 2, 3, 1), (1, 3, 4, 1), (1, 4, 5, 1)], spec.label())
    if fam == "L67_2":
        rels = [(1, 2, 5, 1), (3, 4, 5, 1), (3, 4, 6, 1), (1, 3, 6, 1)]
        return algebra_create(F, 6, rels, spec.label())
    out = make(spec.parts[0])
    for p in spec.parts[1:]:
        out = direct_sum(out, make(p))
    return LieAlgebra(out.field, out.dim, out.table, spec.label())


def closed_form_degree(spec: FamilySpec) -> Fraction:
    """Closed-form degree of the family at ``q = spec.field.q``."""
    _check_params(spec)
    q = spec.field.q
    fam = spec.family
    if fam == "Abelian":
        return Fraction(1)
    if fam == "Heisenberg":
        m = spec.params[0]
        return Fraction(q ** (2 * m) + q - 1, q ** (2 * m + 1))
    if fam == "Affine2":
        return Fraction(q**2 + q - 1, q**3)
    if fam in ("L55", "L57"):
        return Fraction(q**3 + q**2 - 1, q**5)
    if fam == "L67_2":
        # isoclinic to H(1)+H(1) over every GF(q) (same witness as over GF(2))
        return Fraction(q**2 + q - 1, q**3) ** 2
    out = Fraction(1)
    for p in spec.parts:
        out *= closed_form_degree(p)
    return out


def list_families() -> list[tuple[str, str]]:
    return [(k.lower(), v) for k, v in _DESCRIPTIONS.items()]
