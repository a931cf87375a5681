"""Built-in example algebras and tensors.

Random structure constants essentially never satisfy the Leibniz identity,
so randomized testing draws random tensors/maps over this fixed catalog
instead of random algebras.
"""
from __future__ import annotations

from dataclasses import dataclass

from .linalg import TwoTensor
from .algebra import LeibnizAlgebra, LieAlgebra, hemisemidirect_product


def e4() -> LeibnizAlgebra:
    """4-dim solvable Leibniz algebra with nonzero products
    [e1,e2]=e1, [e2,e1]=-e1, [e1,e3]=-e4, [e2,e3]=e3."""
    return LeibnizAlgebra.from_products(4, {
        (0, 1): {0: 1}, (1, 0): {0: -1}, (0, 2): {3: -1}, (1, 2): {2: 1}})


def r4() -> TwoTensor:
    """e3 (x) e1 + e4 (x) e2 - a Yang-Baxter solution on e4 with invariant
    skew part and invertible skew operator."""
    return TwoTensor.basis(4, 2, 0) + TwoTensor.basis(4, 3, 1)


def g2_lie() -> LieAlgebra:
    """The nonabelian 2-dim Lie algebra {e1,e2} = e1."""
    return LieAlgebra.from_products(2, {(0, 1): {0: 1}})


def g2() -> LeibnizAlgebra:
    return g2_lie().as_leibniz()


def h4() -> LeibnizAlgebra:
    """Hemisemidirect product of g2 with its coadjoint module: basis
    (e1, e2, e1*, e2*), nonzero products [e1,e2]=e1, [e2,e1]=-e1,
    [e1,e1*]=-e2*, [e2,e1*]=e1*.  Isomorphic to e4 via e1*->e3, e2*->e4."""
    return hemisemidirect_product(g2_lie())


def abelian(n) -> LeibnizAlgebra:
    return LeibnizAlgebra.abelian(n)


def nilpotent3() -> LeibnizAlgebra:
    """3-dim nilpotent non-Lie Leibniz algebra with single product [e1,e1]=e2."""
    return LeibnizAlgebra.from_products(3, {(0, 0): {1: 1}})


def heisenberg3_lie() -> LieAlgebra:
    """3-dim Heisenberg Lie algebra {e1,e2} = e3."""
    return LieAlgebra.from_products(3, {(0, 1): {2: 1}})


@dataclass(frozen=True)
class RegistryEntry:
    name: str
    kind: str  # "algebra" or "tensor2"
    obj: object
    note: str
    algebra: str = ""  # for tensors: the algebra they live on


def registry() -> dict:
    """Named catalog; every algebra entry is re-validated on construction."""
    entries = [
        RegistryEntry("e4", "algebra", e4(),
                      "4-dim solvable Leibniz algebra carrying the factorizable "
                      "tensor r4"),
        RegistryEntry("g2", "algebra", g2(),
                      "nonabelian 2-dim Lie algebra viewed as a Leibniz algebra"),
        RegistryEntry("h4", "algebra", h4(),
                      "hemisemidirect product of g2 with its coadjoint module; "
                      "isomorphic to e4"),
        RegistryEntry("abelian2", "algebra", abelian(2),
                      "2-dim abelian Leibniz algebra"),
        RegistryEntry("nilpotent3", "algebra", nilpotent3(),
                      "3-dim nilpotent non-Lie Leibniz algebra, [e1,e1]=e2"),
        RegistryEntry("heisenberg6", "algebra",
                      hemisemidirect_product(heisenberg3_lie()),
                      "hemisemidirect product of the 3-dim Heisenberg Lie "
                      "algebra with its coadjoint module"),
        RegistryEntry("r4", "tensor2", r4(),
                      "Yang-Baxter solution e3(x)e1 + e4(x)e2 on e4; "
                      "quasi-triangular and factorizable", algebra="e4"),
        RegistryEntry("r4-skew", "tensor2", r4() - r4().swap(),
                      "skew part of r4; invariant with invertible operator form",
                      algebra="e4"),
    ]
    return {e.name: e for e in entries}


def catalog() -> list:
    """Algebras used by the randomized property suites."""
    return [(name, registry()[name].obj)
            for name in ("e4", "g2", "h4", "abelian2", "nilpotent3")]
