#!/usr/bin/env python3
"""Print the classification of the built-in tensors over their algebras and
the dimensions of the invariant-skew-tensor spaces of the catalog algebras."""
from leibalg import fixtures
from leibalg.bialgebra import classify
from leibalg.yang_baxter import invariant_skew_tensors

if __name__ == "__main__":
    reg = fixtures.registry()
    for name, entry in sorted(reg.items()):
        if entry.kind != "tensor2":
            continue
        alg = reg[entry.algebra].obj
        print(f"{name} on {entry.algebra}: {classify(alg, entry.obj).describe()}")
    for name, alg in fixtures.catalog():
        dim = len(invariant_skew_tensors(alg))
        print(f"invariant skew tensors on {name}: dimension {dim}")
