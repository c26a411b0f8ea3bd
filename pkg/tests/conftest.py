"""Shared fixtures: the example algebra families and cached analysis pipelines.

Everything heavy (Drinfeld double of S3 and its dual) is built once per
session and shared across test modules.
"""

from __future__ import annotations

import pytest

from hopfkit import (
    HopfData,
    Pipeline,
    builtin_group,
    drinfeld_double,
    function_algebra,
    group_algebra,
    tensor_product,
)

_GROUPS = ("C2", "C3", "C2xC2", "S3", "D4", "Q8")


def _build_examples() -> dict[str, HopfData]:
    algebras: dict[str, HopfData] = {}
    for name in _GROUPS:
        g = builtin_group(name)
        algebras[f"k{name}"] = group_algebra(g)
        algebras[f"k^{name}"] = function_algebra(g)
    algebras["D(C2)"] = drinfeld_double(builtin_group("C2"))
    algebras["D(S3)"] = drinfeld_double(builtin_group("S3"))
    algebras["kS3(x)k^C2"] = tensor_product(
        group_algebra(builtin_group("S3")), function_algebra(builtin_group("C2"))
    )
    return algebras


_EXAMPLES: dict[str, HopfData] | None = None
_PIPELINES: dict[str, Pipeline] = {}


def example_algebras() -> dict[str, HopfData]:
    global _EXAMPLES
    if _EXAMPLES is None:
        _EXAMPLES = _build_examples()
    return _EXAMPLES


def pipeline_for(name: str) -> Pipeline:
    if name not in _PIPELINES:
        _PIPELINES[name] = Pipeline(example_algebras()[name])
    return _PIPELINES[name]


@pytest.fixture(scope="session")
def examples() -> dict[str, HopfData]:
    return example_algebras()


@pytest.fixture(scope="session")
def pipelines():
    return pipeline_for


def sweedler_algebra() -> HopfData:
    """The 4-dimensional non-semisimple Hopf algebra on basis {1, g, x, gx}:
    g^2 = 1, x^2 = 0, xg = -gx, Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x,
    S(g) = g, S(x) = -gx.  It passes every axiom but eps(Lambda) = 0."""
    d = 4
    I, G, X, GX = range(4)
    mult = [[[0] * d for _ in range(d)] for _ in range(d)]

    def set_prod(a, b, k, c=1):
        mult[a][b][k] = c

    # multiplication table on {1, g, x, gx}
    set_prod(I, I, I); set_prod(I, G, G); set_prod(I, X, X); set_prod(I, GX, GX)
    set_prod(G, I, G); set_prod(G, G, I); set_prod(G, X, GX); set_prod(G, GX, X)
    set_prod(X, I, X); set_prod(X, G, GX, -1)  # x g = -gx
    # x x = 0; x gx = x g x = -g x x = 0
    set_prod(GX, I, GX); set_prod(GX, G, X, -1)  # gx g = g(xg) = -x
    # gx x = 0; gx gx = g(xg)x = -x x ... = 0
    unit = [1, 0, 0, 0]
    comult = [[[0] * d for _ in range(d)] for _ in range(d)]
    comult[I][I][I] = 1
    comult[G][G][G] = 1
    comult[X][I][X] = 1
    comult[G][X][X] = 1
    # Delta(gx) = Delta(g)Delta(x) = gx (x) g + 1 (x) gx
    comult[GX][G][GX] = 1
    comult[I][GX][GX] = 1
    counit = [1, 1, 0, 0]
    antipode = [[0] * d for _ in range(d)]
    antipode[I][I] = 1
    antipode[G][G] = 1
    antipode[GX][X] = -1  # S(x) = -gx
    antipode[X][GX] = 1   # S(gx) = S(x)S(g) = -gx g = x
    return HopfData("sweedler4", d, mult, unit, comult, counit, antipode, cyclotomic_order=2)


@pytest.fixture(scope="session")
def sweedler() -> HopfData:
    return sweedler_algebra()
