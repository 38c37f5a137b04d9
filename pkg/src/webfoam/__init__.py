"""Calculators for trivalent webs, closed foams, and their GF(2) invariants.

Subpackages cover: web/diagram combinatorics (``webs``), Tait coloring
counts and the planar dimension formula (``tait``), Euler-characteristic
skein evaluation (``skein``), closed dotted-foam values (``foams``),
explicit edge-operator modules (``modules``), moduli dimension and
grading formulas (``dims``), and the equivariant ADHM verification
(``adhm``).
"""

__version__ = "0.1.0"

__all__ = [
    "adhm",
    "catalogue",
    "dims",
    "foams",
    "generate",
    "gf2",
    "modules",
    "skein",
    "tait",
    "webs",
]
