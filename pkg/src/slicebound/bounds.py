"""Two-sided bounds on the topological slice genus from a Seifert matrix.

The chain |signature|/2 <= g4_top <= (Alexander degree)/2 <= Seifert
genus pins the topological slice genus exactly whenever the outer bounds
meet.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .reduction import ReductionCertificate, reduce_to_block_form
from .seifert import SeifertMatrix


@dataclass(frozen=True)
class GenusBounds:
    signature_lower: int   # |signature| / 2
    alexander_upper: int   # (Alexander degree) / 2
    seifert_genus: int     # size / 2, genus of the given surface
    determined_g4top: Optional[int]  # present iff lower == upper


def bounds(m):
    """Genus bounds of the knot underlying a Seifert matrix."""
    sig = m.signature()
    deg = m.alexander_degree()
    lower = abs(sig) // 2
    upper = deg // 2
    return GenusBounds(
        signature_lower=lower,
        alexander_upper=upper,
        seifert_genus=m.genus,
        determined_g4top=lower if lower == upper else None,
    )


@dataclass(frozen=True)
class InvariantReport:
    """All invariants of one Seifert matrix, bundled for output."""

    matrix: SeifertMatrix
    alexander: object
    alexander_degree: int
    signature: int
    genus_bounds: GenusBounds
    certificate: Optional[ReductionCertificate]

    def to_json(self):
        gb = self.genus_bounds
        return {
            "alexander": str(self.alexander),
            "alexander_degree": self.alexander_degree,
            "signature": self.signature,
            "g4top_lower": gb.signature_lower,
            "g4top_upper": gb.alexander_upper,
            "g4top": gb.determined_g4top,
            "seifert_genus": gb.seifert_genus,
            "certificate": (
                self.certificate.to_json() if self.certificate else None
            ),
        }


def report(m, with_certificate=False):
    """Bundle Alexander polynomial, signature, bounds and (optionally)
    the block-reduction certificate."""
    alex = m.alexander()
    return InvariantReport(
        matrix=m,
        alexander=alex,
        alexander_degree=alex.breadth(),
        signature=m.signature(),
        genus_bounds=bounds(m),
        certificate=reduce_to_block_form(m) if with_certificate else None,
    )
