"""Cohen-Macaulay, CM_t and Buchsbaum tests via vanishing link homology.

A complex is Cohen-Macaulay over a field when, for every face (the empty
face included), the reduced homology of its link vanishes strictly below the
link's own dimension.  The CM_t hierarchy keeps the same vanishing condition
but quantifies only over faces with at least t vertices, measures the range
against the complex's top dimension, and additionally requires purity; t = 0
recovers Cohen-Macaulay on pure complexes and t = 1 is the Buchsbaum
property.

Reduced homology in dimension -1 is never consulted: every non-void link has
trivial (-1)-st reduced homology under the augmentation convention, and
links of facets pass vacuously.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import Face, SimplicialComplex
from .graphs import Graph, TotalLabeling, is_connected
from .homology import DEFAULT_FIELD, FieldSpec, HomologySummary, homology_summary
from .tsc import build_tsc


@dataclass(frozen=True)
class CmWitness:
    """A face whose link has nonvanishing reduced homology in degree r."""

    face: Face
    r: int
    betti: int


@dataclass(frozen=True)
class CmReport:
    verdict: bool
    field: FieldSpec
    witness: CmWitness | None
    purity_ok: bool

    def to_json_dict(self) -> dict:
        witness = None
        if self.witness is not None:
            witness = {
                "face": list(self.witness.face),
                "r": self.witness.r,
                "betti": self.witness.betti,
            }
        return {
            "verdict": self.verdict,
            "field": str(self.field),
            "witness": witness,
            "purity_ok": self.purity_ok,
        }


def _reduced(summary: HomologySummary, r: int) -> int:
    """Reduced Betti number, 0 above the complex's dimension."""
    if 0 <= r < len(summary.reduced_betti):
        return summary.reduced_betti[r]
    return 0


def _faces_big_to_small(cx: SimplicialComplex):
    """All faces including ∅, by decreasing size, canonical within a size."""
    faces = cx.all_faces()
    for k in sorted(faces, reverse=True):
        yield from faces[k]
    yield ()


def is_cm(cx: SimplicialComplex, field: FieldSpec = DEFAULT_FIELD) -> CmReport:
    """Cohen-Macaulay test: every link has vanishing reduced homology below
    its dimension.  Stops at the first failing face."""
    purity_ok = cx.is_pure()
    for face in _faces_big_to_small(cx):
        link = cx.link(face)
        top = link.dimension()
        if top <= 0:
            continue
        summary = homology_summary(link, field)
        for r in range(top):
            value = _reduced(summary, r)
            if value != 0:
                return CmReport(False, field, CmWitness(face, r, value), purity_ok)
    return CmReport(True, field, None, purity_ok)


def is_cm_t(cx: SimplicialComplex, t: int, field: FieldSpec = DEFAULT_FIELD) -> CmReport:
    """CM_t test: purity plus vanishing reduced link homology in degrees
    r < dim(cx) - #face for every face with #face >= t vertices."""
    d = cx.dimension() + 1
    if not 0 <= t <= d:
        raise ValueError(f"t must lie in 0..{d} for a complex of dimension {d - 1}, got {t}")
    if not cx.is_pure():
        return CmReport(False, field, None, purity_ok=False)
    for face in _faces_big_to_small(cx):
        if len(face) < t:
            break  # sizes only decrease from here
        top = d - len(face) - 1
        if top <= 0:
            continue
        summary = homology_summary(cx.link(face), field)
        for r in range(top):
            value = _reduced(summary, r)
            if value != 0:
                return CmReport(False, field, CmWitness(face, r, value), purity_ok=True)
    return CmReport(True, field, None, purity_ok=True)


def tsc_cm_shortcut(g: Graph, labeling: TotalLabeling, field: FieldSpec = DEFAULT_FIELD) -> bool:
    """For a connected graph, the TSC is Cohen-Macaulay exactly when its
    first reduced homology vanishes; this computes just that criterion."""
    if not is_connected(g):
        raise ValueError(
            "the shortcut requires a connected graph; the total complex of a "
            "disconnected graph is disconnected and never Cohen-Macaulay or Buchsbaum"
        )
    summary = homology_summary(build_tsc(g, labeling), field)
    return _reduced(summary, 1) == 0


def vertex_links_connected(cx: SimplicialComplex) -> bool:
    """True iff the link at every single vertex is facet-connected."""
    return all(cx.link((v,)).is_facet_connected() for v in cx.vertices)
