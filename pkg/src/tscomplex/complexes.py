"""General simplicial complexes: faces, f-vector, purity, connectivity, links.

Faces are sorted tuples of integer vertex labels.  A complex is stored by its
facets (the inclusion-maximal faces) in canonical order: ascending vertex
lists compared lexicographically.  The complex whose only face is the empty
face (the link of a facet) is representable and has dimension -1.

Complexes are immutable; face enumerations are cached per instance.
"""

from __future__ import annotations

import json
from itertools import combinations

Face = tuple[int, ...]


def _as_face(vertices) -> Face:
    vs = [int(v) for v in vertices]
    face = tuple(sorted(set(vs)))
    if len(face) != len(vs):
        raise ValueError(f"face {tuple(vs)} has repeated vertices")
    return face


def _antichain(faces: set[Face]) -> tuple[Face, ...]:
    """Keep only the inclusion-maximal members, in canonical order."""
    by_size = sorted(faces, key=len, reverse=True)
    kept: list[Face] = []
    kept_sets: list[frozenset] = []
    for face in by_size:
        fs = frozenset(face)
        if any(fs <= other for other in kept_sets):
            continue
        kept.append(face)
        kept_sets.append(fs)
    return tuple(sorted(kept))


class SimplicialComplex:
    """An abstract simplicial complex given by its facet antichain."""

    __slots__ = ("_facets", "_vertices", "_faces_by_dim", "_face_set")

    def __init__(self, facets):
        """Internal constructor: ``facets`` may be any generating family of
        (possibly empty) faces.  Use :meth:`from_facets` for validated input.
        """
        gens = {_as_face(f) for f in facets}
        if not gens:
            raise ValueError("a simplicial complex needs at least one generating face")
        self._facets = _antichain(gens)
        self._vertices = tuple(sorted({v for f in self._facets for v in f}))
        self._faces_by_dim = None
        self._face_set = None

    @classmethod
    def from_facets(cls, sets) -> "SimplicialComplex":
        """Build a complex from non-empty generating sets; dominated sets are
        dropped and the rest canonically ordered."""
        sets = [tuple(s) for s in sets]
        if not sets:
            raise ValueError("empty generating family")
        if any(not s for s in sets):
            raise ValueError("generating sets must be non-empty")
        return cls(sets)

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        """The complex {∅} containing only the empty face (dimension -1)."""
        return cls([()])

    # -- basic structure ----------------------------------------------------

    @property
    def facets(self) -> tuple[Face, ...]:
        return self._facets

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    def dimension(self) -> int:
        return max(len(f) for f in self._facets) - 1

    def is_pure(self) -> bool:
        sizes = {len(f) for f in self._facets}
        return len(sizes) == 1

    def all_faces(self) -> dict[int, list[Face]]:
        """All faces grouped by dimension, each group in canonical order.

        The empty face is not listed (it is a face of every complex here).
        """
        if self._faces_by_dim is None:
            faces: set[Face] = set()
            for facet in self._facets:
                for k in range(1, len(facet) + 1):
                    faces.update(combinations(facet, k))
            grouped: dict[int, list[Face]] = {}
            for face in faces:
                grouped.setdefault(len(face) - 1, []).append(face)
            self._faces_by_dim = {k: sorted(v) for k, v in sorted(grouped.items())}
            self._face_set = faces
        return self._faces_by_dim

    def faces(self, k: int) -> list[Face]:
        """The k-dimensional faces in canonical order (empty list if none)."""
        return self.all_faces().get(k, [])

    def has_face(self, face) -> bool:
        face = _as_face(face)
        if face == ():
            return True
        self.all_faces()
        return face in self._face_set

    def f_vector(self) -> tuple[int, ...]:
        """(alpha_0, ..., alpha_dim): face counts per dimension."""
        faces = self.all_faces()
        return tuple(len(faces[k]) for k in range(self.dimension() + 1))

    def is_facet_connected(self) -> bool:
        """True iff any two facets are joined by a chain of facets with
        consecutive non-empty intersections."""
        if len(self._facets) <= 1:
            return True
        parent = list(range(len(self._facets)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        first_with: dict[int, int] = {}
        for idx, facet in enumerate(self._facets):
            for v in facet:
                if v in first_with:
                    ri, rj = find(idx), find(first_with[v])
                    if ri != rj:
                        parent[ri] = rj
                else:
                    first_with[v] = idx
        root = find(0)
        return all(find(i) == root for i in range(len(self._facets)))

    def link(self, face) -> "SimplicialComplex":
        """The link at ``face``: all faces disjoint from it whose union with
        it is again a face.  The link at ∅ is the complex itself; the link at
        a facet is the dimension -1 complex {∅}."""
        face = _as_face(face)
        if not self.has_face(face):
            raise ValueError(f"{face} is not a face of the complex")
        if face == ():
            return self
        fs = set(face)
        gens = [tuple(v for v in facet if v not in fs)
                for facet in self._facets if fs <= set(facet)]
        return SimplicialComplex(gens)

    # -- misc ----------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self._facets == other._facets

    def __hash__(self):
        return hash(self._facets)

    def __repr__(self):
        inside = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self._facets[:8])
        tail = ", ..." if len(self._facets) > 8 else ""
        return f"SimplicialComplex<{inside}{tail}> ({len(self._facets)} facets)"


# --- JSON interchange --------------------------------------------------------
#
# {"n": <vertex count>, "facets": [[...], ...]}  with facets in canonical order.


def complex_to_json_dict(cx: SimplicialComplex) -> dict:
    return {"n": len(cx.vertices), "facets": [list(f) for f in cx.facets]}


def complex_from_json_dict(data: dict) -> SimplicialComplex:
    try:
        cx = SimplicialComplex.from_facets(data["facets"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed complex JSON: {exc}") from exc
    if "n" in data and int(data["n"]) != len(cx.vertices):
        raise ValueError(
            f"complex JSON claims {data['n']} vertices but facets use {len(cx.vertices)}"
        )
    return cx


def complex_dumps(cx: SimplicialComplex) -> str:
    """Canonical (byte-stable) JSON text for a complex."""
    return json.dumps(complex_to_json_dict(cx), sort_keys=True, separators=(",", ":")) + "\n"


def complex_loads(text: str) -> SimplicialComplex:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    return complex_from_json_dict(data)
