"""Boundary matrices and exact simplicial homology over a field.

The boundary of an r-face drops one vertex at a time with alternating signs,
positions taken in ascending vertex order; bases are the canonical face
orders of the complex, so matrices are identical across runs.

Ranks are computed exactly: fraction-free (Bareiss) elimination over the
rationals, straightforward modular elimination over a prime field.  The
default working field is GF(32003); the rationals serve as the independent
verification route.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexes import Face, SimplicialComplex


# --- fields -----------------------------------------------------------------


@dataclass(frozen=True)
class Rationals:
    """Exact rational coefficients."""

    def __str__(self):
        return "q"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """The finite field GF(p) for prime p."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def __str__(self):
        return f"gf:{self.p}"


FieldSpec = Rationals | PrimeField

DEFAULT_FIELD = PrimeField(32003)


def parse_field(spec: str) -> FieldSpec:
    """Parse a field spec string: "q" or "gf:<p>"."""
    spec = spec.strip().lower()
    if spec == "q":
        return Rationals()
    if spec.startswith("gf:"):
        try:
            p = int(spec[3:])
        except ValueError as exc:
            raise ValueError(f"bad prime in field spec {spec!r}") from exc
        return PrimeField(p)
    raise ValueError(f"unknown field spec {spec!r}; expected 'q' or 'gf:<p>'")


# --- boundary matrices --------------------------------------------------------


@dataclass(frozen=True)
class BoundaryMatrix:
    """Matrix of the r-th boundary map over the canonical face bases.

    Rows are the (r-1)-faces, columns the r-faces; entries lie in {-1, 0, +1}.
    """

    r: int
    rows: tuple[Face, ...]
    cols: tuple[Face, ...]
    data: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape


def boundary_matrix(cx: SimplicialComplex, r: int) -> BoundaryMatrix:
    """The boundary map from r-faces to (r-1)-faces, 1 <= r <= dim."""
    if not 1 <= r <= cx.dimension():
        raise ValueError(f"boundary dimension {r} out of range 1..{cx.dimension()}")
    rows = tuple(cx.faces(r - 1))
    cols = tuple(cx.faces(r))
    row_index = {face: i for i, face in enumerate(rows)}
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, face in enumerate(cols):
        for pos in range(len(face)):
            sub = face[:pos] + face[pos + 1:]
            mat[row_index[sub], j] = -1 if pos % 2 else 1
    mat.flags.writeable = False
    return BoundaryMatrix(r=r, rows=rows, cols=cols, data=mat)


def export_triplets(bm: BoundaryMatrix) -> str:
    """Sparse triplet text: one "r row col value" line per nonzero entry."""
    lines = []
    for i, j in zip(*np.nonzero(bm.data)):
        lines.append(f"{bm.r} {i} {j} {bm.data[i, j]:+d}")
    return "\n".join(lines) + ("\n" if lines else "")


# --- exact rank ---------------------------------------------------------------


def _rank_mod_p(mat: np.ndarray, p: int) -> int:
    a = np.mod(mat, p).astype(np.int64)
    n_rows, n_cols = a.shape
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivots = np.nonzero(a[r:, c])[0]
        if pivots.size == 0:
            continue
        piv = r + pivots[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        below = a[r + 1:, c]
        hit = np.nonzero(below)[0]
        if hit.size:
            a[r + 1 + hit] = (a[r + 1 + hit] - np.outer(below[hit], a[r])) % p
        r += 1
    return r


def _rank_bareiss(mat: np.ndarray) -> int:
    """Rank over the rationals of an integer matrix, by fraction-free
    (Bareiss) elimination with exact integer arithmetic."""
    a = [[int(x) for x in row] for row in mat]
    n_rows = len(a)
    n_cols = len(a[0]) if n_rows else 0
    r = 0
    prev = 1
    for c in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if a[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        pivot = a[r][c]
        for i in range(r + 1, n_rows):
            head = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c + 1, n_cols):
                row_i[j] = (row_i[j] * pivot - head * row_r[j]) // prev
            row_i[c] = 0
        prev = pivot
        r += 1
    return r


def rank_over(bm: BoundaryMatrix, field: FieldSpec) -> int:
    """Exact rank of a boundary matrix over the given field."""
    return matrix_rank(bm.data, field)


def matrix_rank(mat: np.ndarray, field: FieldSpec) -> int:
    mat = np.asarray(mat)
    if mat.size == 0:
        return 0
    if isinstance(field, PrimeField):
        return _rank_mod_p(mat, field.p)
    return _rank_bareiss(mat)


# --- homology summaries --------------------------------------------------------


@dataclass(frozen=True)
class HomologySummary:
    """Per-dimension ranks and Betti numbers of a complex over one field.

    ``rank_im[r]`` is the rank of the r-th boundary map (0 for r = 0),
    ``rank_ker[r] = alpha[r] - rank_im[r]``, ``betti[r]`` the unreduced and
    ``reduced_betti[r]`` the reduced Betti numbers.  All tuples are indexed
    by dimension 0..dim.
    """

    field: FieldSpec
    alpha: tuple[int, ...]
    rank_im: tuple[int, ...]
    rank_ker: tuple[int, ...]
    betti: tuple[int, ...]
    reduced_betti: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "field": str(self.field),
            "alpha": list(self.alpha),
            "rank_im": list(self.rank_im),
            "rank_ker": list(self.rank_ker),
            "betti": list(self.betti),
            "reduced_betti": list(self.reduced_betti),
        }


def homology_summary(cx: SimplicialComplex, field: FieldSpec = DEFAULT_FIELD) -> HomologySummary:
    """Betti numbers of ``cx`` over ``field``.

    betti[r] = dim ker ∂_r - rank ∂_{r+1}; the reduced numbers agree except
    in dimension 0 where one copy of the field (the augmentation) drops out.
    """
    dim = cx.dimension()
    if dim < 0:
        return HomologySummary(field, (), (), (), (), ())
    alpha = cx.f_vector()
    rank_im = [0] * (dim + 1)
    for r in range(1, dim + 1):
        rank_im[r] = rank_over(boundary_matrix(cx, r), field)
    rank_ker = [alpha[r] - rank_im[r] for r in range(dim + 1)]
    betti = [rank_ker[r] - (rank_im[r + 1] if r + 1 <= dim else 0) for r in range(dim + 1)]
    reduced = list(betti)
    reduced[0] -= 1
    return HomologySummary(
        field=field,
        alpha=tuple(alpha),
        rank_im=tuple(rank_im),
        rank_ker=tuple(rank_ker),
        betti=tuple(betti),
        reduced_betti=tuple(reduced),
    )


def euler_characteristic(cx: SimplicialComplex) -> int:
    """Alternating sum of the face counts."""
    return sum((-1) ** k * alpha_k for k, alpha_k in enumerate(cx.f_vector()))
