"""Exact sparse row echelon forms over the rationals.

Vectors are dicts ``column -> coefficient``; smaller column index means larger
monomial, so the leading entry of a vector is its minimal key.  Rows are stored
with leading coefficient 1.  Integer inputs whose leading coefficients are 1
(products of minors always are) never leave the integers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


def _scaled_sub(vec: dict, c, row: dict) -> None:
    for k, v in row.items():
        nv = vec.get(k, 0) - c * v
        if nv:
            vec[k] = nv
        else:
            vec.pop(k, None)


def _normalize_lead(vec: dict, lead) -> dict:
    c = vec[lead]
    if c == 1:
        return vec
    return {k: _int_if_possible(Fraction(v) / c) for k, v in vec.items()}


def _int_if_possible(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class Echelon:
    """Incrementally built echelon basis with distinct pivots.

    With ``track=True`` every row also carries the combination of inserted
    vectors (keyed by the tags given to :meth:`add`) that produced it.
    """

    def __init__(self, track: bool = False):
        self.rows: dict[int, dict] = {}
        self.track = track
        self.tags: dict[int, dict] = {}

    def __len__(self):
        return len(self.rows)

    @property
    def pivots(self) -> set[int]:
        return set(self.rows)

    def reduce(self, vec: dict, tag: dict | None = None):
        """Top-reduce ``vec``; returns (remainder, tag combination).

        The remainder is empty iff ``vec`` lies in the span; otherwise its
        leading column is not a pivot.
        """
        vec = dict(vec)
        tag = dict(tag) if tag else {}
        rows = self.rows
        while vec:
            lead = min(vec)
            row = rows.get(lead)
            if row is None:
                break
            c = vec[lead]
            _scaled_sub(vec, c, row)
            if self.track:
                _scaled_sub(tag, c, self.tags[lead])
        return vec, tag

    def normal_form(self, vec: dict) -> dict:
        """Full reduction: the result has no entry in any pivot column.

        Unlike the top-reduced remainder this is linear in ``vec``.
        """
        vec = dict(vec)
        rows = self.rows
        while True:
            hits = [k for k in vec if k in rows]
            if not hits:
                return vec
            lead = min(hits)
            _scaled_sub(vec, vec[lead], rows[lead])

    def add(self, vec: dict, tag=None):
        """Insert a vector.  Returns None when it was independent, else the
        tag combination witnessing the dependency (empty dict if untracked)."""
        tagvec = {tag: 1} if (self.track and tag is not None) else {}
        rem, tagrem = self.reduce(vec, tagvec)
        if not rem:
            return tagrem
        lead = min(rem)
        c = rem[lead]
        self.rows[lead] = _normalize_lead(rem, lead)
        if self.track:
            self.tags[lead] = {k: _int_if_possible(Fraction(v) / c) if c != 1 else v
                               for k, v in tagrem.items()}
        return None

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)[0]

    def express(self, vec: dict) -> dict | None:
        """Coefficients of ``vec`` over the inserted tags, or None if outside the span."""
        if not self.track:
            raise ValueError("express needs a tracking echelon")
        rem, tag = self.reduce(vec)
        if rem:
            return None
        return {k: -v for k, v in tag.items() if v}

    def basis(self) -> list[dict]:
        return [self.rows[p] for p in sorted(self.rows)]


def rank(vectors: Iterable[dict]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return len(ech)


def intersect(ech: Echelon, vectors: Iterable[dict]) -> list[dict]:
    """Basis of span(ech) intersected with span(vectors)."""
    vectors = list(vectors)
    remainders = Echelon(track=True)
    out = []
    for j, v in enumerate(vectors):
        rem = ech.normal_form(v)
        dep = remainders.add(rem, tag=j)
        if dep is not None:
            # sum dep[k] * remainder_k == 0, so sum dep[k] * v_k lies in span(ech)
            w: dict = {}
            for k, c in dep.items():
                _scaled_sub(w, -c, vectors[k])
            if w:
                out.append(w)
    return out
