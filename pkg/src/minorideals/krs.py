"""Knuth-Robinson-Schensted deletion/insertion on standard bitableaux.

Deletion removes the largest entry of the right tableau and pushes the removed
left entry up through the left tableau; the pushed-out value and the removed
right value give one variable x[l, r] of the KRS monomial.  When a shape ``S``
is supplied, every step additionally reports a row mark: the tableau row whose
superstandard box (a_ij = j, j <= s_i) is removed or has its entry increased,
and 0 when no such box is touched.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from .errors import EmptyTableau, NotStandard, WitnessPreconditionFailed
from .polyring import Monomial
from .tableaux import Bitableau, Minor, Shape, contains_superstandard, is_standard


def diag(d: Bitableau) -> Monomial:
    """Product of the main-diagonal variables of all factors."""
    acc: dict[tuple[int, int], int] = {}
    for f in d:
        for a, b in zip(f.rows, f.cols):
            acc[(a, b)] = acc.get((a, b), 0) + 1
    return Monomial(acc)


@dataclass(frozen=True)
class KrsArray:
    """Columns (l, r, rho), leftmost column produced by the last deletion."""

    columns: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        cols = self.columns
        for (l1, r1, _), (l2, r2, _) in zip(cols, cols[1:]):
            # monotonicity: r weakly increases, and ties force l weakly decreasing
            if r1 > r2 or (r1 == r2 and l1 < l2):
                raise AssertionError(f"KRS array violates monotonicity at {(l1, r1)}, {(l2, r2)}")

    @property
    def ell(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.columns)

    @property
    def r(self) -> tuple[int, ...]:
        return tuple(c[1] for c in self.columns)

    @property
    def rho(self) -> tuple[int, ...]:
        return tuple(c[2] for c in self.columns)

    def monomial(self) -> Monomial:
        acc: dict[tuple[int, int], int] = {}
        for l, r, _ in self.columns:
            acc[(l, r)] = acc.get((l, r), 0) + 1
        return Monomial(acc)

    def subarray(self, mark: int) -> "KrsArray":
        return KrsArray(tuple(c for c in self.columns if c[2] == mark))

    def __len__(self):
        return len(self.columns)

    def __str__(self):
        if not self.columns:
            return "\n\n"
        width = max(len(str(v)) for c in self.columns for v in c)
        return "\n".join(" ".join(str(c[k]).rjust(width) for c in self.columns)
                         for k in range(3))


def _delete(left: list[list[int]], right: list[list[int]], shape: Shape):
    """One deletion step in place; returns (l, r, rho)."""
    r = max(row[-1] for row in right)
    p = max(i for i, row in enumerate(right) if row[-1] == r)
    q = len(right[p]) - 1
    marks = set()
    # 1-based box (p+1, q+1) lies in the superstandard region
    if left[p][q] == q + 1 and q + 1 <= shape.part(p + 1):
        marks.add(p + 1)
    val = left[p].pop()
    right[p].pop()
    if not left[p]:
        del left[p], right[p]
    for i in range(p - 1, -1, -1):
        row = left[i]
        k = bisect_right(row, val) - 1
        old = row[k]
        row[k] = val
        if old < val and old == k + 1 and k + 1 <= shape.part(i + 1):
            marks.add(i + 1)
        val = old
    if len(marks) > 1:
        raise AssertionError(f"more than one row mark in a single step: {sorted(marks)}")
    return val, r, (marks.pop() if marks else 0)


def krs_step(sigma: Bitableau, s: Shape = Shape(())):
    """Returns (sigma', l, r, rho)."""
    if not len(sigma):
        raise EmptyTableau("KRS step on the empty bitableau")
    left, right = sigma.left, sigma.right
    l, r, rho = _delete(left, right, s)
    return Bitableau.from_tableaux(left, right), l, r, rho


def krs_array(sigma: Bitableau, s: Shape = Shape(())) -> KrsArray:
    if not is_standard(sigma):
        raise NotStandard(f"{sigma} is not standard")
    left, right = sigma.left, sigma.right
    cols = []
    while left:
        cols.append(_delete(left, right, s))
    return KrsArray(tuple(reversed(cols)))


def krs(sigma: Bitableau) -> Monomial:
    return krs_array(sigma).monomial()


def krs_insert(mono: Monomial) -> Bitableau:
    """Inverse of ``krs``: the unique standard bitableau with krs(result) == mono."""
    pairs = []
    for (l, r), e in mono.items:
        pairs.extend([(l, r)] * e)
    pairs.sort(key=lambda p: (p[1], -p[0]))
    left: list[list[int]] = []
    right: list[list[int]] = []
    for l, r in pairs:
        val = l
        i = 0
        while True:
            if i == len(left):
                left.append([val])
                right.append([r])
                break
            row = left[i]
            k = bisect_left(row, val)
            if k == len(row):
                row.append(val)
                right[i].append(r)
                break
            row[k], val = val, row[k]
            i += 1
    return Bitableau.from_tableaux(left, right)


def extract_witness(sigma: Bitableau, s: Shape) -> Bitableau:
    """Row-superstandard bitableau T of shape s with diag(T) dividing krs(sigma).

    The factor for tableau row k is read off the columns of the KRS array that
    carry row mark k.
    """
    if not is_standard(sigma):
        raise NotStandard(f"{sigma} is not standard")
    if not contains_superstandard(sigma, s):
        raise WitnessPreconditionFailed(f"{sigma} contains no superstandard tableau of shape {s}")
    arr = krs_array(sigma, s)
    factors = []
    for k, sk in enumerate(s, start=1):
        sub = arr.subarray(k)
        if sub.ell != tuple(range(1, sk + 1)):
            raise AssertionError(f"row mark {k}: first row {sub.ell} is not 1..{sk}")
        rs = sub.r
        if any(rs[i] >= rs[i + 1] for i in range(len(rs) - 1)):
            raise AssertionError(f"row mark {k}: second row {rs} not strictly increasing")
        factors.append(Minor(sub.ell, rs))
    return Bitableau(tuple(factors))
