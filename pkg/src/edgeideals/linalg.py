"""Exact dense rank computation over the rationals and over prime fields.

Rank over Q uses Bareiss fraction-free elimination on Python integers, so
integer matrices are handled exactly with no floating point anywhere.  Rank
over GF(p) uses ordinary Gaussian elimination with modular inverses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    d = 2
    while d * d <= k:
        if k % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True, slots=True)
class Field:
    """Coefficient field: rationals when p is None, otherwise GF(p)."""

    p: "int | None" = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    def token(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"

    def matrix_rank(self, rows) -> int:
        """Rank of an integer matrix, given as a list of row lists."""
        if self.p is None:
            return bareiss_rank(rows)
        return mod_p_rank(rows, self.p)

    @staticmethod
    def from_token(text: str) -> "Field":
        s = text.strip()
        if s in ("Q", "q", "QQ"):
            return RATIONALS
        m = re.match(r"(?i)^gf\(?(\d+)\)?$", s)
        if m:
            return Field(int(m.group(1)))
        raise ValueError(f"unknown field {text!r} (use Q or GF(p))")


RATIONALS = Field()
GF2 = Field(2)


def bareiss_rank(rows) -> int:
    """Exact rank over Q of an integer matrix via fraction-free elimination.

    Every intermediate entry is a minor of the input matrix, so the single
    integer division per update is exact and there is no coefficient blowup
    beyond determinant size.
    """
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    prev = 1
    for c in range(nc):
        if rank == nr:
            break
        piv = None
        for i in range(rank, nr):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        pv = pr[c]
        for i in range(rank + 1, nr):
            row = m[i]
            f = row[c]
            for j in range(c + 1, nc):
                row[j] = (row[j] * pv - f * pr[j]) // prev
            row[c] = 0
        prev = pv
        rank += 1
    return rank


def mod_p_rank(rows, p: int) -> int:
    """Rank over GF(p) of an integer matrix via Gaussian elimination mod p."""
    m = [[v % p for v in r] for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    for c in range(nc):
        if rank == nr:
            break
        piv = None
        for i in range(rank, nr):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        pr = m[rank]
        for i in range(rank + 1, nr):
            row = m[i]
            f = row[c]
            if f:
                f = (f * inv) % p
                for j in range(c, nc):
                    row[j] = (row[j] - f * pr[j]) % p
        rank += 1
    return rank
