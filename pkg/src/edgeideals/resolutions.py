"""Exact multigraded Betti tables of monomial ideals, regularity and linearity tests.

The primary engine enumerates the lcm lattice of the ideal and computes, at
each lattice multidegree m, the reduced homology of the membership complex of
m: the simplicial complex on the support of m whose faces are the squarefree
chunks S with m/x_S still inside the ideal.  Its rank in dimension i-1 is the
multigraded Betti number at (i, m).

Two independent cross-checks are kept alongside: strand homology of the
Taylor complex (capped by generator count) and order-complex homology of the
open lcm-lattice intervals (capped by face count).  All three must agree
wherever more than one runs; the test suite enforces this.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product

from .complexes import CapExceeded, mask_homology_ranks, order_complex, reduced_homology_ranks
from .linalg import RATIONALS, Field
from .monomials import Monomial, MonomialIdeal, generated_in_single_degree, grlex_key


@dataclass(frozen=True, slots=True)
class EngineCaps:
    """Desk-scale guardrails; every report header prints these."""

    lattice_max: int = 65536
    order_faces_max: int = 1 << 22
    taylor_max_generators: int = 16
    quotients_max_generators: int = 24
    quotients_time_budget: float = 10.0
    membership_table_max: int = 1 << 21

    def to_json(self) -> dict:
        return {
            "lattice_max": self.lattice_max,
            "order_faces_max": self.order_faces_max,
            "taylor_max_generators": self.taylor_max_generators,
            "quotients_max_generators": self.quotients_max_generators,
            "quotients_time_budget": self.quotients_time_budget,
            "membership_table_max": self.membership_table_max,
        }


DEFAULT_CAPS = EngineCaps()


def _guard_proper(ideal: MonomialIdeal, what: str) -> None:
    if ideal.is_zero:
        raise ValueError(f"{what} is undefined for the zero ideal")
    if ideal.is_unit:
        raise ValueError(f"{what} is undefined for the unit ideal")


# -- lcm lattice ----------------------------------------------------------------


class LcmLattice:
    """All lcms of nonempty generator subsets, plus a formal bottom element."""

    __slots__ = ("nvars", "elements", "bottom")

    def __init__(self, nvars: int, elements):
        self.nvars = nvars
        self.elements = tuple(elements)
        self.bottom = Monomial.unit(nvars)

    @property
    def top(self) -> Monomial:
        return self.elements[-1]

    def open_interval(self, m: Monomial) -> list:
        """Lattice elements strictly between the bottom and m."""
        return [p for p in self.elements if p != m and p.divides(m)]

    def __len__(self):
        return len(self.elements)

    def __contains__(self, m: Monomial):
        return m in set(self.elements)


def lcm_lattice(ideal: MonomialIdeal, caps: EngineCaps = DEFAULT_CAPS) -> LcmLattice:
    _guard_proper(ideal, "the lcm lattice")
    atoms = [g.exps for g in ideal.sorted_gens()]
    elems = set(atoms)
    frontier = list(elems)
    while frontier:
        fresh = []
        for a in frontier:
            for b in atoms:
                j = tuple(map(max, a, b))
                if j not in elems:
                    elems.add(j)
                    fresh.append(j)
                    if len(elems) > caps.lattice_max:
                        raise CapExceeded("lattice_max", caps.lattice_max, len(elems))
        frontier = fresh
    ordered = sorted(elems, key=lambda e: (sum(e), e))
    return LcmLattice(ideal.nvars, (Monomial(e) for e in ordered))


# -- monomial membership oracle ---------------------------------------------------


class _Membership:
    """Membership queries m in I for all monomials below a fixed exponent box.

    Uses a dynamic-programming table over the box when it is small enough,
    otherwise falls back to direct divisibility scans.
    """

    __slots__ = ("table", "strides", "gens")

    def __init__(self, ideal: MonomialIdeal, top: tuple, caps: EngineCaps):
        self.gens = [g.exps for g in ideal.sorted_gens()]
        box = 1
        for t in top:
            box *= t + 1
        if box <= caps.membership_table_max:
            n = len(top)
            strides = [1] * n
            for i in range(n - 2, -1, -1):
                strides[i] = strides[i + 1] * (top[i + 1] + 1)
            gen_idx = set()
            for g in self.gens:
                gen_idx.add(sum(e * s for e, s in zip(g, strides)))
            table = bytearray(box)
            idx = 0
            ranges = [range(t + 1) for t in top]
            for v in product(*ranges):
                hit = idx in gen_idx
                if not hit:
                    for i in range(n):
                        if v[i] and table[idx - strides[i]]:
                            hit = True
                            break
                table[idx] = 1 if hit else 0
                idx += 1
            self.table = table
            self.strides = tuple(strides)
        else:
            self.table = None
            self.strides = None

    def index(self, exps) -> int:
        return sum(e * s for e, s in zip(exps, self.strides))

    def contains(self, exps) -> bool:
        if self.table is not None:
            return bool(self.table[self.index(exps)])
        return any(all(a <= b for a, b in zip(g, exps)) for g in self.gens)


# -- Betti tables ------------------------------------------------------------------


class BettiTable:
    """Graded Betti numbers of an ideal with the multigraded refinement.

    entries maps (homological index i, total degree j) to a positive count;
    multi maps (i, multidegree Monomial) to a positive count.
    """

    __slots__ = ("field_token", "nvars", "entries", "multi")

    def __init__(self, field_token: str, nvars: int, entries: dict, multi: dict):
        self.field_token = field_token
        self.nvars = nvars
        self.entries = dict(entries)
        self.multi = dict(multi)

    def beta(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def beta_multi(self, i: int, m: Monomial) -> int:
        return self.multi.get((i, m), 0)

    def regularity(self) -> int:
        return max(j - i for i, j in self.entries)

    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def is_linear(self, d: int) -> bool:
        return all(j == i + d for i, j in self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, BettiTable)
            and self.field_token == other.field_token
            and self.entries == other.entries
            and self.multi == other.multi
        )

    def to_json(self, include_multi: bool = False) -> dict:
        out = {
            "field": self.field_token,
            "entries": [
                {"i": i, "j": j, "beta": b}
                for (i, j), b in sorted(self.entries.items())
            ],
            "reg": self.regularity(),
            "pd": self.projective_dimension(),
        }
        if include_multi:
            out["multi"] = [
                {"i": i, "m": str(m), "beta": b}
                for (i, m), b in sorted(
                    self.multi.items(), key=lambda kv: (kv[0][0], grlex_key(kv[0][1]))
                )
            ]
        return out

    def __repr__(self):
        cells = ", ".join(f"b({i},{j})={b}" for (i, j), b in sorted(self.entries.items()))
        return f"BettiTable[{self.field_token}]({cells})"


_TABLE_CACHE: dict = {}


def betti_table(
    ideal: MonomialIdeal,
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
) -> BettiTable:
    """Complete multigraded Betti table via lattice-supported membership complexes."""
    key = (ideal, field, caps)
    hit = _TABLE_CACHE.get(key)
    if hit is not None:
        return hit
    _guard_proper(ideal, "the Betti table")
    lat = lcm_lattice(ideal, caps)
    top = lat.top.exps
    member = _Membership(ideal, top, caps)
    entries: dict = {}
    multi: dict = {}
    if member.table is not None:
        table = member.table
        strides = member.strides
        for m in lat.elements:
            exps = m.exps
            supp = [i for i, e in enumerate(exps) if e]
            s = len(supp)
            sstrides = [strides[i] for i in supp]
            midx = member.index(exps)
            faces = []
            for smask in range(1 << s):
                w = midx
                rest = smask
                k = 0
                while rest:
                    if rest & 1:
                        w -= sstrides[k]
                    rest >>= 1
                    k += 1
                if table[w]:
                    faces.append(smask)
            _accumulate(m, faces, field, entries, multi)
    else:
        for m in lat.elements:
            exps = m.exps
            supp = [i for i, e in enumerate(exps) if e]
            s = len(supp)
            faces = []
            for smask in range(1 << s):
                w = list(exps)
                for k in range(s):
                    if (smask >> k) & 1:
                        w[supp[k]] -= 1
                if member.contains(tuple(w)):
                    faces.append(smask)
            _accumulate(m, faces, field, entries, multi)
    out = BettiTable(field.token(), ideal.nvars, entries, multi)
    _TABLE_CACHE[key] = out
    return out


def _accumulate(m: Monomial, faces, field: Field, entries: dict, multi: dict) -> None:
    if len(faces) == 1:
        # only the empty face: m is a minimal generator
        ranks = {0: 1}
    else:
        ranks = mask_homology_ranks(faces, field)
    if not ranks:
        return
    d = m.degree
    for i, r in ranks.items():
        multi[(i, m)] = r
        entries[(i, d)] = entries.get((i, d), 0) + r


def taylor_betti_oracle(
    ideal: MonomialIdeal,
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
) -> BettiTable:
    """Independent oracle: homology of the multigraded strands of the Taylor complex."""
    _guard_proper(ideal, "the Betti table")
    gens = ideal.sorted_gens()
    g = len(gens)
    if g > caps.taylor_max_generators:
        raise CapExceeded("taylor_max_generators", caps.taylor_max_generators, g)
    atoms = [m.exps for m in gens]
    nmask = 1 << g
    lcms = [None] * nmask
    lcms[0] = (0,) * ideal.nvars
    for mask in range(1, nmask):
        low = mask & -mask
        rest = mask ^ low
        a = atoms[low.bit_length() - 1]
        lcms[mask] = a if not rest else tuple(map(max, lcms[rest], a))
    strands: dict = {}
    for mask in range(1, nmask):
        strands.setdefault(lcms[mask], {}).setdefault(bin(mask).count("1"), []).append(mask)
    entries: dict = {}
    multi: dict = {}
    for mexps, by_card in strands.items():
        for lst in by_card.values():
            lst.sort()
        # boundary within the strand: drop a generator only if the lcm is unchanged
        bd_rank = {}
        for c, cols in by_card.items():
            rows = by_card.get(c - 1)
            if not rows:
                bd_rank[c] = 0
                continue
            ridx = {f: i for i, f in enumerate(rows)}
            mat = [[0] * len(cols) for _ in rows]
            for col, mask in enumerate(cols):
                sign = 1
                rest = mask
                while rest:
                    bit = rest & -rest
                    rest ^= bit
                    child = mask ^ bit
                    if lcms[child] == mexps:
                        mat[ridx[child]][col] = sign
                    sign = -sign
            bd_rank[c] = field.matrix_rank(mat)
        mdeg = sum(mexps)
        mono = Monomial(mexps)
        for c, lst in by_card.items():
            h = len(lst) - bd_rank.get(c, 0) - bd_rank.get(c + 1, 0)
            if h:
                i = c - 1
                multi[(i, mono)] = h
                entries[(i, mdeg)] = entries.get((i, mdeg), 0) + h
    return BettiTable(field.token(), ideal.nvars, entries, multi)


def interval_betti_oracle(
    ideal: MonomialIdeal,
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
) -> BettiTable:
    """Second oracle: homology of order complexes of open lcm-lattice intervals.

    Materializes every chain of each open interval, so it is only usable on
    small ideals; the face cap applies per interval.
    """
    _guard_proper(ideal, "the Betti table")
    lat = lcm_lattice(ideal, caps)
    entries: dict = {}
    multi: dict = {}
    for m in lat.elements:
        interval = lat.open_interval(m)
        cx = order_complex(
            interval,
            lambda a, b: a != b and a.divides(b),
            caps.order_faces_max,
        )
        ranks = reduced_homology_ranks(cx, field)
        d = m.degree
        for dim, r in ranks.items():
            i = dim + 1
            multi[(i, m)] = r
            entries[(i, d)] = entries.get((i, d), 0) + r
    return BettiTable(field.token(), ideal.nvars, entries, multi)


# -- derived invariants ------------------------------------------------------------


def regularity(
    ideal: MonomialIdeal,
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
) -> int:
    """Largest j - i over the nonzero Betti entries."""
    return betti_table(ideal, field, caps).regularity()


def projective_dimension(
    ideal: MonomialIdeal,
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
) -> int:
    """Largest homological index with a nonzero Betti entry."""
    return betti_table(ideal, field, caps).projective_dimension()


def has_linear_resolution(
    ideal: MonomialIdeal,
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
) -> bool:
    """True when every Betti entry sits on the diagonal j = i + d."""
    _guard_proper(ideal, "linearity of the resolution")
    d = generated_in_single_degree(ideal)
    if d is None:
        raise ValueError("linear resolutions require generation in a single degree")
    return betti_table(ideal, field, caps).is_linear(d)


# -- linear quotients ----------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class QuotientsSearch:
    """Outcome of the linear-quotients search: found / none / unknown."""

    status: str
    order: "tuple | None" = None
    reason: "str | None" = None

    @property
    def found(self) -> bool:
        return self.status == "found"


class _BudgetExceeded(Exception):
    pass


def linear_quotients_order(
    ideal: MonomialIdeal,
    caps: EngineCaps = DEFAULT_CAPS,
) -> QuotientsSearch:
    """Search for a generator order whose successive colons are variable-generated.

    Backtracking over generator prefixes with memoized dead states; "unknown"
    is returned when the generator cap or the time budget is hit, which is a
    different outcome from a proven "none".
    """
    _guard_proper(ideal, "the linear-quotients search")
    gens = ideal.sorted_gens()
    g = len(gens)
    if g > caps.quotients_max_generators:
        return QuotientsSearch(
            "unknown", reason=f"generator cap {caps.quotients_max_generators} exceeded ({g})"
        )
    if g == 1:
        return QuotientsSearch("found", order=tuple(gens))
    exps = [m.exps for m in gens]
    deadline = time.monotonic() + caps.quotients_time_budget
    dead: set = set()

    def colon_ok(used, cand) -> bool:
        ce = exps[cand]
        quots = {tuple(max(a - b, 0) for a, b in zip(exps[i], ce)) for i in used}
        var_quots = [q for q in quots if sum(q) == 1]
        if not var_quots:
            return False
        return all(
            any(all(a <= b for a, b in zip(v, q)) for v in var_quots) for q in quots
        )

    path: list = []

    def dfs(used: frozenset):
        if len(used) == g:
            return True
        if used in dead:
            return False
        if time.monotonic() > deadline:
            raise _BudgetExceeded
        for i in range(g):
            if i in used:
                continue
            if used and not colon_ok(used, i):
                continue
            path.append(i)
            if dfs(used | {i}):
                return True
            path.pop()
        dead.add(used)
        return False

    try:
        if dfs(frozenset()):
            return QuotientsSearch("found", order=tuple(gens[i] for i in path))
        return QuotientsSearch("none")
    except _BudgetExceeded:
        return QuotientsSearch(
            "unknown", reason=f"time budget {caps.quotients_time_budget}s exceeded"
        )
