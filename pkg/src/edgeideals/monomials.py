"""Monomials and monomial ideals over a fixed ambient variable set x0..x_{d-1}.

Ideals are stored by their minimal monomial generating set.  The zero ideal
has no generators; the unit ideal is the singleton {1}.  All values are
immutable and all operations are pure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graphs import Graph


@dataclass(frozen=True, slots=True)
class Monomial:
    exps: tuple

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(int(e) for e in self.exps))
        if any(e < 0 for e in self.exps):
            raise ValueError("exponents must be nonnegative")

    @classmethod
    def unit(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Monomial":
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for {nvars} variables")
        return cls(tuple(1 if k == i else 0 for k in range(nvars)))

    @property
    def nvars(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def is_unit(self) -> bool:
        return not any(self.exps)

    @property
    def is_variable(self) -> bool:
        return self.degree == 1

    def support(self) -> tuple:
        return tuple(i for i, e in enumerate(self.exps) if e)

    def divides(self, other: "Monomial") -> bool:
        _check_ambient(self, other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        _check_ambient(self, other)
        return Monomial(tuple(map(max, self.exps, other.exps)))

    def gcd(self, other: "Monomial") -> "Monomial":
        _check_ambient(self, other)
        return Monomial(tuple(map(min, self.exps, other.exps)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_ambient(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def colon_quotient(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other); the generator of (self : other)."""
        _check_ambient(self, other)
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exps, other.exps)))

    def __str__(self):
        parts = []
        for i, e in enumerate(self.exps):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) if parts else "1"


def _check_ambient(a: Monomial, b: Monomial) -> None:
    if len(a.exps) != len(b.exps):
        raise ValueError(f"ambient mismatch: {len(a.exps)} vs {len(b.exps)} variables")


_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, nvars: int) -> Monomial:
    """Parse the textual syntax `x0^2*x1`; "1" denotes the unit monomial."""
    s = text.replace(" ", "")
    if s == "1":
        return Monomial.unit(nvars)
    exps = [0] * nvars
    for factor in s.split("*"):
        m = _FACTOR_RE.match(factor)
        if not m:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        i = int(m.group(1))
        e = int(m.group(2)) if m.group(2) else 1
        if i >= nvars:
            raise ValueError(f"variable x{i} out of range for {nvars} variables")
        exps[i] += e
    return Monomial(tuple(exps))


def grlex_key(m: Monomial):
    """Sort key for the graded lexicographic order (descending when reversed)."""
    return (m.degree, m.exps)


@dataclass(frozen=True, slots=True)
class MonomialIdeal:
    nvars: int
    gens: frozenset

    def __post_init__(self):
        for g in self.gens:
            if g.nvars != self.nvars:
                raise ValueError("generator ambient does not match ideal ambient")

    @classmethod
    def zero(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, frozenset())

    @classmethod
    def unit(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, frozenset([Monomial.unit(nvars)]))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(g.is_unit for g in self.gens)

    def sorted_gens(self) -> list:
        """Minimal generators in descending graded lexicographic order."""
        return sorted(self.gens, key=grlex_key, reverse=True)

    def contains(self, m: Monomial) -> bool:
        """Monomial membership: some minimal generator divides m."""
        return any(g.divides(m) for g in self.gens)

    def degrees(self) -> set:
        return {g.degree for g in self.gens}

    def gen_strings(self) -> list:
        return [str(g) for g in self.sorted_gens()]

    def __repr__(self):
        if self.is_zero:
            return f"MonomialIdeal({self.nvars}, 0)"
        return f"MonomialIdeal({self.nvars}, ({', '.join(self.gen_strings())}))"


def minimalize(nvars: int, monomials) -> MonomialIdeal:
    """Ideal minimally generated by the given monomials (drop divisible ones)."""
    pool = set()
    for m in monomials:
        if not isinstance(m, Monomial):
            m = Monomial(tuple(m))
        if m.nvars != nvars:
            raise ValueError("generator ambient does not match requested ambient")
        if m.is_unit:
            return MonomialIdeal.unit(nvars)
        pool.add(m)
    kept = []
    for m in sorted(pool, key=grlex_key):
        d = m.degree
        if any(kd < d and k.divides(m) for kd, k in kept):
            continue
        kept.append((d, m))
    return MonomialIdeal(nvars, frozenset(m for _, m in kept))


def parse_ideal(strings, nvars: int) -> MonomialIdeal:
    return minimalize(nvars, (parse_monomial(s, nvars) for s in strings))


def edge_ideal(g: Graph) -> MonomialIdeal:
    """Ideal generated by x_i*x_j over the edges of g; errors on edgeless graphs."""
    if not g.edges:
        raise ValueError("edge ideal of an edgeless graph is the zero ideal")
    gens = []
    for u, v in g.edges:
        exps = [0] * g.n
        exps[u] = 1
        exps[v] = 1
        gens.append(Monomial(tuple(exps)))
    return MonomialIdeal(g.n, frozenset(gens))


def variable_ideal(nvars: int, indices) -> MonomialIdeal:
    return minimalize(nvars, (Monomial.variable(nvars, i) for i in indices))


def principal_ideal(m: Monomial) -> MonomialIdeal:
    return minimalize(m.nvars, [m])


def _same_ambient(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.nvars != b.nvars:
        raise ValueError(f"ambient mismatch: {a.nvars} vs {b.nvars} variables")


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(a, b)
    return minimalize(a.nvars, set(a.gens) | set(b.gens))


def ideal_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(a, b)
    if a.is_zero or b.is_zero:
        return MonomialIdeal.zero(a.nvars)
    prods = {
        tuple(x + y for x, y in zip(u.exps, v.exps))
        for u in a.gens
        for v in b.gens
    }
    return minimalize(a.nvars, (Monomial(p) for p in prods))


def ideal_power(a: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("negative powers are not defined")
    if k == 0:
        return MonomialIdeal.unit(a.nvars)
    out = a
    for _ in range(k - 1):
        out = ideal_product(out, a)
    return out


def colon(a: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """Colon ideal (a : m); equals the unit ideal exactly when m lies in a."""
    if m.nvars != a.nvars:
        raise ValueError("ambient mismatch between ideal and monomial")
    return minimalize(a.nvars, (g.colon_quotient(m) for g in a.gens))


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(a, b)
    if a.is_zero or b.is_zero:
        return MonomialIdeal.zero(a.nvars)
    lcms = {
        tuple(map(max, u.exps, v.exps))
        for u in a.gens
        for v in b.gens
    }
    return minimalize(a.nvars, (Monomial(t) for t in lcms))


def is_generated_by_variables(a: MonomialIdeal) -> bool:
    """True when every minimal generator has total degree 1 (zero/unit: False)."""
    if a.is_zero or a.is_unit:
        return False
    return all(g.degree == 1 for g in a.gens)


def generated_in_single_degree(a: MonomialIdeal):
    """Common degree of the minimal generators, or None when degrees are mixed."""
    if a.is_zero:
        raise ValueError("the zero ideal has no generation degree")
    ds = a.degrees()
    return ds.pop() if len(ds) == 1 else None


def embed(a: MonomialIdeal, nvars: int) -> MonomialIdeal:
    """Re-read the ideal in a larger ambient ring by appending zero exponents."""
    if nvars < a.nvars:
        raise ValueError("cannot embed into a smaller ambient ring")
    pad = (0,) * (nvars - a.nvars)
    return MonomialIdeal(
        nvars, frozenset(Monomial(g.exps + pad) for g in a.gens)
    )
