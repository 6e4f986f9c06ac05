"""Instance verifiers for the regularity and splitting statements, plus conjecture scans.

Every verifier returns a VerificationReport with verdict pass, fail or
skipped.  Failing reports always carry a witness that can be re-checked in
isolation; skipped reports name the unmet hypothesis or the engine cap that
was hit, so a scan never drops an instance silently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import CapExceeded
from .enumeration import enumerate_graphs
from .graph6 import graph_from_graph6, graph_to_graph6, iter_graph6
from .graphs import (
    Graph,
    canonical_graph,
    complement,
    has_induced_cricket,
    independent_sets,
    induced_matching_number,
    induced_subgraph,
    is_chordal,
    is_gap_free,
    is_independent_set,
    is_vertex_cover,
    matching_number,
    minimal_vertex_covers,
    one_vertex_extensions,
    s_suspension,
)
from .linalg import RATIONALS, Field
from .monomials import (
    Monomial,
    MonomialIdeal,
    colon,
    edge_ideal,
    embed,
    generated_in_single_degree,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    is_generated_by_variables,
    minimalize,
    principal_ideal,
    variable_ideal,
)
from .resolutions import (
    DEFAULT_CAPS,
    EngineCaps,
    betti_table,
    has_linear_resolution,
    linear_quotients_order,
    regularity,
)

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class VerificationReport:
    """Structured outcome of one checked statement on one instance."""

    statement: str
    instance: str
    verdict: str
    reason: "str | None" = None
    witness: "dict | None" = None
    data: "dict | None" = None

    def __post_init__(self):
        if self.verdict not in (PASS, FAIL, SKIPPED):
            raise ValueError(f"invalid verdict {self.verdict!r}")
        if self.verdict == FAIL and self.witness is None:
            raise ValueError("fail verdicts must carry a witness")

    def to_json(self) -> dict:
        out = {
            "statement": self.statement,
            "instance": self.instance,
            "verdict": self.verdict,
        }
        if self.reason is not None:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness"] = self.witness
        if self.data is not None:
            out["data"] = self.data
        return out


def _passed(statement, instance, data=None):
    return VerificationReport(statement, instance, PASS, data=data)


def _failed(statement, instance, witness, data=None):
    return VerificationReport(statement, instance, FAIL, witness=witness, data=data)


def _skipped(statement, instance, reason, witness=None):
    return VerificationReport(statement, instance, SKIPPED, reason=reason, witness=witness)


def _g6(g: Graph) -> str:
    return graph_to_graph6(g)


def _ginst(g: Graph, **params) -> str:
    parts = [f"g6={_g6(g)}"]
    for k in sorted(params):
        v = params[k]
        if isinstance(v, (set, frozenset, tuple, list)):
            v = "[" + ",".join(str(x) for x in sorted(v)) + "]"
        parts.append(f"{k}={v}")
    return " ".join(parts)


def _ideal_inst(*ideals) -> str:
    return " ".join("(" + ",".join(i.gen_strings()) + ")" for i in ideals)


# -- Betti splitting ---------------------------------------------------------------


def _splitting_identity(whole, left, right, field, caps, multigraded):
    """Check the splitting identity at every (i, j) and optionally multidegree.

    Returns (mismatch or None, tables dict).
    """
    tw = betti_table(whole, field, caps)
    tl = betti_table(left, field, caps)
    tr = betti_table(right, field, caps)
    tm = betti_table(intersect(left, right), field, caps)
    keys = set(tw.entries)
    keys.update(tl.entries)
    keys.update(tr.entries)
    keys.update((i + 1, j) for i, j in tm.entries)
    for i, j in sorted(keys):
        lhs = tw.beta(i, j)
        rhs = tl.beta(i, j) + tr.beta(i, j) + tm.beta(i - 1, j)
        if lhs != rhs:
            return (
                {"i": i, "j": j, "lhs": lhs, "rhs": rhs},
                (tw, tl, tr, tm),
            )
    if multigraded:
        mkeys = set(tw.multi)
        mkeys.update(tl.multi)
        mkeys.update(tr.multi)
        mkeys.update((i + 1, m) for i, m in tm.multi)
        for i, m in mkeys:
            lhs = tw.beta_multi(i, m)
            rhs = tl.beta_multi(i, m) + tr.beta_multi(i, m) + tm.beta_multi(i - 1, m)
            if lhs != rhs:
                return (
                    {"i": i, "multidegree": str(m), "lhs": lhs, "rhs": rhs},
                    (tw, tl, tr, tm),
                )
    return None, (tw, tl, tr, tm)


def _validate_partition(whole, left, right):
    if left.is_zero or right.is_zero:
        raise ValueError("both parts of a splitting must be nonzero")
    if left.nvars != whole.nvars or right.nvars != whole.nvars:
        raise ValueError("ambient mismatch in splitting parts")
    lg, rg, wg = set(left.gens), set(right.gens), set(whole.gens)
    if lg & rg or (lg | rg) != wg:
        raise ValueError("generators of the parts are not a disjoint partition of the whole")


def check_betti_splitting(
    whole: MonomialIdeal,
    left: MonomialIdeal,
    right: MonomialIdeal,
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
    multigraded: bool = True,
    statement: str = "splitting",
    instance: "str | None" = None,
) -> VerificationReport:
    """Verify the additivity identity of a generator partition, plus its reg/pd consequences."""
    _validate_partition(whole, left, right)
    inst = instance if instance is not None else _ideal_inst(whole, left, right)
    mismatch, (tw, tl, tr, tm) = _splitting_identity(
        whole, left, right, field, caps, multigraded
    )
    if mismatch is not None:
        return _failed(statement, inst, mismatch)
    reg_lhs = tw.regularity()
    reg_rhs = max(tl.regularity(), tr.regularity(), tm.regularity() - 1)
    pd_lhs = tw.projective_dimension()
    pd_rhs = max(tl.projective_dimension(), tr.projective_dimension(), tm.projective_dimension() + 1)
    if reg_lhs != reg_rhs:
        return _failed(statement, inst, {"consequence": "reg", "lhs": reg_lhs, "rhs": reg_rhs})
    if pd_lhs != pd_rhs:
        return _failed(statement, inst, {"consequence": "pd", "lhs": pd_lhs, "rhs": pd_rhs})
    return _passed(statement, inst, data={"reg": reg_lhs, "pd": pd_lhs})


def _linear_or_false(ideal, field, caps) -> bool:
    if generated_in_single_degree(ideal) is None:
        return False
    return has_linear_resolution(ideal, field, caps)


def check_doublelinear(
    whole: MonomialIdeal,
    left: MonomialIdeal,
    right: MonomialIdeal,
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
) -> VerificationReport:
    """When both parts have linear resolutions the partition must be a splitting."""
    _validate_partition(whole, left, right)
    inst = _ideal_inst(whole, left, right)
    if not _linear_or_false(left, field, caps) or not _linear_or_false(right, field, caps):
        return _skipped("doublelinear", inst, "a part does not have a linear resolution")
    rep = check_betti_splitting(
        whole, left, right, field, caps, statement="doublelinear", instance=inst
    )
    return rep


# -- colon regularity bounds ----------------------------------------------------------


def check_colon_reg_bound(
    ideal: MonomialIdeal,
    m: Monomial,
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
) -> VerificationReport:
    """reg(I) <= max(reg(I:m)+deg m, reg(I,m)); equality when m is a variable of I."""
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("the bound needs a nonzero proper ideal")
    inst = _ideal_inst(ideal) + f" m={m}"
    q = colon(ideal, m)
    s = ideal_sum(ideal, principal_ideal(m))
    if q.is_unit and s.is_unit:
        return _skipped("colon", inst, "degenerate: both the colon and the sum are the unit ideal")
    # colon equal to the whole ring contributes reg(R) = 0 to the bound
    term_colon = (0 if q.is_unit else regularity(q, field, caps)) + m.degree
    term_sum = None if s.is_unit else regularity(s, field, caps)
    terms = [term_colon] + ([term_sum] if term_sum is not None else [])
    r = regularity(ideal, field, caps)
    data = {"reg": r, "colon_term": term_colon, "sum_term": term_sum}
    if r > max(terms):
        return _failed("colon", inst, {"reg": r, "bound": max(terms)}, data=data)
    appears = m.is_variable and any(
        g.exps[m.support()[0]] for g in ideal.gens
    )
    if appears and r not in terms:
        return _failed(
            "colon", inst, {"reg": r, "terms": terms, "expected": "equality with one term"},
            data=data,
        )
    return _passed("colon", inst, data=data)


def check_abc_bound(
    sub: MonomialIdeal,
    ambient: MonomialIdeal,
    ordering=None,
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
) -> VerificationReport:
    """reg(J) <= max(A, B, C) for J inside I, both generated in single degrees n1 < n2."""
    inst = _ideal_inst(sub, ambient)
    if sub.is_zero or sub.is_unit or ambient.is_zero or ambient.is_unit:
        return _skipped("abc", inst, "needs nonzero proper ideals")
    n1 = generated_in_single_degree(ambient)
    n2 = generated_in_single_degree(sub)
    if n1 is None or n2 is None:
        return _skipped("abc", inst, "ideals are not generated in single degrees")
    if not n1 < n2:
        return _skipped("abc", inst, f"degree hypothesis fails: n1={n1}, n2={n2}")
    if not all(ambient.contains(g) for g in sub.gens):
        return _skipped("abc", inst, "sub-ideal is not contained in the ambient ideal")
    order = list(ordering) if ordering is not None else ambient.sorted_gens()
    if sorted(order, key=lambda m: m.exps) != sorted(ambient.gens, key=lambda m: m.exps):
        raise ValueError("ordering is not a permutation of the ambient generators")
    a_term = regularity(colon(sub, order[0]), field, caps) + n1
    b_terms = []
    acc = sub
    for l in range(1, len(order)):
        acc = ideal_sum(acc, principal_ideal(order[l - 1]))
        b_terms.append(regularity(colon(acc, order[l]), field, caps) + n1)
    c_term = regularity(ambient, field, caps)
    bound = max([a_term, c_term] + b_terms)
    rj = regularity(sub, field, caps)
    data = {"A": a_term, "B": b_terms, "C": c_term, "reg": rj}
    if rj > bound:
        return _failed("abc", inst, {"reg": rj, "bound": bound}, data=data)
    return _passed("abc", inst, data=data)


# -- ordered colon structure of powers ---------------------------------------------------


def check_blemma_colon_structure(
    g: Graph,
    n: int = 1,
    ordering=None,
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
) -> VerificationReport:
    """Pairwise colon structure of the ordered generators of the n-th power.

    For generators L_1 > ... > L_m of I^n: whenever (L_j : L_{k+1}) is not
    inside (I^(n+1) : L_{k+1}), some i <= k must give a variable-generated
    (L_i : L_{k+1}) containing (L_j : L_{k+1}).  Recorded, not asserted, when
    the graph is not gap-free.
    """
    power = ideal_power(edge_ideal(g), n)
    gens = list(ordering) if ordering is not None else power.sorted_gens()
    if sorted(gens, key=lambda m: m.exps) != sorted(power.gens, key=lambda m: m.exps):
        raise ValueError("ordering is not a permutation of the power's generators")
    inst = _ginst(g, n=n)
    next_power = ideal_power(edge_ideal(g), n + 1)
    violations = []
    for kk in range(1, len(gens)):
        last = gens[kk]
        quots = [gens[i].colon_quotient(last) for i in range(kk)]
        for j in range(kk):
            qj = quots[j]
            if next_power.contains(qj * last):
                continue
            if not any(q.degree == 1 and q.divides(qj) for q in quots):
                violations.append({"j": j + 1, "k": kk, "quotient": str(qj)})
    if not violations:
        return _passed("blemma", inst, data={"generators": len(gens)})
    witness = violations[0]
    if is_gap_free(g):
        return _failed("blemma", inst, witness, data={"violations": len(violations)})
    return _skipped(
        "blemma",
        inst,
        "recorded only: colon-structure violations on a graph that is not gap-free",
        witness=witness,
    )


# -- cover colon statement ---------------------------------------------------------------


def check_keylemma(
    g: Graph,
    cover,
    k: int,
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
) -> VerificationReport:
    """(U * I^k : L) is variable-generated for every minimal generator L of I^k."""
    inst = _ginst(g, U=cover, k=k)
    if not is_vertex_cover(g, cover):
        return _skipped("keylemma", inst, "the given set is not a vertex cover")
    ideal = edge_ideal(g)
    u_ideal = variable_ideal(g.n, cover)
    power = ideal_power(ideal, k)
    product = ideal_product(u_ideal, power)
    for gen in power.sorted_gens():
        c = colon(product, gen)
        if not is_generated_by_variables(c):
            return _failed(
                "keylemma",
                inst,
                {"L": str(gen), "colon": [str(x) for x in c.sorted_gens()]},
            )
    return _passed("keylemma", inst, data={"generators_checked": len(power.gens)})


# -- suspension statements ------------------------------------------------------------


def check_s_suspension_invariance(
    g: Graph,
    s,
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
) -> VerificationReport:
    """The one-vertex suspension preserves the induced matching number and regularity."""
    if not g.edges:
        raise ValueError("the invariance check needs a graph with at least one edge")
    gs = s_suspension(g, s)
    inst = _ginst(g, S=s)
    im_g = induced_matching_number(g)
    im_gs = induced_matching_number(gs)
    reg_g = regularity(edge_ideal(g), field, caps)
    reg_gs = regularity(edge_ideal(gs), field, caps)
    data = {"im": [im_g, im_gs], "reg": [reg_g, reg_gs]}
    if im_g != im_gs or reg_g != reg_gs:
        return _failed("suspension", inst, data, data=data)
    return _passed("suspension", inst, data=data)


def _suspension_parts(g: Graph, s, k: int):
    """The power of the suspended ideal and its two construction parts."""
    n = g.n
    gs = s_suspension(g, s)
    igs = edge_ideal(gs)
    ig = embed(edge_ideal(g), n + 1)
    z = Monomial.variable(n + 1, n)
    star = minimalize(
        n + 1, (z * Monomial.variable(n + 1, v) for v in range(n) if v not in set(s))
    )
    whole = ideal_power(igs, k)
    left = ideal_power(ig, k)
    right = ideal_product(star, ideal_power(igs, k - 1))
    return whole, left, right, ig, igs, star, z


def check_main1(
    g: Graph,
    s,
    k: int = 2,
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
) -> VerificationReport:
    """The k-th power of a suspended edge ideal splits along the new vertex."""
    inst = _ginst(g, S=s, k=k)
    if not g.edges:
        raise ValueError("needs a graph with at least one edge")
    if not is_gap_free(g):
        return _skipped("main1", inst, "hypothesis unmet: graph is not gap-free")
    ideal = edge_ideal(g)
    for j in range(2, k + 1):
        if not has_linear_resolution(ideal_power(ideal, j), field, caps):
            return _skipped("main1", inst, f"hypothesis unmet: I^{j} has no linear resolution")
    whole, left, right, *_ = _suspension_parts(g, s, k)
    if set(left.gens) & set(right.gens) or set(left.gens) | set(right.gens) != set(whole.gens):
        raise RuntimeError("internal error: construction is not a generator partition")
    return check_betti_splitting(
        whole, left, right, field, caps, statement="main1", instance=inst
    )


def check_main2(
    g: Graph,
    s,
    k_max: int = 3,
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
) -> VerificationReport:
    """Powers >= 2 of a suspended edge ideal stay linear; includes the intersection identity."""
    inst = _ginst(g, S=s, k_max=k_max)
    if not g.edges:
        raise ValueError("needs a graph with at least one edge")
    if not is_gap_free(g):
        return _skipped("main2", inst, "hypothesis unmet: graph is not gap-free")
    ideal = edge_ideal(g)
    for j in range(2, k_max + 1):
        if not has_linear_resolution(ideal_power(ideal, j), field, caps):
            return _skipped("main2", inst, f"hypothesis unmet: I^{j} has no linear resolution")
    regs = {}
    for k in range(2, k_max + 1):
        whole, left, right, ig, igs, star, z = _suspension_parts(g, s, k)
        if not has_linear_resolution(whole, field, caps):
            tab = betti_table(whole, field, caps)
            return _failed(
                "main2",
                inst,
                {"k": k, "reg": tab.regularity(), "expected": 2 * k},
            )
        regs[k] = 2 * k
        meet = intersect(left, right)
        z_part = ideal_product(principal_ideal(z), left)
        if meet != z_part:
            return _failed(
                "main2",
                inst,
                {
                    "k": k,
                    "identity": "intersection",
                    "lhs": meet.gen_strings(),
                    "rhs": z_part.gen_strings(),
                },
            )
    return _passed("main2", inst, data={"power_reg": regs})


def check_banerjee(
    g: Graph,
    k_max: int = 3,
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
) -> VerificationReport:
    """Gap-free and cricket-free graphs: reg(I) <= 3 and reg(I^k) = 2k for k >= 2."""
    inst = _ginst(g, k_max=k_max)
    if not g.edges:
        raise ValueError("needs a graph with at least one edge")
    if not is_gap_free(g):
        return _skipped("banerjee", inst, "hypothesis unmet: graph is not gap-free")
    if has_induced_cricket(g):
        return _skipped("banerjee", inst, "hypothesis unmet: graph has an induced cricket")
    ideal = edge_ideal(g)
    r = regularity(ideal, field, caps)
    if r > 3:
        return _failed("banerjee", inst, {"reg": r, "bound": 3})
    power_regs = {}
    for k in range(2, k_max + 1):
        rk = regularity(ideal_power(ideal, k), field, caps)
        power_regs[k] = rk
        if rk != 2 * k:
            return _failed("banerjee", inst, {"k": k, "reg": rk, "expected": 2 * k})
    return _passed("banerjee", inst, data={"reg": r, "power_regs": power_regs})


# -- per-graph bound statements ---------------------------------------------------------


def check_froberg(
    g: Graph, field: Field = RATIONALS, caps: EngineCaps = DEFAULT_CAPS
) -> VerificationReport:
    """reg(I(G)) = 2 exactly when the complement of G is chordal."""
    inst = _ginst(g)
    r = regularity(edge_ideal(g), field, caps)
    cc = is_chordal(complement(g))
    data = {"reg": r, "complement_chordal": cc}
    if (r == 2) != cc:
        return _failed("froberg", inst, data, data=data)
    return _passed("froberg", inst, data=data)


def check_reg_bounds(
    g: Graph, field: Field = RATIONALS, caps: EngineCaps = DEFAULT_CAPS
) -> VerificationReport:
    """im(G) + 1 <= reg(I(G)) <= m(G) + 1."""
    inst = _ginst(g)
    im = induced_matching_number(g)
    mn = matching_number(g)
    r = regularity(edge_ideal(g), field, caps)
    data = {"im": im, "matching": mn, "reg": r}
    if not (im + 1 <= r <= mn + 1):
        return _failed("bounds", inst, data, data=data)
    return _passed("bounds", inst, data=data)


def check_bht_lower_bound(
    g: Graph,
    k_values=(1, 2, 3),
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
) -> VerificationReport:
    """reg(I(G)^k) >= 2k + im(G) - 1 for each requested k."""
    inst = _ginst(g, k=list(k_values))
    im = induced_matching_number(g)
    ideal = edge_ideal(g)
    regs = {}
    for k in k_values:
        rk = regularity(ideal_power(ideal, k), field, caps)
        regs[k] = rk
        if rk < 2 * k + im - 1:
            return _failed(
                "bht", inst, {"k": k, "reg": rk, "lower_bound": 2 * k + im - 1}
            )
    return _passed("bht", inst, data={"im": im, "power_regs": regs})


def check_hhz(
    g: Graph,
    k_max: int = 3,
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
) -> VerificationReport:
    """Co-chordal graphs: every power is linear and a linear quotient order exists."""
    inst = _ginst(g, k_max=k_max)
    if not is_chordal(complement(g)):
        return _skipped("hhz", inst, "hypothesis unmet: complement is not chordal")
    ideal = edge_ideal(g)
    regs = {}
    for k in range(1, k_max + 1):
        rk = regularity(ideal_power(ideal, k), field, caps)
        regs[k] = rk
        if rk != 2 * k:
            return _failed("hhz", inst, {"k": k, "reg": rk, "expected": 2 * k})
    lq = linear_quotients_order(ideal, caps)
    if lq.status == "unknown":
        return _skipped("hhz", inst, f"linear-quotients search inconclusive: {lq.reason}")
    if lq.status != "found":
        return _failed("hhz", inst, {"linear_quotients": "none found"})
    return _passed(
        "hhz", inst, data={"power_regs": regs, "quotient_order": [str(m) for m in lq.order]}
    )


# -- invariant one-vertex extensions ------------------------------------------------------


def is_im_reg_invariant_extension(
    g: Graph,
    ext: Graph,
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
) -> bool:
    """True when ext adds one vertex to g preserving both im and regularity."""
    if ext.n != g.n + 1:
        raise ValueError("extension must have exactly one more vertex")
    if induced_subgraph(ext, range(g.n)) != g:
        raise ValueError("extension does not restrict to the original graph")
    if not g.edges:
        raise ValueError("needs a graph with at least one edge")
    if induced_matching_number(ext) != induced_matching_number(g):
        return False
    return regularity(edge_ideal(ext), field, caps) == regularity(edge_ideal(g), field, caps)


def enumerate_im_reg_extensions(
    g: Graph,
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
) -> list:
    """All one-vertex extensions of g preserving im and regularity."""
    if g.n > 10:
        raise ValueError("extension enumeration is desk scale only (n <= 10)")
    return [
        ext
        for ext in one_vertex_extensions(g)
        if is_im_reg_invariant_extension(g, ext, field, caps)
    ]


def probe_vertex_deletions(
    g: Graph, field: Field = RATIONALS, caps: EngineCaps = DEFAULT_CAPS
) -> VerificationReport:
    """Exploratory probe: regularity of every one-vertex-deleted induced subgraph."""
    inst = _ginst(g)
    regs = {}
    for v in range(g.n):
        h = induced_subgraph(g, [u for u in range(g.n) if u != v])
        regs[str(v)] = regularity(edge_ideal(h), field, caps) if h.edges else None
    return _passed("deletion-probe", inst, data={"deleted_vertex_reg": regs})


# -- conjecture scans -------------------------------------------------------------------


@dataclass(frozen=True)
class ScanConfig:
    """Family source plus parameters for a conjecture scan."""

    conjecture: str
    k_max: int = 2
    field: Field = RATIONALS
    caps: EngineCaps = DEFAULT_CAPS
    max_n: "int | None" = None
    graph6_path: "str | None" = None
    reg_filter: "int | None" = None
    c_g: "int | None" = None

    def __post_init__(self):
        if self.conjecture not in ("np", "generalnp", "newconj2"):
            raise ValueError(f"unknown conjecture {self.conjecture!r}")
        if self.conjecture == "np" and self.k_max < 2:
            raise ValueError("np scans need k_max >= 2")
        if self.conjecture == "newconj2" and (self.c_g or 2) > self.k_max:
            raise ValueError("newconj2 scans need k_max >= c_G")


def _resolve_family(config: ScanConfig, graphs):
    if graphs is not None:
        return list(graphs)
    if config.graph6_path is not None:
        with open(config.graph6_path, "r", encoding="ascii") as fh:
            return iter_graph6(fh)
    if config.max_n is not None:
        return enumerate_graphs(config.max_n, require_edge=True)
    raise ValueError("scan needs a family source: graphs, graph6_path or max_n")


def _power_linearity_reports(statement, instance, ideal, ks, field, caps):
    for k in ks:
        power = ideal_power(ideal, k)
        rk = regularity(power, field, caps)
        if rk != 2 * k:
            tab = betti_table(power, field, caps)
            return _failed(
                statement,
                instance,
                {"k": k, "reg": rk, "expected": 2 * k, "table": tab.to_json()},
            )
    return None


def scan_conjecture(config: ScanConfig, graphs=None) -> list:
    """Run one conjecture scan over a graph family; reports sorted deterministically."""
    family = _resolve_family(config, graphs)
    reports = []
    for g in family:
        if not g.edges:
            continue
        if config.conjecture in ("np", "generalnp"):
            reports.extend(_scan_power_linearity(config, g))
        else:
            reports.extend(_scan_extensions(config, g))
    reports.sort(key=lambda r: (r.statement, r.instance))
    return reports


def _scan_power_linearity(config: ScanConfig, g: Graph) -> list:
    statement = config.conjecture
    cg = canonical_graph(g)
    inst = _ginst(cg)
    try:
        if not is_gap_free(g):
            return []
        ideal = edge_ideal(cg)
        r = regularity(ideal, config.field, config.caps)
        if statement == "np":
            reg_filter = 3 if config.reg_filter is None else config.reg_filter
            if r != reg_filter:
                return []
            ks = range(2, config.k_max + 1)
        else:
            if config.reg_filter is not None and r != config.reg_filter:
                return []
            ks = range(max(1, r - 1), config.k_max + 1)
            if not ks:
                return [_skipped(statement, inst, f"empty k range for reg={r}")]
        bad = _power_linearity_reports(statement, inst, ideal, ks, config.field, config.caps)
        if bad is not None:
            return [bad]
        return [_passed(statement, inst, data={"reg": r, "k_checked": list(ks)})]
    except CapExceeded as e:
        return [_skipped(statement, inst, f"engine cap hit: {e}")]


def _scan_extensions(config: ScanConfig, g: Graph) -> list:
    statement = "newconj2"
    base_inst = _ginst(g)
    cg_threshold = 2 if config.c_g is None else config.c_g
    ks = range(cg_threshold, config.k_max + 1)
    try:
        if not is_gap_free(g):
            return [_skipped(statement, base_inst, "hypothesis unmet: base graph is not gap-free")]
        ideal = edge_ideal(g)
        bad = _power_linearity_reports(statement, base_inst, ideal, ks, config.field, config.caps)
        if bad is not None:
            return [
                _skipped(
                    statement,
                    base_inst,
                    f"hypothesis unmet: base reg(I^{bad.witness['k']}) = "
                    f"{bad.witness['reg']} != {bad.witness['expected']}",
                )
            ]
        out = []
        for ext in enumerate_im_reg_extensions(g, config.field, config.caps):
            nbhd = sorted(ext.neighbors(g.n))
            inst = _ginst(g, z_neighborhood=nbhd, c_G=cg_threshold)
            bad = _power_linearity_reports(
                statement, inst, edge_ideal(ext), ks, config.field, config.caps
            )
            out.append(
                bad
                if bad is not None
                else _passed(statement, inst, data={"k_checked": list(ks)})
            )
        return out
    except CapExceeded as e:
        return [_skipped(statement, base_inst, f"engine cap hit: {e}")]


def summarize_reports(reports) -> list:
    """Per-statement pass/fail/skip counts as sorted summary rows."""
    rows = {}
    for r in reports:
        row = rows.setdefault(
            r.statement, {"statement": r.statement, "instances": 0, "pass": 0, "fail": 0, "skipped": 0}
        )
        row["instances"] += 1
        row[r.verdict] += 1
    return [rows[k] for k in sorted(rows)]


# -- statement registry for the CLI ------------------------------------------------------


STATEMENTS = (
    "froberg",
    "bounds",
    "bht",
    "hhz",
    "banerjee",
    "suspension",
    "keylemma",
    "blemma",
    "main1",
    "main2",
    "deletion-probe",
)


def _proper_independent_sets(g: Graph):
    return [s for s in independent_sets(g) if len(s) < g.n]


def run_statement(
    statement: str,
    g: Graph,
    params: "dict | None" = None,
    field: Field = RATIONALS,
    caps: EngineCaps = DEFAULT_CAPS,
) -> list:
    """Run one named statement on one graph; returns one report per sub-instance."""
    p = params or {}
    try:
        if statement == "froberg":
            return [check_froberg(g, field, caps)]
        if statement == "bounds":
            return [check_reg_bounds(g, field, caps)]
        if statement == "bht":
            k_max = p.get("k_max") or 3
            return [check_bht_lower_bound(g, range(1, k_max + 1), field, caps)]
        if statement == "hhz":
            return [check_hhz(g, p.get("k_max") or 3, field, caps)]
        if statement == "banerjee":
            return [check_banerjee(g, p.get("k_max") or 3, field, caps)]
        if statement == "suspension":
            sets = p.get("sets")
            if sets is None:
                sets = _proper_independent_sets(g)
            return [check_s_suspension_invariance(g, s, field, caps) for s in sets]
        if statement == "keylemma":
            covers = p.get("covers")
            if covers is None:
                covers = minimal_vertex_covers(g)
            ks = [p["k"]] if p.get("k") is not None else [0, 1, 2]
            return [check_keylemma(g, c, k, field, caps) for c in covers for k in ks]
        if statement == "blemma":
            return [check_blemma_colon_structure(g, p.get("k") or 1, None, field, caps)]
        if statement == "main1":
            sets = p.get("sets")
            if sets is None:
                sets = _proper_independent_sets(g)
            k = p.get("k") or 2
            return [check_main1(g, s, k, field, caps) for s in sets]
        if statement == "main2":
            sets = p.get("sets")
            if sets is None:
                sets = _proper_independent_sets(g)
            k_max = p.get("k_max") or 3
            return [check_main2(g, s, k_max, field, caps) for s in sets]
        if statement == "deletion-probe":
            return [probe_vertex_deletions(g, field, caps)]
    except CapExceeded as e:
        return [_skipped(statement, _ginst(g), f"engine cap hit: {e}")]
    raise ValueError(f"unknown statement {statement!r}")
