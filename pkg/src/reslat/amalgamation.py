"""V-formations over finite residuated chains: embedding search, bounded
amalgam and one-amalgam search, and obstruction certificates.

An obstruction witness is a finite tuple of table facts in B and C alone
which rules out a chain amalgam of *any* size: the distinguished images
h(b), k(c) can be neither equal nor ordered either way without violating
order preservation and residuation in the would-be chain.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .algebra import (
    CHAIN,
    EMBEDDING,
    HOM,
    BudgetExceededError,
    CheckOutcome,
    FiniteRL,
    FormatError,
    Morphism,
    PreconditionError,
    UnsupportedError,
    ValidationReport,
    compose,
    congruence_filters,
    filter_to_congruence,
    join_table,
    make_algebra,
    meet_table,
    quotient,
    validate,
    validate_morphism,
    with_zero,
)
from .completion import Budget, CompletionProblem, SearchStats, iter_completions
from .constructions import (
    generalized_rotation,
    nucleus_by_name,
    vs_a,
    vs_b,
    vs_c,
)


@dataclass(frozen=True)
class VFormation:
    A: FiniteRL
    B: FiniteRL
    C: FiniteRL
    i: Morphism  # A -> B
    j: Morphism  # A -> C
    name: str = ""


@dataclass(frozen=True)
class SearchFlags:
    """Class of chains admitted for the amalgam D (chain-ness is implicit)."""

    commutative: bool = False
    integral: bool = False
    pointed: bool = False


LEFT = "LEFT"
RIGHT = "RIGHT"


@dataclass(frozen=True)
class ObstructionWitness:
    a: int  # element of A
    b: int  # element of B outside i(A)
    c: int  # element of C outside j(A)
    u1: int  # element of A bounding c*c
    u2: int  # element of A bounding b*b
    side: str = LEFT

    def as_tuple(self):
        return (self.a, self.b, self.c, self.u1, self.u2, self.side)


@dataclass(frozen=True)
class ObstructionCheck:
    accepted: bool
    clause: str | None
    lines: tuple[str, ...]

    def __str__(self):
        return "\n".join(self.lines)


@dataclass(frozen=True)
class SizeStats:
    size: int
    placements: int
    nodes: int


@dataclass(frozen=True)
class SearchReport:
    verdict: str  # FOUND | UNSAT | BUDGET
    bound: int
    d: FiniteRL | None = None
    h: Morphism | None = None
    k: Morphism | None = None
    sizes: tuple[SizeStats, ...] = ()
    wall_time: float = 0.0
    detail: str = ""

    @property
    def found(self):
        return self.verdict == "FOUND"


def make_vformation(A, B, C, i_map, j_map, name="") -> VFormation:
    return VFormation(
        A,
        B,
        C,
        Morphism(A, B, tuple(i_map), EMBEDDING),
        Morphism(A, C, tuple(j_map), EMBEDDING),
        name=name,
    )


def check_vformation(vf: VFormation) -> ValidationReport:
    """Validate the three algebras as RLs and both maps as embeddings."""
    checks = []
    for alg, tag in ((vf.A, "A"), (vf.B, "B"), (vf.C, "C")):
        rep = validate(alg, ("lattice", "monoid", "residuation"))
        bad = rep.first_failure()
        checks.append(
            CheckOutcome(tag, rep.ok, None if rep.ok else bad.witness, "" if rep.ok else f"{bad.flag}: {bad.detail}")
        )
    for m, tag in ((vf.i, "i"), (vf.j, "j")):
        rep = validate_morphism(m)
        bad = rep.first_failure()
        checks.append(
            CheckOutcome(tag, rep.ok, None if rep.ok else bad.witness, "" if rep.ok else f"{bad.flag} not preserved")
        )
    return ValidationReport(vf.name or "v-formation", tuple(checks))


# ---------------------------------------------------------------------------
# embedding / homomorphism search


def _find_maps(x: FiniteRL, y: FiniteRL, pin, injective: bool):
    """All operation-preserving maps x -> y extending ``pin``, in
    lexicographic order of the map list."""
    if pin and injective:
        vals = list(pin.values())
        if len(set(vals)) != len(vals):
            raise FormatError("pin must map distinct elements to distinct elements")
    pin = dict(pin or {})
    n = x.size
    ops_x = (x.product, meet_table(x), join_table(x), x.ldiv, x.rdiv)
    ops_y = (y.product, meet_table(y), join_table(y), y.ldiv, y.rdiv)
    both_zero = x.zero is not None and y.zero is not None
    image = [-1] * n
    out = []

    def consistent(e, v):
        # sound pruning against the assigned prefix; leaves are re-verified
        if e == x.unit and v != y.unit:
            return False
        if both_zero and e == x.zero and v != y.zero:
            return False
        if injective and v in image[:e]:
            return False

        def img(t):
            return v if t == e else image[t]

        for e2 in range(e + 1):
            w = img(e2)
            for tx, ty in zip(ops_x, ops_y):
                r = img(tx[e][e2])
                if r != -1 and ty[v][w] != r:
                    return False
                r = img(tx[e2][e])
                if r != -1 and ty[w][v] != r:
                    return False
        return True

    kind = EMBEDDING if injective else HOM

    def extend(e):
        if e == n:
            m = Morphism(x, y, tuple(image), kind)
            if validate_morphism(m).ok:
                out.append(m)
            return
        candidates = [pin[e]] if e in pin else range(y.size)
        for v in candidates:
            if consistent(e, v):
                image[e] = v
                extend(e + 1)
                image[e] = -1

    extend(0)
    return out


def find_embeddings(x: FiniteRL, y: FiniteRL, pin=None) -> list[Morphism]:
    """All injective operation-preserving maps from x into y."""
    return _find_maps(x, y, pin, injective=True)


def find_homomorphisms(x: FiniteRL, y: FiniteRL, pin=None) -> list[Morphism]:
    return _find_maps(x, y, pin, injective=False)


# ---------------------------------------------------------------------------
# obstruction certificates


def _witness_clauses(vf: VFormation, w: ObstructionWitness):
    """Evaluate W1-W3; returns (clause_name_or_None, facts dict)."""
    A, B, C, i, j = vf.A, vf.B, vf.C, vf.i.map, vf.j.map
    la, lb, lc = A.labels, B.labels, C.labels
    for e, alg, what in ((w.a, A, "a"), (w.u1, A, "u1"), (w.u2, A, "u2")):
        if not 0 <= e < alg.size:
            raise FormatError(f"witness field {what} out of range")
    if not 0 <= w.b < B.size or not 0 <= w.c < C.size:
        raise FormatError("witness field b or c out of range")
    if w.side not in (LEFT, RIGHT):
        raise FormatError("witness side must be LEFT or RIGHT")
    facts = {}
    if w.b in set(i):
        return "W1-domain", {"detail": f"b = {lb[w.b]} lies in the image of A"}
    if w.c in set(j):
        return "W1-domain", {"detail": f"c = {lc[w.c]} lies in the image of A"}
    ia, ja = i[w.a], j[w.a]
    if w.side == LEFT:
        pb, pc = B.product[ia][w.b], C.product[ja][w.c]
        facts["w1"] = (
            f"{la[w.a]}*{lb[w.b]} = {lb[pb]} in B and "
            f"{la[w.a]}*{lc[w.c]} = {lc[pc]} in C"
        )
    else:
        pb, pc = B.product[w.b][ia], C.product[w.c][ja]
        facts["w1"] = (
            f"{lb[w.b]}*{la[w.a]} = {lb[pb]} in B and "
            f"{lc[w.c]}*{la[w.a]} = {lc[pc]} in C"
        )
    if pb != w.b or pc == w.c:
        return "W1", facts
    cc = C.product[w.c][w.c]
    bdiv = B.ldiv[w.b][i[w.u1]]
    facts["w2"] = (
        f"{lc[w.c]}*{lc[w.c]} = {lc[cc]} <= {lc[j[w.u1]]} in C; "
        f"{lb[w.b]}\\{lb[i[w.u1]]} = {lb[bdiv]} <= {lb[w.b]} in B"
    )
    if not C.le(cc, j[w.u1]) or not B.le(bdiv, w.b):
        return "W2", facts
    bb = B.product[w.b][w.b]
    cdiv = C.ldiv[w.c][j[w.u2]]
    facts["w3"] = (
        f"{lb[w.b]}*{lb[w.b]} = {lb[bb]} <= {lb[i[w.u2]]} in B; "
        f"{lc[w.c]}\\{lc[j[w.u2]]} = {lc[cdiv]} <= {lc[w.c]} in C"
    )
    if not B.le(bb, i[w.u2]) or not C.le(cdiv, w.c):
        return "W3", facts
    return None, facts


def find_obstruction(vf: VFormation) -> ObstructionWitness | None:
    """Scan for the least witness; a hit certifies that no chain amalgam of
    any size exists.  ``None`` proves nothing."""
    for alg, tag in ((vf.B, "B"), (vf.C, "C")):
        if not validate(alg, ("chain",)).ok:
            raise UnsupportedError(f"{tag} must be a chain")
    i_img, j_img = set(vf.i.map), set(vf.j.map)
    b_outside = [b for b in range(vf.B.size) if b not in i_img]
    c_outside = [c for c in range(vf.C.size) if c not in j_img]
    for a, b, c, u1, u2, side in itertools.product(
        range(vf.A.size), b_outside, c_outside, range(vf.A.size), range(vf.A.size), (LEFT, RIGHT)
    ):
        w = ObstructionWitness(a, b, c, u1, u2, side)
        clause, _ = _witness_clauses(vf, w)
        if clause is None:
            return w
    return None


def check_obstruction(vf: VFormation, w: ObstructionWitness) -> ObstructionCheck:
    """Re-evaluate the witness clauses and emit the refutation trace."""
    clause, facts = _witness_clauses(vf, w)
    if clause is not None:
        lines = [f"REJECT({clause})"]
        for key in ("w1", "w2", "w3"):
            if key in facts:
                lines.append(f"  {key.upper()}: {facts[key]}")
        if "detail" in facts:
            lines.append(f"  {facts['detail']}")
        return ObstructionCheck(False, clause, tuple(lines))
    la, lb, lc = vf.A.labels, vf.B.labels, vf.C.labels
    a, b, c, u1, u2 = la[w.a], lb[w.b], lc[w.c], la[w.u1], la[w.u2]
    mul = (lambda s, t: f"{s}*{t}") if w.side == LEFT else (lambda s, t: f"{t}*{s}")
    lines = (
        f"witness (a={a}, b={b}, c={c}, u1={u1}, u2={u2}, side={w.side})",
        f"(i) {facts['w1']}; since any amalgam identifies the images of {a}, "
        f"h(b) = k(c) would force {mul(a, 'h(b)')} to be both h(b) and a smaller "
        f"element, so h(b) != k(c) and the chain orders them strictly.",
        f"(ii) if h(b) < k(c): h(b)*k(c) <= k(c)*k(c) and {facts['w2']}, so by "
        f"residuation k(c) <= h(b)\\h({u1}) = h({b}\\{u1}) <= h(b), "
        f"contradicting h(b) < k(c).",
        f"(iii) if k(c) < h(b): k(c)*h(b) <= h(b)*h(b) and {facts['w3']}, so by "
        f"residuation h(b) <= k(c)\\k({u2}) = k({c}\\{u2}) <= k(c), "
        f"contradicting k(c) < h(b).",
        "conclusion: no totally ordered residuated lattice amalgamates this "
        "V-formation, at any cardinality.",
    )
    return ObstructionCheck(True, None, lines)


def injectivity_reduction(vf: VFormation) -> list[int]:
    """Elements a of A (a != 1) with i(a) inside every nontrivial congruence
    filter of B.  Nonempty output forces any one-amalgam homomorphism from B
    agreeing with an injective map on A to be injective itself."""
    trivial_filter = frozenset({vf.B.unit})
    nontrivial = [F.members for F in congruence_filters(vf.B) if F.members != trivial_filter]
    return [
        a
        for a in range(vf.A.size)
        if a != vf.A.unit and all(vf.i.map[a] in F for F in nontrivial)
    ]


# ---------------------------------------------------------------------------
# bounded amalgam search


def _anchored_positions(k, anchors, m):
    """Strictly increasing position tuples for a chain of ``k`` elements
    where some indices are pinned by ``anchors``."""
    segments = []
    fixed = sorted(anchors.items())  # (element index in inner order, position)
    prev_idx, prev_pos = -1, -1
    for idx, pos in fixed + [(k, m)]:
        gap = idx - prev_idx - 1
        segments.append((gap, prev_pos + 1, pos))
        prev_idx, prev_pos = idx, pos
    choices = []
    for gap, lo, hi in segments:
        if gap == 0:
            choices.append([()])
            continue
        choices.append(list(itertools.combinations(range(lo, hi), gap)))
    for combo in itertools.product(*choices):
        positions = [None] * k
        for idx, pos in fixed:
            positions[idx] = pos
        free = [p for seg in combo for p in seg]
        it = iter(free)
        for idx in range(k):
            if positions[idx] is None:
                positions[idx] = next(it)
        yield tuple(positions)


def _placements(vf: VFormation, m: int, flags: SearchFlags):
    """All pairs (hpos, kpos) of strictly increasing position maps that agree
    on the shared subalgebra, in lexicographic order."""
    B, C = vf.B, vf.C
    if flags.integral and vf.B.unit != vf.B.size - 1:
        return
    for hpos in itertools.combinations(range(m), B.size):
        if flags.integral and hpos[B.unit] != m - 1:
            continue
        if flags.pointed and hpos[B.zero] != 0:
            continue
        anchors = {vf.j.map[a]: hpos[vf.i.map[a]] for a in range(vf.A.size)}
        items = sorted(anchors.items())
        if any(items[t][1] >= items[t + 1][1] for t in range(len(items) - 1)):
            continue  # guards against non-monotone embeddings in the input
        for kpos in _anchored_positions(C.size, anchors, m):
            if flags.pointed and kpos[C.zero] != 0:
                continue
            yield hpos, kpos


def _pins_for(vf: VFormation, hpos, kpos):
    """Product and division pins induced by requiring h and k to preserve
    operations; ``None`` when the two sets of pins conflict."""
    product_pins = {}
    ldiv_pins = {}
    rdiv_pins = {}

    def add(pins, key, value):
        old = pins.get(key)
        if old is not None and old != value:
            return False
        pins[key] = value
        return True

    for alg, pos in ((vf.B, hpos), (vf.C, kpos)):
        for x in range(alg.size):
            for y in range(alg.size):
                if not add(product_pins, (pos[x], pos[y]), pos[alg.product[x][y]]):
                    return None
                if not add(ldiv_pins, (pos[x], pos[y]), pos[alg.ldiv[x][y]]):
                    return None
                if not add(rdiv_pins, (pos[x], pos[y]), pos[alg.rdiv[x][y]]):
                    return None
    return product_pins, ldiv_pins, rdiv_pins


def bounded_amalgam_search(
    vf: VFormation,
    max_size: int,
    flags: SearchFlags = SearchFlags(),
    budget: Budget = Budget(),
    min_size: int | None = None,
) -> SearchReport:
    """Search for a chain amalgam of every size up to ``max_size``.

    FOUND returns the canonically least completion; UNSAT means no chain D
    with ``|D| <= max_size`` admits embeddings h, k with h.i = k.j.  The
    bound is the only blind spot: extra elements outside the images may be
    needed at larger sizes, so UNSAT-at-bound is corroboration, not proof.
    """
    for alg, tag in ((vf.A, "A"), (vf.B, "B"), (vf.C, "C")):
        if not alg.is_chain_order:
            raise UnsupportedError(f"{tag} must use the index-order chain convention")
    if flags.pointed and (vf.B.zero is None or vf.C.zero is None):
        raise PreconditionError("pointed search needs pointed B and C")
    start = time.monotonic()
    lo = max(vf.B.size, vf.C.size) if min_size is None else min_size
    per_size = []
    for m in range(lo, max_size + 1):
        stats = SearchStats()
        placements = 0
        for hpos, kpos in _placements(vf, m, flags):
            placements += 1
            pins = _pins_for(vf, hpos, kpos)
            if pins is None:
                continue
            product_pins, ldiv_pins, rdiv_pins = pins
            problem = CompletionProblem(
                size=m,
                unit=hpos[vf.B.unit],
                product_pins=product_pins,
                ldiv_pins=ldiv_pins,
                rdiv_pins=rdiv_pins,
                commutative=flags.commutative,
                integral=flags.integral,
                zero=0 if flags.pointed else None,
            )
            try:
                for table in iter_completions(problem, budget, stats):
                    d = make_algebra(
                        product=table,
                        unit=problem.unit,
                        order=CHAIN,
                        zero=problem.zero,
                        name=f"amalgam{m}",
                    )
                    h = Morphism(vf.B, d, tuple(hpos), EMBEDDING)
                    k = Morphism(vf.C, d, tuple(kpos), EMBEDDING)
                    if not (validate_morphism(h).ok and validate_morphism(k).ok):
                        raise AssertionError("search produced a non-embedding")
                    per_size.append(SizeStats(m, placements, stats.nodes))
                    return SearchReport(
                        "FOUND",
                        max_size,
                        d=d,
                        h=h,
                        k=k,
                        sizes=tuple(per_size),
                        wall_time=time.monotonic() - start,
                    )
            except BudgetExceededError as exc:
                per_size.append(SizeStats(m, placements, exc.nodes))
                return SearchReport(
                    "BUDGET",
                    max_size,
                    sizes=tuple(per_size),
                    wall_time=time.monotonic() - start,
                    detail=f"budget exhausted at size {m}",
                )
        per_size.append(SizeStats(m, placements, stats.nodes))
    return SearchReport(
        "UNSAT",
        max_size,
        sizes=tuple(per_size),
        wall_time=time.monotonic() - start,
    )


def bounded_one_amalgam_search(
    vf: VFormation,
    max_size: int,
    flags: SearchFlags = SearchFlags(),
    budget: Budget = Budget(),
) -> SearchReport:
    """Search for a one-amalgam: k embeds C, h is any homomorphism on B.

    Every homomorphism factors as a quotient by its kernel filter followed
    by an embedding, so it suffices to run the amalgam search on (A, B/F, C)
    for each congruence filter F of B that does not identify distinct
    elements of i(A)."""
    start = time.monotonic()
    all_sizes: list[SizeStats] = []
    details = []
    i_img = vf.i.map
    for F in congruence_filters(vf.B):
        blocks = filter_to_congruence(F)
        block_of = {}
        for bi, block in enumerate(blocks):
            for x in block:
                block_of[x] = bi
        if len({block_of[i_img[a]] for a in range(vf.A.size)}) != vf.A.size:
            details.append(f"filter {sorted(F.members)}: identifies elements of A, skipped")
            continue
        Bq = quotient(vf.B, F)
        iq = tuple(block_of[i_img[a]] for a in range(vf.A.size))
        sub_vf = make_vformation(vf.A, Bq, vf.C, iq, vf.j.map, name=f"{vf.name}/F")
        report = bounded_amalgam_search(sub_vf, max_size, flags, budget)
        all_sizes.extend(report.sizes)
        details.append(f"filter {sorted(F.members)}: {report.verdict}")
        if report.verdict == "BUDGET":
            return SearchReport(
                "BUDGET",
                max_size,
                sizes=tuple(all_sizes),
                wall_time=time.monotonic() - start,
                detail="; ".join(details),
            )
        if report.found:
            quotient_map = Morphism(vf.B, Bq, tuple(block_of[x] for x in range(vf.B.size)), HOM)
            h = Morphism(vf.B, report.d, compose(report.h, quotient_map), HOM)
            return SearchReport(
                "FOUND",
                max_size,
                d=report.d,
                h=h,
                k=report.k,
                sizes=tuple(all_sizes),
                wall_time=time.monotonic() - start,
                detail="; ".join(details),
            )
    return SearchReport(
        "UNSAT",
        max_size,
        sizes=tuple(all_sizes),
        wall_time=time.monotonic() - start,
        detail="; ".join(details),
    )


# ---------------------------------------------------------------------------
# the built-in formation and its variants


def vs_formation() -> VFormation:
    """The V-formation of 2-potent commutative integral chains with no chain
    amalgam: A the 3-element Goedel chain, B an ordinal sum, C a gluing."""
    A, B, C = vs_a(), vs_b(), vs_c()
    i = find_embeddings(A, B)
    j = find_embeddings(A, C)
    return VFormation(A, B, C, i[0], j[0], name="VS")


def pointed_vformation(vf: VFormation, a_zero: int, name="") -> VFormation:
    """Designate an element of A (and its images) as the constant 0."""
    A = with_zero(vf.A, a_zero)
    B = with_zero(vf.B, vf.i.map[a_zero])
    C = with_zero(vf.C, vf.j.map[a_zero])
    return VFormation(
        A,
        B,
        C,
        Morphism(A, B, vf.i.map, EMBEDDING),
        Morphism(A, C, vf.j.map, EMBEDDING),
        name=name or (f"{vf.name}.pointed" if vf.name else ""),
    )


def _rotation_index_map(dm_src, src_size, dm_tgt, tgt_size, n, base_map):
    """Index map between rotations induced by a map of the base algebras.

    The base map must carry closed elements to closed elements, which holds
    for the identity and constant-one nuclei used here.
    """
    closed_src = sorted({dm_src[x] for x in range(src_size)})
    closed_tgt = sorted({dm_tgt[x] for x in range(tgt_size)})
    rank_src = {x: r for r, x in enumerate(closed_src)}
    rank_tgt = {x: r for r, x in enumerate(closed_tgt)}
    k_src, k_tgt = len(closed_src), len(closed_tgt)
    mid = n - 2
    out = [0] * (k_src + mid + src_size)
    for b in closed_src:  # primed block, dual order
        out[k_src - 1 - rank_src[b]] = k_tgt - 1 - rank_tgt[base_map[b]]
    for t in range(1, n - 1):  # interior Lukasiewicz levels
        out[k_src + t - 1] = k_tgt + t - 1
    for x in range(src_size):  # the base block on top
        out[k_src + mid + x] = k_tgt + mid + base_map[x]
    return tuple(out)


def rotated_vformation(vf: VFormation, delta_name: str, n: int) -> VFormation:
    """Apply the generalized n-rotation to every component of a V-formation."""
    A, B, C = vf.A, vf.B, vf.C
    dA, dB, dC = (nucleus_by_name(x, delta_name) for x in (A, B, C))
    RA = generalized_rotation(A, dA, n, name=f"{A.name}^{delta_name}:{n}")
    RB = generalized_rotation(B, dB, n, name=f"{B.name}^{delta_name}:{n}")
    RC = generalized_rotation(C, dC, n, name=f"{C.name}^{delta_name}:{n}")
    i_map = _rotation_index_map(dA.map, A.size, dB.map, B.size, n, vf.i.map)
    j_map = _rotation_index_map(dA.map, A.size, dC.map, C.size, n, vf.j.map)
    out = VFormation(
        RA,
        RB,
        RC,
        Morphism(RA, RB, i_map, EMBEDDING),
        Morphism(RA, RC, j_map, EMBEDDING),
        name=f"{vf.name}^{delta_name}:{n}" if vf.name else "",
    )
    rep = check_vformation(out)
    if not rep.ok:
        raise PreconditionError(f"rotation did not yield a V-formation: {rep.first_failure()}")
    return out


def builtin_vformation(name: str) -> VFormation:
    if name == "VS":
        return vs_formation()
    if name == "VS.pointed":
        vs = vs_formation()
        return pointed_vformation(vs, 0)
    raise FormatError(f"unknown builtin V-formation {name!r}")
