"""Constructors for finite residuated lattices.

Ordinal sums, partial gluings driven by a lower-compatible triple, nucleus
images, disconnected and generalized n-rotations, plus the built-in algebras
(Lukasiewicz and Goedel chains and the VS formation components).

Carrier convention: constructed algebras list the lower block first, so
every constructed chain satisfies the index-order CHAIN convention and
table equality is meaningful.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import (
    CHAIN,
    CheckOutcome,
    FiniteRL,
    FormatError,
    PartialIRL,
    PreconditionError,
    UnsupportedError,
    ValidationReport,
    join_table,
    meet_table,
    make_algebra,
    make_partial,
    partial_from_total,
    relabel,
    validate,
    validate_partial,
)


@dataclass(frozen=True)
class LowerCompatibleTriple:
    """A partial IRL together with its conucleus/closure pair."""

    K: PartialIRL
    sigma: tuple[int, ...]
    gamma: tuple[int, ...]


@dataclass(frozen=True)
class Nucleus:
    """A closure operator with delta(x)*delta(y) <= delta(x*y)."""

    parent: FiniteRL
    map: tuple[int, ...]


def _uniquify(labels):
    seen = {}
    out = []
    for lab in labels:
        if lab not in seen:
            seen[lab] = 1
            out.append(lab)
        else:
            seen[lab] += 1
            candidate = f"{lab}_{seen[lab]}"
            while candidate in seen:
                seen[lab] += 1
                candidate = f"{lab}_{seen[lab]}"
            seen[candidate] = 1
            out.append(candidate)
    return tuple(out)


# ---------------------------------------------------------------------------
# ordinal sum


def ordinal_sum(lower: FiniteRL, upper: FiniteRL, name: str = "") -> FiniteRL:
    """Stack two integral chains, identifying their units.

    Elements of ``lower`` minus its unit sit below all of ``upper``; cross
    products absorb downwards (b*c = c*b = b) and cross divisions are
    c\\b = b/c = b and b\\c = c/b = 1.
    """
    for alg, side in ((lower, "lower"), (upper, "upper")):
        if not alg.is_chain_order:
            raise UnsupportedError(f"{side} summand must use the index-order chain convention")
        rep = validate(alg, ("lattice", "monoid", "residuation", "integral", "chain"))
        if not rep.ok:
            raise UnsupportedError(f"{side} summand is not an integral residuated chain: {rep.first_failure()}")
        if alg.zero is not None:
            raise PreconditionError("ordinal sum takes unpointed summands")
    nl = lower.size - 1  # lower block, unit removed
    n = nl + upper.size
    unit = n - 1

    def lo(x):  # lower index -> sum index (for x below lower's unit)
        return x

    def up(x):  # upper index -> sum index
        return nl + x

    size = n
    product = [[0] * size for _ in range(size)]
    ldiv = [[0] * size for _ in range(size)]
    rdiv = [[0] * size for _ in range(size)]

    def embed_lower(v):
        return unit if v == lower.unit else lo(v)

    for x in range(size):
        for y in range(size):
            if x < nl and y < nl:
                product[x][y] = embed_lower(lower.product[x][y])
                ldiv[x][y] = embed_lower(lower.ldiv[x][y])
                rdiv[x][y] = embed_lower(lower.rdiv[x][y])
            elif x >= nl and y >= nl:
                product[x][y] = up(upper.product[x - nl][y - nl])
                ldiv[x][y] = up(upper.ldiv[x - nl][y - nl])
                rdiv[x][y] = up(upper.rdiv[x - nl][y - nl])
            elif x < nl:  # x in lower-{1}, y in upper
                product[x][y] = x
                ldiv[x][y] = unit  # b \ c = 1
                rdiv[x][y] = unit  # c / b = 1
            else:  # x in upper, y in lower-{1}
                product[x][y] = y
                ldiv[x][y] = y  # c \ b = b
                rdiv[x][y] = y  # b / c = b

    labels = _uniquify(
        [lower.labels[x] for x in range(lower.size) if x != lower.unit]
        + list(upper.labels)
    )
    return make_algebra(
        product=product,
        unit=unit,
        order=CHAIN,
        labels=labels,
        ldiv=ldiv,
        rdiv=rdiv,
        name=name or f"({lower.name}+{upper.name})",
    )


# ---------------------------------------------------------------------------
# lower-compatible triples and partial gluing


def validate_triple(t: LowerCompatibleTriple) -> ValidationReport:
    """Check every clause of the lower-compatible-triple definition."""
    K, sigma, gamma = t.K, t.sigma, t.gamma
    n = K.size
    if len(sigma) != n or len(gamma) != n:
        raise FormatError("sigma and gamma must have one entry per element")
    if any(not 0 <= v < n for v in itertools.chain(sigma, gamma)):
        raise FormatError("sigma/gamma entry out of range")
    le = K.le
    checks = []

    def fail(clause, witness, detail=""):
        checks.append(CheckOutcome(clause, False, witness, detail))
        return ValidationReport("triple", tuple(checks))

    sub = validate_partial(K)
    if not sub.ok:
        bad = sub.first_failure()
        return fail("partial-irl", bad.witness, f"K: {bad.flag}")
    checks.append(CheckOutcome("partial-irl", True))

    for x in range(n):
        for y in range(n):
            if not K.product_mask[x][y]:
                return fail("total-product", (x, y), "K must have a total product")
    checks.append(CheckOutcome("total-product", True))

    for x in range(n):
        for y in range(n):
            undefined = le(sigma[x], y) and not le(x, y)
            if K.ldiv_mask[x][y] == undefined:
                return fail("undefinedness-pattern", (x, y), "x\\y defined iff not (sigma(x) <= y and x !<= y)")
            if K.rdiv_mask[x][y] == undefined:
                return fail("undefinedness-pattern", (x, y), "y/x defined iff not (sigma(x) <= y and x !<= y)")
    checks.append(CheckOutcome("undefinedness-pattern", True))

    for x in range(n):
        for y in range(n):
            if le(sigma[x], y) != le(x, gamma[y]):
                return fail("residuated-pair", (x, y), "sigma(x) <= y iff x <= gamma(y)")
    checks.append(CheckOutcome("residuated-pair", True))

    for x in range(n):
        if not le(sigma[x], x):
            return fail("strong-conucleus", (x,), "sigma not decreasing")
        if sigma[sigma[x]] != sigma[x]:
            return fail("strong-conucleus", (x,), "sigma not idempotent")
    for x in range(n):
        for y in range(n):
            if le(x, y) and not le(sigma[x], sigma[y]):
                return fail("strong-conucleus", (x, y), "sigma not monotone")
    if sigma[K.unit] != K.unit:
        return fail("strong-conucleus", (K.unit,), "sigma(1) != 1")
    for x in range(n):
        for y in range(n):
            if x == K.unit or y == K.unit:
                continue
            a = K.product[x][sigma[y]]
            b = sigma[K.product[x][y]]
            c = K.product[sigma[x]][y]
            if a != b or b != c:
                return fail("strong-conucleus", (x, y), "x*sigma(y) = sigma(x*y) = sigma(x)*y fails")
    checks.append(CheckOutcome("strong-conucleus", True))

    for x in range(n):
        if not le(x, gamma[x]):
            return fail("closure", (x,), "gamma not increasing")
        if gamma[gamma[x]] != gamma[x]:
            return fail("closure", (x,), "gamma not idempotent")
    for x in range(n):
        for y in range(n):
            if le(x, y) and not le(gamma[x], gamma[y]):
                return fail("closure", (x, y), "gamma not monotone")
    checks.append(CheckOutcome("closure", True))

    for x in range(n):
        for y in range(n):
            if y == K.unit:
                continue
            if not le(K.product[x][y], sigma[x]) or not le(K.product[y][x], sigma[x]):
                return fail("products-below-sigma", (x, y), "x*y, y*x <= sigma(x) fails")
    checks.append(CheckOutcome("products-below-sigma", True))

    return ValidationReport("triple", tuple(checks))


def identity_triple(alg: FiniteRL, name: str = "") -> LowerCompatibleTriple:
    """Total algebra viewed as a triple with identity maps (ordinal-sum case)."""
    ident = tuple(range(alg.size))
    return LowerCompatibleTriple(partial_from_total(alg, name=name), ident, ident)


def _splitting_coatom(L: FiniteRL) -> int:
    """The coatom below which every non-unit element lives."""
    candidates = [
        c
        for c in range(L.size)
        if c != L.unit and all(L.le(x, c) for x in range(L.size) if x != L.unit)
    ]
    if not candidates:
        raise PreconditionError("upper algebra has no splitting coatom")
    return candidates[0]


def partial_gluing(t: LowerCompatibleTriple, L: FiniteRL, name: str = "") -> FiniteRL:
    """Glue a lower-compatible triple below an integral algebra at the unit.

    Products across the two parts go through sigma, divisions from the upper
    part into the lower one through gamma, and divisions that are undefined
    in the lower part are sent to the upper part's splitting coatom.
    """
    report = validate_triple(t)
    if not report.ok:
        raise PreconditionError(f"invalid lower-compatible triple: {report.first_failure()}")
    rep = validate(L, ("lattice", "monoid", "residuation", "integral"))
    if not rep.ok:
        raise UnsupportedError(f"upper algebra must be an IRL: {rep.first_failure()}")
    K = t.K
    if K.zero is not None or L.zero is not None:
        raise PreconditionError("gluing takes unpointed inputs")
    coatom = _splitting_coatom(L)
    jt_K = join_table(K)

    join_one_pairs = [
        (x, y)
        for x in range(K.size)
        for y in range(K.size)
        if x != K.unit and y != K.unit and jt_K[x][y] == K.unit
    ]
    bottom_L = None
    bottoms = [b for b in range(L.size) if all(L.le(b, x) for x in range(L.size))]
    if bottoms:
        bottom_L = bottoms[0]
    if join_one_pairs and bottom_L is None:
        raise PreconditionError("non-unit joins reach the unit but the upper algebra has no bottom")

    nk = K.size - 1  # lower block without the shared unit
    n = nk + L.size
    unit = nk + L.unit

    def kx(x):  # K index (non-unit) -> glued index
        return x if x < K.unit else x - 1

    def ux(x):  # L index -> glued index
        return nk + x

    k_elems = [x for x in range(K.size) if x != K.unit]
    in_K = {kx(x): x for x in k_elems}

    # order: K-{1} keeps its order below all of L
    if K.is_chain_order and L.is_chain_order and K.unit == K.size - 1 and L.unit == L.size - 1:
        order = CHAIN
    else:
        leq = [[False] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                if a in in_K and b in in_K:
                    leq[a][b] = K.le(in_K[a], in_K[b])
                elif a in in_K:
                    leq[a][b] = True
                elif b in in_K:
                    leq[a][b] = False
                else:
                    leq[a][b] = L.le(a - nk, b - nk)
        order = leq

    product = [[0] * n for _ in range(n)]
    ldiv = [[0] * n for _ in range(n)]
    rdiv = [[0] * n for _ in range(n)]

    def embed_K(v):
        return unit if v == K.unit else kx(v)

    for a in range(n):
        for b in range(n):
            x_in_K, y_in_K = a in in_K, b in in_K
            if x_in_K and y_in_K:
                x, y = in_K[a], in_K[b]
                product[a][b] = embed_K(K.product[x][y])
                ldiv[a][b] = embed_K(K.ldiv[x][y]) if K.ldiv_mask[x][y] else ux(coatom)
                rdiv[a][b] = embed_K(K.rdiv[x][y]) if K.rdiv_mask[x][y] else ux(coatom)
            elif not x_in_K and not y_in_K:
                x, y = a - nk, b - nk
                product[a][b] = ux(L.product[x][y])
                ldiv[a][b] = ux(L.ldiv[x][y])
                rdiv[a][b] = ux(L.rdiv[x][y])
            elif x_in_K:  # a = x in K-{1}, b in L
                x, y = in_K[a], b - nk
                product[a][b] = a if y == L.unit else embed_K(t.sigma[x])
                ldiv[a][b] = unit  # x \ (L element) = 1
                rdiv[a][b] = unit  # (L element) / x = 1
            else:  # a in L, b = y in K-{1}
                x, y = a - nk, in_K[b]
                product[a][b] = b if x == L.unit else embed_K(t.sigma[y])
                ldiv[a][b] = b if x == L.unit else embed_K(t.gamma[y])
                rdiv[a][b] = b if x == L.unit else embed_K(t.gamma[y])

    labels = _uniquify([K.labels[x] for x in k_elems] + list(L.labels))
    glued = make_algebra(
        product=product,
        unit=unit,
        order=order,
        labels=labels,
        ldiv=ldiv,
        rdiv=rdiv,
        name=name or f"({K.name}&{L.name})",
    )
    # the x \/ y = 1 redefinition to the upper bottom is forced by the new
    # order, which join_table derives; nothing further to do here
    return glued


# ---------------------------------------------------------------------------
# nuclei and rotations


def validate_nucleus(n: Nucleus) -> ValidationReport:
    alg, d = n.parent, n.map
    if len(d) != alg.size or any(not 0 <= v < alg.size for v in d):
        raise FormatError("nucleus map must send elements to elements")
    checks = []

    def fail(clause, witness, detail=""):
        checks.append(CheckOutcome(clause, False, witness, detail))
        return ValidationReport("nucleus", tuple(checks))

    for x in range(alg.size):
        if not alg.le(x, d[x]):
            return fail("closure", (x,), "not increasing")
        if d[d[x]] != d[x]:
            return fail("closure", (x,), "not idempotent")
    for x in range(alg.size):
        for y in range(alg.size):
            if alg.le(x, y) and not alg.le(d[x], d[y]):
                return fail("closure", (x, y), "not monotone")
    checks.append(CheckOutcome("closure", True))
    for x in range(alg.size):
        for y in range(alg.size):
            if not alg.le(alg.product[d[x]][d[y]], d[alg.product[x][y]]):
                return fail("nucleus-law", (x, y), "delta(x)*delta(y) <= delta(x*y) fails")
    checks.append(CheckOutcome("nucleus-law", True))
    return ValidationReport("nucleus", tuple(checks))


def identity_nucleus(alg: FiniteRL) -> Nucleus:
    return Nucleus(alg, tuple(range(alg.size)))


def constant_one_nucleus(alg: FiniteRL) -> Nucleus:
    return Nucleus(alg, tuple(alg.unit for _ in range(alg.size)))


def nucleus_by_name(alg: FiniteRL, name: str) -> Nucleus:
    if name == "identity":
        return identity_nucleus(alg)
    if name in ("const-1", "const1"):
        return constant_one_nucleus(alg)
    raise FormatError(f"unknown nucleus name {name!r}")


def nucleus_image(n: Nucleus, name: str = "") -> tuple[FiniteRL, tuple[int, ...]]:
    """Image algebra on the closed elements, with the closure surjection."""
    report = validate_nucleus(n)
    if not report.ok:
        raise PreconditionError(f"not a nucleus: {report.first_failure()}")
    alg, d = n.parent, n.map
    elems = sorted({d[x] for x in range(alg.size)})
    index = {x: i for i, x in enumerate(elems)}
    m = len(elems)
    jt = join_table(alg)
    product = [[index[d[alg.product[x][y]]] for y in elems] for x in elems]
    ldiv = [[index[alg.ldiv[x][y]] for y in elems] for x in elems]
    rdiv = [[index[alg.rdiv[x][y]] for y in elems] for x in elems]
    if alg.leq is None:
        order = CHAIN
    else:
        order = [[alg.leq[x][y] for y in elems] for x in elems]
    image = make_algebra(
        product=product,
        unit=index[d[alg.unit]],
        order=order,
        labels=tuple(alg.labels[x] for x in elems),
        ldiv=ldiv,
        rdiv=rdiv,
        name=name or (f"{alg.name}_img" if alg.name else ""),
    )
    surjection = tuple(index[d[x]] for x in range(alg.size))
    return image, surjection


def generalized_rotation(a: FiniteRL, d: Nucleus, n: int, name: str = "") -> FiniteRL:
    """Bounded algebra from ``a``, a rotated copy of the nucleus image, and an
    n-element Lukasiewicz block in between.

    Carrier, bottom to top: primed closed elements in dual order, then the
    n-2 interior Lukasiewicz levels, then ``a`` itself.  The result is
    pointed with zero the primed unit.
    """
    if n < 2:
        raise PreconditionError("rotations need n >= 2")
    rep = validate(a, ("lattice", "monoid", "residuation", "integral"))
    if not rep.ok:
        raise UnsupportedError(f"rotation input must be an IRL: {rep.first_failure()}")
    if d.parent is not a and d.parent != a:
        raise PreconditionError("the nucleus must live on the rotated algebra")
    if a.zero is not None:
        raise PreconditionError("rotation takes an unpointed input")
    nrep = validate_nucleus(d)
    if not nrep.ok:
        raise PreconditionError(f"not a nucleus: {nrep.first_failure()}")

    dm = d.map
    closed = sorted({dm[x] for x in range(a.size)})  # ascending in a's index order
    rank = {x: r for r, x in enumerate(closed)}
    k = len(closed)
    mid = n - 2
    size = k + mid + a.size
    unit = size - 1

    def pa(x):  # element of a -> rotated index
        return k + mid + x

    def pp(b):  # closed element of a -> index of its primed copy
        return k - 1 - rank[b]

    def pl(i):  # Lukasiewicz level, 0 <= i <= n-1, reusing bottom and unit
        if i <= 0:
            return 0
        if i >= n - 1:
            return unit
        return k + i - 1

    in_a = {pa(x): x for x in range(a.size)}
    in_p = {pp(b): b for b in closed}
    in_l = {pl(i): i for i in range(1, n - 1)}

    if a.is_chain_order:
        order = CHAIN
    else:
        leq = [[False] * size for _ in range(size)]
        for i in range(size):
            for j in range(size):
                if i in in_p and j in in_p:
                    leq[i][j] = a.le(in_p[j], in_p[i])  # dual order
                elif i in in_p:
                    leq[i][j] = True
                elif j in in_p:
                    leq[i][j] = False
                elif i in in_l and j in in_l:
                    leq[i][j] = in_l[i] <= in_l[j]
                elif i in in_l:
                    leq[i][j] = True
                elif j in in_l:
                    leq[i][j] = False
                else:
                    leq[i][j] = a.le(in_a[i], in_a[j])
        order = leq

    product = [[0] * size for _ in range(size)]
    ldiv = [[0] * size for _ in range(size)]
    rdiv = [[0] * size for _ in range(size)]
    mt = meet_table(a)

    def luk_mul(i, j):
        return max(0, i + j - (n - 1))

    def luk_div(i, j):
        return min(n - 1, n - 1 - i + j)

    for i in range(size):
        for j in range(size):
            if i in in_a and j in in_a:
                x, y = in_a[i], in_a[j]
                product[i][j] = pa(a.product[x][y])
                ldiv[i][j] = pa(a.ldiv[x][y])
                rdiv[i][j] = pa(a.rdiv[x][y])
            elif i in in_a and j in in_p:
                x, b = in_a[i], in_p[j]
                product[i][j] = pp(dm[a.rdiv[x][b]])  # x * b' = (b/x)'
                ldiv[i][j] = pp(dm[a.product[b][x]])  # x \ b' = (delta(b*x))'
                rdiv[i][j] = pp(dm[a.product[x][b]])  # b' / x = (delta(x*b))'
            elif i in in_p and j in in_a:
                b, x = in_p[i], in_a[j]
                product[i][j] = pp(dm[a.ldiv[x][b]])  # b' * x = (x\b)'
                ldiv[i][j] = unit  # b' \ x = 1
                rdiv[i][j] = unit  # x / b' = 1
            elif i in in_p and j in in_p:
                b, c = in_p[i], in_p[j]
                product[i][j] = 0
                ldiv[i][j] = pa(a.rdiv[c][b])  # b' \ c' = b/c
                rdiv[i][j] = pa(a.ldiv[c][b])  # c' / b' = c\b
            elif i in in_a and j in in_l:
                x, t = in_a[i], in_l[j]
                product[i][j] = pl(t)  # x * l_t = l_t
                ldiv[i][j] = pl(t)  # x \ l_t = l_t
                rdiv[i][j] = pl(t)  # l_t / x = l_t
            elif i in in_l and j in in_a:
                t, x = in_l[i], in_a[j]
                product[i][j] = pl(t)  # l_t * x = l_t
                ldiv[i][j] = unit  # l_t \ x = 1
                rdiv[i][j] = unit  # x / l_t = 1
            elif i in in_l and j in in_l:
                t, s = in_l[i], in_l[j]
                product[i][j] = pl(luk_mul(t, s))
                ldiv[i][j] = pl(luk_div(t, s))
                rdiv[i][j] = pl(luk_div(t, s))  # the block is commutative
            elif i in in_l and j in in_p:
                t, _b = in_l[i], in_p[j]
                product[i][j] = 0
                ldiv[i][j] = pl(n - 1 - t)  # l_t \ b' = l_{n-1-t}
                rdiv[i][j] = pl(n - 1 - t)  # b' / l_t = l_{n-1-t}
            else:  # i in in_p, j in in_l
                _b, t = in_p[i], in_l[j]
                product[i][j] = 0
                ldiv[i][j] = unit  # b' \ l_t = 1
                rdiv[i][j] = unit  # l_t / b' = 1

    labels = _uniquify(
        [f"{a.labels[b]}'" for b in reversed(closed)]
        + [f"l{i}" for i in range(1, n - 1)]
        + list(a.labels)
    )
    return make_algebra(
        product=product,
        unit=unit,
        order=order,
        labels=labels,
        ldiv=ldiv,
        rdiv=rdiv,
        zero=0,
        name=name or (f"{a.name}^rot{n}" if a.name else ""),
    )


def disconnected_rotation(a: FiniteRL, name: str = "") -> FiniteRL:
    """Rotation by the identity nucleus with no interior levels."""
    return generalized_rotation(a, identity_nucleus(a), 2, name=name)


# ---------------------------------------------------------------------------
# built-in algebras


def trivial() -> FiniteRL:
    return make_algebra(product=[[0]], unit=0, labels=("1",), name="trivial")


def two() -> FiniteRL:
    return make_algebra(product=[[0, 0], [0, 1]], unit=1, labels=("0", "1"), name="2")


def lukasiewicz(n: int) -> FiniteRL:
    """The n-element MV-chain: x*y = max(0, x+y-(n-1))."""
    if n < 1:
        raise FormatError("need n >= 1")
    product = [[max(0, x + y - (n - 1)) for y in range(n)] for x in range(n)]
    labels = tuple(["0"] + [f"a{i}" for i in range(1, n - 1)] + ["1"]) if n > 1 else ("1",)
    return make_algebra(product=product, unit=n - 1, labels=labels, name=f"L{n}")


def godel(n: int) -> FiniteRL:
    """The n-element Goedel chain: product is the meet."""
    if n < 1:
        raise FormatError("need n >= 1")
    product = [[min(x, y) for y in range(n)] for x in range(n)]
    labels = tuple(["0"] + [f"g{i}" for i in range(1, n - 1)] + ["1"]) if n > 1 else ("1",)
    return make_algebra(product=product, unit=n - 1, labels=labels, name=f"G{n}")


def vs_a() -> FiniteRL:
    """Three-element Goedel chain u < v < 1 with both elements idempotent."""
    return relabel(godel(3), ("u", "v", "1"), name="VS.A")


def vs_b() -> FiniteRL:
    """Ordinal sum of the 3-element MV-chain and 2: the chain u < b < v < 1."""
    alg = ordinal_sum(lukasiewicz(3), two(), name="VS.B")
    return relabel(alg, ("u", "b", "v", "1"), name="VS.B")


def vs_k_triple() -> LowerCompatibleTriple:
    """The 4-chain c2 < d < c < 1 with all non-unit products at the bottom,
    the division c\\d forgotten, sigma collapsing c to d, gamma lifting d to c."""
    # indices: c2=0, d=1, c=2, 1=3
    product = [
        [0, 0, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 0, 2],
        [0, 1, 2, 3],
    ]
    ldiv = [
        [3, 3, 3, 3],
        [2, 3, 3, 3],
        [2, 0, 3, 3],  # the (c, d) cell is masked off
        [0, 1, 2, 3],
    ]
    true_row = [True, True, True, True]
    div_mask = [true_row[:], true_row[:], [True, False, True, True], true_row[:]]
    K = make_partial(
        product=product,
        unit=3,
        product_mask=[true_row[:] for _ in range(4)],
        ldiv=ldiv,
        ldiv_mask=div_mask,
        rdiv=ldiv,
        rdiv_mask=div_mask,
        labels=("c2", "d", "c", "1"),
        name="VS.K",
    )
    sigma = (0, 1, 1, 3)
    gamma = (0, 2, 2, 3)
    return LowerCompatibleTriple(K, sigma, gamma)


def vs_c() -> FiniteRL:
    """Partial gluing of the K triple with 2: the chain u < d < c < v < 1."""
    alg = partial_gluing(vs_k_triple(), two(), name="VS.C")
    return relabel(alg, ("u", "d", "c", "v", "1"), name="VS.C")


def builtin(name: str):
    """Look up a built-in algebra or triple by name.

    Parametric names take the form ``lukasiewicz(5)`` / ``godel(4)``.
    """
    fixed = {
        "trivial": trivial,
        "two": two,
        "2": two,
        "VS.A": vs_a,
        "VS.B": vs_b,
        "VS.C": vs_c,
        "VS.K_triple": vs_k_triple,
    }
    if name in fixed:
        return fixed[name]()
    for prefix, fn in (("lukasiewicz", lukasiewicz), ("godel", godel)):
        if name.startswith(prefix + "(") and name.endswith(")"):
            try:
                k = int(name[len(prefix) + 1 : -1])
            except ValueError:
                raise FormatError(f"bad parameter in builtin name {name!r}") from None
            return fn(k)
    raise FormatError(f"unknown builtin {name!r}")


BUILTIN_NAMES = (
    "trivial",
    "two",
    "lukasiewicz(n)",
    "godel(n)",
    "VS.A",
    "VS.B",
    "VS.C",
    "VS.K_triple",
)
