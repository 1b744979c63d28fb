"""Finite residuated lattices represented as operation tables.

Elements are integers ``0 .. n-1``.  A totally ordered algebra uses the
``CHAIN`` order marker, meaning index order (``0 < 1 < ... < n-1``); general
lattices carry an explicit ``leq`` table.  All structures are immutable after
construction and every operation in this module is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

CHAIN = "chain"

#: Flags understood by :func:`validate`, in canonical checking order.
VALIDATE_FLAGS = (
    "lattice",
    "monoid",
    "residuation",
    "integral",
    "commutative",
    "chain",
    "zero-bounded",
)

#: The three flags that make a table a residuated lattice.
RL_FLAGS = ("lattice", "monoid", "residuation")


class ReslatError(Exception):
    """Base class for all workbench errors."""


class FormatError(ReslatError):
    """Malformed tables, labels, documents, or indices."""


class PreconditionError(ReslatError):
    """A construction was called on inputs outside its contract."""


class UnsupportedError(ReslatError):
    """The operation is not defined for this kind of algebra."""


class UnsupportedSymbolError(ReslatError):
    """An identity uses a symbol the target algebra cannot interpret."""


class NotCongruenceError(ReslatError):
    """A partition is not compatible with all operations."""


class NotResiduatedError(ReslatError):
    """A product table has no residuals; ``pair`` is the offending (x, z)."""

    def __init__(self, pair, message=None):
        super().__init__(message or f"no residual exists for pair {pair}")
        self.pair = pair


class BudgetExceededError(ReslatError):
    """A bounded search ran out of its node budget."""

    def __init__(self, nodes):
        super().__init__(f"search budget exceeded after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class FiniteRL:
    """A finite residuated lattice (or candidate: validity is checked lazily).

    ``leq`` is ``None`` for chains in index order, otherwise an ``n x n``
    boolean table.  ``ldiv[x][z] = x\\z`` and ``rdiv[x][z] = z/x``.  ``zero``
    is the optional pointed constant.
    """

    size: int
    labels: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...] | None
    unit: int
    product: tuple[tuple[int, ...], ...]
    ldiv: tuple[tuple[int, ...], ...]
    rdiv: tuple[tuple[int, ...], ...]
    zero: int | None = None
    name: str = ""

    @property
    def is_chain_order(self) -> bool:
        return self.leq is None

    def le(self, x: int, y: int) -> bool:
        if self.leq is None:
            return x <= y
        return self.leq[x][y]

    def mul(self, x: int, y: int) -> int:
        return self.product[x][y]

    def elements(self) -> range:
        return range(self.size)

    def label_of(self, x: int) -> str:
        return self.labels[x]

    def __repr__(self):  # keep pytest output short
        return f"FiniteRL({self.name or 'unnamed'}, size={self.size})"


@dataclass(frozen=True)
class PartialIRL:
    """Operation tables with definedness masks for product and divisions."""

    size: int
    labels: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...] | None
    unit: int
    product: tuple[tuple[int, ...], ...]
    ldiv: tuple[tuple[int, ...], ...]
    rdiv: tuple[tuple[int, ...], ...]
    product_mask: tuple[tuple[bool, ...], ...]
    ldiv_mask: tuple[tuple[bool, ...], ...]
    rdiv_mask: tuple[tuple[bool, ...], ...]
    zero: int | None = None
    name: str = ""

    @property
    def is_chain_order(self) -> bool:
        return self.leq is None

    def le(self, x: int, y: int) -> bool:
        if self.leq is None:
            return x <= y
        return self.leq[x][y]

    def elements(self) -> range:
        return range(self.size)

    def __repr__(self):
        return f"PartialIRL({self.name or 'unnamed'}, size={self.size})"


@dataclass(frozen=True)
class CheckOutcome:
    flag: str
    ok: bool
    witness: tuple | None = None
    detail: str = ""

    def __str__(self):
        if self.ok:
            return f"{self.flag}: ok"
        where = f" at {self.witness}" if self.witness is not None else ""
        tail = f" ({self.detail})" if self.detail else ""
        return f"{self.flag}: FAIL{where}{tail}"


@dataclass(frozen=True)
class ValidationReport:
    subject: str
    checks: tuple[CheckOutcome, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def outcome(self, flag: str) -> CheckOutcome:
        for c in self.checks:
            if c.flag == flag:
                return c
        raise KeyError(flag)

    def first_failure(self) -> CheckOutcome | None:
        for c in self.checks:
            if not c.ok:
                return c
        return None

    def __str__(self):
        head = f"{self.subject}: {'pass' if self.ok else 'FAIL'}"
        return "\n".join([head] + [f"  {c}" for c in self.checks])


HOM = "HOM"
EMBEDDING = "EMBEDDING"


@dataclass(frozen=True)
class Morphism:
    dom: FiniteRL
    cod: FiniteRL
    map: tuple[int, ...]
    kind: str = HOM

    def __call__(self, x: int) -> int:
        return self.map[x]

    def __repr__(self):
        return f"Morphism({self.kind}, {list(self.map)})"


@dataclass(frozen=True)
class CongruenceFilter:
    parent: FiniteRL
    members: frozenset[int]

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __repr__(self):
        return f"CongruenceFilter({sorted(self.members)})"


# ---------------------------------------------------------------------------
# table construction helpers


def _as_bool_table(table, n, what):
    if table is None:
        return None
    if len(table) != n or any(len(row) != n for row in table):
        raise FormatError(f"{what} must be {n}x{n}")
    return tuple(tuple(bool(v) for v in row) for row in table)


def _as_int_table(table, n, what):
    if len(table) != n or any(len(row) != n for row in table):
        raise FormatError(f"{what} must be {n}x{n}")
    out = []
    for row in table:
        r = []
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise FormatError(f"{what} entry {v!r} out of range 0..{n - 1}")
            r.append(v)
        out.append(tuple(r))
    return tuple(out)


def _default_labels(n):
    return tuple(f"e{i}" for i in range(n))


def make_algebra(
    *,
    product,
    unit,
    order=CHAIN,
    labels=None,
    ldiv=None,
    rdiv=None,
    zero=None,
    name="",
) -> FiniteRL:
    """Build a :class:`FiniteRL`, deriving divisions when not supplied.

    Raises :class:`FormatError` for malformed shapes and
    :class:`NotResiduatedError` when divisions must be derived but do not
    exist.
    """
    n = len(product)
    if n == 0:
        raise FormatError("algebras must have at least one element")
    product = _as_int_table(product, n, "product")
    if order == CHAIN:
        leq = None
    else:
        leq = _as_bool_table(order, n, "order")
    labels = tuple(labels) if labels is not None else _default_labels(n)
    if len(labels) != n:
        raise FormatError("labels length must equal size")
    if len(set(labels)) != n:
        raise FormatError("labels must be distinct")
    if not 0 <= unit < n:
        raise FormatError("unit index out of range")
    if zero is not None and not 0 <= zero < n:
        raise FormatError("zero index out of range")
    if (ldiv is None) != (rdiv is None):
        raise FormatError("supply both divisions or neither")
    if ldiv is None:
        ldiv, rdiv = residuals_from_product(order if leq is None else leq, product, unit)
    ldiv = _as_int_table(ldiv, n, "ldiv")
    rdiv = _as_int_table(rdiv, n, "rdiv")
    return FiniteRL(
        size=n,
        labels=labels,
        leq=leq,
        unit=unit,
        product=product,
        ldiv=ldiv,
        rdiv=rdiv,
        zero=zero,
        name=name,
    )


def make_partial(
    *,
    product,
    unit,
    product_mask,
    ldiv,
    ldiv_mask,
    rdiv,
    rdiv_mask,
    order=CHAIN,
    labels=None,
    zero=None,
    name="",
) -> PartialIRL:
    n = len(product)
    if n == 0:
        raise FormatError("algebras must have at least one element")
    product = _as_int_table(product, n, "product")
    ldiv = _as_int_table(ldiv, n, "ldiv")
    rdiv = _as_int_table(rdiv, n, "rdiv")
    masks = [
        _as_bool_table(product_mask, n, "product mask"),
        _as_bool_table(ldiv_mask, n, "ldiv mask"),
        _as_bool_table(rdiv_mask, n, "rdiv mask"),
    ]
    leq = None if order == CHAIN else _as_bool_table(order, n, "order")
    labels = tuple(labels) if labels is not None else _default_labels(n)
    if len(labels) != n or len(set(labels)) != n:
        raise FormatError("labels must be distinct and match size")
    if not 0 <= unit < n:
        raise FormatError("unit index out of range")
    return PartialIRL(
        size=n,
        labels=labels,
        leq=leq,
        unit=unit,
        product=product,
        ldiv=ldiv,
        rdiv=rdiv,
        product_mask=masks[0],
        ldiv_mask=masks[1],
        rdiv_mask=masks[2],
        zero=zero,
        name=name,
    )


def partial_from_total(alg: FiniteRL, name: str = "") -> PartialIRL:
    """View a total algebra as a partial one with all-true masks."""
    full = tuple(tuple(True for _ in range(alg.size)) for _ in range(alg.size))
    return PartialIRL(
        size=alg.size,
        labels=alg.labels,
        leq=alg.leq,
        unit=alg.unit,
        product=alg.product,
        ldiv=alg.ldiv,
        rdiv=alg.rdiv,
        product_mask=full,
        ldiv_mask=full,
        rdiv_mask=full,
        zero=alg.zero,
        name=name or alg.name,
    )


def with_zero(alg: FiniteRL, zero: int) -> FiniteRL:
    """Designate an element as the pointed constant 0."""
    if not 0 <= zero < alg.size:
        raise FormatError("zero index out of range")
    return replace(alg, zero=zero)


def relabel(alg: FiniteRL, labels, name=None) -> FiniteRL:
    labels = tuple(labels)
    if len(labels) != alg.size or len(set(labels)) != alg.size:
        raise FormatError("labels must be distinct and match size")
    return replace(alg, labels=labels, name=alg.name if name is None else name)


# ---------------------------------------------------------------------------
# order utilities


def _le_fn(order):
    if order == CHAIN or order is None:
        return lambda x, y: x <= y
    return lambda x, y: bool(order[x][y])


def lub(alg, x: int, y: int) -> int | None:
    """Least upper bound in the stored order, or None if it does not exist."""
    if alg.leq is None:
        return max(x, y)
    ubs = [z for z in range(alg.size) if alg.leq[x][z] and alg.leq[y][z]]
    for m in ubs:
        if all(alg.leq[m][z] for z in ubs):
            return m
    return None


def glb(alg, x: int, y: int) -> int | None:
    if alg.leq is None:
        return min(x, y)
    lbs = [z for z in range(alg.size) if alg.leq[z][x] and alg.leq[z][y]]
    for m in lbs:
        if all(alg.leq[z][m] for z in lbs):
            return m
    return None


@lru_cache(maxsize=None)
def meet_table(alg) -> tuple[tuple[int, ...], ...]:
    rows = []
    for x in range(alg.size):
        row = []
        for y in range(alg.size):
            m = glb(alg, x, y)
            if m is None:
                raise FormatError(f"order has no meet for pair ({x}, {y})")
            row.append(m)
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def join_table(alg) -> tuple[tuple[int, ...], ...]:
    rows = []
    for x in range(alg.size):
        row = []
        for y in range(alg.size):
            m = lub(alg, x, y)
            if m is None:
                raise FormatError(f"order has no join for pair ({x}, {y})")
            row.append(m)
        rows.append(tuple(row))
    return tuple(rows)


# ---------------------------------------------------------------------------
# residuals


def residuals_from_product(order, product, unit):
    """Derive ``(ldiv, rdiv)`` from a product table.

    ``ldiv[x][z]`` is the maximum ``y`` with ``x*y <= z``; ``rdiv[y][z]``
    the maximum ``x`` with ``x*y <= z``.  Raises :class:`NotResiduatedError`
    with the least pair whose candidate set has no maximum.
    """
    n = len(product)
    le = _le_fn(order)
    chain = order == CHAIN or order is None

    def greatest(candidates, pair):
        if not candidates:
            raise NotResiduatedError(pair)
        if chain:
            top = max(candidates)
        else:
            top = candidates[0]
            for c in candidates[1:]:
                if le(top, c):
                    top = c
        if all(le(c, top) for c in candidates):
            return top
        raise NotResiduatedError(pair)

    ldiv = [[0] * n for _ in range(n)]
    rdiv = [[0] * n for _ in range(n)]
    for x in range(n):
        for z in range(n):
            ldiv[x][z] = greatest([y for y in range(n) if le(product[x][y], z)], (x, z))
    for y in range(n):
        for z in range(n):
            rdiv[y][z] = greatest([x for x in range(n) if le(product[x][y], z)], (y, z))
    return tuple(map(tuple, ldiv)), tuple(map(tuple, rdiv))


# ---------------------------------------------------------------------------
# validation


def _check_lattice(alg):
    if alg.leq is None:
        return CheckOutcome("lattice", True)
    n = alg.size
    leq = alg.leq
    for x in range(n):
        if not leq[x][x]:
            return CheckOutcome("lattice", False, (x,), "order not reflexive")
    for x in range(n):
        for y in range(n):
            if x != y and leq[x][y] and leq[y][x]:
                return CheckOutcome("lattice", False, (x, y), "order not antisymmetric")
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if leq[x][y] and leq[y][z] and not leq[x][z]:
                    return CheckOutcome("lattice", False, (x, y, z), "order not transitive")
    for x in range(n):
        for y in range(n):
            if glb(alg, x, y) is None:
                return CheckOutcome("lattice", False, (x, y), "pair has no meet")
            if lub(alg, x, y) is None:
                return CheckOutcome("lattice", False, (x, y), "pair has no join")
    return CheckOutcome("lattice", True)


def _check_monoid(alg):
    n, p, e = alg.size, alg.product, alg.unit
    for x in range(n):
        if p[e][x] != x or p[x][e] != x:
            return CheckOutcome("monoid", False, (x,), "unit law fails")
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if p[p[x][y]][z] != p[x][p[y][z]]:
                    return CheckOutcome("monoid", False, (x, y, z), "associativity fails")
    return CheckOutcome("monoid", True)


def _check_residuation(alg):
    n, p = alg.size, alg.product
    le = alg.le
    for x in range(n):
        for y in range(n):
            for z in range(n):
                a = le(p[x][y], z)
                b = le(y, alg.ldiv[x][z])
                c = le(x, alg.rdiv[y][z])
                if a != b or b != c:
                    return CheckOutcome("residuation", False, (x, y, z), "x*y <= z <=> y <= x\\z <=> x <= z/y fails")
    return CheckOutcome("residuation", True)


def _check_integral(alg):
    for x in range(alg.size):
        if not alg.le(x, alg.unit):
            return CheckOutcome("integral", False, (x,), "element above the unit")
    return CheckOutcome("integral", True)


def _check_commutative(alg):
    for x in range(alg.size):
        for y in range(alg.size):
            if alg.product[x][y] != alg.product[y][x]:
                return CheckOutcome("commutative", False, (x, y), "product not symmetric")
    return CheckOutcome("commutative", True)


def _check_chain(alg):
    if alg.leq is None:
        return CheckOutcome("chain", True)
    for x in range(alg.size):
        for y in range(alg.size):
            if not alg.leq[x][y] and not alg.leq[y][x]:
                return CheckOutcome("chain", False, (x, y), "incomparable pair")
    return CheckOutcome("chain", True)


def _check_zero_bounded(alg):
    if alg.zero is None:
        return CheckOutcome("zero-bounded", False, None, "no zero constant")
    for x in range(alg.size):
        if not alg.le(alg.zero, x):
            return CheckOutcome("zero-bounded", False, (x,), "zero is not the bottom")
    return CheckOutcome("zero-bounded", True)


_FLAG_CHECKS = {
    "lattice": _check_lattice,
    "monoid": _check_monoid,
    "residuation": _check_residuation,
    "integral": _check_integral,
    "commutative": _check_commutative,
    "chain": _check_chain,
    "zero-bounded": _check_zero_bounded,
}


def validate(alg: FiniteRL, required=RL_FLAGS) -> ValidationReport:
    """Check the requested flags, reporting the least counterexample each."""
    required = list(required)
    for f in required:
        if f not in _FLAG_CHECKS:
            raise FormatError(f"unknown validation flag {f!r}")
    checks = []
    for flag in VALIDATE_FLAGS:
        if flag in required:
            checks.append(_FLAG_CHECKS[flag](alg))
    return ValidationReport(alg.name or "algebra", tuple(checks))


def is_valid_rl(alg: FiniteRL) -> bool:
    return validate(alg, RL_FLAGS).ok


# ---------------------------------------------------------------------------
# partial validation


def validate_partial(p: PartialIRL) -> ValidationReport:
    """Check the partial-IRL axioms; stops at the first violated clause."""
    n = p.size
    le = p.le
    pm, lm, rm = p.product_mask, p.ldiv_mask, p.rdiv_mask
    prod, ld, rd = p.product, p.ldiv, p.rdiv

    def report(*checks):
        return ValidationReport(p.name or "partial", tuple(checks))

    passed = []

    lat = _check_lattice(p)
    if not lat.ok:
        return report(*passed, lat)
    passed.append(lat)

    for x in range(n):
        if not le(x, p.unit):
            return report(*passed, CheckOutcome("integral", False, (x,)))
    passed.append(CheckOutcome("integral", True))

    for x in range(n):
        if not (pm[x][p.unit] and pm[p.unit][x]):
            return report(*passed, CheckOutcome("unit", False, (x,), "product with unit undefined"))
        if prod[x][p.unit] != x or prod[p.unit][x] != x:
            return report(*passed, CheckOutcome("unit", False, (x,), "unit law fails"))
    passed.append(CheckOutcome("unit", True))

    for x in range(n):
        for y in range(n):
            for z in range(n):
                if not (pm[x][y] and pm[y][z]):
                    continue
                xy, yz = prod[x][y], prod[y][z]
                if pm[xy][z] and pm[x][yz] and prod[xy][z] != prod[x][yz]:
                    return report(*passed, CheckOutcome("associativity", False, (x, y, z)))
    passed.append(CheckOutcome("associativity", True))

    for x in range(n):
        for y in range(n):
            for z in range(n):
                if not (pm[x][y] and lm[x][z] and rm[y][z]):
                    continue
                a = le(prod[x][y], z)
                b = le(y, ld[x][z])
                c = le(x, rd[y][z])
                if a != b or b != c:
                    return report(*passed, CheckOutcome("residuation", False, (x, y, z)))
    passed.append(CheckOutcome("residuation", True))

    for a in range(n):
        for b in range(n):
            if not le(a, b):
                continue
            for c in range(n):
                if pm[a][c] and pm[b][c] and not le(prod[a][c], prod[b][c]):
                    return report(*passed, CheckOutcome("product-monotone", False, (a, b, c)))
                if pm[c][a] and pm[c][b] and not le(prod[c][a], prod[c][b]):
                    return report(*passed, CheckOutcome("product-monotone", False, (a, b, c)))
    passed.append(CheckOutcome("product-monotone", True))

    for x in range(n):
        for y in range(n):
            if not le(x, y):
                continue
            for z in range(n):
                if lm[z][x] and lm[z][y] and not le(ld[z][x], ld[z][y]):
                    return report(*passed, CheckOutcome("division-monotone", False, (x, y, z), "z\\x <= z\\y fails"))
                if lm[y][z] and lm[x][z] and not le(ld[y][z], ld[x][z]):
                    return report(*passed, CheckOutcome("division-monotone", False, (x, y, z), "y\\z <= x\\z fails"))
                if rm[x][z] and rm[y][z] and not le(rd[y][z], rd[x][z]):
                    return report(*passed, CheckOutcome("division-monotone", False, (x, y, z), "z/x antitone fails"))
                if rm[z][x] and rm[z][y] and not le(rd[z][x], rd[z][y]):
                    return report(*passed, CheckOutcome("division-monotone", False, (x, y, z), "x/z monotone fails"))
    passed.append(CheckOutcome("division-monotone", True))

    for x in range(n):
        for y in range(n):
            for z in range(n):
                left = pm[x][y] and pm[prod[x][y]][z]
                right = pm[y][z] and pm[x][prod[y][z]]
                if left != right:
                    return report(*passed, CheckOutcome("partial-monoid", False, (x, y, z), "definedness iff fails"))
                if left and prod[prod[x][y]][z] != prod[x][prod[y][z]]:
                    return report(*passed, CheckOutcome("partial-monoid", False, (x, y, z)))
    passed.append(CheckOutcome("partial-monoid", True))

    return report(*passed)


# ---------------------------------------------------------------------------
# congruence filters, congruences, quotients


def is_congruence_filter(alg: FiniteRL, members) -> tuple[bool, str]:
    members = frozenset(members)
    if alg.unit not in members:
        return False, "unit missing"
    for x in members:
        for y in range(alg.size):
            if alg.le(x, y) and y not in members:
                return False, f"not upward closed at ({x}, {y})"
    for x in members:
        for y in members:
            if alg.product[x][y] not in members:
                return False, f"not closed under product at ({x}, {y})"
    for x in members:
        for y in range(alg.size):
            # conjugates y\(xy) and (yx)/y
            if alg.ldiv[y][alg.product[x][y]] not in members:
                return False, f"not closed under left conjugate at ({x}, {y})"
            if alg.rdiv[y][alg.product[y][x]] not in members:
                return False, f"not closed under right conjugate at ({x}, {y})"
    return True, ""


def filter_closure(alg: FiniteRL, seed) -> frozenset[int]:
    """Least congruence filter containing ``seed``."""
    members = set(seed) | {alg.unit}
    changed = True
    while changed:
        changed = False
        new = set()
        for x in members:
            for y in range(alg.size):
                if alg.le(x, y):
                    new.add(y)
        for x in members:
            for y in members:
                new.add(alg.product[x][y])
        for x in members:
            for y in range(alg.size):
                new.add(alg.ldiv[y][alg.product[x][y]])
                new.add(alg.rdiv[y][alg.product[y][x]])
        if not new <= members:
            members |= new
            changed = True
    return frozenset(members)


def congruence_filters(alg: FiniteRL) -> list[CongruenceFilter]:
    """All congruence filters, by breadth-first closure of added generators.

    Sorted by size, then lexicographically on the sorted member tuples.
    """
    least = filter_closure(alg, ())
    found = {least}
    frontier = [least]
    while frontier:
        current = frontier.pop()
        for x in range(alg.size):
            if x in current:
                continue
            bigger = filter_closure(alg, current | {x})
            if bigger not in found:
                found.add(bigger)
                frontier.append(bigger)
    ordered = sorted(found, key=lambda f: (len(f), tuple(sorted(f))))
    return [CongruenceFilter(alg, f) for f in ordered]


def filter_to_congruence(F: CongruenceFilter) -> tuple[tuple[int, ...], ...]:
    """Partition induced by ``x ~ y iff x\\y and y\\x in F``."""
    alg = F.parent
    members = F.members
    n = alg.size
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for x in range(n):
        for y in range(x + 1, n):
            if alg.ldiv[x][y] in members and alg.ldiv[y][x] in members:
                union(x, y)
    blocks = {}
    for x in range(n):
        blocks.setdefault(find(x), []).append(x)
    return tuple(tuple(sorted(b)) for b in sorted(blocks.values(), key=min))


def congruence_to_filter(alg: FiniteRL, partition) -> CongruenceFilter:
    """Inverse map; raises :class:`NotCongruenceError` on invalid input."""
    blocks = [tuple(sorted(b)) for b in partition]
    seen = sorted(x for b in blocks for x in b)
    if seen != list(range(alg.size)):
        raise NotCongruenceError("not a partition of the carrier")
    block_of = {}
    for i, b in enumerate(blocks):
        for x in b:
            block_of[x] = i

    tables = {
        "product": alg.product,
        "meet": meet_table(alg),
        "join": join_table(alg),
        "ldiv": alg.ldiv,
        "rdiv": alg.rdiv,
    }
    for opname, table in tables.items():
        for b1 in blocks:
            for b2 in blocks:
                images = {block_of[table[x][y]] for x in b1 for y in b2}
                if len(images) > 1:
                    raise NotCongruenceError(
                        f"partition not compatible with {opname} on blocks {b1} x {b2}"
                    )
    return CongruenceFilter(alg, frozenset(blocks[block_of[alg.unit]]))


def quotient(alg: FiniteRL, F: CongruenceFilter) -> FiniteRL:
    """Quotient algebra on the blocks of the induced congruence."""
    blocks = filter_to_congruence(F)
    block_of = {}
    for i, b in enumerate(blocks):
        for x in b:
            block_of[x] = i
    reps = [b[0] for b in blocks]
    m = len(blocks)
    product = [[block_of[alg.product[reps[i]][reps[j]]] for j in range(m)] for i in range(m)]
    ldiv = [[block_of[alg.ldiv[reps[i]][reps[j]]] for j in range(m)] for i in range(m)]
    rdiv = [[block_of[alg.rdiv[reps[i]][reps[j]]] for j in range(m)] for i in range(m)]
    if alg.leq is None:
        order = CHAIN
    else:
        mt = meet_table(alg)
        order = [
            [block_of[mt[reps[i]][reps[j]]] == i for j in range(m)]
            for i in range(m)
        ]
    labels = tuple("|".join(alg.labels[x] for x in b) for b in blocks)
    return make_algebra(
        product=product,
        unit=block_of[alg.unit],
        order=order,
        labels=labels,
        ldiv=ldiv,
        rdiv=rdiv,
        zero=None if alg.zero is None else block_of[alg.zero],
        name=f"{alg.name}/{sorted(F.members)}" if alg.name else "",
    )


def subalgebra_generated(alg: FiniteRL, seed) -> tuple[FiniteRL, Morphism]:
    """Least subuniverse containing the seed, the unit, and the zero."""
    members = set(seed) | {alg.unit}
    if alg.zero is not None:
        members.add(alg.zero)
    mt, jt = meet_table(alg), join_table(alg)
    changed = True
    while changed:
        changed = False
        new = set()
        for x in members:
            for y in members:
                new.update(
                    (alg.product[x][y], mt[x][y], jt[x][y], alg.ldiv[x][y], alg.rdiv[x][y])
                )
        if not new <= members:
            members |= new
            changed = True
    elems = sorted(members)
    index = {x: i for i, x in enumerate(elems)}
    m = len(elems)

    def restrict(table):
        return [[index[table[x][y]] for y in elems] for x in elems]

    if alg.leq is None:
        order = CHAIN
    else:
        order = [[alg.leq[x][y] for y in elems] for x in elems]
    sub = make_algebra(
        product=restrict(alg.product),
        unit=index[alg.unit],
        order=order,
        labels=tuple(alg.labels[x] for x in elems),
        ldiv=restrict(alg.ldiv),
        rdiv=restrict(alg.rdiv),
        zero=None if alg.zero is None else index[alg.zero],
        name=f"{alg.name}<{sorted(seed)}>" if alg.name else "",
    )
    inclusion = Morphism(dom=sub, cod=alg, map=tuple(elems), kind=EMBEDDING)
    return sub, inclusion


# ---------------------------------------------------------------------------
# morphisms


def validate_morphism(m: Morphism) -> ValidationReport:
    """Preservation of all operations and constants; injectivity for embeddings."""
    dom, cod, f = m.dom, m.cod, m.map
    checks = []

    ok_format = len(f) == dom.size and all(0 <= v < cod.size for v in f)
    checks.append(CheckOutcome("format", ok_format))
    if not ok_format:
        return ValidationReport("morphism", tuple(checks))

    checks.append(CheckOutcome("unit", f[dom.unit] == cod.unit, (dom.unit,) if f[dom.unit] != cod.unit else None))
    if dom.zero is not None and cod.zero is not None:
        checks.append(CheckOutcome("zero", f[dom.zero] == cod.zero))

    pairs = [
        ("product", dom.product, cod.product),
        ("meet", meet_table(dom), meet_table(cod)),
        ("join", join_table(dom), join_table(cod)),
        ("ldiv", dom.ldiv, cod.ldiv),
        ("rdiv", dom.rdiv, cod.rdiv),
    ]
    for opname, dt, ct in pairs:
        witness = None
        for x in range(dom.size):
            for y in range(dom.size):
                if f[dt[x][y]] != ct[f[x]][f[y]]:
                    witness = (x, y)
                    break
            if witness:
                break
        checks.append(CheckOutcome(opname, witness is None, witness))

    if m.kind == EMBEDDING:
        inj = len(set(f)) == len(f)
        checks.append(CheckOutcome("injective", inj))
    return ValidationReport("morphism", tuple(checks))


def compose(outer: Morphism, inner: Morphism) -> tuple[int, ...]:
    """Index map of ``outer . inner``."""
    return tuple(outer.map[v] for v in inner.map)


def tables_equal(a: FiniteRL, b: FiniteRL) -> bool:
    """Structural equality: everything except names and labels."""
    return (
        a.size == b.size
        and a.leq == b.leq
        and a.unit == b.unit
        and a.product == b.product
        and a.ldiv == b.ldiv
        and a.rdiv == b.rdiv
        and a.zero == b.zero
    )


def reduct_tables_equal(a: FiniteRL, b: FiniteRL) -> bool:
    """Like :func:`tables_equal` but ignoring the pointed constant."""
    return (
        a.size == b.size
        and a.leq == b.leq
        and a.unit == b.unit
        and a.product == b.product
        and a.ldiv == b.ldiv
        and a.rdiv == b.rdiv
    )
