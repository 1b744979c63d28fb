"""Constraint-propagation completion of residuated-chain product tables.

The engine fills an ``m x m`` product table over the index chain
``0 < 1 < ... < m-1`` so that the result is a residuated chain: associative,
monotone in both arguments, with the given unit and with ``x*0 = 0*x = 0``
(on a finite chain that annihilation is exactly what makes both residuals
exist).  Cells may be pinned in advance, and division pins of the form
``x \\ z = d`` or ``z / y = d`` are enforced as exact residual values.

Candidate sets are bitmasks.  Propagation is deliberately limited to four
rules (monotonicity against fixed cells, associativity instances whose two
inner products are fixed, residual-pin consistency, unit laws); every
complete assignment is re-verified before it is reported, so the pruning
rules only ever need to be sound, not complete.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    CHAIN,
    BudgetExceededError,
    FiniteRL,
    FormatError,
    make_algebra,
    residuals_from_product,
    NotResiduatedError,
)
from .identities import check_identity, parse_identity


@dataclass(frozen=True)
class CompletionProblem:
    """A partially pinned product table over an ``m``-element chain."""

    size: int
    unit: int
    product_pins: dict  # (x, y) -> value
    ldiv_pins: dict  # (x, z) -> d, meaning x \ z = d exactly
    rdiv_pins: dict  # (y, z) -> d, meaning z / y = d exactly
    commutative: bool = False
    integral: bool = False
    zero: int | None = None  # pinned pointed constant (0-bounded mode)

    def check_well_formed(self):
        m = self.size
        if m < 1:
            raise FormatError("size must be positive")
        if not 0 <= self.unit < m:
            raise FormatError("unit out of range")
        if self.integral and self.unit != m - 1:
            raise FormatError("integral problems need the unit on top")
        if self.zero is not None and self.zero != 0:
            raise FormatError("a pinned zero must be the bottom element")
        for (x, y), v in self.product_pins.items():
            if not (0 <= x < m and 0 <= y < m and 0 <= v < m):
                raise FormatError("product pin out of range")
        for pins in (self.ldiv_pins, self.rdiv_pins):
            for (x, z), d in pins.items():
                if not (0 <= x < m and 0 <= z < m and 0 <= d < m):
                    raise FormatError("division pin out of range")


@dataclass
class SearchStats:
    nodes: int = 0
    solutions: int = 0


@dataclass(frozen=True)
class Budget:
    max_nodes: int = 10**8


class _Conflict(Exception):
    pass


_FULL_CACHE: dict[int, int] = {}


def _low_mask(v):
    # candidates <= v
    return (1 << (v + 1)) - 1


class _Engine:
    def __init__(self, problem: CompletionProblem, budget: Budget, stats: SearchStats):
        problem.check_well_formed()
        self.m = problem.size
        self.p = problem
        self.budget = budget
        self.stats = stats
        m = self.m
        full = (1 << m) - 1
        self.cand = [full] * (m * m)
        self.value = [-1] * (m * m)
        self.unfixed = m * m
        self.trail: list[tuple[int, int]] = []

    # -- basic cell operations ------------------------------------------------

    def _set_mask(self, cell, mask):
        old = self.cand[cell]
        new = old & mask
        if new == old:
            return
        if new == 0:
            raise _Conflict
        self.trail.append((cell, old))
        self.cand[cell] = new
        if self.p.commutative:
            x, y = divmod(cell, self.m)
            mirror = y * self.m + x
            if mirror != cell:
                self._set_mask(mirror, new)

    def _fix_queue(self):
        # cells that became singletons and were not processed yet
        return [
            c
            for c in range(self.m * self.m)
            if self.cand[c].bit_count() == 1 and self.value[c] == -1
        ]

    # -- initial constraints ---------------------------------------------------

    def init_constraints(self):
        m, u = self.m, self.p.unit
        for y in range(m):
            self._set_mask(u * m + y, 1 << y)
            self._set_mask(y * m + u, 1 << y)
        if m > 1:
            for x in range(m):
                self._set_mask(x * m + 0, 1)
                self._set_mask(0 * m + x, 1)
        for (x, y), v in self.p.product_pins.items():
            self._set_mask(x * m + y, 1 << v)
        full = (1 << m) - 1
        for (x, z), d in self.p.ldiv_pins.items():
            self._set_mask(x * m + d, _low_mask(z))
            above = full & ~_low_mask(z)
            for s in range(d + 1, m):
                self._set_mask(x * m + s, above)
        for (y, z), d in self.p.rdiv_pins.items():
            self._set_mask(d * m + y, _low_mask(z))
            above = full & ~_low_mask(z)
            for s in range(d + 1, m):
                self._set_mask(s * m + y, above)

    # -- propagation ------------------------------------------------------------

    def _fix(self, cell, v):
        self._set_mask(cell, 1 << v)
        self.trail.append((-cell - 1, self.value[cell]))
        self.value[cell] = v
        self.unfixed -= 1
        m = self.m
        x, y = divmod(cell, m)
        full = (1 << m) - 1
        # monotonicity against the newly fixed cell
        ge_mask = full & ~((1 << v) - 1)
        le_mask = _low_mask(v)
        for a in range(m):
            for b in range(m):
                if a >= x and b >= y:
                    self._set_mask(a * m + b, ge_mask)
                if a <= x and b <= y:
                    self._set_mask(a * m + b, le_mask)
        # associativity instances whose two inner products are fixed
        for z in range(m):
            w = self.value[y * m + z]
            if w != -1:  # (x*y)*z = x*(y*z) with x*y, y*z fixed
                self._link(v * m + z, x * m + w)
        for w in range(m):
            t = self.value[w * m + x]
            if t != -1:  # (w*x)*y = w*(x*y) with w*x, x*y fixed
                self._link(t * m + y, w * m + v)

    def _link(self, cell_a, cell_b):
        if cell_a == cell_b:
            return
        common = self.cand[cell_a] & self.cand[cell_b]
        self._set_mask(cell_a, common)
        self._set_mask(cell_b, common)

    def propagate(self):
        while True:
            pending = self._fix_queue()
            if not pending:
                return
            for cell in pending:
                if self.value[cell] == -1:
                    self._fix(cell, self.cand[cell].bit_length() - 1)

    # -- backtracking -----------------------------------------------------------

    def _mark(self):
        return len(self.trail)

    def _undo(self, mark):
        while len(self.trail) > mark:
            key, old = self.trail.pop()
            if key < 0:
                cell = -key - 1
                if self.value[cell] != -1 and old == -1:
                    self.unfixed += 1
                self.value[cell] = old
            else:
                self.cand[key] = old

    def _select_cell(self):
        best, best_count = -1, 1 << 30
        for c in range(self.m * self.m):
            if self.value[c] != -1:
                continue
            k = self.cand[c].bit_count()
            if k < best_count:
                best, best_count = c, k
                if k == 2:
                    break
        return best

    def solutions(self):
        try:
            self.init_constraints()
            self.propagate()
        except _Conflict:
            return
        yield from self._search()

    def _search(self):
        if self.unfixed == 0:
            table = [
                [self.value[x * self.m + y] for y in range(self.m)]
                for x in range(self.m)
            ]
            if self._verify(table):
                self.stats.solutions += 1
                yield table
            return
        cell = self._select_cell()
        mask = self.cand[cell]
        v = 0
        while mask:
            if mask & 1:
                self.stats.nodes += 1
                if self.stats.nodes > self.budget.max_nodes:
                    raise BudgetExceededError(self.stats.nodes)
                mark = self._mark()
                try:
                    self._fix(cell, v)
                    self.propagate()
                    yield from self._search()
                except _Conflict:
                    pass
                self._undo(mark)
            mask >>= 1
            v += 1

    # -- leaf verification --------------------------------------------------------

    def _verify(self, t):
        m, u = self.m, self.p.unit
        rng = range(m)
        for x in rng:
            if t[u][x] != x or t[x][u] != x:
                return False
        if m > 1:
            for x in rng:
                if t[x][0] != 0 or t[0][x] != 0:
                    return False
        for x in rng:
            for y in rng:
                if x and t[x][y] < t[x - 1][y]:
                    return False
                if y and t[x][y] < t[x][y - 1]:
                    return False
        for x in rng:
            for y in rng:
                txy = t[x][y]
                for z in rng:
                    if t[txy][z] != t[x][t[y][z]]:
                        return False
        if self.p.commutative:
            for x in rng:
                for y in rng:
                    if t[x][y] != t[y][x]:
                        return False
        for (x, y), v in self.p.product_pins.items():
            if t[x][y] != v:
                return False
        for (x, z), d in self.p.ldiv_pins.items():
            if t[x][d] > z or (d + 1 < m and t[x][d + 1] <= z):
                return False
        for (y, z), d in self.p.rdiv_pins.items():
            if t[d][y] > z or (d + 1 < m and t[d + 1][y] <= z):
                return False
        return True


def iter_completions(problem: CompletionProblem, budget: Budget = Budget(), stats: SearchStats | None = None):
    """All completed product tables, in canonical depth-first order."""
    stats = stats if stats is not None else SearchStats()
    yield from _Engine(problem, budget, stats).solutions()


def _algebra_from_table(table, unit, zero, name=""):
    return make_algebra(product=table, unit=unit, order=CHAIN, zero=zero, name=name)


def complete_table(problem: CompletionProblem, budget: Budget = Budget(), stats: SearchStats | None = None) -> FiniteRL | None:
    """First completion in canonical order, or ``None`` when unsatisfiable."""
    for table in iter_completions(problem, budget, stats):
        return _algebra_from_table(table, problem.unit, problem.zero)
    return None


# ---------------------------------------------------------------------------
# chain enumeration


@dataclass(frozen=True)
class ChainFlags:
    integral: bool = False
    commutative: bool = False
    k_potent: int | None = None
    divisible: bool = False
    pointed: bool = False


_DIV_IDENTITY = parse_identity("div")


def _is_k_potent(table, k):
    n = len(table)
    for x in range(n):
        p = x
        for _ in range(k - 1):
            p = table[p][x]
        if table[p][x] != p:
            return False
    return True


def _raw_stream(n: int, flags: ChainFlags, budget: Budget):
    units = [n - 1] if flags.integral else range(n)
    for unit in units:
        problem = CompletionProblem(
            size=n,
            unit=unit,
            product_pins={},
            ldiv_pins={},
            rdiv_pins={},
            commutative=flags.commutative,
            integral=flags.integral,
            zero=0 if flags.pointed else None,
        )
        for table in iter_completions(problem, budget):
            if flags.k_potent is not None and not _is_k_potent(table, flags.k_potent):
                continue
            yield unit, table


def enumerate_chains(n: int, flags: ChainFlags = ChainFlags(), budget: Budget = Budget()):
    """All residuated chains of size ``n`` with the requested properties.

    On a chain the only order automorphism is the identity, so distinct
    tables are pairwise non-isomorphic and the stream is a transversal of
    isomorphism classes.  The order is canonical and deterministic.
    """
    if n < 1:
        raise FormatError("size must be positive")
    count = 0
    for unit, table in _raw_stream(n, flags, budget):
        alg = _algebra_from_table(
            table, unit, 0 if flags.pointed else None, name=f"chain{n}_{count}"
        )
        if flags.divisible and not check_identity(alg, _DIV_IDENTITY).holds:
            continue
        count += 1
        yield alg


def count_chains(n: int, flags: ChainFlags = ChainFlags(), budget: Budget = Budget()) -> int:
    """Number of chains :func:`enumerate_chains` would yield, without
    materializing algebra objects."""
    if n < 1:
        raise FormatError("size must be positive")
    total = 0
    for unit, table in _raw_stream(n, flags, budget):
        if flags.divisible and not _divisible_raw(table, unit):
            continue
        total += 1
    return total


def _divisible_raw(table, unit):
    try:
        ldiv, rdiv = residuals_from_product(CHAIN, table, unit)
    except NotResiduatedError:
        return False
    n = len(table)
    for x in range(n):
        for y in range(n):
            m = min(x, y)
            if table[x][ldiv[x][y]] != m or table[rdiv[x][y]][x] != m:
                return False
    return True
