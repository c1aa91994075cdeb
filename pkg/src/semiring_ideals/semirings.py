"""Concrete commutative semirings with decidable element arithmetic.

Every carrier here is a value type: elements are plain hashable Python
values (ints, tuples, frozensets, or the BOTTOM sentinel), operations are
pure functions, and equality is structural after canonicalization.  The
catalog covers the carriers on which ideal membership is decidable:

* ``Naturals``       -- (N0, +, *)
* ``GcdNaturals``    -- nonnegative integers under (gcd, *); the element n
                        stands for the set of multiples of n, so this is the
                        semiring of "principal chunks" of the integers
* ``Boolean``        -- {0, 1} under (or, and)
* ``MinPlus(k)``     -- k-tuples of naturals under (componentwise min, +),
                        with an adjoined BOTTOM as additive identity
* ``DivisorLattice`` -- divisors of n under (lcm, gcd)
* ``PowersetLattice``-- subsets of {1..n} under (union, intersection)
* ``TableSemiring``  -- explicit finite operation tables

Table-defined carriers can be checked against the semiring axioms with
``verify_axioms``; every carrier can be spot-checked with
``sampled_axiom_check``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Sequence


class CarrierError(ValueError):
    """An element does not belong to the carrier it is used with."""


class UnsupportedOperation(RuntimeError):
    """The operation is not defined (or not decidable) for this carrier."""


class _Bottom:
    """Additive identity of the min-plus carriers, below every tuple."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "bottom"

    def __reduce__(self):
        return (_Bottom, ())


BOTTOM = _Bottom()


def is_prime_int(n: int) -> bool:
    """Primality by trial division; fine for the magnitudes used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


class Semiring:
    """A commutative semiring with identities 0 != 1 and absorbing zero.

    Subclasses fix the element representation and override the hooks that
    the ideal engine uses (``principalize``, ``divides``, ...).  Flags:

    * ``finite``             -- the carrier can be enumerated
    * ``semidomain``         -- every nonzero element is MC
    * ``principal_friendly`` -- every finitely generated ideal collapses to
                                a single generator via ``principalize``
    * ``membership_exact``   -- ideal membership over this carrier is exact
    """

    id: str = "semiring"
    finite = False
    semidomain = False
    principal_friendly = False
    membership_exact = True

    zero: Any = None
    one: Any = None

    # -- element protocol ---------------------------------------------------

    def check(self, a):
        """Validate (and canonicalize) an element; raises CarrierError."""
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero)

    def sort_key(self, a):
        """Total order on elements, used only for deterministic output."""
        return a

    def elements(self) -> Iterator:
        raise UnsupportedOperation(f"{self.id} is not finite")

    def order(self) -> int:
        raise UnsupportedOperation(f"{self.id} is not finite")

    # -- element predicates -------------------------------------------------

    def is_mc(self, a) -> bool:
        """True iff a is multiplicatively cancellable: ab = ac implies b = c."""
        raise NotImplementedError

    def is_unit(self, a) -> bool:
        """True iff a has a multiplicative inverse."""
        raise NotImplementedError

    # -- ideal strategy hooks (used by the ideal engine) ---------------------

    def principalize(self, gens: Sequence) -> Any | None:
        """Single generator of the ideal spanned by gens, or None.

        Only meaningful on principal-friendly carriers; gens are nonzero.
        """
        return None

    def divides(self, g, x) -> bool:
        """True iff x = s*g for some s, i.e. x lies in the ideal of g."""
        raise UnsupportedOperation(f"no divisibility rule for {self.id}")

    def exact_divide(self, x, g):
        """Some s with s*g = x, or None.  g is nonzero."""
        raise UnsupportedOperation(f"no exact division for {self.id}")

    def colon_principal(self, a, b):
        """Generator of [<a> : <b>] = {s : s*b in <a>} on principal carriers."""
        raise UnsupportedOperation(f"no principal colon rule for {self.id}")

    def meet_principal(self, a, b):
        """Generator of <a> & <b> (set intersection) on principal carriers."""
        raise UnsupportedOperation(f"no principal meet rule for {self.id}")

    # -- spectra -------------------------------------------------------------

    def maximal_ideal_generators(self) -> list[list] | None:
        """Generator lists of the maximal ideals, when known in closed form."""
        return None

    # -- presentation ---------------------------------------------------------

    def format_element(self, a) -> str:
        return repr(a)

    def element_to_json(self, a):
        return a

    def __repr__(self):
        return f"<semiring {self.id}>"


class Naturals(Semiring):
    """The natural numbers under ordinary addition and multiplication."""

    id = "nat"
    semidomain = True
    zero = 0
    one = 1

    def check(self, a):
        if not isinstance(a, int) or isinstance(a, bool) or a < 0:
            raise CarrierError(f"{a!r} is not a natural number")
        return a

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def is_mc(self, a):
        return a != 0

    def is_unit(self, a):
        return a == 1

    def divides(self, g, x):
        if g == 0:
            return x == 0
        return x % g == 0

    def exact_divide(self, x, g):
        if g != 0 and x % g == 0:
            return x // g
        return None

    def maximal_ideal_generators(self):
        # the nonunits {0, 2, 3, 4, ...} form the unique maximal ideal
        return [[2, 3]]

    def format_element(self, a):
        return str(a)


class GcdNaturals(Semiring):
    """Nonnegative integers under (gcd, *).

    The element n stands for the multiples of n; gcd is the sum of those
    sets, the integer product their product, 0 the zero set and 1 the whole
    carrier.  Every finitely generated ideal is principal with an MC
    generator, which makes this the canonical "everything works" carrier.
    """

    id = "gcd"
    semidomain = True
    principal_friendly = True
    zero = 0
    one = 1

    def check(self, a):
        if not isinstance(a, int) or isinstance(a, bool) or a < 0:
            raise CarrierError(f"{a!r} is not a nonnegative integer")
        return a

    def add(self, a, b):
        return math.gcd(a, b)

    def mul(self, a, b):
        return a * b

    def is_mc(self, a):
        return a != 0

    def is_unit(self, a):
        return a == 1

    def principalize(self, gens):
        return math.gcd(*gens) if len(gens) > 1 else gens[0]

    def divides(self, g, x):
        if g == 0:
            return x == 0
        return x % g == 0

    def exact_divide(self, x, g):
        if g != 0 and x % g == 0:
            return x // g
        return None

    def colon_principal(self, a, b):
        if b == 0:
            return 1
        if a == 0:
            return 0
        return a // math.gcd(a, b)

    def meet_principal(self, a, b):
        return math.lcm(a, b)

    def format_element(self, a):
        return str(a)


class Boolean(Semiring):
    """The two-element semiring {0, 1} under (or, and)."""

    id = "bool"
    finite = True
    semidomain = True
    principal_friendly = True
    zero = 0
    one = 1

    def check(self, a):
        if a not in (0, 1) or isinstance(a, bool):
            raise CarrierError(f"{a!r} is not a boolean semiring element")
        return a

    def add(self, a, b):
        return a | b

    def mul(self, a, b):
        return a & b

    def elements(self):
        return iter((0, 1))

    def order(self):
        return 2

    def is_mc(self, a):
        return a == 1

    def is_unit(self, a):
        return a == 1

    def principalize(self, gens):
        return max(gens)

    def divides(self, g, x):
        return x <= g

    def exact_divide(self, x, g):
        return x if x <= g else None

    def colon_principal(self, a, b):
        # {s : s & b <= a} is everything when b <= a, else the downset of a
        return 1 if b <= a else a

    def meet_principal(self, a, b):
        return a & b

    def maximal_ideal_generators(self):
        return [[0]]

    def format_element(self, a):
        return str(a)


class MinPlus(Semiring):
    """Tuples of k naturals under (componentwise min, componentwise +).

    BOTTOM is adjoined as the additive identity and multiplicative
    absorber.  This carrier behaves like a "k-fold valuation" semidomain:
    it is semilocal with exactly k maximal ideals (one per coordinate) and
    every finitely generated ideal is principal.
    """

    semidomain = True
    principal_friendly = True

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("min-plus arity must be positive")
        self.k = k
        self.id = f"minplus{k}"
        self.zero = BOTTOM
        self.one = (0,) * k

    def check(self, a):
        if a is BOTTOM:
            return a
        if (
            not isinstance(a, tuple)
            or len(a) != self.k
            or not all(isinstance(c, int) and not isinstance(c, bool) and c >= 0 for c in a)
        ):
            raise CarrierError(f"{a!r} is not a minplus{self.k} element")
        return a

    def add(self, a, b):
        if a is BOTTOM:
            return b
        if b is BOTTOM:
            return a
        return tuple(map(min, a, b))

    def mul(self, a, b):
        if a is BOTTOM or b is BOTTOM:
            return BOTTOM
        return tuple(x + y for x, y in zip(a, b))

    def sort_key(self, a):
        # BOTTOM sorts first
        return (0,) if a is BOTTOM else (1, a)

    def is_mc(self, a):
        return a is not BOTTOM

    def is_unit(self, a):
        return a == self.one

    def principalize(self, gens):
        gens = [g for g in gens if g is not BOTTOM]
        if not gens:
            return BOTTOM
        return tuple(map(min, *gens)) if len(gens) > 1 else gens[0]

    def divides(self, g, x):
        if x is BOTTOM:
            return True
        if g is BOTTOM:
            return False
        return all(xi >= gi for xi, gi in zip(x, g))

    def exact_divide(self, x, g):
        if x is BOTTOM:
            return BOTTOM
        if g is BOTTOM or not self.divides(g, x):
            return None
        return tuple(xi - gi for xi, gi in zip(x, g))

    def colon_principal(self, a, b):
        if b is BOTTOM:
            return self.one
        if a is BOTTOM:
            return BOTTOM
        return tuple(max(ai - bi, 0) for ai, bi in zip(a, b))

    def meet_principal(self, a, b):
        if a is BOTTOM or b is BOTTOM:
            return BOTTOM
        return tuple(map(max, a, b))

    def maximal_ideal_generators(self):
        out = []
        for i in range(self.k):
            e = [0] * self.k
            e[i] = 1
            out.append([tuple(e)])
        return out

    def format_element(self, a):
        if a is BOTTOM:
            return "bottom"
        return "(" + ",".join(map(str, a)) + ")"

    def element_to_json(self, a):
        return "bottom" if a is BOTTOM else list(a)


class DivisorLattice(Semiring):
    """Divisors of n under (lcm, gcd): join is lcm, meet is gcd.

    The lattice bottom 1 is the semiring zero, the top n the semiring one.
    """

    finite = True
    principal_friendly = True

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("divisor lattice needs n >= 2")
        self.n = n
        self.id = f"divlat{n}"
        self.zero = 1
        self.one = n
        self._divisors = tuple(d for d in range(1, n + 1) if n % d == 0)

    def check(self, a):
        if not isinstance(a, int) or isinstance(a, bool) or a < 1 or self.n % a != 0:
            raise CarrierError(f"{a!r} is not a divisor of {self.n}")
        return a

    def add(self, a, b):
        return math.lcm(a, b)

    def mul(self, a, b):
        return math.gcd(a, b)

    def elements(self):
        return iter(self._divisors)

    def order(self):
        return len(self._divisors)

    def is_mc(self, a):
        # meet by anything below the top identifies distinct elements
        return a == self.n

    def is_unit(self, a):
        return a == self.n

    def principalize(self, gens):
        return math.lcm(*gens) if len(gens) > 1 else gens[0]

    def divides(self, g, x):
        return g % x == 0  # x <= g in the divisibility order

    def exact_divide(self, x, g):
        return x if g % x == 0 else None

    def colon_principal(self, a, b):
        best = self.zero
        for s in self._divisors:
            if a % math.gcd(s, b) == 0:
                best = math.lcm(best, s)
        return best

    def meet_principal(self, a, b):
        return math.gcd(a, b)

    def maximal_ideal_generators(self):
        return [[self.n // p] for p in prime_factors(self.n)]

    def format_element(self, a):
        return str(a)


class PowersetLattice(Semiring):
    """Subsets of {1..n} under (union, intersection)."""

    finite = True
    principal_friendly = True

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("powerset lattice needs n >= 1")
        self.n = n
        self.id = f"powerset{n}"
        self.zero = frozenset()
        self.one = frozenset(range(1, n + 1))

    def check(self, a):
        if not isinstance(a, frozenset) or not a <= self.one:
            raise CarrierError(f"{a!r} is not a subset of 1..{self.n}")
        return a

    def add(self, a, b):
        return a | b

    def mul(self, a, b):
        return a & b

    def elements(self):
        full = sorted(self.one)
        for mask in range(1 << self.n):
            yield frozenset(full[i] for i in range(self.n) if mask >> i & 1)

    def order(self):
        return 1 << self.n

    def sort_key(self, a):
        return (len(a), tuple(sorted(a)))

    def is_mc(self, a):
        return a == self.one

    def is_unit(self, a):
        return a == self.one

    def principalize(self, gens):
        out = frozenset()
        for g in gens:
            out |= g
        return out

    def divides(self, g, x):
        return x <= g

    def exact_divide(self, x, g):
        return x if x <= g else None

    def colon_principal(self, a, b):
        # largest s with s & b <= a: take a together with the complement of b
        return a | (self.one - b)

    def meet_principal(self, a, b):
        return a & b

    def maximal_ideal_generators(self):
        return [[self.one - {i}] for i in sorted(self.one)]

    def format_element(self, a):
        return "{" + ",".join(map(str, sorted(a))) + "}"

    def element_to_json(self, a):
        return sorted(a)


@dataclass(frozen=True)
class Violation:
    """One broken axiom with the witnessing elements."""

    axiom: str
    witness: tuple

    def to_json(self):
        return {"axiom": self.axiom, "witness": list(self.witness)}


class TableSemiring(Semiring):
    """A finite semiring given by explicit addition/multiplication tables.

    Elements are the indices 0..n-1.  The tables are NOT validated at
    construction; use verify_axioms.
    """

    finite = True

    def __init__(self, add_table, mul_table, zero=0, one=1, id=None):
        self.n = len(add_table)
        self.add_table = tuple(tuple(row) for row in add_table)
        self.mul_table = tuple(tuple(row) for row in mul_table)
        self.zero = zero
        self.one = one
        self.id = id if id is not None else f"table{self.n}"
        self.semidomain = self._compute_semidomain()
        self.principal_friendly = False

    def _compute_semidomain(self):
        return all(self._mc_scan(a) for a in range(self.n) if a != self.zero)

    def _mc_scan(self, a):
        row = self.mul_table[a]
        return len(set(row)) == self.n

    def check(self, a):
        if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < self.n:
            raise CarrierError(f"{a!r} is not an index below {self.n}")
        return a

    def add(self, a, b):
        return self.add_table[a][b]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def elements(self):
        return iter(range(self.n))

    def order(self):
        return self.n

    def is_mc(self, a):
        return self._mc_scan(a)

    def is_unit(self, a):
        return self.one in self.mul_table[a]

    def divides(self, g, x):
        return x in (self.mul_table[g][s] for s in range(self.n))

    def exact_divide(self, x, g):
        for s in range(self.n):
            if self.mul_table[g][s] == x:
                return s
        return None

    def format_element(self, a):
        return str(a)


def chain_lattice(n: int, id: str | None = None) -> TableSemiring:
    """The n-element chain 0 < 1 < ... < n-1 under (max, min).

    Index n-1 is the top (semiring one), index 0 the bottom.  Note the
    multiplicative identity sits at index n-1, not 1.
    """
    add = [[max(i, j) for j in range(n)] for i in range(n)]
    mul = [[min(i, j) for j in range(n)] for i in range(n)]
    return TableSemiring(add, mul, zero=0, one=n - 1, id=id or f"chain{n}")


def verify_axioms(table: TableSemiring) -> list[Violation]:
    """Exhaustively check the commutative-semiring axioms on a finite table.

    Returns the empty list iff the table is a commutative semiring with
    1 != 0; otherwise one Violation per broken axiom (first witness each).
    """
    n = table.n
    add, mul = table.add_table, table.mul_table
    out = []
    if len(add) != n or len(mul) != n or any(len(r) != n for r in add + mul):
        raise ValueError("tables must be square and equally sized")
    for row in add + mul:
        for v in row:
            if not 0 <= v < n:
                raise ValueError(f"table entry {v} out of range")
    if table.zero == table.one:
        out.append(Violation("zero-equals-one", (table.zero,)))

    def first(axiom, pred, triples):
        for t in triples:
            if not pred(*t):
                out.append(Violation(axiom, t))
                return

    rng = range(n)
    pairs = [(a, b) for a in rng for b in rng]
    triples = [(a, b, c) for a in rng for b in rng for c in rng]
    first("add-commutative", lambda a, b: add[a][b] == add[b][a], pairs)
    first("mul-commutative", lambda a, b: mul[a][b] == mul[b][a], pairs)
    first(
        "add-associative",
        lambda a, b, c: add[add[a][b]][c] == add[a][add[b][c]],
        triples,
    )
    first(
        "mul-associative",
        lambda a, b, c: mul[mul[a][b]][c] == mul[a][mul[b][c]],
        triples,
    )
    first(
        "distributive",
        lambda a, b, c: mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]],
        triples,
    )
    first("add-identity", lambda a: add[table.zero][a] == a, [(a,) for a in rng])
    first("mul-identity", lambda a: mul[table.one][a] == a, [(a,) for a in rng])
    first("absorbing", lambda a: mul[table.zero][a] == table.zero, [(a,) for a in rng])
    return out


def sampled_axiom_check(S: Semiring, samples: int, seed: int, sample_element) -> list[Violation]:
    """Spot-check the axioms on `samples` random triples of any carrier.

    `sample_element(rng)` draws one element.  Equality is exact; every
    violation names the axiom and the witnessing triple.
    """
    rng = random.Random(seed)
    out = []
    for _ in range(samples):
        a, b, c = sample_element(rng), sample_element(rng), sample_element(rng)
        checks = [
            ("add-commutative", S.eq(S.add(a, b), S.add(b, a))),
            ("mul-commutative", S.eq(S.mul(a, b), S.mul(b, a))),
            ("add-associative", S.eq(S.add(S.add(a, b), c), S.add(a, S.add(b, c)))),
            ("mul-associative", S.eq(S.mul(S.mul(a, b), c), S.mul(a, S.mul(b, c)))),
            ("distributive", S.eq(S.mul(a, S.add(b, c)), S.add(S.mul(a, b), S.mul(a, c)))),
            ("add-identity", S.eq(S.add(a, S.zero), a)),
            ("mul-identity", S.eq(S.mul(a, S.one), a)),
            ("absorbing", S.eq(S.mul(a, S.zero), S.zero)),
        ]
        for axiom, ok in checks:
            if not ok:
                out.append(Violation(axiom, (a, b, c)))
    return out


def parse_table(text: str, id: str | None = None) -> TableSemiring:
    """Read a finite table from the plain text exchange format.

    Line 1: ``order n``; line 2: ``zero i``; line 3: ``one j``; then n
    addition rows and n multiplication rows of space-separated indices.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) < 3:
        raise ValueError("truncated table header")
    head = []
    for idx, key in enumerate(("order", "zero", "one")):
        parts = lines[idx].split()
        if len(parts) != 2 or parts[0] != key:
            raise ValueError(f"line {idx + 1}: expected '{key} <int>'")
        head.append(int(parts[1]))
    n, zero, one = head
    if len(lines) != 3 + 2 * n:
        raise ValueError(f"expected {3 + 2 * n} lines, got {len(lines)}")

    def rows(start):
        block = []
        for i in range(n):
            row = [int(tok) for tok in lines[start + i].split()]
            if len(row) != n:
                raise ValueError(f"row {start + i + 1} has {len(row)} entries, wanted {n}")
            block.append(row)
        return block

    return TableSemiring(rows(3), rows(3 + n), zero=zero, one=one, id=id)


def format_table(table: TableSemiring) -> str:
    lines = [f"order {table.n}", f"zero {table.zero}", f"one {table.one}"]
    for row in table.add_table:
        lines.append(" ".join(map(str, row)))
    for row in table.mul_table:
        lines.append(" ".join(map(str, row)))
    return "\n".join(lines) + "\n"
