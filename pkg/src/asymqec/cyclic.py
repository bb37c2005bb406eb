"""Cyclic codes over GF(q) identified by their defining sets.

A code is the triple (n, q, T) with T a union of cyclotomic cosets; the
generator polynomial is derived from T and cached, never authoritative, so
the set calculus (intersection = union of defining sets, sum = intersection,
dual = complement of the negated set, containment = reverse inclusion) is
exact and cheap, and the polynomial routes cross-check it.

Also here: BCH / Reed-Solomon / Hamming constructors, generator and parity
check matrices, encoding and membership tests, and the canonical textual
code descriptors shared by the library and the CLI:

    q=2 n=15 T={1,2,4,8}
    bch:n=15,q=2,delta=5      hamming:m=4,q=2      rs:q=8,delta=3
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from . import galois
from .errors import InternalConsistencyError
from .galois import Field, field_of_size, nth_root_field, subfield_embedding
from .polyring import Polynomial, coset_of, factor_xn_minus_1


@dataclass(frozen=True)
class DefiningSet:
    """A union of cyclotomic cosets modulo n, the identity of a cyclic code."""

    n: int
    q: int
    members: frozenset[int]

    @classmethod
    def closed(cls, n: int, q: int, members: Iterable[int]) -> DefiningSet:
        """Validate coset closure; a non-closed input is rejected, not closed."""
        if n < 1:
            raise ValueError(f"length n={n} must be positive")
        if gcd(n, q) != 1:
            raise ValueError(f"gcd(n={n}, q={q}) != 1: unsupported repeated-root length")
        mset = frozenset(int(s) % n for s in members)
        for s in sorted(mset):
            orbit = coset_of(n, q, s).members
            missing = [t for t in orbit if t not in mset]
            if missing:
                raise ValueError(
                    f"defining set is not closed under multiplication by {q} mod {n}: "
                    f"residue {s} needs its whole coset {{{','.join(map(str, orbit))}}}, "
                    f"missing {missing}"
                )
        return cls(n, q, mset)

    @property
    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def complement(self) -> DefiningSet:
        return DefiningSet(self.n, self.q, frozenset(range(self.n)) - self.members)

    def inverse(self) -> DefiningSet:
        """The set -T mod n (also coset-closed)."""
        return DefiningSet(self.n, self.q, frozenset((-s) % self.n for s in self.members))

    def union(self, other: DefiningSet) -> DefiningSet:
        self._check(other)
        return DefiningSet(self.n, self.q, self.members | other.members)

    def intersection(self, other: DefiningSet) -> DefiningSet:
        self._check(other)
        return DefiningSet(self.n, self.q, self.members & other.members)

    def _check(self, other: DefiningSet) -> None:
        if (self.n, self.q) != (other.n, other.q):
            raise ValueError(
                f"mismatched codes: (n={self.n}, q={self.q}) vs (n={other.n}, q={other.q})"
            )

    def __str__(self) -> str:
        return "{" + ",".join(str(s) for s in self.sorted_members) + "}"


def consecutive_run_bound(n: int, members: frozenset[int]) -> int:
    """Designed-distance bound: longest cyclic run of consecutive residues + 1."""
    if not members:
        return 1
    if len(members) == n:
        return n + 1
    best = run = 0
    # scan two laps so wrap-around runs are seen whole
    for i in range(2 * n):
        if (i % n) in members:
            run += 1
            if run > best:
                best = run
            if best >= n:
                break
        else:
            run = 0
    return min(best, n) + 1


class CyclicCode:
    """A cyclic [n, k] code over GF(q) with defining set T."""

    __slots__ = ("n", "q", "T", "_g", "_h", "_dual")

    def __init__(self, T: DefiningSet):
        self.n = T.n
        self.q = T.q
        self.T = T
        self._g: Polynomial | None = None
        self._h: Polynomial | None = None
        self._dual: CyclicCode | None = None

    # -- parameters -----------------------------------------------------------

    @property
    def k(self) -> int:
        return self.n - len(self.T.members)

    @property
    def field(self) -> Field:
        return field_of_size(self.q)

    @property
    def designed_distance_bound(self) -> int:
        """Lower bound on the minimum distance from consecutive roots."""
        return consecutive_run_bound(self.n, self.T.members)

    @property
    def generator_polynomial(self) -> Polynomial:
        """prod over i in T of (x - alpha^i), derived from the coset factors."""
        if self._g is None:
            g = Polynomial.one(self.field)
            for coset, factor in factor_xn_minus_1(self.n, self.q):
                if coset.representative in self.T.members:
                    g = g * factor
            if g.degree != len(self.T.members):
                raise InternalConsistencyError(
                    f"generator degree {g.degree} != |T| = {len(self.T.members)}"
                )
            self._g = g
        return self._g

    @property
    def parity_polynomial(self) -> Polynomial:
        """h = (x^n - 1) / g."""
        if self._h is None:
            field = self.field
            xn1 = Polynomial.monomial(field, self.n) - Polynomial.one(field)
            quot, rem = xn1.div_rem(self.generator_polynomial)
            if not rem.is_zero:
                raise InternalConsistencyError("generator polynomial does not divide x^n - 1")
            self._h = quot
        return self._h

    @property
    def dual_generator_polynomial(self) -> Polynomial:
        """x^k h(1/x) / h(0), the generator of the dual code."""
        h = self.parity_polynomial
        rev = h.reverse()
        h0 = h.coefficient(0)
        if h0 == 0:
            raise InternalConsistencyError("parity polynomial has zero constant term")
        return rev.scale(self.field.inv_i(h0))

    # -- the defining-set calculus ---------------------------------------------

    def dual(self) -> CyclicCode:
        """Euclidean dual, computed from the defining set and cross-checked.

        T(dual) = Z_n minus (-T); the reversed-parity-polynomial route must
        produce the same generator or an InternalConsistencyError is raised.
        """
        if self._dual is None:
            dual_code = from_defining_set(
                self.n, self.q, self.T.inverse().complement().members
            )
            if dual_code.generator_polynomial != self.dual_generator_polynomial:
                raise InternalConsistencyError(
                    f"dual generator mismatch for (n={self.n}, q={self.q}, T={self.T})"
                )
            self._dual = dual_code
        return self._dual

    def contains(self, other: CyclicCode) -> bool:
        """True iff `other` is a subcode of self.

        All three criteria (defining-set inclusion, generator divisibility,
        parity divisibility) are evaluated and must agree.
        """
        self.T._check(other.T)
        by_sets = self.T.members <= other.T.members
        by_generator = self.generator_polynomial.divides(other.generator_polynomial)
        by_parity = other.parity_polynomial.divides(self.parity_polynomial)
        if not (by_sets == by_generator == by_parity):
            raise InternalConsistencyError(
                f"containment criteria disagree for T1={self.T}, T2={other.T}: "
                f"sets={by_sets}, generator={by_generator}, parity={by_parity}"
            )
        return by_sets

    # -- codewords ---------------------------------------------------------------

    def encode(self, message: Polynomial) -> tuple[int, ...]:
        """c(x) = m(x) g(x), returned as a length-n coefficient vector."""
        if message.field != self.field:
            raise ValueError(f"message over {message.field}, code over {self.field}")
        if message.degree >= self.k:
            raise ValueError(f"message degree {message.degree} too long for k={self.k}")
        word = message * self.generator_polynomial
        return tuple(word.coefficient(i) for i in range(self.n))

    def is_codeword(self, vector: Sequence[int]) -> bool:
        """True iff the vector's polynomial vanishes at alpha^i for all i in T."""
        if len(vector) != self.n:
            raise ValueError(f"expected length {self.n}, got {len(vector)}")
        if not self.T.members:
            return True
        ext, alpha = nth_root_field(self.n, self.q)
        embed, _ = subfield_embedding(self.field, ext)
        poly = Polynomial.from_coeffs(self.field, vector)
        for i in self.T.members:
            point = galois.FieldElement(ext, ext.pow_i(alpha.value, i))
            if poly.evaluate_embedded(point, embed) != 0:
                return False
        return True

    # -- identity -----------------------------------------------------------------

    def descriptor(self) -> str:
        """Canonical textual form, reparsed identically by library and CLI."""
        return f"q={self.q} n={self.n} T={self.T}"

    def label(self) -> str:
        return f"[{self.n},{self.k}]_{self.q}"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CyclicCode)
            and (self.n, self.q, self.T.members) == (other.n, other.q, other.T.members)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.q, self.T.members))

    def __repr__(self) -> str:
        return f"CyclicCode({self.descriptor()})"


# ---------------------------------------------------------------------------
# Constructors. Codes are interned so derived polynomials are computed once.
# ---------------------------------------------------------------------------

_CODE_CACHE: dict[tuple[int, int, frozenset[int]], CyclicCode] = {}
_CODE_LOCK = threading.Lock()


def from_defining_set(n: int, q: int, members: Iterable[int]) -> CyclicCode:
    """Build the cyclic code with the given coset-closed defining set."""
    T = DefiningSet.closed(n, q, members)
    key = (n, q, T.members)
    with _CODE_LOCK:
        code = _CODE_CACHE.get(key)
        if code is None:
            code = CyclicCode(T)
            _CODE_CACHE[key] = code
        return code


def full_space(n: int, q: int) -> CyclicCode:
    """The [n, n, 1] code (empty defining set, g = 1)."""
    return from_defining_set(n, q, ())


def zero_code(n: int, q: int) -> CyclicCode:
    """The [n, 0] code containing only the zero word."""
    return from_defining_set(n, q, range(n))


def repetition(n: int, q: int) -> CyclicCode:
    """The [n, 1, n] code generated by (x^n - 1)/(x - 1)."""
    return from_defining_set(n, q, range(1, n))


def bch(n: int, q: int, delta: int, b: int = 1) -> CyclicCode:
    """BCH code of designed distance delta: T is the coset closure of
    {b, b+1, ..., b+delta-2}. Narrow sense is b = 1."""
    if not 2 <= delta <= n:
        raise ValueError(f"designed distance delta={delta} out of range 2..{n}")
    members: set[int] = set()
    for i in range(b, b + delta - 1):
        members.update(coset_of(n, q, i).members)
    return from_defining_set(n, q, members)


def rs(q: int, delta: int, b: int = 1) -> CyclicCode:
    """Reed-Solomon code [q-1, q-delta, delta] over GF(q):
    T = {b, ..., b+delta-2}, singleton cosets since q = 1 mod n."""
    n = q - 1
    if n < 1:
        raise ValueError(f"q={q} too small for a Reed-Solomon code")
    if not 2 <= delta <= n:
        raise ValueError(f"designed distance delta={delta} out of range 2..{n}")
    return from_defining_set(n, q, [(b + i) % n for i in range(delta - 1)])


def hamming(m: int, q: int = 2) -> CyclicCode:
    """Cyclic Hamming code of redundancy m: length (q^m - 1)/(q - 1), T = coset of 1.

    Cyclic only when gcd(m, q - 1) = 1; other parameter pairs are rejected.
    """
    if m < 2:
        raise ValueError(f"redundancy m={m} must be >= 2")
    if gcd(m, q - 1) != 1:
        raise ValueError(f"Hamming code with m={m}, q={q} is not cyclic (gcd(m, q-1) != 1)")
    n = (q**m - 1) // (q - 1)
    return from_defining_set(n, q, coset_of(n, q, 1).members)


def intersect(c1: CyclicCode, c2: CyclicCode) -> CyclicCode:
    """C1 and C2 intersect to the code with defining set T1 union T2."""
    return from_defining_set(c1.n, c1.q, c1.T.union(c2.T).members)


def code_sum(c1: CyclicCode, c2: CyclicCode) -> CyclicCode:
    """C1 + C2 (the span) has defining set T1 intersect T2."""
    return from_defining_set(c1.n, c1.q, c1.T.intersection(c2.T).members)


def contains(outer: CyclicCode, inner: CyclicCode) -> bool:
    """True iff inner is a subcode of outer (all three criteria must agree)."""
    return outer.contains(inner)


def _clear_caches() -> None:
    _CODE_CACHE.clear()


galois.register_invalidation_hook(_clear_caches)


# ---------------------------------------------------------------------------
# Generator / parity-check matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckMatrix:
    """A full-row-rank matrix over GF(q) tagged with its role."""

    field: Field
    n: int
    rows: tuple[tuple[int, ...], ...]
    role: str  # "generator" | "parity"

    @property
    def row_count(self) -> int:
        return len(self.rows)

    def bitmask_rows(self) -> tuple[int, ...]:
        """Rows as integer bitmasks (characteristic 2 only)."""
        if self.field.p != 2 or self.field.m != 1:
            raise ValueError("bitmask rows are only defined over GF(2)")
        out = []
        for row in self.rows:
            mask = 0
            for i, c in enumerate(row):
                if c:
                    mask |= 1 << i
            out.append(mask)
        return tuple(out)

    def syndrome(self, vector: Sequence[int]) -> tuple[int, ...]:
        if len(vector) != self.n:
            raise ValueError(f"expected length {self.n}, got {len(vector)}")
        f = self.field
        out = []
        for row in self.rows:
            acc = 0
            for a, b in zip(row, vector):
                if a and b:
                    acc = f.add_i(acc, f.mul_i(a, b))
            out.append(acc)
        return tuple(out)


def generator_matrix(code: CyclicCode) -> CheckMatrix:
    """k x n matrix whose rows are the cyclic shifts of g's coefficients."""
    g = code.generator_polynomial
    deg = len(code.T.members)
    rows = []
    for shift in range(code.k):
        row = [0] * code.n
        for j in range(deg + 1):
            row[shift + j] = g.coefficient(j)
        rows.append(tuple(row))
    return CheckMatrix(code.field, code.n, tuple(rows), "generator")


def parity_check_matrix(code: CyclicCode) -> CheckMatrix:
    """(n-k) x n matrix built from the reversed parity polynomial.

    Row j is the coefficient vector of x^j * x^k h(1/x); H annihilates
    exactly the codewords of the code.
    """
    h = code.parity_polynomial
    k = code.k
    rev = [h.coefficient(k - i) for i in range(k + 1)]
    rows = []
    for shift in range(code.n - k):
        row = [0] * code.n
        for i, c in enumerate(rev):
            row[shift + i] = c
        rows.append(tuple(row))
    return CheckMatrix(code.field, code.n, tuple(rows), "parity")


def product_is_zero(a: CheckMatrix, b: CheckMatrix) -> bool:
    """True iff A . B^T = 0 over the common field."""
    if a.n != b.n:
        raise ValueError(f"column count mismatch: {a.n} vs {b.n}")
    if a.field != b.field:
        raise ValueError(f"mixed fields: {a.field} vs {b.field}")
    f = a.field
    if f.p == 2 and f.m == 1:
        arows = a.bitmask_rows()
        brows = b.bitmask_rows()
        return all((ra & rb).bit_count() % 2 == 0 for ra in arows for rb in brows)
    for ra in a.rows:
        for rb in b.rows:
            acc = 0
            for x, y in zip(ra, rb):
                if x and y:
                    acc = f.add_i(acc, f.mul_i(x, y))
            if acc != 0:
                return False
    return True


# ---------------------------------------------------------------------------
# Descriptors
# ---------------------------------------------------------------------------

_SET_RE = re.compile(r"^\{(.*)\}$")


def _parse_kv(body: str) -> dict[str, str]:
    # split on commas/whitespace that are not inside {...}
    parts: list[str] = []
    depth = 0
    current = []
    for ch in body:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch in ", \t" and depth == 0:
            if current:
                parts.append("".join(current))
                current = []
        else:
            current.append(ch)
    if current:
        parts.append("".join(current))
    out: dict[str, str] = {}
    for part in parts:
        if "=" not in part:
            raise ValueError(f"expected key=value, got {part!r}")
        key, value = part.split("=", 1)
        key, value = key.strip(), value.strip()
        if key in out:
            # shells brace-expand T={1,2,4,8} into repeated T= tokens; merge them
            out[key] = out[key] + "," + value
        else:
            out[key] = value
    return out


def _parse_int_set(text: str) -> tuple[int, ...]:
    m = _SET_RE.match(text.strip())
    if not m:
        raise ValueError(f"expected a {{...}} residue set, got {text!r}")
    inner = m.group(1).strip()
    if not inner:
        return ()
    return tuple(int(tok) for tok in inner.split(","))


def parse_residue_set(text: str) -> tuple[int, ...]:
    """Parse "{3,6,9,12}" (or a bare comma list) into a residue tuple."""
    text = text.strip()
    if text.startswith("{"):
        return _parse_int_set(text)
    if not text:
        return ()
    return tuple(int(tok) for tok in text.split(","))


def parse_code(text: str) -> CyclicCode:
    """Parse a code descriptor: canonical `q=.. n=.. T={..}` or a shorthand.

    Shorthands: `bch:n=15,q=2,delta=5[,b=1]`, `hamming:m=4,q=2`,
    `rs:q=8,delta=3[,b=1]`.
    """
    body = text.strip()
    if ":" in body.split("=", 1)[0]:
        kind, _, rest = body.partition(":")
        kv = _parse_kv(rest)
        kind = kind.strip().lower()
        try:
            if kind == "bch":
                return bch(int(kv["n"]), int(kv["q"]), int(kv["delta"]), int(kv.get("b", 1)))
            if kind == "rs":
                return rs(int(kv["q"]), int(kv["delta"]), int(kv.get("b", 1)))
            if kind == "hamming":
                return hamming(int(kv["m"]), int(kv.get("q", 2)))
        except KeyError as exc:
            raise ValueError(f"descriptor {text!r} is missing {exc}") from None
        raise ValueError(f"unknown code shorthand {kind!r}")
    kv = _parse_kv(body)
    missing = {"q", "n", "T"} - set(kv)
    if missing:
        raise ValueError(f"descriptor {text!r} is missing {sorted(missing)}")
    return from_defining_set(int(kv["n"]), int(kv["q"]), parse_residue_set(kv["T"]))
