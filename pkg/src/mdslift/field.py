"""Finite fields F_p and F_{p^t} with exact arithmetic.

An element of F_{p^t} is the residue polynomial
c0 + c1*x + ... + c_{t-1}*x^{t-1} with coefficients in [0, p), reduced
modulo a monic irreducible polynomial of degree t. The canonical
storage form is the integer code c0 + c1*p + ... + c_{t-1}*p^{t-1}
(base-p digits, ascending degree); prime fields (t = 1) store the
value itself. Constant polynomials therefore have the same code as
their integer value, so embedding F_p into F_{p^t} is the identity on
codes.

Field construction is deterministic: ``make_extension_field`` selects
the lexicographically smallest monic irreducible modulus (coefficient
lists compared low degree first) for which the residue class of x
generates the multiplicative group, and uses x as the generator w.
``make_prime_field`` uses the smallest generator of (Z/p)*. Two
constructions of the same parameters always agree, so files written in
``w^k`` notation are reproducible across runs.

Primality and irreducibility are checked by deterministic trial
division; these fields are desk scale, not cryptographic scale.
"""

from __future__ import annotations

import functools
import itertools
import threading
from typing import Iterable, Iterator, Sequence

from .errors import (
    CharacteristicMismatch,
    DegreeTooSmall,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    FormatError,
    NotPrime,
)

#: Largest field order for which discrete-log tables may be built.
DLOG_TABLE_LIMIT = 1 << 20

# Extension fields up to this order get scalar exp/log tables
# automatically on first multiplication; beyond it, tables are built
# only when dlog printing asks for them.
_AUTO_TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m, ascending."""
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(m)
    return out


# ---------------------------------------------------------------------------
# dense polynomial helpers (coefficient lists over F_p, ascending degree)

def _poly_mul_mod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> list[int]:
    """(a * b) mod modulus; modulus monic of degree t, result length t."""
    t = len(modulus) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    res[i + j] = (res[i + j] + ai * bj) % p
    for i in range(len(res) - 1, t - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(t):
                if modulus[j]:
                    res[i - t + j] = (res[i - t + j] - c * modulus[j]) % p
    res = res[:t]
    res.extend([0] * (t - len(res)))
    return res


def _poly_divmod(num: Sequence[int], den: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    """Quotient and remainder of dense polynomials over F_p."""
    num = list(num)
    den = list(den)
    while len(den) > 1 and den[-1] == 0:
        den.pop()
    if den == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    dd = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p) if den[-1] != 1 else 1
    quot = [0] * max(1, len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = (num[i] * inv_lead) % p
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


def _poly_is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= t/2."""
    t = len(modulus) - 1
    for d in range(1, t // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            _, rem = _poly_divmod(modulus, divisor, p)
            if rem == [0]:
                return False
    return True


class FieldElement:
    """One element of a specific field, in canonical coordinate form.

    Value-like and immutable; arithmetic between elements of different
    fields raises ``FieldMismatch``. Plain ints mix in as constants
    (reduced mod p).
    """

    __slots__ = ("spec", "code")

    def __init__(self, spec: "FieldSpec", code: int) -> None:
        code = int(code)
        if not 0 <= code < spec.order:
            raise ValueError(f"code {code} out of range for {spec}")
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "code", code)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def coords(self) -> tuple[int, ...]:
        """Base-p digits of the code: residue-polynomial coefficients,
        ascending degree (length t)."""
        return self.spec.code_to_coords(self.code)

    def _coerce(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            if other.spec.field_id != self.spec.field_id:
                raise FieldMismatch(f"{self.spec} vs {other.spec}")
            return other
        if isinstance(other, int):
            return self.spec.element(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.add_code(self.code, o.code))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub_code(self.code, o.code))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub_code(o.code, self.code))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg_code(self.code))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul_code(self.code, o.code))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow_code(self.code, e))

    def inv(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv_code(self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.spec.field_id == other.spec.field_id and self.code == other.code

    def __hash__(self) -> int:
        return hash((self.spec.field_id, self.code))

    def __repr__(self) -> str:
        if self.spec.t == 1:
            return f"F{self.spec.p}({self.code})"
        return f"F{self.spec.p}^{self.spec.t}({list(self.coords)})"


class FieldSpec:
    """Full description of F_p or F_{p^t}.

    Immutable after construction. The lazily built exp/log tables are
    guarded by a lock, so concurrent readers may share one spec.
    Construct via ``make_prime_field``, ``make_extension_field`` or
    ``field_from_modulus`` rather than directly.
    """

    def __init__(self, p: int, t: int, modulus: tuple[int, ...] | None, w_code: int):
        self.p = p
        self.t = t
        self.modulus = modulus
        self.order = p ** t
        self.field_id = (p, t, modulus)
        self._w_code = w_code
        self._powers = [p ** i for i in range(t)]
        self._lock = threading.Lock()
        self._exp: list[int] | None = None  # exponent -> code, length order-1
        self._log: list[int] | None = None  # code -> exponent, -1 for 0

    # construction of elements -------------------------------------------------

    @property
    def generator_w(self) -> FieldElement:
        """A primitive element: x for extension fields, the smallest
        generator of (Z/p)* for prime fields."""
        return FieldElement(self, self._w_code)

    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def element(self, value: "int | Sequence[int] | FieldElement") -> FieldElement:
        """Coerce ``value`` into this field.

        Ints are constants (reduced mod p); sequences are coordinate
        vectors of length <= t, ascending degree.
        """
        if isinstance(value, FieldElement):
            if value.spec.field_id != self.field_id:
                raise FieldMismatch(f"{value.spec} element used in {self}")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        return self.from_coords(value)

    def from_coords(self, coords: Iterable[int]) -> FieldElement:
        coords = list(coords)
        if len(coords) > self.t:
            raise ValueError(f"{len(coords)} coordinates for degree-{self.t} field")
        code = 0
        for i, c in enumerate(coords):
            code += (c % self.p) * self._powers[i]
        return FieldElement(self, code)

    def from_code(self, code: int) -> FieldElement:
        return FieldElement(self, code)

    def code_to_coords(self, code: int) -> tuple[int, ...]:
        digits = []
        for _ in range(self.t):
            code, r = divmod(code, self.p)
            digits.append(r)
        return tuple(digits)

    def elements(self) -> Iterator[FieldElement]:
        """All field elements in code order (0 first)."""
        for c in range(self.order):
            yield FieldElement(self, c)

    # code-level arithmetic ----------------------------------------------------

    def add_code(self, a: int, b: int) -> int:
        if self.t == 1:
            return (a + b) % self.p
        p, code = self.p, 0
        for pw in self._powers:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            code += ((da + db) % p) * pw
        return code

    def sub_code(self, a: int, b: int) -> int:
        if self.t == 1:
            return (a - b) % self.p
        p, code = self.p, 0
        for pw in self._powers:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            code += ((da - db) % p) * pw
        return code

    def neg_code(self, a: int) -> int:
        return self.sub_code(0, a)

    def mul_code(self, a: int, b: int) -> int:
        if self.t == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        log = self._scalar_log()
        if log is not None:
            exp = self._exp
            return exp[(log[a] + log[b]) % (self.order - 1)]
        prod = _poly_mul_mod(self.code_to_coords(a), self.code_to_coords(b), self.modulus, self.p)
        return self._coords_code(prod)

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"inverse of zero in {self}")
        if self.t == 1:
            return pow(a, self.p - 2, self.p)
        log = self._scalar_log()
        if log is not None:
            m = self.order - 1
            return self._exp[(m - log[a]) % m]
        return self.pow_code(a, self.order - 2)

    def pow_code(self, a: int, e: int) -> int:
        """a^e with 0^0 = 1; e must be nonnegative."""
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        if self.t == 1:
            return pow(a, e, self.p)  # pow(0, 0, p) == 1, as required
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul_code(result, base)
            base = self.mul_code(base, base)
            e >>= 1
        return result

    # powers of w, discrete logs, embedding -------------------------------------

    def from_power(self, k: int) -> FieldElement:
        """w^(k mod (order - 1))."""
        return FieldElement(self, self.pow_code(self._w_code, k % (self.order - 1)))

    def dlog(self, a: FieldElement, *, table_limit: int | None = None) -> int:
        """Exponent k in [0, order-1) with w^k = a; a must be nonzero."""
        a = self.element(a)
        if a.code == 0:
            raise DivisionByZero(f"discrete log of zero in {self}")
        limit = DLOG_TABLE_LIMIT if table_limit is None else table_limit
        if self.order > limit:
            raise FieldTooLarge(f"order {self.order} exceeds dlog table limit {limit}")
        self._build_tables()
        return self._log[a.code]

    def embed(self, a: FieldElement) -> FieldElement:
        """Image of a prime-field element under the constant-polynomial
        embedding; a ring homomorphism."""
        if a.spec.t != 1:
            raise FieldMismatch("embedding is defined on prime-field elements")
        if a.spec.p != self.p:
            raise CharacteristicMismatch(f"cannot embed F_{a.spec.p} into {self}")
        return FieldElement(self, a.code)

    # internal tables ------------------------------------------------------------

    def _coords_code(self, coords: Sequence[int]) -> int:
        code = 0
        for c, pw in zip(coords, self._powers):
            code += c * pw
        return code

    def _scalar_log(self) -> list[int] | None:
        if self._log is None and self.order <= _AUTO_TABLE_LIMIT:
            self._build_tables()
        return self._log

    def _build_tables(self) -> None:
        if self._log is not None:
            return
        with self._lock:
            if self._log is not None:
                return
            q = self.order
            exp = [0] * max(1, q - 1)
            log = [-1] * q
            c = 1
            for e in range(q - 1):
                exp[e] = c
                log[c] = e
                if self.t == 1:
                    c = (c * self._w_code) % self.p
                else:
                    prod = _poly_mul_mod(
                        self.code_to_coords(c), self.code_to_coords(self._w_code),
                        self.modulus, self.p)
                    c = self._coords_code(prod)
            self._exp = exp
            self._log = log

    def _build_tables_unlocked(self) -> None:
        # same as _build_tables but assumes the lock is already held
        if self._log is not None:
            return
        q = self.order
        exp = [0] * max(1, q - 1)
        log = [-1] * q
        c = 1
        for e in range(q - 1):
            exp[e] = c
            log[c] = e
            prod = _poly_mul_mod(
                self.code_to_coords(c), self.code_to_coords(self._w_code),
                self.modulus, self.p)
            c = self._coords_code(prod)
        self._exp = exp
        self._log = log

    # ---------------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self.field_id == other.field_id

    def __hash__(self) -> int:
        return hash(self.field_id)

    def __repr__(self) -> str:
        if self.t == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.t}"


def _has_max_order(spec: FieldSpec, w_code: int) -> bool:
    """True iff w has multiplicative order exactly p^t - 1."""
    m = spec.order - 1
    if m == 1:
        return w_code == 1
    return all(spec.pow_code(w_code, m // r) != 1 for r in _prime_factors(m))


@functools.lru_cache(maxsize=None)
def make_prime_field(p: int) -> FieldSpec:
    """F_p with the smallest generator of (Z/p)* as w.

    Raises NotPrime if p is composite or < 2.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        return FieldSpec(2, 1, None, 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in _prime_factors(p - 1)):
            return FieldSpec(p, 1, None, g)
    raise AssertionError("no generator found; p is not prime?")


@functools.lru_cache(maxsize=None)
def make_extension_field(p: int, t: int) -> FieldSpec:
    """F_{p^t} with the deterministic modulus convention.

    Scans monic degree-t polynomials in lexicographic order of their
    coefficient lists (low degree first) and picks the first
    irreducible one whose residue class of x is primitive; w = x.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if t < 2:
        raise DegreeTooSmall(f"extension degree must be >= 2, got {t}")
    for tail in itertools.product(range(p), repeat=t):
        modulus = tuple(tail) + (1,)
        if not _poly_is_irreducible(modulus, p):
            continue
        spec = FieldSpec(p, t, modulus, p)  # code p is the class of x
        if _has_max_order(spec, p):
            return _cached_modulus_field(p, t, modulus)
    raise AssertionError(f"no primitive-x irreducible modulus of degree {t} over F_{p}")


@functools.lru_cache(maxsize=None)
def _cached_modulus_field(p: int, t: int, modulus: tuple[int, ...]) -> FieldSpec:
    spec = FieldSpec(p, t, modulus, p)
    if not _poly_is_irreducible(modulus, p):
        raise FormatError(f"modulus {list(modulus)} is reducible over F_{p}")
    if not _has_max_order(spec, p):
        raise FormatError(f"x is not primitive for modulus {list(modulus)} over F_{p}")
    return spec


def field_from_modulus(p: int, t: int, modulus: Sequence[int]) -> FieldSpec:
    """F_{p^t} with an explicit monic irreducible modulus (t+1 ascending
    coefficients); x must be primitive. Used when parsing files."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if t < 2:
        raise DegreeTooSmall(f"extension degree must be >= 2, got {t}")
    modulus = tuple(int(c) for c in modulus)
    if len(modulus) != t + 1:
        raise FormatError(f"modulus needs {t + 1} coefficients, got {len(modulus)}")
    if modulus[-1] != 1:
        raise FormatError("modulus must be monic")
    if any(not 0 <= c < p for c in modulus):
        raise FormatError(f"modulus coefficients must lie in [0, {p})")
    return _cached_modulus_field(p, t, modulus)
