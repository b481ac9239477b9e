"""Independent oracles for cross-checking library results.

Each oracle recomputes a quantity with a different algorithm than the
library uses, so agreement is evidence rather than tautology:

- minimum distance by scalar element-level enumeration (the library
  enumerates vectorized over integer code arrays);
- binomials by the multiplicative formula with exact stepwise division
  (the library calls math.comb);
- irreducibility by trial division against every monic polynomial of
  degree 1..t-1 (the library stops at degree t/2);
- primitivity and generator order by listing powers until repetition
  (the library checks prime-factor cofactor powers).
"""

from __future__ import annotations

from itertools import product

from mdslift.codes import LinearCode, encode_message


def oracle_min_distance(code: LinearCode) -> int:
    """Minimum nonzero codeword weight, one scalar message at a time."""
    spec = code.spec
    best = code.n
    elems = [spec.from_code(c) for c in range(spec.order)]
    for msg in product(elems, repeat=code.k):
        if all(m.code == 0 for m in msg):
            continue
        weight = sum(1 for s in encode_message(code, list(msg)) if s.code != 0)
        best = min(best, weight)
    return best


def oracle_binomial(m: int, n: int) -> int:
    """C(m, n) via the multiplicative formula; every division is exact."""
    if n < 0 or n > m:
        return 0
    n = min(n, m - n)
    out = 1
    for i in range(1, n + 1):
        out = out * (m - n + i) // i
    return out


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    # remainder of a by b, coefficients ascending, b nonzero
    a = list(a)
    binv = pow(b[-1], p - 2, p)
    while len(_poly_trim(a)) >= len(b):
        shift = len(a) - len(b)
        factor = a[-1] * binv % p
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * c) % p
    return a


def oracle_is_irreducible(modulus: list[int], p: int) -> bool:
    """Trial division by all monic polynomials of degree 1..t-1."""
    t = len(modulus) - 1
    if t < 1:
        return False
    for deg in range(1, t):
        for tail in product(range(p), repeat=deg):
            divisor = list(tail) + [1]
            if not _poly_trim(_poly_mod(modulus, divisor, p)):
                return False
    return True


def oracle_multiplicative_order(spec, e) -> int:
    """Order of a nonzero element by listing its powers."""
    assert e.code != 0
    seen = 1
    acc = e
    while acc.code != 1:
        acc = acc * e
        seen += 1
        assert seen <= spec.order
    return seen


def oracle_is_primitive(spec, e) -> bool:
    return e.code != 0 and oracle_multiplicative_order(spec, e) == spec.order - 1


def oracle_smallest_generator(p: int) -> int:
    """Least g whose powers exhaust (Z/p)*, by direct listing."""
    for g in range(1, p):
        seen = set()
        acc = 1
        for _ in range(p - 1):
            acc = acc * g % p
            seen.add(acc)
        if len(seen) == p - 1:
            return g
    raise AssertionError(f"no generator found for p={p}")
