"""Univariate polynomials over finite fields, and the rings they generate.

Two layers share one representation idea (coefficient sequences, low degree
first, trailing zeros trimmed):

* PrimePoly — polynomials over Z/p for prime p, coefficients as integers in
  [0, p).  The empty tuple is the zero polynomial.
* field polynomials — coefficient tuples of *element indices* of an
  arbitrary finite field given as a RingTable.  This layer powers GF(q)
  for prime powers q and quotient rings GF(q)[x]/(f).

The polynomial ring GF(q)[x] itself is never materialized; only its maximal
spectrum up to a degree bound is reported.
"""

from __future__ import annotations

import functools
from array import array
from dataclasses import dataclass
from typing import Sequence

from residua import caps
from residua.errors import (
    CapExceeded,
    DegreeZero,
    DivisionByZeroPoly,
    InvalidInput,
    ModulusMismatch,
    NotPrimePower,
)
from residua.rings import RingTable, _build_trusted, ring_zmod


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """(p, k) with q = p**k, or NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if _is_prime(p) and q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m == 1:
                return p, k
            raise NotPrimePower(f"{q} is not a prime power")
    raise NotPrimePower(f"{q} is not a prime power")


# ---------------------------------------------------------------------------
# polynomials over Z/p


@dataclass(frozen=True)
class PrimePoly:
    """Polynomial over Z/p; coeffs low degree first, trailing zeros trimmed."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not _is_prime(self.p):
            raise InvalidInput(f"modulus {self.p} is not prime")
        if any(not 0 <= c < self.p for c in self.coeffs):
            raise InvalidInput("coefficient out of range")
        if self.coeffs and self.coeffs[-1] == 0:
            raise InvalidInput("trailing zero coefficient (not trimmed)")

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self) -> str:
        return poly_to_str(self.coeffs)


def make_poly(p: int, coeffs: Sequence[int]) -> PrimePoly:
    """Normalize (reduce mod p, trim) into a PrimePoly."""
    cs = [c % p for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return PrimePoly(p, tuple(cs))


def poly_to_str(coeffs: Sequence[int]) -> str:
    """Render in the shared CLI syntax: descending powers, e.g. x^2+x+1."""
    if not any(coeffs):
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            head = "x" if c == 1 else f"{c}*x"
            parts.append(head if i == 1 else f"{head}^{i}")
    return "+".join(parts)


def _check_same_modulus(f: PrimePoly, g: PrimePoly) -> None:
    if f.p != g.p:
        raise ModulusMismatch(f"moduli differ: {f.p} vs {g.p}")


def poly_add(f: PrimePoly, g: PrimePoly) -> PrimePoly:
    _check_same_modulus(f, g)
    n = max(len(f.coeffs), len(g.coeffs))
    fc = f.coeffs + (0,) * (n - len(f.coeffs))
    gc = g.coeffs + (0,) * (n - len(g.coeffs))
    return make_poly(f.p, [a + b for a, b in zip(fc, gc)])


def poly_mul(f: PrimePoly, g: PrimePoly) -> PrimePoly:
    _check_same_modulus(f, g)
    if f.is_zero() or g.is_zero():
        return PrimePoly(f.p, ())
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            out[i + j] += a * b
    return make_poly(f.p, out)


def poly_divmod(f: PrimePoly, g: PrimePoly) -> tuple[PrimePoly, PrimePoly]:
    _check_same_modulus(f, g)
    if g.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    p = f.p
    rem = list(f.coeffs)
    quo = [0] * max(0, len(rem) - len(g.coeffs) + 1)
    inv_lead = pow(g.coeffs[-1], p - 2, p)
    while len(rem) >= len(g.coeffs) and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(g.coeffs):
            break
        shift = len(rem) - len(g.coeffs)
        factor = rem[-1] * inv_lead % p
        quo[shift] = factor
        for i, c in enumerate(g.coeffs):
            rem[shift + i] = (rem[shift + i] - factor * c) % p
    return make_poly(p, quo), make_poly(p, rem)


def poly_mod(f: PrimePoly, g: PrimePoly) -> PrimePoly:
    return poly_divmod(f, g)[1]


def poly_gcd(f: PrimePoly, g: PrimePoly) -> PrimePoly:
    """Monic gcd; gcd with the zero polynomial is rejected."""
    _check_same_modulus(f, g)
    if g.is_zero():
        raise DivisionByZeroPoly("gcd with the zero polynomial")
    a, b = f, g
    while not b.is_zero():
        a, b = b, poly_mod(a, b)
    inv_lead = pow(a.coeffs[-1], a.p - 2, a.p)
    return make_poly(a.p, [c * inv_lead for c in a.coeffs])


def poly_arith(op: str, f: PrimePoly, g: PrimePoly) -> PrimePoly:
    """Dispatching front for {add, mul, mod, gcd}."""
    if op == "add":
        return poly_add(f, g)
    if op == "mul":
        return poly_mul(f, g)
    if op == "mod":
        return poly_mod(f, g)
    if op == "gcd":
        return poly_gcd(f, g)
    raise InvalidInput(f"unknown polynomial operation {op!r}")


def poly_pow(f: PrimePoly, e: int) -> PrimePoly:
    out = make_poly(f.p, [1])
    for _ in range(e):
        out = poly_mul(out, f)
    return out


def poly_eval(f: PrimePoly, x: int) -> int:
    acc = 0
    for c in reversed(f.coeffs):
        acc = (acc * x + c) % f.p
    return acc


def is_irreducible(f: PrimePoly) -> bool:
    """Trial division by all monic polynomials up to half the degree."""
    if f.degree < 1:
        raise DegreeZero("irreducibility needs degree >= 1")
    p = f.p
    for d in range(1, f.degree // 2 + 1):
        for code in range(p ** d):
            divisor = _prime_poly_from_code(p, code, d)
            if poly_mod(f, divisor).is_zero():
                return False
    return True


def _prime_poly_from_code(p: int, code: int, degree: int) -> PrimePoly:
    """Monic polynomial of the given degree whose lower coefficients encode
    ``code`` in base p (the enumeration order used throughout)."""
    coeffs = []
    for _ in range(degree):
        coeffs.append(code % p)
        code //= p
    coeffs.append(1)
    return PrimePoly(p, tuple(coeffs))


def enumerate_irreducibles(p: int, d: int) -> list[PrimePoly]:
    """All monic irreducibles of degree exactly d, in base-p code order."""
    if not _is_prime(p):
        raise InvalidInput(f"{p} is not prime")
    if d < 1:
        raise InvalidInput("degree must be >= 1")
    if p ** d > caps.MAX_CONSTRUCTION_ORDER:
        raise CapExceeded(f"{p}^{d} candidate polynomials exceed the cap")
    return [f for code in range(p ** d)
            for f in [_prime_poly_from_code(p, code, d)] if is_irreducible(f)]


# ---------------------------------------------------------------------------
# polynomials over an arbitrary finite field (coefficient-index tuples)


def fp_trim(field: RingTable, coeffs: Sequence[int]) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == field.zero:
        cs.pop()
    return tuple(cs)


def fp_add(field: RingTable, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else field.zero
        y = b[i] if i < len(b) else field.zero
        out.append(field.add_at(x, y))
    return fp_trim(field, out)


def fp_mul(field: RingTable, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = field.add_at(out[i + j], field.mul_at(x, y))
    return fp_trim(field, out)


def fp_mod(field: RingTable, a: Sequence[int], m: Sequence[int],
           inverses: dict[int, int]) -> tuple[int, ...]:
    if not m:
        raise DivisionByZeroPoly("reduction modulo the zero polynomial")
    rem = list(a)
    inv_lead = inverses[m[-1]]
    while True:
        while rem and rem[-1] == field.zero:
            rem.pop()
        if len(rem) < len(m):
            return tuple(rem)
        shift = len(rem) - len(m)
        factor = field.mul_at(rem[-1], inv_lead)
        for i, c in enumerate(m):
            rem[shift + i] = field.sub_at(rem[shift + i], field.mul_at(factor, c))


def fp_eval(field: RingTable, a: Sequence[int], x: int) -> int:
    acc = field.zero
    for c in reversed(a):
        acc = field.add_at(field.mul_at(acc, x), c)
    return acc


def fp_monic_from_code(field: RingTable, code: int, degree: int) -> tuple[int, ...]:
    coeffs = []
    q = field.n
    for _ in range(degree):
        coeffs.append(code % q)
        code //= q
    coeffs.append(field.one)
    return tuple(coeffs)


def fp_is_irreducible(field: RingTable, f: Sequence[int],
                      inverses: dict[int, int]) -> bool:
    deg = len(f) - 1
    if deg < 1:
        raise DegreeZero("irreducibility needs degree >= 1")
    q = field.n
    for d in range(1, deg // 2 + 1):
        for code in range(q ** d):
            divisor = fp_monic_from_code(field, code, d)
            if not fp_mod(field, f, divisor, inverses):
                return False
    return True


def fp_irreducibles(field: RingTable, degree: int) -> list[tuple[int, ...]]:
    """Monic irreducibles of exactly the given degree, in code order."""
    if field.n ** degree > caps.MAX_CONSTRUCTION_ORDER:
        raise CapExceeded("irreducible enumeration exceeds the cap")
    from residua.rings import units

    inverses = units(field)
    out = []
    for code in range(field.n ** degree):
        f = fp_monic_from_code(field, code, degree)
        if fp_is_irreducible(field, f, inverses):
            out.append(f)
    return out


# ---------------------------------------------------------------------------
# field and quotient-ring construction


@functools.lru_cache(maxsize=None)
def gf_ring(q: int) -> RingTable:
    """The field of order q = p^k, as Z/p[x] modulo the code-least monic
    irreducible of degree k.  Element i encodes its coefficient vector in
    base p, so 0 and 1 are the field's zero and one."""
    p, k = factor_prime_power(q)
    if q > caps.MAX_CONSTRUCTION_ORDER:
        raise CapExceeded(f"order {q} exceeds construction cap")
    if k == 1:
        base = ring_zmod(p)
        return _build_trusted(p, base.add, base.mul, 0, 1, f"GF({p})")
    modulus = next(_prime_poly_from_code(p, code, k)
                   for code in range(p ** k)
                   if is_irreducible(_prime_poly_from_code(p, code, k)))

    def decode(i: int) -> PrimePoly:
        cs = []
        for _ in range(k):
            cs.append(i % p)
            i //= p
        return make_poly(p, cs)

    def encode(f: PrimePoly) -> int:
        out = 0
        for c in reversed(f.coeffs):
            out = out * p + c
        return out

    elems = [decode(i) for i in range(q)]
    fadd = array("i", [encode(poly_add(a, b)) for a in elems for b in elems])
    fmul = array("i", [encode(poly_mod(poly_mul(a, b), modulus))
                       for a in elems for b in elems])
    return _build_trusted(q, fadd, fmul, 0, 1, f"GF({q})")


def gf_modulus(q: int) -> PrimePoly:
    """The defining monic irreducible used by gf_ring (degree k over Z/p)."""
    p, k = factor_prime_power(q)
    if k == 1:
        return make_poly(p, [0, 1])  # placeholder degree-1 modulus: x
    return next(_prime_poly_from_code(p, code, k)
                for code in range(p ** k)
                if is_irreducible(_prime_poly_from_code(p, code, k)))


def poly_quotient_ring(q: int, f) -> RingTable:
    """GF(q)[x]/(f) as a RingTable.

    ``f`` is a PrimePoly when q is prime, or a sequence of GF(q) element
    indices (low degree first) for prime powers.  f is normalized monic;
    elements are enumerated by coefficient vectors, element index
    sum(c_i * q**i).
    """
    field = gf_ring(q)
    if isinstance(f, PrimePoly):
        if f.p != q:
            raise ModulusMismatch(f"polynomial over Z/{f.p} used with GF({q})")
        coeffs = f.coeffs
    else:
        coeffs = fp_trim(field, list(f))
    if any(not 0 <= c < q for c in coeffs):
        raise InvalidInput("coefficient index out of field range")
    if len(coeffs) < 2:
        raise InvalidInput("quotient modulus must have degree >= 1")
    from residua.rings import units

    inverses = units(field)
    lead_inv = inverses[coeffs[-1]]
    monic = tuple(field.mul_at(c, lead_inv) for c in coeffs)
    d = len(monic) - 1
    n = q ** d
    if n > caps.MAX_CONSTRUCTION_ORDER:
        raise CapExceeded(f"GF({q})[x]/(deg {d}) has order {n}, over the cap")

    def decode(i: int) -> tuple[int, ...]:
        cs = []
        for _ in range(d):
            cs.append(i % q)
            i //= q
        return fp_trim(field, cs)

    def encode(cs: Sequence[int]) -> int:
        out = 0
        for c in reversed(list(cs) + [0] * (d - len(cs))):
            out = out * q + c
        return out

    elems = [decode(i) for i in range(n)]
    fadd = array("i", [encode(fp_add(field, a, b)) for a in elems for b in elems])
    fmul = array("i", [encode(fp_mod(field, fp_mul(field, a, b), monic, inverses))
                       for a in elems for b in elems])
    label = f"GF({q})[x]/({poly_to_str(monic)})"
    return _build_trusted(n, fadd, fmul, 0, 1, label)


def polyring_max_spectrum(q: int, dmax: int) -> list[tuple[tuple[int, ...], int]]:
    """The maximal spectrum of GF(q)[x] truncated at degree dmax.

    Returns (monic irreducible coefficient tuple, residue field order) for
    every monic irreducible of degree <= dmax; the residue-order-q entries
    are exactly the q monic linear polynomials.
    """
    if dmax < 1:
        raise InvalidInput("degree bound must be >= 1")
    field = gf_ring(q)
    if q ** dmax > caps.MAX_CONSTRUCTION_ORDER:
        raise CapExceeded("spectrum degree bound exceeds the cap")
    out = []
    for d in range(1, dmax + 1):
        for f in fp_irreducibles(field, d):
            out.append((f, q ** d))
    return out
