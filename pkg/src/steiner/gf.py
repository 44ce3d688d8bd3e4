"""Exact arithmetic in finite fields GF(p^e).

Elements are stored in a polynomial basis modulo a monic irreducible
reduction polynomial.  A coefficient sequence ``(c_0, ..., c_{e-1})`` is
little-endian (``c_0`` is the constant term), and sequences are ordered
lexicographically starting from ``c_0``.  Every element has an integer
*code* that realises this order::

    code = c_0 * p^(e-1) + c_1 * p^(e-2) + ... + c_{e-1}

so for prime fields the code is simply the residue.  The codes ``0..q-1`` are
what the projective line and the permutation groups built on it use as point
indices.
"""

from __future__ import annotations

import itertools
import math
import threading
from dataclasses import dataclass

import numpy as np

MAX_FIELD_SIZE = 2**20


class FieldError(ValueError):
    """Invalid field parameters or an illegal field operation."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``q == p**e``, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, math.isqrt(q) + 1):
        if q % p == 0:
            e = 0
            while q % p == 0:
                q //= p
                e += 1
            return (p, e) if q == 1 else None
    return q, 1


def _poly_mulmod(a, b, mod, p):
    """Multiply little-endian coefficient lists modulo a monic polynomial."""
    e = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for i in range(len(prod) - 1, e - 1, -1):
        c = prod[i]
        if c:
            for j in range(e + 1):
                prod[i - e + j] = (prod[i - e + j] - c * mod[j]) % p
    return (prod + [0] * e)[:e]


def _is_irreducible(poly, p) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    e = len(poly) - 1
    if e == 1:
        return True
    if poly[0] == 0:
        return False
    for d in range(1, e // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            rem = list(poly)
            for i in range(e, d - 1, -1):
                c = rem[i]
                if c:
                    for j in range(d + 1):
                        rem[i - d + j] = (rem[i - d + j] - c * divisor[j]) % p
            if not any(rem[:d]):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree e (low degree compared first)."""
    for low in itertools.product(range(p), repeat=e):
        poly = list(low) + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise FieldError(f"no irreducible polynomial of degree {e} over GF({p})")


class Field:
    """The finite field GF(p^e) with an explicit reduction polynomial.

    Arithmetic helpers (``add``, ``mul``, ``inv`` ...) work on integer codes and
    are what the group constructions use; :class:`FieldElem` wraps a code for
    operator-style use.
    """

    def __init__(self, p: int, e: int = 1, reduction_poly=None):
        if not isinstance(p, int) or not is_prime(p):
            raise FieldError(f"characteristic {p!r} is not prime")
        if not isinstance(e, int) or e < 1:
            raise FieldError(f"extension degree must be >= 1, got {e!r}")
        if p**e > MAX_FIELD_SIZE:
            raise FieldError(f"field size {p}^{e} exceeds {MAX_FIELD_SIZE}")
        if reduction_poly is None:
            reduction_poly = smallest_irreducible(p, e)
        else:
            reduction_poly = tuple(int(c) % p for c in reduction_poly)
            if len(reduction_poly) != e + 1 or reduction_poly[-1] != 1:
                raise FieldError("reduction polynomial must be monic of degree e")
            if not _is_irreducible(list(reduction_poly), p):
                raise FieldError(f"{reduction_poly} is reducible over GF({p})")
        self.p = p
        self.e = e
        self.q = p**e
        self.reduction_poly = reduction_poly
        self._weights = [p ** (e - 1 - i) for i in range(e)]
        self._lock = threading.Lock()
        self._exp = None
        self._log = None

    def __repr__(self):
        return f"Field(p={self.p}, e={self.e}, reduction_poly={self.reduction_poly})"

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and (self.p, self.e, self.reduction_poly)
            == (other.p, other.e, other.reduction_poly)
        )

    def __hash__(self):
        return hash((self.p, self.e, self.reduction_poly))

    def __len__(self):
        return self.q

    # --- codes and coefficients -------------------------------------------

    def coeffs(self, code: int) -> tuple[int, ...]:
        out = []
        for w in self._weights:
            c, code = divmod(code, w)
            out.append(c)
        return tuple(out)

    def code(self, coeffs) -> int:
        coeffs = tuple(coeffs)
        if len(coeffs) != self.e:
            raise FieldError(f"expected {self.e} coefficients, got {len(coeffs)}")
        return sum((c % self.p) * w for c, w in zip(coeffs, self._weights))

    @property
    def one(self) -> int:
        return self._weights[0]

    def from_int(self, n: int) -> int:
        """Code of the prime-field element n mod p."""
        return (n % self.p) * self._weights[0]

    def __call__(self, value) -> FieldElem:
        if isinstance(value, FieldElem):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElem(self, self.from_int(value))
        return FieldElem(self, self.code(value))

    def element(self, code: int) -> FieldElem:
        if not 0 <= code < self.q:
            raise FieldError(f"code {code} out of range for GF({self.q})")
        return FieldElem(self, code)

    def elements(self):
        return [FieldElem(self, c) for c in range(self.q)]

    # --- tables ------------------------------------------------------------

    def _tables(self):
        if self._exp is None:
            with self._lock:
                if self._exp is None:
                    self._build_tables()
        return self._exp, self._log

    def _digits(self):
        codes = np.arange(self.q, dtype=np.int64)
        digits = np.empty((self.q, self.e), dtype=np.int64)
        for i, w in enumerate(self._weights):
            digits[:, i] = (codes // w) % self.p
        return digits

    def _slow_mul(self, a: int, b: int) -> int:
        res = _poly_mulmod(list(self.coeffs(a)), list(self.coeffs(b)),
                           self.reduction_poly, self.p)
        return self.code(res)

    def _slow_pow(self, a: int, n: int) -> int:
        result, base = self.one, a
        while n:
            if n & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            n >>= 1
        return result

    def _build_tables(self):
        q, p, e = self.q, self.p, self.e
        if q == 2:
            self._exp, self._log = [1, 1], {1: 0}
            return
        factors = [r for r in range(2, q) if (q - 1) % r == 0 and is_prime(r)]
        for g in range(1, q):
            if all(self._slow_pow(g, (q - 1) // r) != self.one for r in factors):
                break
        # multiplication by g is GF(p)-linear; apply it to every element at once
        basis = [self.code([1 if j == i else 0 for j in range(e)]) for i in range(e)]
        columns = np.array([self.coeffs(self._slow_mul(g, bcode)) for bcode in basis])
        images = (self._digits() @ columns) % p
        mul_g = (images @ np.array(self._weights, dtype=np.int64)).tolist()
        exp = [0] * (q - 1)
        log = [0] * q
        x = self.one
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = mul_g[x]
        self._exp, self._log = exp + exp, log

    @property
    def primitive(self) -> int:
        """Code of the primitive element used for the log tables (deterministic)."""
        exp, _ = self._tables()
        return exp[1] if self.q > 2 else self.one

    # --- arithmetic on codes -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        out = 0
        for w in self._weights:
            da, a = divmod(a, w)
            db, b = divmod(b, w)
            out += ((da + db) % self.p) * w
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.e == 1:
            return -a % self.p
        out = 0
        for w in self._weights:
            da, a = divmod(a, w)
            out += (-da % self.p) * w
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        exp, log = self._tables()
        return exp[log[a] + log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("inverse of zero")
        exp, log = self._tables()
        return exp[(self.q - 1 - log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise FieldError("division by zero")
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise FieldError("negative power of zero")
            return self.one if n == 0 else 0
        exp, log = self._tables()
        return exp[(log[a] * n) % (self.q - 1)]

    def frobenius(self, a: int, power: int = 1) -> int:
        """a^(p^power)."""
        return self.pow(a, self.p**power)

    def log(self, a: int) -> int:
        if a == 0:
            raise FieldError("log of zero")
        return self._tables()[1][a]

    def exp(self, n: int) -> int:
        return self._tables()[0][n % (self.q - 1)]

    def order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        return (self.q - 1) // math.gcd(self.log(a), self.q - 1)

    def is_square(self, a: int) -> bool:
        return a == 0 or self.p == 2 or self.log(a) % 2 == 0

    def subfield(self, f: int) -> list[int]:
        """Sorted codes of the subfield GF(p^f); f must divide e."""
        if f < 1 or self.e % f:
            raise FieldError(f"GF({self.p}^{f}) is not a subfield of GF({self.q})")
        qbar = self.p**f
        step = (self.q - 1) // (qbar - 1)
        return sorted([0] + [self.exp(step * i) for i in range(qbar - 1)])


@dataclass(frozen=True)
class FieldElem:
    field: Field
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldError("operands belong to different fields")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return FieldElem(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return FieldElem(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return FieldElem(self.field, self.field.sub(o, self.value))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        o = self._other(other)
        return FieldElem(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return FieldElem(self.field, self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return FieldElem(self.field, self.field.div(o, self.value))

    def __pow__(self, n: int):
        return FieldElem(self.field, self.field.pow(self.value, n))

    def inverse(self) -> FieldElem:
        return FieldElem(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        if self.field.e == 1:
            return self.value
        raise TypeError("only prime-field elements convert to int")

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == self.field.from_int(other)
        if isinstance(other, FieldElem):
            return self.field == other.field and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        if self.field.e == 1:
            return f"{self.value} (mod {self.field.p})"
        terms = [f"{c}x^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) or "0"


def field_make(p: int, e: int = 1) -> Field:
    return Field(p, e)


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def field_arith(a: FieldElem, b, op: str) -> FieldElem:
    """Apply ``op`` in {add, sub, mul, div, pow, inv}; ``b`` is the exponent for pow."""
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** int(b)
    if op not in _OPS:
        raise FieldError(f"unknown operation {op!r}")
    if isinstance(b, FieldElem) and b.field != a.field:
        raise FieldError("operands belong to different fields")
    return _OPS[op](a, b)


def element_order(a: FieldElem) -> int:
    return a.field.order(a.value)


def find_primitive_sixth_root(F: Field) -> FieldElem:
    """The order-6 element with the lexicographically smallest coefficients."""
    if (F.q - 1) % 6:
        raise FieldError(f"6 does not divide {F.q} - 1")
    for code in range(1, F.q):
        if F.order(code) == 6:
            return FieldElem(F, code)
    raise AssertionError("unreachable: cyclic group of order divisible by 6")
