"""Exact coefficient arithmetic: F_p, F_q = F_p[z]/(f), and the function field F_q(c).

Fields are *contexts*: elements of a finite field are plain ``int`` encodings
(``sum(coeff_i * p**i)`` for the polynomial ``sum(coeff_i * z**i)``) and all
arithmetic goes through the field object, e.g. ``F.mul(a, b)``.  Elements of
``F_q(c)`` are :class:`RationalFunction` objects which also support the usual
operators.  :class:`FieldElem` wraps a raw value together with its field for
interactive use.
"""
from __future__ import annotations

import math
import re
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np


class FieldError(ArithmeticError):
    pass


class FieldMismatch(FieldError, TypeError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class InvalidInput(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# dense polynomials over F_p, coefficient lists low -> high

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _psub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _ptrim(out)


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim([v % p for v in out])


def _pdivmod(a, b, p):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    quo = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        coef = a[-1] * inv % p
        quo[shift] = coef
        for i, y in enumerate(b):
            a[i + shift] = (a[i + shift] - coef * y) % p
        _ptrim(a)
    return _ptrim(quo), a


def _pgcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def _ppowmod(base, e, mod, p):
    result = [1]
    base = _pdivmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, p), mod, p)[1]
        base = _pdivmod(_pmul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin-style test: ``gcd(f, x^(p^i) - x) == 1`` for ``i <= deg(f)/2``."""
    f = _ptrim([c % p for c in f])
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    h = x
    for _ in range(d // 2):
        h = _ppowmod(h, p, f, p)
        if len(_pgcd(f, _psub(h, x, p), p)) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def find_irreducible(p: int, d: int) -> tuple[int, ...]:
    """Smallest monic irreducible polynomial of degree ``d`` over F_p.

    Candidates are ordered by their lower coefficients read as a base-``p``
    number with the ``z^(d-1)`` coefficient most significant, so for ``(2, 3)``
    the answer is ``z^3 + z + 1``.  Returned low -> high, monic.
    """
    if not is_prime(p):
        raise InvalidInput(f"{p} is not prime")
    if d < 1:
        raise InvalidInput("degree must be positive")
    for enc in range(p ** d):
        coeffs = [(enc // p ** i) % p for i in range(d)] + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


# ---------------------------------------------------------------------------
# finite fields

class GF:
    """The finite field F_{p^k} with raw ``int`` elements.

    Use :func:`gf` to obtain cached instances.  For ``k > 1`` arithmetic uses
    exponent/log tables with respect to the smallest primitive element, and
    addition via Zech logarithms (XOR when ``p == 2``).
    """

    generic = False

    def __init__(self, p: int, k: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise InvalidInput(f"{p} is not prime")
        if modulus is None:
            modulus = find_irreducible(p, k) if k > 1 else (0, 1)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) - 1 != k or modulus[-1] != 1:
            raise InvalidInput("modulus must be monic of degree k")
        if k > 1 and not is_irreducible(modulus, p):
            raise InvalidInput(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = modulus
        self.zero = 0
        self.one = 1
        if k > 1:
            self._build_tables()
            self.primitive = self._primitive
        else:
            self.primitive = self._prime_primitive()

    # -- construction helpers
    def _digits(self, a):
        return [(a // self.p ** i) % self.p for i in range(self.k)]

    def _from_digits(self, ds):
        return sum(int(d) * self.p ** i for i, d in enumerate(ds))

    def _slow_mul(self, a, b):
        prod = _pmul(_ptrim(self._digits(a)), _ptrim(self._digits(b)), self.p)
        return self._from_digits(_pdivmod(prod, list(self.modulus), self.p)[1])

    def _slow_pow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    def _prime_primitive(self):
        if self.p == 2:
            return 1
        fac = prime_factors(self.p - 1)
        for g in range(2, self.p):
            if all(pow(g, (self.p - 1) // r, self.p) != 1 for r in fac):
                return g
        raise AssertionError("no primitive root")

    def _build_tables(self):
        q, p = self.q, self.p
        fac = prime_factors(q - 1)
        for g in range(p, q):
            if all(self._slow_pow(g, (q - 1) // r) != 1 for r in fac):
                break
        self._primitive = g
        exp = [0] * (q - 1)
        log = [-1] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        # Zech table: zech[n] = log(1 + g^n), -1 when 1 + g^n == 0
        zech = [-1] * (q - 1)
        for n_ in range(q - 1):
            v = exp[n_]
            w = v - v % p + (v % p + 1) % p
            zech[n_] = log[w] if w else -1
        self._exp, self._log, self._zech = exp, log, zech
        self._np_exp = np.array(exp + exp, dtype=np.int64)
        self._np_log = np.array(log, dtype=np.int64)
        self._np_zech = np.array(zech, dtype=np.int64)
        self._half = (q - 1) // 2 if p != 2 else 0

    # -- identity
    def __eq__(self, other):
        return isinstance(other, GF) and other.p == self.p and other.modulus == self.modulus

    def __hash__(self):
        return hash(("GF", self.p, self.modulus))

    def __repr__(self):
        return f"GF({self.q})" if self.k == 1 else f"GF({self.p}^{self.k})"

    @property
    def characteristic(self):
        return self.p

    @property
    def base(self):
        return self

    # -- scalar arithmetic on raw ints
    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la, lb = self._log[a], self._log[b]
        z = self._zech[(lb - la) % (self.q - 1)]
        return 0 if z < 0 else self._exp[(la + z) % (self.q - 1)]

    def neg(self, a):
        if self.k == 1:
            return -a % self.p
        if self.p == 2 or a == 0:
            return a
        return self._exp[(self._log[a] + self._half) % (self.q - 1)]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"inverse of zero in {self!r}")
        if self.k == 1:
            return pow(a, -1, self.p)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        if self.k == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 0 if e else 1
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def from_int(self, n: int):
        return n % self.p

    def from_base(self, a):
        return a

    def contains(self, a):
        return isinstance(a, (int, np.integer)) and 0 <= a < self.q

    def elements(self):
        return range(self.q)

    def gen(self):
        """The class of ``z`` (equal to 0 in a prime field)."""
        return self.p if self.k > 1 else 0

    def order(self, a):
        if a == 0:
            raise InvalidInput("zero has no multiplicative order")
        n = self.q - 1
        for r in prime_factors(n):
            while n % r == 0 and self.pow(a, n // r) == 1:
                n //= r
        return n

    def is_prime_field_elem(self, a):
        return self.pow(a, self.p) == a

    def __call__(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.field != self:
                raise FieldMismatch(f"{value.field!r} element given to {self!r}")
            return value
        if isinstance(value, str):
            return FieldElem(self, self.parse(value))
        return FieldElem(self, self.from_int(int(value)))

    # -- vectorised arithmetic on int64 arrays
    def vadd(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        out = np.where(a == 0, b, a).astype(np.int64)
        m = (a != 0) & (b != 0)
        if m.any():
            la = self._np_log[a[m]]
            lb = self._np_log[b[m]]
            z = self._np_zech[(lb - la) % (self.q - 1)]
            out[m] = np.where(z < 0, 0, self._np_exp[(la + np.maximum(z, 0)) % (self.q - 1)])
        return out

    def vneg(self, a):
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        a = np.asarray(a)
        out = np.zeros_like(a)
        m = a != 0
        out[m] = self._np_exp[(self._np_log[a[m]] + self._half) % (self.q - 1)]
        return out

    def vsub(self, a, b):
        if self.k == 1:
            return (a - b) % self.p
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        """Elementwise (broadcasting) product."""
        if self.k == 1:
            return (a * b) % self.p
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        out = np.zeros(a.shape, dtype=np.int64)
        m = (a != 0) & (b != 0)
        out[m] = self._np_exp[self._np_log[a[m]] + self._np_log[b[m]]]
        return out

    def matmul(self, A, B):
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.k == 1:
            if A.shape[1] * (self.p - 1) ** 2 < 2 ** 62:
                return (A @ B) % self.p
            return np.array([[sum(int(x) * int(y) for x, y in zip(row, col)) % self.p
                              for col in B.T] for row in A], dtype=np.int64)
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        for i, j in zip(*np.nonzero(B)):
            out[:, j] = self.vadd(out[:, j], self.vmul(A[:, i], B[i, j]))
        return out

    # -- text
    def to_str(self, a) -> str:
        if self.k == 1:
            return str(int(a))
        ds = self._digits(int(a))
        parts = []
        for i in reversed(range(self.k)):
            d = ds[i]
            if not d:
                continue
            mon = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mon:
                parts.append(str(d))
            else:
                parts.append(mon if d == 1 else f"{d}*{mon}")
        if not parts:
            return "0"
        s = "+".join(parts)
        return s if len(parts) == 1 and "*" not in s else f"({s})"

    def parse(self, s: str):
        """Parse an integer or a polynomial in ``z`` (e.g. ``"z^2+1"``)."""
        s = s.strip().replace(" ", "")
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        if re.fullmatch(r"[+-]?\d+", s):
            return self.from_int(int(s))
        coeffs = [0] * max(self.k, 1)
        for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
            m = re.fullmatch(r"(?:(\d+)\*?)?z(?:\^(\d+))?|(\d+)", body)
            if not m:
                raise InvalidInput(f"cannot parse field element {s!r}")
            if m.group(3) is not None:
                c, e = int(m.group(3)), 0
            else:
                c = int(m.group(1)) if m.group(1) else 1
                e = int(m.group(2)) if m.group(2) else 1
            if sign == "-":
                c = -c
            if self.k == 1:
                raise InvalidInput(f"{s!r} uses z but {self!r} is a prime field")
            coeffs_full = [0] * (e + 1)
            coeffs_full[e] = c % self.p
            red = _pdivmod(_ptrim(coeffs_full), list(self.modulus), self.p)[1]
            for i, v in enumerate(red):
                coeffs[i] = (coeffs[i] + v) % self.p
        return self._from_digits(coeffs)

    # -- embeddings
    def embedding_into(self, big: "GF"):
        """Return a function mapping raw elements of ``self`` into ``big``."""
        return _embedding(self, big)


@lru_cache(maxsize=None)
def gf(p: int, k: int = 1) -> GF:
    """Cached F_{p^k} built on :func:`find_irreducible`."""
    return GF(p, k)


@lru_cache(maxsize=None)
def _embedding_root(small: GF, big: GF) -> int:
    if small.p != big.p or big.k % small.k:
        raise FieldMismatch(f"{small!r} does not embed in {big!r}")
    if small.k == 1:
        return 0
    # the image of z is a root of small.modulus in big
    mod = small.modulus
    for r in big.elements():
        acc = 0
        for coef in reversed(mod):
            acc = big.add(big.mul(acc, r), coef)
        if acc == 0:
            return r
    raise AssertionError("no root of the modulus found")


def _embedding(small: GF, big: GF):
    if small == big:
        return lambda a: a
    if small.k == 1:
        if small.p != big.p:
            raise FieldMismatch(f"{small!r} does not embed in {big!r}")
        return lambda a: a
    root = _embedding_root(small, big)
    powers = [big.pow(root, i) for i in range(small.k)]

    def emb(a):
        acc = 0
        for d, rp in zip(small._digits(int(a)), powers):
            if d:
                acc = big.add(acc, big.mul(d, rp))
        return acc
    return emb


def primitive_mth_root(p: int, m: int) -> tuple[GF, int]:
    """Smallest F_{p^k} containing a primitive ``m``-th root of unity, and one such root.

    The root is ``g^((q-1)/m)`` for the field's primitive element ``g``.
    """
    if m < 1:
        raise InvalidInput("m must be positive")
    if m % p == 0:
        raise InvalidInput(f"p={p} divides m={m}: no primitive m-th roots of unity")
    k = 1
    while (p ** k - 1) % m:
        k += 1
    F = gf(p, k)
    zeta = F.pow(F.primitive, (F.q - 1) // m)
    return F, zeta


class FieldElem:
    """A raw element bundled with its field, with operator overloading."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def _wrap(self, v):
        return FieldElem(self.field, v)

    def __add__(self, o):
        v = self._coerce(o)
        return NotImplemented if v is NotImplemented else self._wrap(self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, o):
        v = self._coerce(o)
        return NotImplemented if v is NotImplemented else self._wrap(self.field.sub(self.value, v))

    def __rsub__(self, o):
        v = self._coerce(o)
        return NotImplemented if v is NotImplemented else self._wrap(self.field.sub(v, self.value))

    def __mul__(self, o):
        v = self._coerce(o)
        return NotImplemented if v is NotImplemented else self._wrap(self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, o):
        v = self._coerce(o)
        return NotImplemented if v is NotImplemented else self._wrap(self.field.div(self.value, v))

    def __rtruediv__(self, o):
        v = self._coerce(o)
        return NotImplemented if v is NotImplemented else self._wrap(self.field.div(v, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e):
        return self._wrap(self.field.pow(self.value, e))

    def inv(self):
        return self._wrap(self.field.inv(self.value))

    def __eq__(self, o):
        if isinstance(o, FieldElem) and o.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {o.field!r}")
        v = self._coerce(o)
        return NotImplemented if v is NotImplemented else self.field.eq(self.value, v)

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return not self.field.is_zero(self.value)

    def __repr__(self):
        return f"{self.field.to_str(self.value)} in {self.field!r}"

    def __str__(self):
        return self.field.to_str(self.value)


# ---------------------------------------------------------------------------
# F_q[c] and F_q(c)

class UPoly:
    """Immutable univariate polynomial in ``c`` over a :class:`GF` (raw coefficients low -> high)."""

    __slots__ = ("F", "coeffs")

    def __init__(self, F: GF, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.F = F
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, F, a):
        return cls(F, (a,))

    @classmethod
    def c(cls, F):
        return cls(F, (0, 1))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (1,)

    def lc(self):
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, o):
        if isinstance(o, UPoly):
            return self.coeffs == o.coeffs and self.F == o.F
        if isinstance(o, int):
            return self.coeffs == ((o % self.F.p,) if o % self.F.p else ())
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _check(self, o):
        if isinstance(o, int):
            return UPoly(self.F, (self.F.from_int(o),))
        if not isinstance(o, UPoly):
            return None
        if o.F != self.F:
            raise FieldMismatch(f"{self.F!r} vs {o.F!r}")
        return o

    def __add__(self, o):
        o = self._check(o)
        if o is None:
            return NotImplemented
        a, b, F = self.coeffs, o.coeffs, self.F
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = F.add(out[i], y)
        return UPoly(F, out)

    __radd__ = __add__

    def __neg__(self):
        return UPoly(self.F, [self.F.neg(x) for x in self.coeffs])

    def __sub__(self, o):
        o = self._check(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        o = self._check(o)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, o):
        o = self._check(o)
        if o is None:
            return NotImplemented
        a, b, F = self.coeffs, o.coeffs, self.F
        if not a or not b:
            return UPoly(F)
        if len(b) == 1:
            return self.scale(b[0])
        if len(a) == 1:
            return o.scale(a[0])
        if F.k == 1:
            p = F.p
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            return UPoly(F, [v % p for v in out])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return UPoly(F, out)

    __rmul__ = __mul__

    def scale(self, s):
        F = self.F
        if s == 0:
            return UPoly(F)
        if s == 1:
            return self
        return UPoly(F, [F.mul(x, s) for x in self.coeffs])

    def divmod(self, o: "UPoly"):
        if o.is_zero():
            raise DivisionByZero("polynomial division by zero")
        F = self.F
        a = list(self.coeffs)
        b = o.coeffs
        db = len(b) - 1
        if len(a) - 1 < db:
            return UPoly(F), self
        inv = F.inv(b[-1])
        quo = [0] * (len(a) - db)
        for shift in range(len(a) - 1 - db, -1, -1):
            coef = a[shift + db]
            if coef == 0:
                continue
            coef = F.mul(coef, inv)
            quo[shift] = coef
            for i, y in enumerate(b):
                if y:
                    a[i + shift] = F.sub(a[i + shift], F.mul(coef, y))
        return UPoly(F, quo), UPoly(F, a[:db])

    def exact_div(self, o: "UPoly") -> "UPoly":
        if o.is_one():
            return self
        q, r = self.divmod(o)
        if r:
            raise FieldError("inexact polynomial division")
        return q

    def __floordiv__(self, o):
        return self.divmod(o)[0]

    def __mod__(self, o):
        return self.divmod(o)[1]

    def monic(self):
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self.scale(self.F.inv(self.coeffs[-1]))

    def gcd(self, o: "UPoly") -> "UPoly":
        a, b = self, o
        while b:
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def __call__(self, x, field: GF | None = None, emb=None):
        """Evaluate at ``x`` (a raw element of ``field``, default the coefficient field)."""
        field = field or self.F
        emb = emb or (lambda a: a)
        acc = 0
        for coef in reversed(self.coeffs):
            acc = field.add(field.mul(acc, x), emb(coef))
        return acc

    def to_str(self, var="c"):
        F = self.F
        if not self.coeffs:
            return "0"
        parts = []
        for i in reversed(range(len(self.coeffs))):
            a = self.coeffs[i]
            if not a:
                continue
            mon = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            cs = F.to_str(a)
            if not mon:
                parts.append(cs)
            elif a == 1:
                parts.append(mon)
            else:
                parts.append(f"{cs}*{mon}")
        return "+".join(parts)

    def __repr__(self):
        return f"UPoly({self.to_str()})"


class RationalFunction:
    """Element of F_q(c): reduced ``num/den`` with monic ``den``; zero is ``0/1``."""

    __slots__ = ("num", "den")

    def __init__(self, num: UPoly, den: UPoly | None = None, *, reduced: bool = False):
        if den is None:
            den = UPoly(num.F, (1,))
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if not reduced:
            if num.is_zero():
                den = UPoly(num.F, (1,))
            elif not den.is_one():
                g = num.gcd(den)
                if not g.is_one():
                    num, den = num.exact_div(g), den.exact_div(g)
                lc = den.lc()
                if lc != 1:
                    inv = num.F.inv(lc)
                    num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @property
    def F(self):
        return self.num.F

    def is_zero(self):
        return self.num.is_zero()

    def is_poly(self):
        return self.den.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    def _check(self, o):
        if isinstance(o, RationalFunction):
            if o.F != self.F:
                raise FieldMismatch(f"{self.F!r}(c) vs {o.F!r}(c)")
            return o
        if isinstance(o, UPoly):
            return RationalFunction(o, reduced=True)
        if isinstance(o, int):
            return RationalFunction(UPoly(self.F, (self.F.from_int(o),)), reduced=True)
        return None

    def __add__(self, o):
        o = self._check(o)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RationalFunction(self.num + o.num, self.den, reduced=True)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduced=True)

    def __sub__(self, o):
        o = self._check(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        o = self._check(o)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, o):
        o = self._check(o)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RationalFunction(self.num * o.num, self.den, reduced=True)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inv(self):
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero in F_q(c)")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, o):
        o = self._check(o)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, o):
        o = self._check(o)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def scale(self, a):
        """Multiply by a raw constant of the coefficient field."""
        if a == 0:
            return RationalFunction(UPoly(self.F), reduced=True)
        return RationalFunction(self.num.scale(a), self.den, reduced=True)

    def __eq__(self, o):
        o = self._check(o)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, x, field: GF | None = None, emb=None):
        field = field or self.F
        d = self.den(x, field, emb)
        if d == 0:
            raise DivisionByZero("denominator vanishes at evaluation point")
        return field.div(self.num(x, field, emb), d)

    def to_str(self):
        n = self.num.to_str()
        if self.den.is_one():
            if len(self.num.coeffs) <= 1 and not n.startswith("("):
                return n
            return f"({n})"
        return f"({n})/({self.den.to_str()})"

    def __repr__(self):
        return f"RationalFunction({self.to_str()})"


class RationalFunctionField:
    """F_q(c), the coefficient field for a generic (transcendental) parameter ``c``."""

    generic = True

    def __init__(self, base: GF):
        self.base = base
        self.p = base.p
        self.zero = RationalFunction(UPoly(base), reduced=True)
        self.one = RationalFunction(UPoly(base, (1,)), reduced=True)
        self.c = RationalFunction(UPoly.c(base), reduced=True)

    def __eq__(self, o):
        return isinstance(o, RationalFunctionField) and o.base == self.base

    def __hash__(self):
        return hash(("RFF", self.base))

    def __repr__(self):
        return f"{self.base!r}(c)"

    @property
    def characteristic(self):
        return self.p

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return a.inv()

    def div(self, a, b):
        return a / b

    def pow(self, a, e):
        if e < 0:
            a, e = a.inv(), -e
        r = self.one
        while e:
            if e & 1:
                r = r * a
            a = a * a
            e >>= 1
        return r

    def is_zero(self, a):
        return a.num.is_zero()

    def eq(self, a, b):
        return a == b

    def from_int(self, n: int):
        return self.from_base(self.base.from_int(n))

    def from_base(self, a):
        return RationalFunction(UPoly(self.base, (a,)), reduced=True)

    def from_poly(self, f: UPoly):
        return RationalFunction(f, reduced=True)

    def contains(self, a):
        return isinstance(a, RationalFunction) and a.F == self.base

    def __call__(self, value) -> FieldElem:
        if isinstance(value, FieldElem):
            if value.field != self:
                raise FieldMismatch(f"{value.field!r} element given to {self!r}")
            return value
        if isinstance(value, RationalFunction):
            return FieldElem(self, value)
        if isinstance(value, str):
            return FieldElem(self, self.parse(value))
        return FieldElem(self, self.from_int(int(value)))

    def to_str(self, a):
        return a.to_str()

    def parse(self, s: str) -> RationalFunction:
        """Parse ``"(num)/(den)"`` or ``"num"`` with polynomials in ``c``."""
        s = s.strip().replace(" ", "")
        depth = 0
        split = None
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "/" and depth == 0:
                split = i
        if split is None:
            return RationalFunction(self._parse_poly(s))
        return RationalFunction(self._parse_poly(s[:split]), self._parse_poly(s[split + 1:]))

    def _parse_poly(self, s: str) -> UPoly:
        s = s.strip()
        while s.startswith("(") and _matching(s) == len(s) - 1:
            s = s[1:-1]
        F = self.base
        acc = UPoly(F)
        for sign, coef, var, e in _iter_c_terms(s):
            a = F.parse(coef) if coef else 1
            if sign == "-":
                a = F.neg(a)
            deg = (int(e) if e else 1) if var else 0
            acc = acc + UPoly(F, [0] * deg + [a])
        return acc


def _matching(s):
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                return i
    return -1


def _iter_c_terms(s):
    i = 0
    out = []
    while i < len(s):
        sign = "+"
        if s[i] in "+-":
            sign = s[i]
            i += 1
        j = i
        depth = 0
        while j < len(s) and (depth or s[j] not in "+-"):
            if s[j] == "(":
                depth += 1
            elif s[j] == ")":
                depth -= 1
            j += 1
        body = s[i:j]
        i = j
        m = re.fullmatch(r"(?:(\([^)]*\)|\d+|z(?:\^\d+)?)\*?)?(c)(?:\^(\d+))?", body)
        if m:
            out.append((sign, m.group(1), "c", m.group(3)))
        else:
            out.append((sign, body, None, None))
    return out


def embed(K_small, K_big):
    """Coercion map of raw elements between compatible coefficient fields."""
    if K_small == K_big:
        return lambda a: a
    if isinstance(K_big, RationalFunctionField):
        if isinstance(K_small, GF):
            e = _embedding(K_small, K_big.base)
            return lambda a: K_big.from_base(e(a))
        if isinstance(K_small, RationalFunctionField):
            e = _embedding(K_small.base, K_big.base)
            B = K_big.base
            return lambda a: RationalFunction(UPoly(B, [e(x) for x in a.num.coeffs]),
                                              UPoly(B, [e(x) for x in a.den.coeffs]))
    if isinstance(K_small, GF) and isinstance(K_big, GF):
        return _embedding(K_small, K_big)
    raise FieldMismatch(f"no embedding {K_small!r} -> {K_big!r}")


def evaluation_field(base: GF, min_size: int = 1 << 15) -> GF:
    """A field F_{p^e} containing ``base`` with at least ``min_size`` elements."""
    e = base.k
    while base.p ** e < min_size:
        e += base.k
    return gf(base.p, e)
