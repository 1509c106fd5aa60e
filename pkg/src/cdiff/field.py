"""Exact arithmetic in GF(p^n) with deterministic field construction.

Elements are plain ints in [0, p^n): the base-p digits of the encoding are the
polynomial-basis coefficients (digit i = coefficient of x^i).  Canonical
element order is integer order of this encoding.  Multiplication runs on
exp/log tables built from a deterministically chosen modulus and generator,
so two builds of the same (p, n) are identical arrays.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dataclass_field

import numpy as np

DEFAULT_SIZE_CAP = 2**22


def is_prime(m: int) -> bool:
    """Trial-division primality check, adequate for desk-scale moduli."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m by trial division."""
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out.append(m)
    return out


# ---------------------------------------------------------------------------
# Polynomial helpers over Z_p (coefficient lists, index i = coeff of x^i).
# Used only during construction; runtime arithmetic goes through the tables.
# ---------------------------------------------------------------------------

def _poly_degree(f: list[int]) -> int:
    for i in range(len(f) - 1, -1, -1):
        if f[i]:
            return i
    return -1


def _poly_rem(f: list[int], g: list[int], p: int) -> list[int]:
    """Remainder of f modulo g (g monic not required; leading coeff inverted)."""
    f = [c % p for c in f]
    dg = _poly_degree(g)
    lead_inv = pow(g[dg], p - 2, p) if g[dg] != 1 else 1
    df = _poly_degree(f)
    while df >= dg:
        scale = (f[df] * lead_inv) % p
        for i in range(dg + 1):
            f[df - dg + i] = (f[df - dg + i] - scale * g[i]) % p
        df = _poly_degree(f)
    return f[:dg] if dg > 0 else [0]


def _poly_mulmod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    """(a * b) mod modulus, inputs of degree < n, output of length n."""
    n = len(modulus) - 1
    conv = [0] * (2 * n - 1 if n > 1 else 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    conv[i + j] = (conv[i + j] + ai * bj) % p
    # reduce top coefficients using x^n = -(modulus - x^n)
    for k in range(len(conv) - 1, n - 1, -1):
        c = conv[k]
        if c:
            conv[k] = 0
            for i in range(n):
                conv[k - n + i] = (conv[k - n + i] - c * modulus[i]) % p
    out = conv[:n]
    out += [0] * (n - len(out))
    return out


def _poly_powmod(base: list[int], e: int, modulus: list[int], p: int) -> list[int]:
    n = len(modulus) - 1
    result = [1] + [0] * (n - 1)
    acc = list(base)
    while e:
        if e & 1:
            result = _poly_mulmod(result, acc, modulus, p)
        acc = _poly_mulmod(acc, acc, modulus, p)
        e >>= 1
    return result


def _digits(e: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        out.append(e % p)
        e //= p
    return out


def _encode(digits: list[int], p: int) -> int:
    e = 0
    for d in reversed(digits):
        e = e * p + d
    return e


def is_irreducible(coeffs: list[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over Z_p by root test and trial
    division against every monic polynomial of degree up to deg/2."""
    n = _poly_degree(coeffs)
    if n <= 0:
        return False
    if n == 1:
        return True
    for r in range(p):
        v = 0
        for c in reversed(coeffs):
            v = (v * r + c) % p
        if v == 0:
            return False
    for dg in range(2, n // 2 + 1):
        for e in range(p**dg):
            divisor = _digits(e, p, dg) + [1]
            if _poly_degree(_poly_rem(coeffs, divisor, p)) < 0:
                return False
    return True


def _find_modulus(p: int, n: int) -> list[int]:
    """Monic irreducible of degree n whose coefficient vector, read as a
    base-p integer with c0 least significant, is minimal.  For n=1 the
    modulus is x itself and arithmetic is plain mod-p."""
    if n == 1:
        return [0, 1]
    for e in range(p**n):
        coeffs = _digits(e, p, n) + [1]
        if is_irreducible(coeffs, p):
            return coeffs
    raise ValueError(f"no irreducible polynomial of degree {n} over Z_{p}")  # unreachable


def _multiplicative_order_is_full(elem: list[int], modulus: list[int], p: int, q: int,
                                  factors: list[int]) -> bool:
    one = [1] + [0] * (len(modulus) - 2)
    for r in factors:
        if _poly_powmod(elem, (q - 1) // r, modulus, p) == one:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """A concrete GF(p^n): modulus, generator, and exp/log tables.

    Immutable after construction; all operations are pure, so instances are
    safe to share across threads.
    """

    p: int
    n: int
    q: int
    modulus: tuple[int, ...]          # n+1 coefficients, monic
    generator: int                    # canonical encoding
    exp: np.ndarray = dataclass_field(repr=False)     # exp[k] = generator^k, length q-1
    log: np.ndarray = dataclass_field(repr=False)     # log[exp[k]] = k; log[0] = 0 (guarded)
    neg_table: np.ndarray = dataclass_field(repr=False)

    # -- construction -------------------------------------------------------

    @staticmethod
    def build(p: int, n: int, modulus: list[int] | None = None,
              generator: list[int] | None = None,
              size_cap: int = DEFAULT_SIZE_CAP) -> "Field":
        """Build GF(p^n) with the deterministic modulus and generator, or with
        a validated override."""
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if n < 1:
            raise ValueError(f"extension degree must be >= 1, got {n}")
        q = p**n
        if q > size_cap:
            raise ValueError(f"field size {p}^{n} = {q} exceeds cap {size_cap}")

        if modulus is None:
            modulus = _find_modulus(p, n)
        else:
            modulus = [int(c) % p for c in modulus]
            if len(modulus) != n + 1 or modulus[n] != 1:
                raise ValueError("modulus must be monic of degree n (n+1 coefficients)")
            if n > 1 and not is_irreducible(modulus, p):
                raise ValueError("modulus override is reducible")
            if n == 1 and modulus != [0, 1]:
                raise ValueError("degree-1 modulus must be x")

        factors = prime_factors(q - 1) if q > 2 else []
        if generator is None:
            gen_digits = None
            for e in range(2, q):
                cand = _digits(e, p, n)
                if q == 2 or _multiplicative_order_is_full(cand, modulus, p, q, factors):
                    gen_digits = cand
                    break
            if gen_digits is None:  # q == 2: the only nonzero element
                gen_digits = [1] + [0] * (n - 1)
        else:
            gen_digits = [int(c) % p for c in generator]
            if len(gen_digits) != n:
                raise ValueError("generator must have n coefficients")
            if q > 2 and not _multiplicative_order_is_full(gen_digits, modulus, p, q, factors):
                raise ValueError("generator override does not have full order")

        exp = np.zeros(max(q - 1, 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        acc = [1] + [0] * (n - 1)
        for k in range(q - 1):
            enc = _encode(acc, p)
            exp[k] = enc
            log[enc] = k
            acc = _poly_mulmod(acc, gen_digits, modulus, p)
        if _encode(acc, p) != 1:
            raise ValueError("generator order is not q-1")  # defensive; validated above

        # negation table, digit-wise
        idx = np.arange(q, dtype=np.int64)
        neg = np.zeros(q, dtype=np.int64)
        pi = 1
        for _ in range(n):
            neg += ((p - (idx // pi) % p) % p) * pi
            pi *= p
        exp.setflags(write=False)
        log.setflags(write=False)
        neg.setflags(write=False)

        return Field(p=p, n=n, q=q, modulus=tuple(modulus),
                     generator=int(exp[1]) if q > 2 else 1,
                     exp=exp, log=log, neg_table=neg)

    # -- element views ------------------------------------------------------

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    def coeffs(self, x: int) -> tuple[int, ...]:
        return tuple(_digits(int(x), self.p, self.n))

    def element(self, coeffs: list[int]) -> int:
        if len(coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients")
        return _encode([int(c) % self.p for c in coeffs], self.p)

    def from_int(self, value: int) -> int:
        """Embed an integer through the prime subfield (value mod p)."""
        return value % self.p

    def g_pow(self, k: int) -> int:
        return int(self.exp[k % (self.q - 1)])

    # -- scalar arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p, out, pi = self.p, 0, 1
        for _ in range(self.n):
            out += ((a // pi + b // pi) % p) * pi
            pi *= p
        return out

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, int(self.neg_table[b]))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(int(self.log[a]) + int(self.log[b])) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero")
        return int(self.exp[(-int(self.log[a])) % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        """a^e for integer e >= 0; pow(x, 0) = 1 for every x, pow(0, e) = 0
        for e >= 1.  The exponent is reduced mod q-1 only for nonzero bases."""
        if e < 0:
            raise ValueError("exponent must be non-negative")
        if e == 0:
            return 1
        if a == 0:
            return 0
        return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])

    def trace(self, x: int) -> int:
        """Absolute trace into Z_p: the sum of the n Frobenius powers of x."""
        t, y = 0, int(x)
        for _ in range(self.n):
            t = self.add(t, y)
            y = self.pow(y, self.p)
        return t  # an element of the prime subfield, encoding == residue

    def quadratic_character(self, x: int) -> int:
        """0 at 0, +1 on nonzero squares, -1 on non-squares (odd p only)."""
        if self.p == 2:
            raise ValueError("quadratic character requires odd characteristic")
        if x == 0:
            return 0
        return 1 if int(self.log[x]) % 2 == 0 else -1

    def in_subfield(self, x: int, m: int) -> bool:
        """Membership of x in the subfield GF(p^m); m must divide n."""
        if self.n % m != 0:
            raise ValueError(f"GF({self.p}^{m}) is not a subfield of GF({self.p}^{self.n})")
        if x == 0:
            return True
        step = (self.q - 1) // (self.p**m - 1)
        return int(self.log[x]) % step == 0

    # -- vectorized arithmetic (int64 arrays of encodings) -------------------

    def add_v(self, x, y):
        if self.p == 2:
            return np.bitwise_xor(x, y)
        p, out, pi = self.p, 0, 1
        for _ in range(self.n):
            out = out + ((x // pi + y // pi) % p) * pi
            pi *= p
        return out

    def neg_v(self, x):
        return self.neg_table[x]

    def sub_v(self, x, y):
        return self.add_v(x, self.neg_table[y])

    def mul_v(self, x, y):
        zero = (x == 0) | (y == 0)
        prod = self.exp[(self.log[x] + self.log[y]) % (self.q - 1)]
        return np.where(zero, 0, prod)

    def pow_all(self, d: int) -> np.ndarray:
        """Table of x^d over all field elements in canonical order (d >= 0)."""
        if d < 0:
            raise ValueError("exponent must be non-negative")
        if d == 0:
            return np.ones(self.q, dtype=np.int64)
        out = np.zeros(self.q, dtype=np.int64)
        k = np.arange(self.q - 1, dtype=np.int64)
        out[self.exp] = self.exp[(k * (d % (self.q - 1))) % (self.q - 1)]
        out[0] = 0
        return out

    def eta_all(self) -> np.ndarray:
        """Quadratic character over all elements in canonical order (odd p)."""
        if self.p == 2:
            raise ValueError("quadratic character requires odd characteristic")
        x = self.elements()
        return np.where(x == 0, 0, np.where(self.log[x] % 2 == 0, 1, -1))

    # -- serialization -------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"p": self.p, "n": self.n,
                           "modulus": list(self.modulus),
                           "generator": list(self.coeffs(self.generator))},
                          separators=(",", ":"))

    @staticmethod
    def from_json(text: str, size_cap: int = DEFAULT_SIZE_CAP) -> "Field":
        obj = json.loads(text)
        return Field.build(int(obj["p"]), int(obj["n"]),
                           modulus=obj.get("modulus"),
                           generator=obj.get("generator"),
                           size_cap=size_cap)


_FIELD_CACHE: dict[tuple, Field] = {}


def build_field(p: int, n: int, modulus: tuple[int, ...] | None = None,
                size_cap: int = DEFAULT_SIZE_CAP) -> Field:
    """Cached deterministic field constructor (fields are immutable)."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if n >= 1 and p**n > size_cap:
        raise ValueError(f"field size {p}^{n} = {p**n} exceeds cap {size_cap}")
    key = (p, n, tuple(modulus) if modulus is not None else None)
    got = _FIELD_CACHE.get(key)
    if got is None:
        got = Field.build(p, n, modulus=list(modulus) if modulus else None,
                          size_cap=size_cap)
        _FIELD_CACHE[key] = got
    return got
