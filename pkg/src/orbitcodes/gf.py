"""The field tower GF(p) ⊂ GF(q) ⊂ GF(q^n).

GF(q^n) is realised as GF(p)[x]/(f) for a monic primitive ``f`` of degree
``e*n``; ``z`` is the class of ``x``.  Elements are coefficient tuples over
GF(p) in the power basis ``1, z, ..., z^(e*n - 1)``.  When ``q = p**e`` is not
prime, GF(q) is generated by ``w = z**((q**n - 1) // (q - 1))`` and every
element is also given coordinates over GF(q) in the basis ``1, z, ..., z^(n-1)``.

By default ``f`` is the Conway polynomial read from the bundled table, which
is the convention computer algebra systems use for their default primitive
element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    InvalidSubfield,
    MissingConwayPolynomial,
    NotIrreducible,
    NotPrimitive,
    TowerMismatch,
)
from .fqlinalg import GFq

# log/exp tables are built for fields up to this size
TABLE_LIMIT = 2**18


# -- integer helpers ---------------------------------------------------------


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**e``; raises ValueError when q is not a prime power."""
    fs = prime_factors(q) if q > 1 else []
    if len(fs) != 1:
        raise ValueError(f"{q} is not a prime power")
    p, e = fs[0], 0
    while q > 1:
        q //= p
        e += 1
    return p, e


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# -- polynomials over GF(p), ascending coefficient lists ----------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    d = len(f) - 1
    prod = [0] * (len(a) + len(b) - 1 if a and b else 0)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k] % p
        if c:
            for t in range(d + 1):
                prod[k - d + t] -= c * f[t]
    return _trim([x % p for x in prod[:d]])


def _poly_powmod(a: Sequence[int], k: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = list(a)
    while k:
        if k & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        k >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim([x % p for x in a]), _trim([x % p for x in b])
    while b:
        inv = pow(b[-1], p - 2, p)
        while len(a) >= len(b):
            c = (a[-1] * inv) % p
            shift = len(a) - len(b)
            for i, y in enumerate(b):
                a[shift + i] = (a[shift + i] - c * y) % p
            _trim(a)
            if not a:
                break
        a, b = b, a
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic ``f`` over GF(p)."""
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]

    def frob_iter(k):
        r = x
        for _ in range(k):
            r = _poly_powmod(r, p, f, p)
        return r

    if frob_iter(d) != x:
        return False
    for r in prime_factors(d):
        h = frob_iter(d // r)
        h = h + [0] * (2 - len(h)) if len(h) < 2 else list(h)
        h[1] -= 1
        g = _poly_gcd(list(f), h, p)
        if len(g) > 1:
            return False
    return True


def is_primitive(f: Sequence[int], p: int) -> bool:
    """True when the class of x has order p**d - 1 modulo the monic ``f``."""
    d = len(f) - 1
    order = p**d - 1
    x = [0, 1] if d > 1 else [(-f[0]) % p]
    if _poly_powmod(x, order, f, p) != [1]:
        return False
    return all(_poly_powmod(x, order // r, f, p) != [1] for r in prime_factors(order))


# -- Conway table -------------------------------------------------------------


def parse_conway_table(lines: Iterable[str]) -> dict[tuple[int, int], tuple[int, ...]]:
    """Parse records ``p degree c_0 c_1 ... c_d``; ``#`` starts a comment."""
    table = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [int(tok) for tok in line.split()]
        p, d, coeffs = fields[0], fields[1], tuple(fields[2:])
        if len(coeffs) != d + 1 or any(not 0 <= c < p for c in coeffs):
            raise ValueError(f"malformed Conway record on line {lineno}: {raw.strip()!r}")
        table[(p, d)] = coeffs
    return table


@lru_cache(maxsize=None)
def load_conway_table(path: str | None = None) -> dict[tuple[int, int], tuple[int, ...]]:
    if path is None:
        text = resources.files("orbitcodes").joinpath("data/conway.txt").read_text()
    else:
        text = Path(path).read_text()
    return parse_conway_table(text.splitlines())


def conway_polynomial(p: int, d: int, path: str | None = None) -> tuple[int, ...]:
    try:
        return load_conway_table(path)[(p, d)]
    except KeyError:
        raise MissingConwayPolynomial(
            f"no Conway polynomial for GF({p}^{d}) in the table; supply a modulus explicitly"
        ) from None


def format_polynomial(coeffs: Sequence[int], var: str = "x") -> str:
    """Ascending coefficients as text with descending powers, e.g. ``x^4 + x + 1``."""
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
            continue
        mono = var if i == 1 else f"{var}^{i}"
        parts.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(parts) if parts else "0"


# -- elements -----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FFElem:
    """An element of GF(q^n) as prime-field coefficients of 1, z, z^2, ..."""

    tower: FieldTower
    coeffs: tuple[int, ...]

    def __eq__(self, other):
        if not isinstance(other, FFElem):
            return NotImplemented
        return self.coeffs == other.coeffs and self.tower == other.tower

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other):
        return self.tower.add(self, self.tower.coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.tower.sub(self, self.tower.coerce(other))

    def __rsub__(self, other):
        return self.tower.sub(self.tower.coerce(other), self)

    def __neg__(self):
        return self.tower.neg(self)

    def __mul__(self, other):
        return self.tower.mul(self, self.tower.coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self.tower.mul(self, self.tower.inv(self.tower.coerce(other)))

    def __pow__(self, k: int):
        return self.tower.pow(self, k)

    def inverse(self) -> FFElem:
        return self.tower.inv(self)

    def __repr__(self):
        from .dsl import format_element

        return f"FFElem({format_element(self)})"


# -- the tower -----------------------------------------------------------------


class FieldTower:
    """GF(p) ⊂ GF(q) ⊂ GF(q^n) with a fixed primitive modulus.

    Immutable after construction.  Use :func:`build_tower` to get one with
    the irreducibility and primitivity checks applied.
    """

    def __init__(self, p: int, e: int, n: int, modulus: Sequence[int]):
        self.p = p
        self.e = e
        self.n = n
        self.m = e * n
        self.q = p**e
        self.order = p**self.m
        self.modulus = tuple(int(c) % p for c in modulus)
        self._zero = (0,) * self.m
        self.z = self._elem(self._monomial(1))
        self._basis = None
        self._coord = None
        self._fq = None
        self._log = None
        self._exp = None
        self._setup_coordinates()

    # identity

    def _key(self):
        return (self.p, self.e, self.n, self.modulus)

    def __eq__(self, other):
        return self is other or (isinstance(other, FieldTower) and self._key() == other._key())

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldTower(p={self.p}, e={self.e}, n={self.n}, modulus={list(self.modulus)})"

    @property
    def group_order(self) -> int:
        return self.order - 1

    # element constructors

    def _elem(self, coeffs) -> FFElem:
        return FFElem(self, tuple(coeffs))

    def _monomial(self, k: int) -> tuple[int, ...]:
        if self.m == 1:
            return ((-self.modulus[0]) % self.p,) if k == 1 else (1,)
        c = [0] * self.m
        c[k] = 1
        return tuple(c)

    @property
    def zero(self) -> FFElem:
        return self._elem(self._zero)

    @property
    def one(self) -> FFElem:
        return self.constant(1)

    def constant(self, c: int) -> FFElem:
        return self._elem((c % self.p,) + self._zero[1:])

    def element(self, coeffs: Sequence[int]) -> FFElem:
        if len(coeffs) > self.m:
            raise DegreeMismatch(f"{len(coeffs)} coefficients for a field of degree {self.m} over GF({self.p})")
        c = [int(x) % self.p for x in coeffs] + [0] * (self.m - len(coeffs))
        return self._elem(c)

    def power_of_z(self, k: int) -> FFElem:
        return self.pow(self.z, k % self.group_order) if k >= 0 else self.pow(self.z, k)

    def coerce(self, x) -> FFElem:
        if isinstance(x, FFElem):
            if x.tower is not self and x.tower != self:
                raise TowerMismatch("elements belong to different field towers")
            return x
        if isinstance(x, int):
            return self.constant(x)
        raise TypeError(f"cannot interpret {x!r} as an element of GF({self.q}^{self.n})")

    def elements(self) -> Iterable[FFElem]:
        """Every field element, zero first; only sensible for small fields."""
        yield self.zero
        x = self.one
        for _ in range(self.group_order):
            yield x
            x = self._mul_z(x)

    # arithmetic

    def add(self, a: FFElem, b: FFElem) -> FFElem:
        p = self.p
        return FFElem(self, tuple((x + y) % p for x, y in zip(a.coeffs, b.coeffs)))

    def sub(self, a: FFElem, b: FFElem) -> FFElem:
        p = self.p
        return FFElem(self, tuple((x - y) % p for x, y in zip(a.coeffs, b.coeffs)))

    def neg(self, a: FFElem) -> FFElem:
        p = self.p
        return FFElem(self, tuple((-x) % p for x in a.coeffs))

    def _mul_z(self, a: FFElem) -> FFElem:
        c = a.coeffs
        p, f = self.p, self.modulus
        if self.m == 1:
            return FFElem(self, ((c[0] * -f[0]) % p,))
        top = c[-1]
        shifted = (0,) + c[:-1]
        if top:
            shifted = tuple((x - top * y) % p for x, y in zip(shifted, f))
        return FFElem(self, shifted)

    def _tables(self):
        if self._log is None and self.order <= TABLE_LIMIT:
            log = {}
            exp = []
            x = self.one
            for j in range(self.group_order):
                exp.append(x.coeffs)
                log[x.coeffs] = j
                x = self._mul_z(x)
            self._log, self._exp = log, exp
        return self._log, self._exp

    def log(self, a: FFElem) -> int:
        """Discrete logarithm base z; only available on table-sized fields."""
        log, _ = self._tables()
        if log is None:
            raise NotImplementedError("discrete logarithms are only tabulated for small fields")
        if a.is_zero():
            raise DivisionByZero("log of zero")
        return log[a.coeffs]

    def mul(self, a: FFElem, b: FFElem) -> FFElem:
        if a.is_zero() or b.is_zero():
            return self.zero
        log, exp = self._tables()
        if log is not None:
            return FFElem(self, exp[(log[a.coeffs] + log[b.coeffs]) % self.group_order])
        prod = _poly_mulmod(_trim(list(a.coeffs)), _trim(list(b.coeffs)), self.modulus, self.p)
        return FFElem(self, tuple(prod) + self._zero[len(prod):])

    def pow(self, a: FFElem, k: int) -> FFElem:
        if k < 0:
            return self.pow(self.inv(a), -k)
        if a.is_zero():
            return self.one if k == 0 else self.zero
        log, exp = self._tables()
        if log is not None:
            return FFElem(self, exp[(log[a.coeffs] * k) % self.group_order])
        k %= self.group_order
        result, base = self.one, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def inv(self, a: FFElem) -> FFElem:
        if a.is_zero():
            raise DivisionByZero("0 has no multiplicative inverse")
        return self.pow(a, self.group_order - 1)

    def frobenius(self, a: FFElem, s: int = 1) -> FFElem:
        """a -> a^(q^s)."""
        return self.pow(a, self.q**s)

    def multiplicative_order(self, a: FFElem) -> int:
        if a.is_zero():
            raise DivisionByZero("0 has no multiplicative order")
        order = self.group_order
        for r in prime_factors(order):
            while order % r == 0 and self.pow(a, order // r) == self.one:
                order //= r
        return order

    def trace(self, a: FFElem) -> int:
        """Tr_{GF(q^n)/GF(q)}(a) as a GF(q) code."""
        t, x = self.zero, a
        for _ in range(self.n):
            t = self.add(t, x)
            x = self.frobenius(x)
        coords = self.to_fq_coords(t)
        assert not any(coords[1:]), "trace left GF(q)"
        return coords[0]

    # subfields

    def _check_subfield(self, s: int) -> None:
        if s < 1 or self.n % s:
            raise InvalidSubfield(f"GF(q^{s}) is not a subfield of GF(q^{self.n}) (need {s} | {self.n})")

    def degree_over(self, a: FFElem, s: int = 1) -> int:
        """Smallest d with a^((q^s)^d) = a, the degree of a over GF(q^s)."""
        self._check_subfield(s)
        d, b = 1, self.frobenius(a, s)
        while b != a:
            b = self.frobenius(b, s)
            d += 1
        return d

    def subfield_exponent(self, s: int) -> int:
        self._check_subfield(s)
        return (self.order - 1) // (self.q**s - 1)

    def subfield_generator(self, s: int) -> FFElem:
        """z^((q^n - 1)/(q^s - 1)), a primitive element of GF(q^s)."""
        return self.pow(self.z, self.subfield_exponent(s))

    def in_subfield(self, a: FFElem, s: int) -> bool:
        self._check_subfield(s)
        return self.frobenius(a, s) == a

    # GF(q) coordinates

    def _setup_coordinates(self) -> None:
        p, e, n = self.p, self.e, self.n
        if e == 1:
            self._fq = GFq(p, 1)
            return
        w = self.pow(self.z, (self.order - 1) // (self.q - 1))
        wpows = [self.one]
        for _ in range(e - 1):
            wpows.append(self.mul(wpows[-1], w))
        columns = []
        zi = self.one
        for _ in range(n):
            for j in range(e):
                columns.append(self.mul(wpows[j], zi).coeffs)
            zi = self._mul_z(zi)
        basis = [[columns[c][r] for c in range(self.m)] for r in range(self.m)]
        self._basis = basis
        self._coord = _invert_mod_p(basis, p)
        self._wpows = wpows
        mul_table = [[0] * self.q for _ in range(self.q)]
        embedded = [self._embed_fq(c) for c in range(self.q)]
        for a in range(self.q):
            for b in range(self.q):
                prod = self.mul(embedded[a], embedded[b])
                coords = self._coords_prime(prod)
                mul_table[a][b] = sum(coords[j] * p**j for j in range(e))
        self._fq = GFq(p, e, mul_table)

    def _embed_fq(self, code: int) -> FFElem:
        x = self.zero
        for j in range(self.e):
            d = (code // self.p**j) % self.p
            if d:
                x = self.add(x, FFElem(self, tuple((d * c) % self.p for c in self._wpows[j].coeffs)))
        return x

    def _coords_prime(self, a: FFElem) -> list[int]:
        p = self.p
        return [sum(r * c for r, c in zip(row, a.coeffs)) % p for row in self._coord]

    @property
    def fq(self) -> GFq:
        """Table arithmetic for the base field GF(q)."""
        return self._fq

    @property
    def coord_matrix(self) -> tuple[tuple[int, ...], ...]:
        if self._coord is None:
            return tuple(tuple(int(i == j) for j in range(self.m)) for i in range(self.m))
        return tuple(tuple(r) for r in self._coord)

    def to_fq_coords(self, a: FFElem) -> tuple[int, ...]:
        if self.e == 1:
            return a.coeffs
        c = self._coords_prime(a)
        p, e = self.p, self.e
        return tuple(sum(c[i * e + j] * p**j for j in range(e)) for i in range(self.n))

    def from_fq_coords(self, coords: Sequence[int]) -> FFElem:
        if len(coords) != self.n:
            raise DegreeMismatch(f"expected {self.n} coordinates, got {len(coords)}")
        if self.e == 1:
            return FFElem(self, tuple(int(c) for c in coords))
        p, e = self.p, self.e
        flat = [(c // p**j) % p for c in coords for j in range(e)]
        return FFElem(self, tuple(sum(r * x for r, x in zip(row, flat)) % p for row in self._basis))

    def fq_element(self, code: int) -> FFElem:
        """Embed a GF(q) code into GF(q^n)."""
        if self.e == 1:
            return self.constant(code)
        return self._embed_fq(code)

    @cached_property
    def z_power_n_coords(self) -> tuple[int, ...]:
        """GF(q)-coordinates of z^n; drives multiplication by z on coordinates."""
        return self.to_fq_coords(self.pow(self.z, self.n))


def _invert_mod_p(mat: list[list[int]], p: int) -> list[list[int]]:
    size = len(mat)
    work = [list(row) + [int(i == j) for j in range(size)] for i, row in enumerate(mat)]
    for col in range(size):
        piv = next((r for r in range(col, size) if work[r][col] % p), None)
        if piv is None:
            raise ValueError("basis matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        inv = pow(work[col][col], p - 2, p)
        work[col] = [(x * inv) % p for x in work[col]]
        for r in range(size):
            if r != col and work[r][col]:
                c = work[r][col]
                work[r] = [(x - c * y) % p for x, y in zip(work[r], work[col])]
    return [row[size:] for row in work]


def build_tower(
    p: int, e: int, n: int, modulus: Sequence[int] | None = None, conway_path: str | None = None
) -> FieldTower:
    """Construct and validate GF(p) ⊂ GF(p^e) ⊂ GF(p^(e*n)).

    ``modulus`` lists ascending coefficients of a monic polynomial of degree
    ``e*n``; when omitted the Conway polynomial is used.
    """
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if e < 1 or n < 1:
        raise ValueError("e and n must be positive")
    m = e * n
    if modulus is None:
        modulus = conway_polynomial(p, m, conway_path)
    modulus = [int(c) % p for c in modulus]
    if len(modulus) != m + 1:
        raise DegreeMismatch(f"modulus has degree {len(modulus) - 1}, expected {m}")
    if modulus[-1] != 1:
        raise DegreeMismatch("modulus must be monic")
    if not is_irreducible(modulus, p):
        raise NotIrreducible(f"{modulus} is reducible over GF({p})")
    if not is_primitive(modulus, p):
        raise NotPrimitive(f"{modulus} is irreducible but not primitive over GF({p})")
    return FieldTower(p, e, n, modulus)


@lru_cache(maxsize=64)
def tower_for(q: int, n: int, modulus: tuple[int, ...] | None = None, conway_path: str | None = None) -> FieldTower:
    """Cached :func:`build_tower` keyed by the prime power ``q``."""
    p, e = prime_power(q)
    return build_tower(p, e, n, modulus, conway_path)
