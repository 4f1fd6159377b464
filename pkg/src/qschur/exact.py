"""Exact arithmetic over rational functions in q and t.

Three value types live here:

* :class:`QTPoly` -- a polynomial in ``q`` and ``t`` with integer coefficients.
* :class:`QTRatio` -- a reduced quotient of two ``QTPoly`` values.
* :class:`XPoly` -- a polynomial in ``x_1, ..., x_n`` with ``QTRatio`` coefficients.

Every value is immutable once built.  Reduction uses a hand-written
content/primitive-part Euclidean algorithm, viewing a bivariate polynomial as
a polynomial in ``t`` whose coefficients are integer polynomials in ``q``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "QTPoly",
    "QTRatio",
    "XPoly",
    "qt_normalize",
    "xpoly_arith",
    "substitute",
    "exact_divide_by_difference",
    "ZERO",
    "ONE",
    "Q",
    "T",
]


# ---------------------------------------------------------------------------
# dense univariate integer polynomials (index = exponent), used by the gcd
# ---------------------------------------------------------------------------


def _u_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _u_sub(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _u_trim(out)


def _u_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _u_content(a: list[int]) -> int:
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _u_divexact(a: list[int], b: list[int]) -> list[int]:
    """Quotient ``a / b`` over the integers; raise if the division is not exact."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(a) - 1 < db:
        if a:
            raise ArithmeticError("inexact univariate division")
        return []
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c == 0:
            continue
        qk, r = divmod(c, lb)
        if r:
            raise ArithmeticError("inexact univariate division")
        quot[k - db] = qk
        for j, bj in enumerate(b):
            a[k - db + j] -= qk * bj
    if any(a):
        raise ArithmeticError("inexact univariate division")
    return _u_trim(quot)


def _u_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of ``a`` by ``b``."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [lb * c for c in a]
        for j, bj in enumerate(b):
            a[shift + j] -= la * bj
        _u_trim(a)
    return a


def _u_primpart(a: list[int]) -> list[int]:
    c = _u_content(a)
    if c in (0, 1):
        return list(a)
    return [x // c for x in a]


def _u_gcd(a: list[int], b: list[int]) -> list[int]:
    """Gcd in Z[q] with positive leading coefficient."""
    if not a:
        out = list(b)
    elif not b:
        out = list(a)
    else:
        c = gcd(_u_content(a), _u_content(b))
        a, b = _u_primpart(a), _u_primpart(b)
        if len(a) < len(b):
            a, b = b, a
        while b:
            if len(b) == 1:
                a = [1]
                break
            r = _u_prem(a, b)
            a, b = b, _u_primpart(r)
        out = [c * x for x in _u_primpart(a)]
    if out and out[-1] < 0:
        out = [-x for x in out]
    return out


# ---------------------------------------------------------------------------
# bivariate polynomials viewed in Z[q][t]: list indexed by t-exponent of
# dense q-polynomials
# ---------------------------------------------------------------------------

_Bi = list[list[int]]


def _to_bi(terms: Mapping[tuple[int, int], int]) -> _Bi:
    dt = max(te for (_, te) in terms)
    out: _Bi = [[] for _ in range(dt + 1)]
    for (qe, te), c in terms.items():
        row = out[te]
        if len(row) <= qe:
            row.extend([0] * (qe + 1 - len(row)))
        row[qe] = c
    for row in out:
        _u_trim(row)
    return out


def _from_bi(b: _Bi) -> dict[tuple[int, int], int]:
    out = {}
    for te, row in enumerate(b):
        for qe, c in enumerate(row):
            if c:
                out[(qe, te)] = c
    return out


def _bi_trim(a: _Bi) -> _Bi:
    while a and not a[-1]:
        a.pop()
    return a


def _bi_content(a: _Bi) -> list[int]:
    g: list[int] = []
    for row in a:
        if row:
            g = _u_gcd(g, row)
            if len(g) == 1 and g[0] == 1:
                break
    return g


def _bi_primpart(a: _Bi) -> _Bi:
    c = _bi_content(a)
    if c == [1]:
        return [list(r) for r in a]
    return [_u_divexact(r, c) if r else [] for r in a]


def _bi_prem(a: _Bi, b: _Bi) -> _Bi:
    a = [list(r) for r in a]
    db = len(b) - 1
    lb = b[-1]
    while a and len(a) - 1 >= db:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [_u_mul(lb, r) for r in a]
        for j, bj in enumerate(b):
            a[shift + j] = _u_sub(a[shift + j], _u_mul(la, bj))
        _bi_trim(a)
    return a


def _bi_gcd(a: _Bi, b: _Bi) -> _Bi:
    ca, cb = _bi_content(a), _bi_content(b)
    c = _u_gcd(ca, cb)
    a = _bi_primpart(a)
    b = _bi_primpart(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            # b is a nonzero polynomial in q alone and primitive in t: unit
            a = [[1]]
            break
        r = _bi_prem(a, b)
        a, b = b, (_bi_primpart(r) if r else [])
    a = _bi_primpart(a)
    return [_u_mul(c, r) for r in a]


# ---------------------------------------------------------------------------
# QTPoly
# ---------------------------------------------------------------------------


class QTPoly:
    """Polynomial in ``q`` and ``t`` with integer coefficients.

    ``terms`` maps ``(q_exponent, t_exponent)`` to a nonzero ``int``.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        if terms:
            for (qe, te), c in terms.items():
                if qe < 0 or te < 0:
                    raise ValueError("QTPoly exponents must be nonnegative")
                if c:
                    clean[(int(qe), int(te))] = int(c)
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[tuple[int, int], int]) -> "QTPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "QTPoly":
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, qe: int, te: int, c: int = 1) -> "QTPoly":
        return cls({(qe, te): c})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0, 0): 1}

    def is_constant(self) -> bool:
        return not self._terms or list(self._terms) == [(0, 0)]

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_value(self) -> int:
        return self._terms.get((0, 0), 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QTPoly.const(other)
        if not isinstance(other, QTPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "QTPoly":
        return QTPoly._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other: "QTPoly | int") -> "QTPoly":
        if isinstance(other, int):
            other = QTPoly.const(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return QTPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other: "QTPoly | int") -> "QTPoly":
        if isinstance(other, int):
            other = QTPoly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "QTPoly":
        return QTPoly.const(other) - self

    def __mul__(self, other: "QTPoly | int") -> "QTPoly":
        if isinstance(other, int):
            if other == 0:
                return QTPoly._raw({})
            return QTPoly._raw({k: c * other for k, c in self._terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return QTPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QTPoly":
        out = QTPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def leading_term(self) -> tuple[tuple[int, int], int]:
        """Largest term in lexicographic (q, t) order."""
        k = max(self._terms)
        return k, self._terms[k]

    def lowest_term(self) -> tuple[tuple[int, int], int]:
        """Smallest term in lexicographic (q, t) order."""
        k = min(self._terms)
        return k, self._terms[k]

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    def min_exponents(self) -> tuple[int, int]:
        return (min(k[0] for k in self._terms), min(k[1] for k in self._terms))

    def shift(self, dq: int, dt: int) -> "QTPoly":
        return QTPoly._raw({(a + dq, b + dt): c for (a, b), c in self._terms.items()})

    def exact_div(self, other: "QTPoly") -> "QTPoly":
        """Exact quotient; raises ``ArithmeticError`` when ``other`` does not divide."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if other.is_monomial():
            ((dq, dt), d) = next(iter(other._terms.items()))
            out = {}
            for (a, b), c in self._terms.items():
                if a < dq or b < dt or c % d:
                    raise ArithmeticError("inexact division")
                out[(a - dq, b - dt)] = c // d
            return QTPoly._raw(out)
        rem = dict(self._terms)
        (lq, lt), lc = other.leading_term()
        quot: dict[tuple[int, int], int] = {}
        while rem:
            (rq, rt) = max(rem)
            rc = rem[(rq, rt)]
            if rq < lq or rt < lt or rc % lc:
                raise ArithmeticError("inexact division")
            mq, mt, mc = rq - lq, rt - lt, rc // lc
            quot[(mq, mt)] = mc
            for (a, b), c in other._terms.items():
                k = (a + mq, b + mt)
                v = rem.get(k, 0) - mc * c
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return QTPoly._raw(quot)

    def evaluate(self, q: Fraction | int, t: Fraction | int) -> Fraction:
        q, t = Fraction(q), Fraction(t)
        total = Fraction(0)
        for (a, b), c in self._terms.items():
            total += c * q**a * t**b
        return total

    def to_json(self) -> list[list]:
        return [[a, b, str(c)] for (a, b), c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data: Iterable[Sequence]) -> "QTPoly":
        return cls({(int(a), int(b)): int(c) for a, b, c in data})

    def _fmt(self, latex: bool) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (a, b), c in sorted(self._terms.items()):
            mono = []
            for sym, e in (("q", a), ("t", b)):
                if e == 1:
                    mono.append(sym)
                elif e > 1:
                    mono.append(f"{sym}^{{{e}}}" if latex else f"{sym}^{e}")
            body = ("" if latex else "*").join(mono)
            mag = abs(c)
            if body:
                text = body if mag == 1 else (f"{mag}{body}" if latex else f"{mag}*{body}")
            else:
                text = str(mag)
            pieces.append(("-" if c < 0 else "+", text))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __str__(self) -> str:
        return self._fmt(latex=False)

    def latex(self) -> str:
        return self._fmt(latex=True)

    def __repr__(self) -> str:
        return f"QTPoly({self})"


def qt_gcd(a: QTPoly, b: QTPoly) -> QTPoly:
    """Greatest common divisor in Z[q, t], normalized to a positive lowest term."""
    if a.is_zero():
        g = b
    elif b.is_zero():
        g = a
    else:
        qa, ta = a.min_exponents()
        qb, tb = b.min_exponents()
        mq, mt = min(qa, qb), min(ta, tb)
        a1, b1 = a.shift(-qa, -ta), b.shift(-qb, -tb)
        if a1.is_constant() or b1.is_constant():
            core = QTPoly.const(gcd(a1.content(), b1.content()))
        else:
            core = QTPoly._raw(_from_bi(_bi_gcd(_to_bi(a1._terms), _to_bi(b1._terms))))
        g = core.shift(mq, mt)
    if not g.is_zero() and g.lowest_term()[1] < 0:
        g = -g
    return g


# ---------------------------------------------------------------------------
# QTRatio
# ---------------------------------------------------------------------------


class QTRatio:
    """Reduced rational function ``num / den`` in ``q`` and ``t``.

    The numerator and denominator share no common factor, and the lowest
    term of the denominator (smallest q-degree, then smallest t-degree) has a
    positive coefficient.  Structural equality is therefore value equality.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: QTPoly | int = 0, den: QTPoly | int = 1):
        if isinstance(num, int):
            num = QTPoly.const(num)
        if isinstance(den, int):
            den = QTPoly.const(den)
        n, d = _reduce(num, den)
        self.num = n
        self.den = d
        self._hash: int | None = None

    @classmethod
    def _raw(cls, num: QTPoly, den: QTPoly) -> "QTRatio":
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, qe: int, te: int, c: int = 1) -> "QTRatio":
        """``c * q**qe * t**te``; negative exponents land in the denominator."""
        num = QTPoly.monomial(max(qe, 0), max(te, 0), c)
        den = QTPoly.monomial(max(-qe, 0), max(-te, 0), 1)
        return cls._raw(num, den) if c else cls._raw(QTPoly.const(0), QTPoly.const(1))

    @classmethod
    def coerce(cls, value: "QTRatio | QTPoly | int | Fraction") -> "QTRatio":
        if isinstance(value, QTRatio):
            return value
        if isinstance(value, QTPoly):
            return cls._raw(value, QTPoly.const(1))
        if isinstance(value, Fraction):
            return cls(value.numerator, value.denominator)
        if isinstance(value, int):
            return cls._raw(QTPoly.const(value), QTPoly.const(1))
        raise TypeError(f"cannot coerce {type(value).__name__} to QTRatio")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, QTPoly)):
            other = QTRatio.coerce(other)
        if not isinstance(other, QTRatio):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self) -> "QTRatio":
        return QTRatio._raw(-self.num, self.den)

    def __add__(self, other: "QTRatio | QTPoly | int | Fraction") -> "QTRatio":
        other = QTRatio.coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            if self.den.is_one():
                return QTRatio._raw(self.num + other.num, self.den)
            return QTRatio(self.num + other.num, self.den)
        if self.den.is_one():
            return QTRatio._raw(self.num * other.den + other.num, other.den)
        if other.den.is_one():
            return QTRatio._raw(self.num + other.num * self.den, self.den)
        return QTRatio(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other: "QTRatio | QTPoly | int | Fraction") -> "QTRatio":
        return self + (-QTRatio.coerce(other))

    def __rsub__(self, other: "QTRatio | QTPoly | int | Fraction") -> "QTRatio":
        return QTRatio.coerce(other) + (-self)

    def __mul__(self, other: "QTRatio | QTPoly | int | Fraction") -> "QTRatio":
        other = QTRatio.coerce(other)
        if self.is_zero() or other.is_zero():
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return QTRatio._raw(self.num * other.num, self.den)
        # cross-cancel so each gcd works on smaller inputs
        g1 = qt_gcd(self.num, other.den)
        g2 = qt_gcd(other.num, self.den)
        n1, d2 = self.num.exact_div(g1), other.den.exact_div(g1)
        n2, d1 = other.num.exact_div(g2), self.den.exact_div(g2)
        return QTRatio._raw(*_sign_fix(n1 * n2, d1 * d2))

    __rmul__ = __mul__

    def inverse(self) -> "QTRatio":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return QTRatio._raw(*_sign_fix(self.den, self.num))

    def __truediv__(self, other: "QTRatio | QTPoly | int | Fraction") -> "QTRatio":
        return self * QTRatio.coerce(other).inverse()

    def __rtruediv__(self, other: "QTRatio | QTPoly | int | Fraction") -> "QTRatio":
        return QTRatio.coerce(other) * self.inverse()

    def __pow__(self, e: int) -> "QTRatio":
        if e < 0:
            return self.inverse() ** (-e)
        return QTRatio._raw(self.num**e, self.den**e)

    def evaluate(self, q: Fraction | int, t: Fraction | int) -> Fraction:
        d = self.den.evaluate(q, t)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the requested point")
        return self.num.evaluate(q, t) / d

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        n = str(self.num)
        if len(self.num._terms) > 1:
            n = f"({n})"
        d = str(self.den)
        if len(self.den._terms) > 1 or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def latex(self) -> str:
        if self.den.is_one():
            return self.num.latex()
        return rf"\frac{{{self.num.latex()}}}{{{self.den.latex()}}}"

    def __repr__(self) -> str:
        return f"QTRatio({self})"


def _sign_fix(num: QTPoly, den: QTPoly) -> tuple[QTPoly, QTPoly]:
    if den.lowest_term()[1] < 0:
        return -num, -den
    return num, den


def _reduce(num: QTPoly, den: QTPoly) -> tuple[QTPoly, QTPoly]:
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return QTPoly.const(0), QTPoly.const(1)
    if den.is_one():
        return num, den
    g = qt_gcd(num, den)
    if not g.is_one():
        num = num.exact_div(g)
        den = den.exact_div(g)
    return _sign_fix(num, den)


def qt_normalize(num: QTPoly, den: QTPoly) -> QTRatio:
    """Return the unique reduced representative of ``num / den``."""
    return QTRatio(num, den)


ZERO = QTRatio._raw(QTPoly.const(0), QTPoly.const(1))
ONE = QTRatio._raw(QTPoly.const(1), QTPoly.const(1))
Q = QTRatio._raw(QTPoly.monomial(1, 0), QTPoly.const(1))
T = QTRatio._raw(QTPoly.monomial(0, 1), QTPoly.const(1))


# ---------------------------------------------------------------------------
# XPoly
# ---------------------------------------------------------------------------

Exponent = tuple[int, ...]


def _grlex_key(e: Exponent) -> tuple:
    return (sum(e), e)


class XPoly:
    """Polynomial in ``x_1..x_n`` with :class:`QTRatio` coefficients."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Sequence[int], "QTRatio | QTPoly | int | Fraction"] | None = None):
        self.n = n
        clean: dict[Exponent, QTRatio] = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(v) for v in e)
                if len(e) != n:
                    raise ValueError(f"exponent {e} does not have length {n}")
                if any(v < 0 for v in e):
                    raise ValueError("negative x-exponent")
                c = QTRatio.coerce(c)
                if e in clean:
                    c = clean[e] + c
                if c.is_zero():
                    clean.pop(e, None)
                else:
                    clean[e] = c
        self._terms = clean

    @classmethod
    def _raw(cls, n: int, terms: dict[Exponent, QTRatio]) -> "XPoly":
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, n: int) -> "XPoly":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "XPoly":
        return cls._raw(n, {(0,) * n: ONE})

    @classmethod
    def monomial(cls, exps: Sequence[int], coef: "QTRatio | int" = 1) -> "XPoly":
        return cls(len(exps), {tuple(exps): coef})

    @classmethod
    def variable(cls, n: int, i: int) -> "XPoly":
        """The variable ``x_i`` (1-indexed)."""
        e = [0] * n
        e[i - 1] = 1
        return cls._raw(n, {tuple(e): ONE})

    @property
    def terms(self) -> dict[Exponent, QTRatio]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exponent, QTRatio]]:
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]))

    def coefficient(self, exps: Sequence[int]) -> QTRatio:
        return self._terms.get(tuple(exps), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def _check(self, other: "XPoly") -> None:
        if not isinstance(other, XPoly):
            raise TypeError("expected XPoly")
        if other.n != self.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __neg__(self) -> "XPoly":
        return XPoly._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __add__(self, other: "XPoly") -> "XPoly":
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            if e in out:
                v = out[e] + c
                if v.is_zero():
                    del out[e]
                else:
                    out[e] = v
            else:
                out[e] = c
        return XPoly._raw(self.n, out)

    def __sub__(self, other: "XPoly") -> "XPoly":
        return self + (-other)

    def __mul__(self, other: "XPoly | QTRatio | QTPoly | int | Fraction") -> "XPoly":
        if not isinstance(other, XPoly):
            return self.scale(other)
        self._check(other)
        out: dict[Exponent, QTRatio] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                if e in out:
                    v = out[e] + v
                out[e] = v
        return XPoly._raw(self.n, {e: c for e, c in out.items() if not c.is_zero()})

    def __rmul__(self, other: "QTRatio | QTPoly | int | Fraction") -> "XPoly":
        return self.scale(other)

    def scale(self, c: "QTRatio | QTPoly | int | Fraction") -> "XPoly":
        c = QTRatio.coerce(c)
        if c.is_zero():
            return XPoly.zero(self.n)
        if c.is_one():
            return self
        return XPoly._raw(self.n, {e: v * c for e, v in self._terms.items()})

    def shift(self, exps: Sequence[int]) -> "XPoly":
        """Multiply by the monomial ``x**exps``."""
        return XPoly._raw(self.n, {tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()})

    def swap(self, i: int) -> "XPoly":
        """Apply ``s_i``: exchange ``x_i`` and ``x_{i+1}`` (1-indexed)."""
        if not 1 <= i < self.n:
            raise ValueError(f"s_{i} out of range for n={self.n}")
        out = {}
        for e, c in self._terms.items():
            f = list(e)
            f[i - 1], f[i] = f[i], f[i - 1]
            out[tuple(f)] = c
        return XPoly._raw(self.n, out)

    def permute(self, perm: Sequence[int]) -> "XPoly":
        """Substitute ``x_i -> x_{perm[i-1]}`` for a permutation in one-line notation."""
        images = [(p, 0, 0) for p in perm]
        return substitute(self, images)

    def is_symmetric_in(self, i: int) -> bool:
        return self.swap(i) == self

    def map_coefficients(self, fn) -> "XPoly":
        out = {}
        for e, c in self._terms.items():
            v = QTRatio.coerce(fn(c))
            if not v.is_zero():
                out[e] = v
        return XPoly._raw(self.n, out)

    def specialize(self, q: Fraction | int, t: Fraction | int) -> dict[Exponent, Fraction]:
        """Evaluate every coefficient at numeric ``(q, t)``; zero results are dropped."""
        out = {}
        for e, c in self._terms.items():
            v = c.evaluate(q, t)
            if v:
                out[e] = v
        return out

    def specialize_poly(self, q: Fraction | int, t: Fraction | int) -> "XPoly":
        return XPoly._raw(self.n, {e: QTRatio.coerce(v) for e, v in self.specialize(q, t).items()})

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def is_integral(self) -> bool:
        """True when every coefficient is an integer constant."""
        return all(c.den.is_one() and c.num.is_constant() for c in self._terms.values())

    def integer_terms(self) -> dict[Exponent, int]:
        if not self.is_integral():
            raise ValueError("polynomial has non-integer coefficients")
        return {e: c.num.constant_value() for e, c in self._terms.items()}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"x": list(e), **c.to_json()} for e, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "XPoly":
        n = int(data["n"])
        terms = {}
        for term in data["terms"]:
            terms[tuple(term["x"])] = QTRatio(QTPoly.from_json(term["num"]), QTPoly.from_json(term["den"]))
        return cls(n, terms)

    def _fmt(self, latex: bool) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self.items()):
            mono = []
            for i, a in enumerate(e, start=1):
                if a == 1:
                    mono.append(f"x_{{{i}}}" if latex else f"x{i}")
                elif a > 1:
                    mono.append(f"x_{{{i}}}^{{{a}}}" if latex else f"x{i}^{a}")
            body = ("" if latex else "*").join(mono)
            if c.is_one():
                text = body or "1"
            elif c == -1:
                text = "-" + (body or "1")
            else:
                coef = c.latex() if latex else str(c)
                simple = c.den.is_one() and c.num.is_monomial()
                if body and not simple and not (latex and not c.den.is_one()):
                    coef = f"({coef})"
                text = coef if not body else (f"{coef}{body}" if latex else f"{coef}*{body}")
            parts.append(text)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __str__(self) -> str:
        return self._fmt(latex=False)

    def latex(self) -> str:
        return self._fmt(latex=True)

    def __repr__(self) -> str:
        return f"XPoly({self.n}, {self})"


def xpoly_arith(a: XPoly, b: XPoly, op: str) -> XPoly:
    """Apply ``op`` in ``{"add", "sub", "mul"}`` to two polynomials in the same variables."""
    a._check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def substitute(f: XPoly, images: Sequence[tuple[int, int, int]]) -> XPoly:
    """Substitute ``x_i -> q**a * t**b * x_j`` for ``images[i-1] = (j, a, b)``.

    The targets ``j`` (1-indexed) must form a permutation of ``1..n``.  The
    scalar exponents ``a`` and ``b`` may be negative.
    """
    n = f.n
    if len(images) != n:
        raise ValueError(f"need {n} images, got {len(images)}")
    targets = [j for j, _, _ in images]
    if sorted(targets) != list(range(1, n + 1)):
        raise ValueError(f"images {targets} do not form a permutation of 1..{n}")
    out: dict[Exponent, QTRatio] = {}
    for e, c in f._terms.items():
        new = [0] * n
        qe = te = 0
        for i, a in enumerate(e):
            if a:
                j, sq, st = images[i]
                new[j - 1] += a
                qe += sq * a
                te += st * a
        key = tuple(new)
        v = c * QTRatio.monomial(qe, te) if (qe or te) else c
        if key in out:
            v = out[key] + v
        out[key] = v
    return XPoly._raw(n, {e: c for e, c in out.items() if not c.is_zero()})


def exact_divide_by_difference(f: XPoly, i: int) -> XPoly:
    """Return ``(f - s_i f) / (x_i - x_{i+1})`` by long division.

    The dividend is antisymmetric in ``x_i, x_{i+1}``, so the remainder must
    vanish.  A nonzero remainder means the input was corrupted and raises
    ``ArithmeticError``.
    """
    rem = dict((f - f.swap(i))._terms)
    a, b = i - 1, i
    quot: dict[Exponent, QTRatio] = {}
    while True:
        # lead term: largest x_i exponent among terms still divisible by x_i
        cands = [e for e in rem if e[a] > 0]
        if not cands:
            break
        e = max(cands, key=lambda v: (v[a], v))
        c = rem.pop(e)
        qe = list(e)
        qe[a] -= 1
        qkey = tuple(qe)
        quot[qkey] = quot[qkey] + c if qkey in quot else c
        # subtract c * x^qe * (x_i - x_{i+1}); the x_i part was popped above
        low = list(qe)
        low[b] += 1
        lkey = tuple(low)
        v = rem.get(lkey, ZERO) + c
        if v.is_zero():
            rem.pop(lkey, None)
        else:
            rem[lkey] = v
    if rem:
        raise ArithmeticError("nonzero remainder dividing by x_i - x_{i+1}")
    return XPoly._raw(f.n, {e: c for e, c in quot.items() if not c.is_zero()})
