"""Exact arithmetic kernel over the Gaussian rationals and q^(1/2).

Every invariant this package computes lives in the field Q(i)(z) with
z = q^(1/2).  Elements are kept in a unique canonical form

    q^(shift/2) * num(z) / den(z)

where num and den are polynomials in z with nonzero constant term,
gcd(num, den) = 1, and den has constant coefficient 1.  Equality is
therefore structural and hashing is cheap.

Exponents of z are stored as plain integers counting powers of q^(1/2),
so no rational exponents ever appear in the kernel.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - gmpy2 is normally available
    from fractions import Fraction as Q

_Q0 = Q(0)
_Q1 = Q(1)
_QTYPE = type(_Q0)


def _as_q(x):
    if type(x) is _QTYPE:
        return x
    return Q(x)


def _gr(re, im):
    """Fast Gaussian-rational factory for already-exact parts."""
    g = GaussRational.__new__(GaussRational)
    object.__setattr__(g, "re", re)
    object.__setattr__(g, "im", im)
    return g


class GaussRational:
    """A Gaussian rational re + im*i with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_q(re))
        object.__setattr__(self, "im", _as_q(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    def is_zero(self):
        return not self.re and not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __add__(self, other):
        return _gr(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return _gr(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return _gr(-self.re, -self.im)

    def __mul__(self, other):
        sre, sim, ore, oim = self.re, self.im, other.re, other.im
        return _gr(sre * ore - sim * oim, sre * oim + sim * ore)

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return _gr(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * other.inverse()

    def __eq__(self, other):
        if not isinstance(other, GaussRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return "GaussRational(%s, %s)" % (self.re, self.im)

    def __str__(self):
        return render_gauss(self)


G_ZERO = GaussRational(0, 0)
G_ONE = GaussRational(1, 0)
G_I = GaussRational(0, 1)


def render_gauss(c: GaussRational) -> str:
    """Canonical string for a Gaussian rational: 2, -1/3, i, -i, 2*i, 1+2*i."""
    if not c.im:
        return str(c.re)
    if c.im == 1:
        im = "i"
    elif c.im == -1:
        im = "-i"
    else:
        im = "%s*i" % c.im
    if not c.re:
        return im
    if im.startswith("-"):
        return "%s-%s" % (c.re, im[1:])
    return "%s+%s" % (c.re, im)


# ---------------------------------------------------------------------------
# Laurent polynomials in z = q^(1/2): sparse maps exponent -> GaussRational.
# ---------------------------------------------------------------------------

def lp_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e)
        if s is None:
            out[e] = c
        else:
            s = s + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out

def lp_neg(a: dict) -> dict:
    return {e: -c for e, c in a.items()}

def lp_mul(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(b) < len(a):
        a, b = b, a
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            c = ca * cb
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
    return out

def lp_scale(a: dict, c: GaussRational) -> dict:
    if not c:
        return {}
    return {e: x * c for e, x in a.items()}

def lp_shift(a: dict, k: int) -> dict:
    if k == 0:
        return dict(a)
    return {e + k: c for e, c in a.items()}

def lp_min_exp(a: dict) -> int:
    return min(a)

def _to_dense(a: dict) -> list:
    deg = max(a)
    out = [G_ZERO] * (deg + 1)
    for e, c in a.items():
        out[e] = c
    return out

def _from_dense(v: list) -> dict:
    return {e: c for e, c in enumerate(v) if c}

def _dense_divmod(a: list, b: list):
    """Polynomial division over the Gaussian rationals (dense, lowest-first)."""
    while a and not a[-1]:
        a.pop()
    while b and not b[-1]:
        b.pop()
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return [], []
    q = [G_ZERO] * max(0, len(a) - len(b) + 1)
    r = list(a)
    inv_lead = b[-1].inverse()
    while len(r) >= len(b) and any(r):
        while r and not r[-1]:
            r.pop()
        if len(r) < len(b):
            break
        k = len(r) - len(b)
        f = r[-1] * inv_lead
        q[k] = f
        for i, c in enumerate(b):
            r[k + i] = r[k + i] - f * c
        r.pop()
    while r and not r[-1]:
        r.pop()
    return q, r

def _dense_gcd(a: list, b: list) -> list:
    a = [c for c in a]
    b = [c for c in b]
    while b and any(b):
        _, r = _dense_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    inv = a[-1].inverse()
    return [c * inv for c in a]

def lp_gcd(a: dict, b: dict) -> dict:
    """Monic gcd of two polynomials with nonnegative exponents."""
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    return _from_dense(_dense_gcd(_to_dense(a), _to_dense(b)))

def lp_exact_div(a: dict, b: dict) -> dict:
    q, r = _dense_divmod(_to_dense(a), _to_dense(b))
    if r:
        raise ArithmeticError("inexact polynomial division")
    return _from_dense(q)


# ---------------------------------------------------------------------------
# QRat: canonical rational functions q^(shift/2) * num / den.
# ---------------------------------------------------------------------------

class QRat:
    """A rational function in q^(1/2) over the Gaussian rationals."""

    __slots__ = ("shift", "num", "den", "_hash")

    def __init__(self, shift: int, num: dict, den: dict, _canonical=False):
        if not _canonical:
            shift, num, den = _canonicalize(shift, num, den)
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("QRat is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_gauss(c: GaussRational) -> "QRat":
        if not c:
            return QRAT_ZERO
        return QRat(0, {0: c}, {0: G_ONE}, _canonical=True)

    @staticmethod
    def from_rational(x) -> "QRat":
        return QRat.from_gauss(GaussRational(x, 0))

    @staticmethod
    def from_int(n: int) -> "QRat":
        return QRat.from_rational(n)

    @staticmethod
    def monomial(e: int, c: GaussRational = G_ONE) -> "QRat":
        """c * q^(e/2), e counted in powers of q^(1/2)."""
        if not c:
            return QRAT_ZERO
        return QRat(e, {0: c}, {0: G_ONE}, _canonical=True)

    # -- queries --------------------------------------------------------

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_one(self):
        return self.shift == 0 and self.num == {0: G_ONE} and self.den == {0: G_ONE}

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QRat):
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        s = min(self.shift, other.shift)
        if self.den == other.den:
            a = lp_shift(self.num, self.shift - s)
            num = lp_add(a, lp_shift(other.num, other.shift - s))
            return QRat(s, num, self.den)
        g = lp_gcd(self.den, other.den)
        if len(g) == 1:
            a = lp_shift(lp_mul(self.num, other.den), self.shift - s)
            b = lp_shift(lp_mul(other.num, self.den), other.shift - s)
            return QRat(s, lp_add(a, b), lp_mul(self.den, other.den))
        db = lp_exact_div(other.den, g)
        da = lp_exact_div(self.den, g)
        a = lp_shift(lp_mul(self.num, db), self.shift - s)
        b = lp_shift(lp_mul(other.num, da), other.shift - s)
        return QRat(s, lp_add(a, b), lp_mul(self.den, db))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        if not self.num:
            return self
        return QRat(self.shift, lp_neg(self.num), self.den, _canonical=True)

    def __mul__(self, other):
        if not isinstance(other, QRat):
            return NotImplemented
        if not self.num or not other.num:
            return QRAT_ZERO
        # cross-cancel so gcds run on the small factors
        na, da = self.num, other.den
        if len(na) > 1 and len(da) > 1:
            g = lp_gcd(na, da)
            if len(g) > 1:
                na = lp_exact_div(na, g)
                da = lp_exact_div(da, g)
        nb, db = other.num, self.den
        if len(nb) > 1 and len(db) > 1:
            g = lp_gcd(nb, db)
            if len(g) > 1:
                nb = lp_exact_div(nb, g)
                db = lp_exact_div(db, g)
        return _make_coprime(self.shift + other.shift, lp_mul(na, nb), lp_mul(da, db))

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("division by zero QRat")
        return QRat(-self.shift, dict(self.den), dict(self.num))

    def __truediv__(self, other):
        if not isinstance(other, QRat):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QRAT_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c: GaussRational) -> "QRat":
        if not c or not self.num:
            return QRAT_ZERO
        return QRat(self.shift, lp_scale(self.num, c), self.den, _canonical=True)

    # -- structure ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, QRat):
            return NotImplemented
        return (
            self.shift == other.shift
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(
                (self.shift, frozenset(self.num.items()), frozenset(self.den.items()))
            )
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return "QRat(%r)" % render_qrat(self)

    def __str__(self):
        return render_qrat(self)


def _canonicalize(shift, num, den):
    num = {e: c for e, c in num.items() if c}
    den = {e: c for e, c in den.items() if c}
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return 0, {}, {0: G_ONE}
    en = lp_min_exp(num)
    ed = lp_min_exp(den)
    shift = shift + en - ed
    num = lp_shift(num, -en)
    den = lp_shift(den, -ed)
    if len(num) > 1 and len(den) > 1:
        g = lp_gcd(num, den)
        if len(g) > 1:
            num = lp_exact_div(num, g)
            den = lp_exact_div(den, g)
    c0 = den[0]
    if c0 != G_ONE:
        inv = c0.inverse()
        num = lp_scale(num, inv)
        den = lp_scale(den, inv)
    return shift, num, den


def _make_coprime(shift, num, den):
    """Build a QRat whose num/den are already coprime (skips the gcd pass)."""
    if not num:
        return QRAT_ZERO
    en = lp_min_exp(num)
    ed = lp_min_exp(den)
    shift = shift + en - ed
    if en:
        num = lp_shift(num, -en)
    if ed:
        den = lp_shift(den, -ed)
    c0 = den[0]
    if c0 != G_ONE:
        inv = c0.inverse()
        num = lp_scale(num, inv)
        den = lp_scale(den, inv)
    return QRat(shift, num, den, _canonical=True)


QRAT_ZERO = QRat(0, {}, {0: G_ONE}, _canonical=True)
QRAT_ONE = QRat(0, {0: G_ONE}, {0: G_ONE}, _canonical=True)
QRAT_I = QRat(0, {0: G_I}, {0: G_ONE}, _canonical=True)


_QINT_CACHE: dict = {}


def qint(n: int) -> QRat:
    """The quantum integer [n]_q = -i*(q^(n/2) - q^(-n/2))."""
    v = _QINT_CACHE.get(n)
    if v is not None:
        return v
    if n == 0:
        v = QRAT_ZERO
    elif n > 0:
        # -i*z^n + i*z^{-n} = z^{-n} * (i - i*z^{2n})
        v = QRat(-n, {0: G_I, 2 * n: -G_I}, {0: G_ONE}, _canonical=True)
    else:
        v = -qint(-n)
    _QINT_CACHE[n] = v
    return v


def qrat_arith(a: QRat, b: QRat, op: str) -> QRat:
    """Dispatch arithmetic by name; division by zero raises ZeroDivisionError."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown operation %r" % op)


# ---------------------------------------------------------------------------
# hbar expansion: substitute q^(1/2) = exp(i*hbar/2) as a formal power series.
# ---------------------------------------------------------------------------

def _monomial_series(e: int, order: int):
    """Series of exp(i*e*hbar/2) up to hbar^order."""
    out = [G_ONE]
    term = G_ONE
    half = GaussRational(0, Q(e, 2))  # i*e/2
    for m in range(1, order + 1):
        term = term * half
        term = GaussRational(term.re / m, term.im / m)
        out.append(term)
    return out

def _poly_series(p: dict, base_shift: int, order: int):
    out = [G_ZERO] * (order + 1)
    for e, c in p.items():
        mono = _monomial_series(e + base_shift, order)
        for m in range(order + 1):
            out[m] = out[m] + c * mono[m]
    return out

def _series_div(a, b, order):
    c0 = b[0]
    if not c0:
        raise ZeroDivisionError(
            "denominator has no invertible constant term in the hbar expansion"
        )
    inv0 = c0.inverse()
    out = []
    for m in range(order + 1):
        acc = a[m]
        for j in range(m):
            acc = acc - out[j] * b[m - j]
        out.append(acc * inv0)
    return out


def hbar_expand(a: QRat, order: int):
    """Coefficients of hbar^0 .. hbar^order of a with q^(1/2) = exp(i*hbar/2)."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if not a.num:
        return [G_ZERO] * (order + 1)
    num = _poly_series(a.num, a.shift, order)
    den = _poly_series(a.den, 0, order)
    return _series_div(num, den, order)


# ---------------------------------------------------------------------------
# Rendering and parsing.
# ---------------------------------------------------------------------------

def _render_qpow(e: int) -> str:
    """q-power factor for z-exponent e (empty for e = 0)."""
    if e == 0:
        return ""
    if e % 2 == 0:
        h = e // 2
        return "q" if h == 1 else "q^%d" % h
    return "q^(%d/2)" % e

def _render_term(c: GaussRational, e: int) -> str:
    qs = _render_qpow(e)
    cs = render_gauss(c)
    if "+" in cs[1:] or "-" in cs[1:]:
        cs = "(%s)" % cs
    if not qs:
        return cs
    if cs == "1":
        return qs
    if cs == "-1":
        return "-" + qs
    return "%s*%s" % (cs, qs)

def _render_poly(p: dict, offset: int = 0, descending: bool = False) -> str:
    if not p:
        return "0"
    exps = sorted(p, reverse=descending)
    parts = []
    for e in exps:
        t = _render_term(p[e], e + offset)
        if not parts:
            parts.append(t)
        elif t.startswith("-"):
            parts.append(" - " + t[1:])
        else:
            parts.append(" + " + t)
    return "".join(parts)


def render_qrat(a: QRat) -> str:
    """Canonical string form; output parses back to the same value."""
    if not a.num:
        return "(0)"
    if a.den == {0: G_ONE}:
        return "(%s)" % _render_poly(a.num, offset=a.shift, descending=True)
    head = ""
    if a.shift:
        if a.shift % 2 == 0:
            head = "q^%d*" % (a.shift // 2)
        else:
            head = "q^(%d/2)*" % a.shift
    return "%s(%s)/(%s)" % (head, _render_poly(a.num), _render_poly(a.den))


class QRatSyntaxError(ValueError):
    """Parse failure, carrying the offending position."""

    def __init__(self, message, pos):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise QRatSyntaxError(msg, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error("expected %r" % ch)
        self.pos += 1

    def eat_int(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or not self.text[start:self.pos].lstrip("+-"):
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def eat_rational(self):
        n = self.eat_int()
        if self.peek() == "/":
            save = self.pos
            self.pos += 1
            self.skip_ws()
            if self.pos < len(self.text) and (
                self.text[self.pos].isdigit() or self.text[self.pos] in "+-"
            ):
                d = self.eat_int()
                if d == 0:
                    self.error("zero denominator in rational")
                return Q(n, d)
            self.pos = save
        return Q(n)

    def parse_qpow(self) -> int:
        """Parse q, q^<int>, or q^(<int>/2); return the z-exponent."""
        self.expect("q")
        if self.peek() != "^":
            return 2
        self.pos += 1
        if self.peek() == "(":
            self.pos += 1
            n = self.eat_int()
            self.expect("/")
            two = self.eat_int()
            if two != 2:
                self.error("q exponents must be halves")
            self.expect(")")
            return n
        return 2 * self.eat_int()

    def parse_gauss_atom(self):
        """A coefficient: rational, i-multiple, or parenthesized a+b*i."""
        ch = self.peek()
        sign = 1
        if ch in "+-":
            if ch == "-":
                sign = -1
            self.pos += 1
            ch = self.peek()
        if ch == "(":
            self.pos += 1
            g = self.parse_gauss_sum()
            self.expect(")")
            return GaussRational(sign * g.re, sign * g.im)
        if ch == "i":
            self.pos += 1
            return GaussRational(0, sign)
        r = self.eat_rational()
        if self.peek() == "*":
            save = self.pos
            self.pos += 1
            if self.peek() == "i":
                self.pos += 1
                return GaussRational(0, sign * r)
            self.pos = save
        return GaussRational(sign * r, 0)

    def parse_gauss_sum(self):
        g = self.parse_gauss_atom()
        while self.peek() in "+-":
            h = self.parse_gauss_atom()
            g = g + h
        return g

    def parse_term(self):
        """One poly term: coefficient and/or q-power. Returns (exp, coeff)."""
        ch = self.peek()
        sign = 1
        if ch in "+-":
            if ch == "-":
                sign = -1
            self.pos += 1
            ch = self.peek()
        if ch == "q":
            e = self.parse_qpow()
            return e, GaussRational(sign, 0)
        if ch == "(":
            self.pos += 1
            g = self.parse_gauss_sum()
            self.expect(")")
        elif ch == "i":
            self.pos += 1
            g = G_I
        else:
            r = self.eat_rational()
            g = GaussRational(r, 0)
        g = GaussRational(sign * g.re, sign * g.im)
        if self.peek() == "*":
            save = self.pos
            self.pos += 1
            ch = self.peek()
            if ch == "i":
                self.pos += 1
                g = g * G_I
                if self.peek() == "*":
                    self.pos += 1
                    return self.parse_qpow(), g
                return 0, g
            if ch == "q":
                return self.parse_qpow(), g
            self.pos = save
        return 0, g

    def parse_poly(self) -> dict:
        out: dict = {}
        e, c = self.parse_term()
        if c:
            out[e] = c
        while self.peek() in "+-":
            ch = self.peek()
            self.pos += 1
            e, c = self.parse_term()
            if ch == "-":
                c = -c
            if e in out:
                s = out[e] + c
                if s:
                    out[e] = s
                else:
                    del out[e]
            elif c:
                out[e] = c
        return out


def parse_qrat(text: str) -> QRat:
    """Parse the canonical QRat grammar; raises QRatSyntaxError on bad input."""
    p = _Parser(text)
    shift = 0
    if p.peek() == "q":
        save = p.pos
        e = p.parse_qpow()
        if p.peek() == "*":
            p.pos += 1
            shift = e
        else:
            p.pos = save
    if p.peek() == "(":
        p.expect("(")
        num = p.parse_poly()
        p.expect(")")
        den = {0: G_ONE}
        if p.peek() == "/":
            p.pos += 1
            p.expect("(")
            den = p.parse_poly()
            p.expect(")")
            if not den:
                p.error("zero denominator")
    else:
        num = p.parse_poly()
        den = {0: G_ONE}
    p.skip_ws()
    if p.pos != len(p.text):
        p.error("trailing input")
    return QRat(shift, num, den)


# ---------------------------------------------------------------------------
# JSON encoding.
# ---------------------------------------------------------------------------

def _poly_to_json(p: dict):
    return [
        [
            e,
            int(c.re.numerator),
            int(c.re.denominator),
            int(c.im.numerator),
            int(c.im.denominator),
        ]
        for e, c in sorted(p.items())
    ]

def _poly_from_json(rows) -> dict:
    return {
        int(e): GaussRational(Q(rn, rd), Q(im_n, im_d))
        for e, rn, rd, im_n, im_d in rows
    }

def qrat_to_json(a: QRat) -> dict:
    return {
        "shift": a.shift,
        "num": _poly_to_json(a.num),
        "den": _poly_to_json(a.den),
    }

def qrat_from_json(obj) -> QRat:
    return QRat(
        int(obj["shift"]), _poly_from_json(obj["num"]), _poly_from_json(obj["den"])
    )


# ---------------------------------------------------------------------------
# t-exponent bookkeeping.
# ---------------------------------------------------------------------------

# Exponents of the formal area variable t are exact rationals.
TExponent = type(_Q0)


def texp(x) -> "TExponent":
    return _as_q(x)


class TPoly:
    """A finite sum of t^y terms with QRat coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        if terms:
            for y, c in terms.items():
                if c:
                    cleaned[_as_q(y)] = c
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("TPoly is immutable")

    @staticmethod
    def of(coeff: QRat, y=0) -> "TPoly":
        return TPoly({_as_q(y): coeff})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for y, c in other.terms.items():
            s = out.get(y)
            if s is None:
                out[y] = c
            else:
                s = s + c
                if s:
                    out[y] = s
                else:
                    del out[y]
        return TPoly(out)

    def __neg__(self):
        return TPoly({y: -c for y, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out: dict = {}
        for y1, c1 in self.terms.items():
            for y2, c2 in other.terms.items():
                y = y1 + y2
                c = c1 * c2
                s = out.get(y)
                if s is None:
                    out[y] = c
                else:
                    out[y] = s + c
        return TPoly(out)

    def scale(self, c: QRat) -> "TPoly":
        if not c:
            return TPoly()
        return TPoly({y: x * c for y, x in self.terms.items()})

    def tshift(self, y) -> "TPoly":
        y = _as_q(y)
        return TPoly({y0 + y: c for y0, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "TPoly(0)"
        bits = []
        for y in sorted(self.terms):
            bits.append("t^%s*%s" % (y, render_qrat(self.terms[y])))
        return "TPoly(%s)" % " + ".join(bits)


TPOLY_ZERO = TPoly()
