"""Exact arithmetic for the tower of computable base rings.

The tower consists of the integers, the rationals, residue rings Z/m,
sparse multivariate Laurent polynomial rings, and "local Laurent" rings:
univariate Laurent polynomials localized at polynomials with constant
term one.  The local Laurent ring is the exact computable subring of the
formal Laurent series ring in which all algorithms of this library run;
the power-series subring is the valuation >= 0 sub-sort of it.

Every ring is a descriptor object whose methods operate on plain Python
payloads (int, Fraction, dict, tuple of dicts).  Payloads are immutable
by convention: no method mutates its arguments, so values can be shared
freely.  The `Elt` wrapper bundles a payload with its ring and provides
operator syntax for interactive use, demos and JSON round-trips.

Canonical forms
---------------
* Laurent payloads are dicts mapping exponent tuples to nonzero base
  payloads; the zero polynomial is the empty dict.
* Local Laurent payloads are pairs (num, den) of univariate Laurent
  payloads; den is a polynomial with constant term one.  Over bases
  where a univariate gcd is available (integers and fields) the pair is
  kept fully reduced, which makes the form unique; over other bases a
  bounded exact-division trial keeps denominators from piling up and
  equality falls back to cross-multiplication.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from .errors import (
    DescriptorMismatch,
    ExponentOverflow,
    NegativeValuation,
    NotAUnit,
)

INF = float("inf")

# Exponents are kept inside a signed 64-bit window; leaving it is a hard
# error because silent wraparound would corrupt witnesses.
EXP_LIMIT = 2**63 - 1


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


class Ring:
    """Descriptor plus payload-level arithmetic for one exact ring."""

    kind = "?"
    is_domain = True
    is_field = False
    #: True when equal elements always have structurally equal payloads,
    #: so `==` on payloads decides equality.
    canonical_eq = True

    zero: object
    one: object

    # -- arithmetic ----------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero)

    def is_one(self, a) -> bool:
        return self.eq(a, self.one)

    def from_int(self, n: int):
        raise NotImplementedError

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        out = self.one
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    # -- descriptor identity and JSON ----------------------------------
    def descriptor(self) -> dict:
        raise NotImplementedError

    def element_to_json(self, a):
        raise NotImplementedError

    def element_from_json(self, obj):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Ring) and self.descriptor() == other.descriptor()

    def __hash__(self):
        return hash(json.dumps(self.descriptor(), sort_keys=True))

    def __repr__(self):
        return f"<{type(self).__name__} {json.dumps(self.descriptor())}>"


class IntegerRing(Ring):
    kind = "int"
    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return int(n)

    def is_unit(self, a):
        return a == 1 or a == -1

    def inv(self, a):
        if a == 1 or a == -1:
            return a
        raise NotAUnit(f"{a} is not a unit of Z")

    def descriptor(self):
        return {"kind": "int"}

    def element_to_json(self, a):
        return str(a)

    def element_from_json(self, obj):
        return int(obj)


class RationalRing(Ring):
    kind = "rat"
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return Fraction(n)

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise NotAUnit("0 is not a unit of Q")
        return 1 / a

    def descriptor(self):
        return {"kind": "rat"}

    def element_to_json(self, a):
        return f"{a.numerator}/{a.denominator}"

    def element_from_json(self, obj):
        if isinstance(obj, str) and "/" in obj:
            p, q = obj.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(obj))


class ResidueRing(Ring):
    """Integers modulo m, m >= 2; a field (and domain) exactly when m is prime."""

    kind = "int_mod"

    def __init__(self, modulus: int):
        if modulus < 2:
            raise ValueError("modulus must be >= 2")
        self.m = modulus
        self.is_field = _is_prime(modulus)
        self.is_domain = self.is_field
        self.zero = 0
        self.one = 1 % modulus

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return n % self.m

    def is_unit(self, a):
        return math.gcd(a, self.m) == 1

    def inv(self, a):
        try:
            return pow(a, -1, self.m)
        except ValueError:
            raise NotAUnit(f"{a} is not a unit mod {self.m}") from None

    def descriptor(self):
        return {"kind": "int_mod", "modulus": self.m}

    def element_to_json(self, a):
        return str(a)

    def element_from_json(self, obj):
        return int(obj) % self.m


ZZ = IntegerRing()
QQ = RationalRing()


def _collect_vars(ring: Ring) -> set:
    """All Laurent/local-Laurent variable names appearing in a descriptor."""
    if isinstance(ring, LaurentRing):
        return _collect_vars(ring.base) | set(ring.vars)
    if isinstance(ring, LocalLaurentRing):
        return _collect_vars(ring.base) | {ring.var}
    return set()


class LaurentRing(Ring):
    """Sparse multivariate Laurent polynomials over an arbitrary base ring.

    Payload: dict mapping exponent tuples (one int per variable, sign
    unrestricted) to nonzero base payloads.  The zero element is the
    empty dict.
    """

    kind = "laurent"

    def __init__(self, base: Ring, variables):
        variables = tuple(variables)
        if not variables:
            raise ValueError("need at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be distinct")
        clash = set(variables) & _collect_vars(base)
        if clash:
            raise ValueError(f"variables {sorted(clash)} already used in base")
        self.base = base
        self.vars = variables
        self.nvars = len(variables)
        self.is_domain = base.is_domain
        self.canonical_eq = base.canonical_eq
        self._zerokey = (0,) * self.nvars
        self.zero = {}
        self.one = {self._zerokey: base.one}

    # -- helpers -------------------------------------------------------
    def _check_exps(self, A, B):
        # One scan instead of a per-product check: if the extreme sums fit,
        # every product exponent fits.
        for i in range(self.nvars):
            hi = max(e[i] for e in A) + max(e[i] for e in B)
            lo = min(e[i] for e in A) + min(e[i] for e in B)
            if hi > EXP_LIMIT or lo < -EXP_LIMIT:
                raise ExponentOverflow(f"exponent outside 64-bit window ({lo}..{hi})")

    def monomial(self, exps, coef=None):
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("wrong exponent arity")
        c = self.base.one if coef is None else coef
        if self.base.is_zero(c):
            return {}
        return {exps: c}

    def var_gen(self, name: str):
        i = self.vars.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return {tuple(e): self.base.one}

    # -- arithmetic ----------------------------------------------------
    def add(self, A, B):
        base = self.base
        out = dict(A)
        for e, c in B.items():
            cur = out.get(e)
            if cur is None:
                out[e] = c
            else:
                s = base.add(cur, c)
                if base.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
        return out

    def neg(self, A):
        bneg = self.base.neg
        return {e: bneg(c) for e, c in A.items()}

    def mul(self, A, B):
        if not A or not B:
            return {}
        self._check_exps(A, B)
        base = self.base
        badd, bmul, bzero = base.add, base.mul, base.is_zero
        out = {}
        for e1, c1 in A.items():
            for e2, c2 in B.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                p = bmul(c1, c2)
                cur = out.get(e)
                if cur is None:
                    if not bzero(p):
                        out[e] = p
                else:
                    s = badd(cur, p)
                    if bzero(s):
                        del out[e]
                    else:
                        out[e] = s
        return out

    def eq(self, A, B):
        if A == B:
            return True
        if self.canonical_eq:
            return False
        return not self.add(A, self.neg(B))

    def is_zero(self, A):
        return not A

    def from_int(self, n):
        c = self.base.from_int(n)
        if self.base.is_zero(c):
            return {}
        return {self._zerokey: c}

    def constant(self, base_payload):
        """Embed a base element as a constant polynomial."""
        if self.base.is_zero(base_payload):
            return {}
        return {self._zerokey: base_payload}

    def is_unit(self, A):
        if len(A) != 1:
            return False
        (c,) = A.values()
        return self.base.is_unit(c)

    def inv(self, A):
        if len(A) != 1:
            raise NotAUnit("not a monomial")
        ((e, c),) = A.items()
        return {tuple(-x for x in e): self.base.inv(c)}

    # -- univariate extras (used when this ring plays the A[x][x^-1] role)
    def valuation(self, A):
        if self.nvars != 1:
            raise ValueError("valuation is defined for one variable only")
        if not A:
            return INF
        return min(e[0] for e in A)

    def augment(self, A):
        """Image under x -> 0; requires valuation >= 0."""
        if self.nvars != 1:
            raise ValueError("augmentation is defined for one variable only")
        if A and min(e[0] for e in A) < 0:
            raise NegativeValuation("element has a pole at 0")
        return A.get((0,), self.base.zero)

    # -- descriptor and JSON -------------------------------------------
    def descriptor(self):
        return {"kind": "laurent", "base": self.base.descriptor(), "vars": list(self.vars)}

    def element_to_json(self, A):
        items = sorted(A.items(), key=lambda kv: kv[0])
        return [{"exps": list(e), "coef": self.base.element_to_json(c)} for e, c in items]

    def element_from_json(self, obj):
        out = {}
        for term in obj:
            e = tuple(int(x) for x in term["exps"])
            c = self.base.element_from_json(term["coef"])
            if not self.base.is_zero(c):
                out[e] = c
        return out


# ---------------------------------------------------------------------------
# dense univariate polynomial helpers (coefficient lists, low degree first)
# ---------------------------------------------------------------------------


def _dict_to_dense(ring: Ring, d: dict, shift: int) -> list:
    deg = max(e[0] for e in d) - shift
    out = [ring.zero] * (deg + 1)
    for (e,), c in d.items():
        out[e - shift] = c
    return out


def _dense_to_dict(ring: Ring, coeffs: list, shift: int) -> dict:
    return {(i + shift,): c for i, c in enumerate(coeffs) if not ring.is_zero(c)}


def _dense_trim(ring: Ring, f: list) -> list:
    while f and ring.is_zero(f[-1]):
        f.pop()
    return f


def _int_content(f: list) -> int:
    g = 0
    for c in f:
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _int_primitive(f: list) -> list:
    c = _int_content(f)
    if c <= 1:
        return list(f)
    return [x // c for x in f]


def _int_pseudo_rem(f: list, g: list) -> list:
    """Pseudo-remainder of dense integer polynomials (prem)."""
    f = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while len(f) - 1 >= dg and f:
        df = len(f) - 1
        lead = f[-1]
        f = [lg * c for c in f]
        for i in range(dg + 1):
            f[df - dg + i] -= lead * g[i]
        f = _dense_trim(ZZ, f)
    return f


# Primes for the modular coprimality shortcut; a trivial gcd of the images
# mod p (p not dividing both leading coefficients) forces a trivial gcd of
# the primitive parts over the rationals.
_GCD_PRIMES = (2147483647, 2305843009213693951)


def _modp_gcd_degree(f: list, g: list, p: int) -> int:
    a = [c % p for c in f]
    b = [c % p for c in g]
    while b and b[-1] == 0:
        b.pop()
    while a and a[-1] == 0:
        a.pop()
    while b:
        inv_lead = pow(b[-1], -1, p)
        db = len(b) - 1
        while len(a) - 1 >= db and a:
            q = a[-1] * inv_lead % p
            da = len(a) - 1
            for i in range(db + 1):
                a[da - db + i] = (a[da - db + i] - q * b[i]) % p
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return len(a) - 1


def _int_poly_coprime(f: list, g: list) -> bool:
    """True when the primitive parts of f and g are provably coprime
    (checked modulo a large prime; one-sided: False means "unknown")."""
    for p in _GCD_PRIMES:
        if f[-1] % p and g[-1] % p:
            return _modp_gcd_degree(f, g, p) == 0
    return False


def _int_poly_gcd(f: list, g: list) -> list:
    """gcd in Z[x]: modular coprimality shortcut, then the subresultant PRS.
    The result has positive leading coefficient."""
    f = _dense_trim(ZZ, list(f))
    g = _dense_trim(ZZ, list(g))
    if not f:
        return _int_primitive(g) if g else []
    if not g:
        return _int_primitive(f)
    c = math.gcd(_int_content(f), _int_content(g))
    f, g = _int_primitive(f), _int_primitive(g)
    if len(f) < len(g):
        f, g = g, f
    if len(g) == 1:
        return [c]
    if _int_poly_coprime(f, g):
        return [c]
    # subresultant polynomial remainder sequence (Collins)
    gg, h = 1, 1
    while True:
        d = (len(f) - 1) - (len(g) - 1)
        r = _int_pseudo_rem(f, g)
        if not r:
            break
        if len(r) == 1:
            g = [1]
            break
        divisor = gg * h**d
        f, g = g, [x // divisor for x in r]
        gg = f[-1]
        h = h ** (1 - d) * gg**d if d <= 1 else gg**d // h ** (d - 1)
    g = _int_primitive(g)
    if g[-1] < 0:
        g = [-x for x in g]
    return [c * x for x in g]


def _field_poly_gcd(ring: Ring, f: list, g: list) -> list:
    """Monic gcd over a field base via plain Euclid on dense lists."""
    f = _dense_trim(ring, list(f))
    g = _dense_trim(ring, list(g))
    while g:
        # remainder of f by g
        inv_lead = ring.inv(g[-1])
        r = list(f)
        dg = len(g) - 1
        while len(r) - 1 >= dg and r:
            q = ring.mul(r[-1], inv_lead)
            dr = len(r) - 1
            for i in range(dg + 1):
                r[dr - dg + i] = ring.sub(r[dr - dg + i], ring.mul(q, g[i]))
            r = _dense_trim(ring, r)
        f, g = g, r
    if f:
        inv_lead = ring.inv(f[-1])
        f = [ring.mul(c, inv_lead) for c in f]
    return f


def _dense_div_exact(ring: Ring, f: list, g: list) -> list:
    """Exact quotient f/g for dense polynomials whose divisor has a unit
    constant term.  Division runs from the constant term upward, so every
    step divides by that unit; raises InternalError-grade ValueError if the
    division is not exact (callers guarantee it is)."""
    f = _dense_trim(ring, list(f))
    g = _dense_trim(ring, list(g))
    if not f:
        return []
    inv0 = ring.inv(g[0])
    dq = len(f) - len(g)
    if dq < 0:
        raise ValueError("not an exact division")
    q = [ring.zero] * (dq + 1)
    rem = list(f)
    for i in range(dq + 1):
        c = ring.mul(rem[i], inv0)
        q[i] = c
        if not ring.is_zero(c):
            for j, gc in enumerate(g):
                rem[i + j] = ring.sub(rem[i + j], ring.mul(c, gc))
    if any(not ring.is_zero(c) for c in rem):
        raise ValueError("not an exact division")
    return _dense_trim(ring, q)


class LocalLaurentRing(Ring):
    """Univariate Laurent polynomials over `base`, localized at the set of
    polynomials with constant term one.

    This is the exact computable subring of the formal Laurent series ring
    in one variable over `base`; the power-series subring is carved out by
    the predicate valuation >= 0.  Payload: a pair (num, den) of payloads
    of the underlying univariate Laurent ring, where den is a polynomial
    (exponents >= 0) with constant term exactly one.
    """

    kind = "local_laurent"

    def __init__(self, base: Ring, variable: str, reduce_bound: int = 64):
        if not base.is_domain:
            raise ValueError(
                "local Laurent rings require an integral domain base "
                "(cross-multiplication equality is not transitive otherwise)"
            )
        if variable in _collect_vars(base):
            raise ValueError(f"variable {variable!r} already used in base")
        self.base = base
        self.var = variable
        self.reduce_bound = reduce_bound
        self.poly = LaurentRing(base, (variable,))
        if isinstance(base, IntegerRing):
            self._gcd_mode = "int"
        elif base.is_field:
            self._gcd_mode = "field"
        else:
            self._gcd_mode = None
        # With full gcd reduction and den(0) = 1 the reduced pair is unique.
        self.canonical_eq = self._gcd_mode is not None and base.canonical_eq
        self._oneden = {(0,): base.one}
        self.zero = ({}, self._oneden)
        self.one = ({(0,): base.one}, self._oneden)

    # -- canonical constructor -----------------------------------------
    def make(self, num: dict, den: dict):
        """Canonicalize a num/den pair.  `den` must already be a polynomial
        with constant term one (all arithmetic here preserves that)."""
        if not num:
            return ({}, self._oneden)
        if den == self._oneden:
            return (num, den)
        base = self.base
        if self._gcd_mode is not None:
            v = min(e[0] for e in num)
            fn = _dict_to_dense(base, num, v)
            fd = _dict_to_dense(base, den, 0)
            if self._gcd_mode == "int":
                g = _int_poly_gcd(fn, fd)
                if g and g[0] < 0:
                    g = [-c for c in g]
            else:
                g = _field_poly_gcd(base, fn, fd)
                if g:
                    # normalize so that g(0) = 1, keeping den(0) = 1 after division
                    g = [base.mul(c, base.inv(g[0])) for c in g]
            if len(g) > 1 or (g and not base.is_one(g[0])):
                fn = _dense_div_exact(base, fn, g)
                fd = _dense_div_exact(base, fd, g)
                num = _dense_to_dict(base, fn, v)
                den = _dense_to_dict(base, fd, 0)
            if den == self._oneden:
                return (num, den)
            return (num, den)
        q = self._trial_divide(num, den)
        if q is not None:
            return (q, self._oneden)
        return (num, den)

    def _trial_divide(self, num: dict, den: dict):
        """Exact division num/den in the Laurent polynomial ring, attempted
        only within the configured degree window; returns None on failure."""
        top_n = max(e[0] for e in num)
        bot_n = min(e[0] for e in num)
        top_d = max(e[0] for e in den)
        span = (top_n - top_d) - bot_n
        if span < 0 or span > self.reduce_bound:
            return None
        base = self.base
        poly = self.poly
        rem = dict(num)
        q = {}
        limit = top_n - top_d
        while rem:
            e = min(k[0] for k in rem)
            if e > limit:
                return None
            c = rem[(e,)]
            # den constant term is one, so the quotient coefficient is c itself
            q[(e,)] = c
            rem = poly.add(rem, poly.neg(poly.mul({(e,): c}, den)))
        return q

    # -- arithmetic ----------------------------------------------------
    def add(self, a, b):
        n1, d1 = a
        n2, d2 = b
        poly = self.poly
        if d1 == d2:
            return self.make(poly.add(n1, n2), d1)
        return self.make(
            poly.add(poly.mul(n1, d2), poly.mul(n2, d1)), poly.mul(d1, d2)
        )

    def neg(self, a):
        n, d = a
        return (self.poly.neg(n), d)

    def mul(self, a, b):
        n1, d1 = a
        n2, d2 = b
        poly = self.poly
        if d1 == self._oneden and d2 == self._oneden:
            return (poly.mul(n1, n2), self._oneden)
        return self.make(poly.mul(n1, n2), poly.mul(d1, d2))

    def eq(self, a, b):
        if a == b:
            return True
        if self.canonical_eq:
            return False
        n1, d1 = a
        n2, d2 = b
        poly = self.poly
        return poly.eq(poly.mul(n1, d2), poly.mul(n2, d1))

    def is_zero(self, a):
        return not a[0]

    def from_int(self, n):
        c = self.base.from_int(n)
        if self.base.is_zero(c):
            return ({}, self._oneden)
        return ({(0,): c}, self._oneden)

    def constant(self, base_payload):
        """Embed a base element as a constant series."""
        if self.base.is_zero(base_payload):
            return ({}, self._oneden)
        return ({(0,): base_payload}, self._oneden)

    def monomial(self, k: int, coef=None):
        c = self.base.one if coef is None else coef
        if self.base.is_zero(c):
            return ({}, self._oneden)
        return ({(k,): c}, self._oneden)

    def from_laurent(self, payload: dict):
        """Reinterpret a univariate Laurent payload over the same base."""
        return (dict(payload), self._oneden)

    def is_polynomial(self, a) -> bool:
        """True when the element lies in the Laurent polynomial subring."""
        return a[1] == self._oneden

    def numerator(self, a):
        return a[0]

    # -- series structure ------------------------------------------------
    def valuation(self, a):
        n, _ = a
        if not n:
            return INF
        return min(e[0] for e in n)

    def lowest_coefficient(self, a):
        """Lowest coefficient of the series expansion (equals the lowest
        numerator coefficient because den has constant term one)."""
        n, _ = a
        if not n:
            return self.base.zero
        v = min(e[0] for e in n)
        return n[(v,)]

    def is_unit(self, a):
        n, _ = a
        if not n:
            return False
        return self.base.is_unit(self.lowest_coefficient(a))

    def inv(self, a):
        if not self.is_unit(a):
            raise NotAUnit("lowest series coefficient is not a unit of the base")
        n, d = a
        base, poly = self.base, self.poly
        v = min(e[0] for e in n)
        c = n[(v,)]
        scale = {(-v,): base.inv(c)}
        new_den = poly.mul(scale, n)  # polynomial with constant term one
        new_num = poly.mul(scale, d)
        return self.make(new_num, new_den)

    def series_coefficients(self, a, upto: int):
        """Exact leading coefficients of the series expansion.

        Returns (valuation, coefficients of x^v .. x^(v+upto-1)).  The zero
        element reports (inf, []).
        """
        if upto < 1:
            raise ValueError("upto must be >= 1")
        n, d = a
        if not n:
            return (INF, [])
        base, poly = self.base, self.poly
        v = min(e[0] for e in n)
        rem = dict(n)
        coeffs = []
        cur = v
        for _ in range(upto):
            c = rem.get((cur,), base.zero)
            coeffs.append(c)
            if not base.is_zero(c):
                rem = poly.add(rem, poly.neg(poly.mul({(cur,): c}, d)))
            cur += 1
        return (v, coeffs)

    def augment(self, a):
        """Image under x -> 0 on the power-series sub-sort."""
        v = self.valuation(a)
        if v is INF:
            return self.base.zero
        if v < 0:
            raise NegativeValuation("element has a pole at 0")
        n, _ = a
        return n.get((0,), self.base.zero)

    # -- descriptor and JSON -------------------------------------------
    def descriptor(self):
        return {
            "kind": "local_laurent",
            "base": self.base.descriptor(),
            "var": self.var,
        }

    def element_to_json(self, a):
        n, d = a
        return {
            "num": self.poly.element_to_json(n),
            "den": self.poly.element_to_json(d),
        }

    def element_from_json(self, obj):
        n = self.poly.element_from_json(obj["num"])
        d = self.poly.element_from_json(obj["den"])
        return self.make(n, d)


# ---------------------------------------------------------------------------
# descriptor parsing and the wrapper element
# ---------------------------------------------------------------------------


def ring_from_descriptor(obj: dict) -> Ring:
    kind = obj["kind"]
    if kind == "int":
        return ZZ
    if kind == "rat":
        return QQ
    if kind == "int_mod":
        return ResidueRing(int(obj["modulus"]))
    if kind == "laurent":
        return LaurentRing(ring_from_descriptor(obj["base"]), obj["vars"])
    if kind == "local_laurent":
        return LocalLaurentRing(ring_from_descriptor(obj["base"]), obj["var"])
    raise ValueError(f"unknown ring kind {kind!r}")


def laurent_tower(base: Ring, variables) -> Ring:
    """The iterated local Laurent ring with the first variable innermost."""
    ring = base
    for v in variables:
        ring = LocalLaurentRing(ring, v)
    return ring


class Elt:
    """A ring payload bundled with its ring; convenience wrapper with
    operator syntax.  Library internals work on payloads directly."""

    __slots__ = ("ring", "data")

    def __init__(self, ring: Ring, data):
        self.ring = ring
        self.data = data

    @staticmethod
    def of_int(ring: Ring, n: int) -> "Elt":
        return Elt(ring, ring.from_int(n))

    def _coerce(self, other):
        if isinstance(other, Elt):
            if other.ring != self.ring:
                raise DescriptorMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other.data
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        d = self._coerce(other)
        if d is NotImplemented:
            return NotImplemented
        return Elt(self.ring, self.ring.add(self.data, d))

    __radd__ = __add__

    def __neg__(self):
        return Elt(self.ring, self.ring.neg(self.data))

    def __sub__(self, other):
        d = self._coerce(other)
        if d is NotImplemented:
            return NotImplemented
        return Elt(self.ring, self.ring.sub(self.data, d))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        d = self._coerce(other)
        if d is NotImplemented:
            return NotImplemented
        return Elt(self.ring, self.ring.mul(self.data, d))

    __rmul__ = __mul__

    def __pow__(self, k):
        return Elt(self.ring, self.ring.pow(self.data, k))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.ring.eq(self.data, self.ring.from_int(other))
        if not isinstance(other, Elt) or other.ring != self.ring:
            return NotImplemented
        return self.ring.eq(self.data, other.data)

    def __hash__(self):
        raise TypeError("ring elements are not hashable")

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.data)

    def inv(self) -> "Elt":
        return Elt(self.ring, self.ring.inv(self.data))

    def to_json(self):
        return self.ring.element_to_json(self.data)

    def __repr__(self):
        return f"Elt({json.dumps(self.ring.element_to_json(self.data))})"


# Module-level operation surface mirroring the payload methods, with the
# descriptor checks expected of a public API.


def _same_ring(a: Elt, b: Elt):
    if a.ring != b.ring:
        raise DescriptorMismatch(f"{a.ring!r} vs {b.ring!r}")


def add(a: Elt, b: Elt) -> Elt:
    _same_ring(a, b)
    return Elt(a.ring, a.ring.add(a.data, b.data))


def mul(a: Elt, b: Elt) -> Elt:
    _same_ring(a, b)
    return Elt(a.ring, a.ring.mul(a.data, b.data))


def is_unit(a: Elt) -> bool:
    return a.ring.is_unit(a.data)


def inv(a: Elt) -> Elt:
    return Elt(a.ring, a.ring.inv(a.data))


def valuation_of(a: Elt):
    return a.ring.valuation(a.data)


def augment_at_zero(a: Elt) -> Elt:
    ring = a.ring
    if isinstance(ring, (LaurentRing, LocalLaurentRing)):
        return Elt(ring.base, ring.augment(a.data))
    raise TypeError("augmentation needs a univariate Laurent or local Laurent element")


def series_coefficients(a: Elt, upto: int):
    ring = a.ring
    if not isinstance(ring, LocalLaurentRing):
        raise TypeError("series expansion needs a local Laurent element")
    v, coeffs = ring.series_coefficients(a.data, upto)
    return v, [Elt(ring.base, c) for c in coeffs]
