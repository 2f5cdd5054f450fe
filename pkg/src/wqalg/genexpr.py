"""Monomial calculus for generating series built from shifted Y factors.

A YMonomial encodes a finite product  prod Y_i(zq^a)^e  as the map
(i, a) -> e.  A SeriesExpr is a finite rational-coefficient sum of such
monomials; the sums T_1, T_2, T_5 and every delta-coefficient series live
here.

Scalar prefactors of the Y generators are deliberately not represented.
Lemma: the prefactor of a product is determined by its Y-content (each
Y_i^{+-1} factor contributes a fixed exponent), so two expressions with
equal content carry equal prefactors, and log-bracket symbols do not see
constant prefactors at all; content-level equality is therefore equality.
"""

from __future__ import annotations

from fractions import Fraction


class YMonomial:
    """Finite product of Y_i(zq^a)^e factors, keyed by (node, shift)."""

    __slots__ = ("_items",)

    def __init__(self, content=()):
        data = {}
        items = content.items() if hasattr(content, "items") else content
        for key, e in items:
            if e:
                e0 = data.get(key, 0)
                e = e0 + e
                if e:
                    data[key] = e
                else:
                    del data[key]
        self._items = tuple(sorted(data.items()))

    @classmethod
    def _raw(cls, items):
        m = object.__new__(cls)
        m._items = items
        return m

    @classmethod
    def identity(cls):
        return cls._raw(())

    @classmethod
    def from_factors(cls, factors):
        """Build from (node, shift, exponent) triples."""
        return cls(((i, a), e) for i, a, e in factors)

    @property
    def is_identity(self) -> bool:
        return not self._items

    def items(self):
        return self._items

    def __eq__(self, other):
        if not isinstance(other, YMonomial):
            return NotImplemented
        return self._items == other._items

    def __hash__(self):
        return hash(self._items)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return tuple((i, a, e) for (i, a), e in self._items)

    def __mul__(self, other):
        if not isinstance(other, YMonomial):
            return NotImplemented
        data = dict(self._items)
        for key, e in other._items:
            s = data.get(key, 0) + e
            if s:
                data[key] = s
            else:
                del data[key]
        return YMonomial._raw(tuple(sorted(data.items())))

    def inverse(self) -> "YMonomial":
        return YMonomial._raw(tuple((key, -e) for key, e in self._items))

    def __pow__(self, n: int):
        if n == 0:
            return YMonomial.identity()
        return YMonomial._raw(tuple((key, n * e) for key, e in self._items))

    def shift_arg(self, s: int) -> "YMonomial":
        """Substitute z -> zq^s in every factor."""
        return YMonomial._raw(tuple(sorted(((i, a + s), e) for (i, a), e in self._items)))

    def dual(self) -> "YMonomial":
        """Replace every Y_i(zq^a)^e by Y_i(zq^-a)^-e."""
        return YMonomial._raw(tuple(sorted(((i, -a), -e) for (i, a), e in self._items)))

    def __str__(self):
        if not self._items:
            return "1"
        parts = []
        for (i, a), e in self._items:
            arg = "z" if a == 0 else ("zq" if a == 1 else "zq^{%d}" % a)
            exp = "" if e == 1 else "^{%d}" % e
            parts.append("Y_%d%s(%s)" % (i, exp, arg))
        return " ".join(parts)

    __repr__ = __str__

    def to_json(self):
        return [{"node": i, "shift": a, "exp": e} for (i, a), e in self._items]

    @classmethod
    def from_json(cls, data):
        return cls.from_factors((d["node"], d["shift"], d["exp"]) for d in data)


class SeriesExpr:
    """Finite sum of YMonomials with nonzero rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for m, c in items:
            c = c if isinstance(c, Fraction) else Fraction(c)
            if c:
                c0 = data.get(m)
                c = c if c0 is None else c0 + c
                if c:
                    data[m] = c
                else:
                    del data[m]
        self.terms = data

    @classmethod
    def _raw(cls, data):
        s = object.__new__(cls)
        s.terms = data
        return s

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({YMonomial.identity(): Fraction(1)})

    @classmethod
    def single(cls, mono: YMonomial, coeff=1):
        coeff = Fraction(coeff)
        return cls._raw({mono: coeff} if coeff else {})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SeriesExpr):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, SeriesExpr):
            return NotImplemented
        data = dict(self.terms)
        for m, c in other.terms.items():
            s = data.get(m, 0) + c
            if s:
                data[m] = s
            else:
                data.pop(m, None)
        return SeriesExpr._raw(data)

    def __sub__(self, other):
        return self.__add__(-other)

    def __neg__(self):
        return SeriesExpr._raw({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return SeriesExpr.zero()
            other = Fraction(other)
            return SeriesExpr._raw({m: c * other for m, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def shift_arg(self, s: int) -> "SeriesExpr":
        return SeriesExpr._raw({m.shift_arg(s): c for m, c in self.terms.items()})

    def dual(self) -> "SeriesExpr":
        return SeriesExpr._raw({m.dual(): c for m, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: mc[0].sort_key())

    def coefficient_values(self):
        return sorted(set(self.terms.values()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mag = abs(c)
            body = str(m) if mag == 1 else "%s %s" % (mag, m)
            parts.append(("- " if c < 0 else "+ ") + body)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    __repr__ = __str__

    def to_json(self):
        return [{"coeff": [c.numerator, c.denominator], "monomial": m.to_json()}
                for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data):
        return cls((YMonomial.from_json(d["monomial"]), Fraction(*d["coeff"])) for d in data)


def shift_arg(x, s: int):
    """Substitute z -> zq^s in a YMonomial or SeriesExpr."""
    return x.shift_arg(s)


def dual_transform(x):
    """Replace every Y_i(zq^a)^e factor by Y_i(zq^-a)^-e; an involution."""
    return x.dual()


def mono_mul(a: YMonomial, b: YMonomial) -> YMonomial:
    return a * b


def series_equal(a: SeriesExpr, b: SeriesExpr):
    """(True, None) if equal, else (False, first-difference description)."""
    if a.terms == b.terms:
        return True, None
    keys = sorted(set(a.terms) | set(b.terms), key=YMonomial.sort_key)
    for m in keys:
        ca, cb = a.terms.get(m, Fraction(0)), b.terms.get(m, Fraction(0))
        if ca != cb:
            return False, "monomial %s: left coefficient %s, right coefficient %s" % (m, ca, cb)
    return True, None  # pragma: no cover


def build_t1(preset) -> SeriesExpr:
    """Sum of all fundamental-series terms with coefficient 1."""
    t1 = SeriesExpr({m: Fraction(1) for m in preset.lambdas})
    if len(t1) != preset.fundamental_dim:
        raise ValueError("fundamental terms are not pairwise distinct for %s" % preset.name)
    return t1


def _t2_pairs(preset):
    if preset.kind == "dn":
        k = preset.fundamental_dim
        pairs = [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)]
        pairs.append((preset.n + 1, preset.n))
        return pairs
    if preset.kind == "g2":
        pairs = [(1, i) for i in range(2, 8)]
        pairs += [(i, 7) for i in range(2, 7)]
        pairs += [(2, 5), (2, 6), (3, 5), (3, 6)]
        return pairs
    raise ValueError("no closed-form second series for %s" % preset.name)


def build_t2(preset) -> SeriesExpr:
    """The displayed second series: sum of L_i(z) L_j(zq^2) over the pair set.

    Defined for the D_n and G_2 presets only; the E6 second series is derived
    from the closure computation instead (see the bracket engine).
    """
    lams = preset.lambdas
    return SeriesExpr((lams[i - 1] * lams[j - 1].shift_arg(2), 1)
                      for i, j in _t2_pairs(preset))


def build_t5_e6(preset) -> SeriesExpr:
    """The E6 dual-series generator: shift_arg(dual_transform(T1), -12).

    With this normalization dual_transform(T1) equals T5(zq^12) by
    construction, matching the duality satisfied by the G_2 first series.
    """
    if preset.kind != "e6":
        raise ValueError("the dual-series construction is specific to e6")
    return build_t1(preset).dual().shift_arg(-12)
