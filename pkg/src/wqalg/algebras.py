"""Presets for the D_n, E6 and G2 algebras.

Each preset carries the structure matrices M(t) and D(t), the expected
deformed Cartan matrix (printed form), and the fundamental-series monomial
table.  Everything downstream is verified against these tables alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactfield import LaurentPoly, RationalFunction, sym_minus, sym_plus
from .genexpr import YMonomial
from .rflinalg import FieldMatrix


@dataclass(frozen=True, eq=False)
class AlgebraPreset:
    kind: str                      # "dn" | "e6" | "g2"
    rank: int
    n: int | None
    M: FieldMatrix
    D: FieldMatrix
    expected_mtilde: FieldMatrix
    lambdas: tuple[YMonomial, ...]
    fundamental_dim: int

    @property
    def name(self) -> str:
        return "d%d" % self.n if self.kind == "dn" else self.kind


@dataclass
class VerificationOutcome:
    passed: bool
    details: list[str] = field(default_factory=list)
    failure: str | None = None


def _rf(num: LaurentPoly, den: LaurentPoly | None = None) -> RationalFunction:
    return RationalFunction(num, den if den is not None else LaurentPoly.one())


def _dn_matrix(n: int) -> FieldMatrix:
    den = sym_plus(n - 1)
    den_long = sym_plus(1) * den
    rows = [[None] * n for _ in range(n)]
    for i in range(1, n - 1):
        for j in range(1, n - 1):
            lo, hi = min(i, j), max(i, j)
            rows[i - 1][j - 1] = _rf(sym_minus(lo) * sym_plus(n - 1 - hi), den)
    for i in range(1, n - 1):
        v = _rf(sym_minus(i), den)
        rows[n - 1][i - 1] = rows[i - 1][n - 1] = v
        rows[n - 2][i - 1] = rows[i - 1][n - 2] = v
    rows[n - 1][n - 2] = rows[n - 2][n - 1] = _rf(sym_minus(n - 2), den_long)
    rows[n - 2][n - 2] = rows[n - 1][n - 1] = _rf(sym_minus(n), den_long)
    return FieldMatrix(rows)


def _graph_mtilde(n: int, edges) -> FieldMatrix:
    diag = RationalFunction(sym_minus(2))
    off = RationalFunction(-sym_minus(1))
    zero = RationalFunction.zero()
    eset = {(min(a, b), max(a, b)) for a, b in edges}
    return FieldMatrix([[diag if i == j
                         else (off if (min(i, j), max(i, j)) in eset else zero)
                         for j in range(1, n + 1)] for i in range(1, n + 1)])


def _dn_edges(n: int):
    return [(i, i + 1) for i in range(1, n - 2)] + [(n - 2, n - 1), (n - 2, n)]


_E6_EDGES = [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)]


def _dn_lambdas(n: int) -> tuple[YMonomial, ...]:
    lams = []
    for i in range(1, n - 1):
        factors = [(i, -i + 1, 1)]
        if i > 1:
            factors.append((i - 1, -i, -1))
        lams.append(YMonomial.from_factors(factors))
    lams.append(YMonomial.from_factors([(n, -n + 2, 1), (n - 1, -n + 2, 1), (n - 2, -n + 1, -1)]))
    lams.append(YMonomial.from_factors([(n - 1, -n + 2, 1), (n, -n, -1)]))
    lams.append(YMonomial.from_factors([(n, -n + 2, 1), (n - 1, -n, -1)]))
    lams.append(YMonomial.from_factors([(n - 2, -n + 1, 1), (n - 1, -n, -1), (n, -n, -1)]))
    for i in range(n - 2, 0, -1):
        factors = [(i, -2 * n + i + 1, -1)]
        if i > 1:
            factors.append((i - 1, -2 * n + i + 2, 1))
        lams.append(YMonomial.from_factors(factors))
    return tuple(lams)


def _e6_matrix() -> FieldMatrix:
    d_short = sym_plus(6)
    d_long = sym_plus(6) * sym_minus(3)
    d_extra = sym_plus(1) * sym_plus(6)
    entries = {}

    def put(i, j, num, den):
        entries[(i, j)] = entries[(j, i)] = _rf(num, den)

    put(1, 1, sym_minus(1) * sym_minus(8), d_long)
    put(5, 5, sym_minus(1) * sym_minus(8), d_long)
    put(1, 2, sym_minus(1) * sym_minus(5) * sym_plus(2), d_long)
    put(4, 5, sym_minus(1) * sym_minus(5) * sym_plus(2), d_long)
    put(2, 2, sym_minus(4) * sym_minus(5), d_long)
    put(4, 4, sym_minus(4) * sym_minus(5), d_long)
    for i, j in [(1, 3), (2, 6), (4, 6), (3, 5)]:
        put(i, j, sym_minus(4), d_short)
    put(2, 3, sym_minus(4) * sym_plus(1), d_short)
    put(3, 4, sym_minus(4) * sym_plus(1), d_short)
    put(3, 3, sym_minus(3) * sym_plus(1) * sym_plus(2), d_short)
    put(1, 6, sym_minus(1) * sym_plus(2), d_short)
    put(5, 6, sym_minus(1) * sym_plus(2), d_short)
    put(3, 6, sym_minus(3) * sym_plus(2), d_short)
    put(6, 6, sym_minus(4) * sym_plus(3), d_extra)
    put(1, 4, sym_minus(2) * sym_minus(4), d_long)
    put(2, 5, sym_minus(2) * sym_minus(4), d_long)
    put(2, 4, sym_minus(2) * sym_minus(4) * sym_plus(1), d_long)
    put(1, 5, sym_minus(1) * sym_minus(4), d_long)
    return FieldMatrix([[entries[(i, j)] for j in range(1, 7)] for i in range(1, 7)])


# The 27 fundamental monomials for E6, exactly as displayed.
_E6_LAMBDA_FACTORS = (
    ((1, -8, -1), (2, -7, 1), (3, -8, -1), (6, -7, 1)),
    ((1, -8, -1), (2, -7, 1), (6, -9, -1)),
    ((1, -8, -1), (3, -6, 1), (4, -7, -1)),
    ((1, -8, -1), (4, -5, 1), (5, -6, -1)),
    ((2, -9, -1), (3, -8, 1), (6, -9, -1)),
    ((2, -9, -1), (6, -7, 1)),
    ((3, -10, -1), (4, -9, 1)),
    ((4, -11, -1), (5, -10, 1)),
    ((1, -6, 1), (2, -7, -1), (3, -6, 1), (4, -7, -1)),
    ((1, -6, 1), (2, -7, -1), (4, -5, 1), (5, -6, -1)),
    ((1, -6, 1), (3, -8, -1), (6, -7, 1)),
    ((1, -6, 1), (6, -9, -1)),
    ((2, -5, 1), (3, -6, -1), (4, -5, 1), (5, -6, -1)),
    ((2, -5, 1), (4, -7, -1)),
    ((3, -4, 1), (5, -6, -1), (6, -5, -1)),
    ((5, -6, -1), (6, -3, 1)),
    ((1, -8, -1), (5, -4, 1)),
    ((1, -6, 1), (2, -7, -1), (5, -4, 1)),
    ((2, -5, 1), (3, -6, -1), (5, -4, 1)),
    ((3, -4, 1), (4, -5, -1), (5, -4, 1), (6, -5, -1)),
    ((4, -5, -1), (5, -4, 1), (6, -3, 1)),
    ((4, -3, 1), (6, -5, -1)),
    ((3, -4, -1), (4, -3, 1), (6, -3, 1)),
    ((2, -3, -1), (3, -2, 1)),
    ((1, -2, -1), (2, -1, 1)),
    ((1, 0, 1),),
    ((5, -12, -1),),
)

# The 7 fundamental monomials for G2, exactly as displayed.
_G2_LAMBDA_FACTORS = (
    ((1, 0, 1),),
    ((1, -2, -1), (2, -1, 1)),
    ((1, -4, 1), (1, -6, 1), (2, -7, -1)),
    ((1, -4, 1), (1, -8, -1)),
    ((1, -6, -1), (1, -8, -1), (2, -5, 1)),
    ((1, -10, 1), (2, -11, -1)),
    ((1, -12, -1),),
)


def _g2_matrix() -> FieldMatrix:
    den = sym_plus(6)
    m11 = _rf(sym_plus(3) * sym_minus(1) * sym_plus(2), den)
    m22 = _rf(sym_minus(3) * sym_plus(1) * sym_plus(2), den)
    m12 = _rf(sym_minus(3) * sym_plus(2), den)
    return FieldMatrix([[m11, m12], [m12, m22]])


def build_preset(kind: str, n: int | None = None) -> AlgebraPreset:
    """Construct a fully populated preset; kind is one of dn, e6, g2."""
    if kind == "dn":
        if n is None or n < 4:
            raise ValueError("the dn family needs n >= 4, got %r" % (n,))
        d = FieldMatrix.diagonal([RationalFunction(sym_minus(1))] * n)
        return AlgebraPreset(
            kind="dn", rank=n, n=n,
            M=_dn_matrix(n), D=d,
            expected_mtilde=_graph_mtilde(n, _dn_edges(n)),
            lambdas=_dn_lambdas(n),
            fundamental_dim=2 * n,
        )
    if n is not None:
        raise ValueError("n is only meaningful for the dn family")
    if kind == "e6":
        d = FieldMatrix.diagonal([RationalFunction(sym_minus(1))] * 6)
        return AlgebraPreset(
            kind="e6", rank=6, n=None,
            M=_e6_matrix(), D=d,
            expected_mtilde=_graph_mtilde(6, _E6_EDGES),
            lambdas=tuple(YMonomial.from_factors(f) for f in _E6_LAMBDA_FACTORS),
            fundamental_dim=27,
        )
    if kind == "g2":
        d = FieldMatrix.diagonal([RationalFunction(sym_minus(1)),
                                  RationalFunction(sym_minus(3))])
        mt = FieldMatrix([
            [RationalFunction(sym_minus(2)), RationalFunction(-sym_minus(3))],
            [RationalFunction(-sym_minus(3)), RationalFunction(sym_minus(6))],
        ])
        return AlgebraPreset(
            kind="g2", rank=2, n=None,
            M=_g2_matrix(), D=d,
            expected_mtilde=mt,
            lambdas=tuple(YMonomial.from_factors(f) for f in _G2_LAMBDA_FACTORS),
            fundamental_dim=7,
        )
    raise ValueError("unknown algebra kind %r" % (kind,))


def symmetrized_cartan(preset: AlgebraPreset):
    """Integer matrix the normalized t -> 1 limit of the deformed matrix must hit."""
    if preset.kind == "g2":
        return [[2, -3], [-3, 6]]
    edges = _dn_edges(preset.n) if preset.kind == "dn" else _E6_EDGES
    eset = {(min(a, b), max(a, b)) for a, b in edges}
    r = preset.rank
    return [[2 if i == j else (-1 if (min(i, j), max(i, j)) in eset else 0)
             for j in range(1, r + 1)] for i in range(1, r + 1)]


def verify_cartan(preset: AlgebraPreset) -> VerificationOutcome:
    """Check D M^-1 D against the printed deformed Cartan matrix, exactly.

    Also checks the normalized classical limit: each entry divided by
    (t - t^-1) and evaluated at t = 1 must give the symmetrized Cartan
    integer.  Fails on the first differing entry.
    """
    out = VerificationOutcome(passed=True)
    computed = preset.D * preset.M.inverse() * preset.D
    n = preset.rank
    for i in range(n):
        for j in range(n):
            if computed.rows[i][j] != preset.expected_mtilde.rows[i][j]:
                out.passed = False
                out.failure = ("entry (%d,%d): computed %s, expected %s"
                               % (i + 1, j + 1, computed.rows[i][j],
                                  preset.expected_mtilde.rows[i][j]))
                return out
    out.details.append("D M^-1 D matches the printed deformed Cartan matrix (%s)" % preset.name)
    norm = RationalFunction(sym_minus(1))
    one = Fraction(1)
    limit = [[(computed.rows[i][j] / norm).evaluate(one) for j in range(n)] for i in range(n)]
    expected = symmetrized_cartan(preset)
    for i in range(n):
        for j in range(n):
            if limit[i][j] != expected[i][j]:
                out.passed = False
                out.failure = ("limit entry (%d,%d): got %s, expected %d"
                               % (i + 1, j + 1, limit[i][j], expected[i][j]))
                return out
    out.details.append("normalized t -> 1 limit equals the symmetrized Cartan matrix")
    return out
