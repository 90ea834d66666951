"""Exact evaluation of the planar Turán bound formulas.

All values are ``fractions.Fraction``; nothing here touches floating point
except the one formula with an irrational exponent, which is only available
through ``approx_bound`` and never takes part in a comparison.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Callable, Optional

import mpmath

Rational = Fraction


class BoundError(ValueError):
    """Unknown formula id or parameters outside the formula's range."""


@dataclass(frozen=True)
class BoundQuery:
    formula: str
    n: Optional[int] = None
    k: Optional[int] = None
    ell: Optional[int] = None
    D: Optional[Fraction] = None

    @property
    def r(self) -> Optional[int]:
        """The remainder the owning formula is defined with, derived from n, k."""
        spec = FORMULAS.get(self.formula)
        if spec is None or spec.remainder is None or self.n is None or self.k is None:
            return None
        return spec.remainder(self.n, self.k)


def divisor(k: int) -> int:
    """k - 6 + floor((k-1)/2); 3p-5 for k = 2p+1 and 3p-7 for k = 2p."""
    return k - 6 + (k - 1) // 2


def thm21_remainder(n: int, k: int) -> int:
    return (n - 4) % divisor(k)


def thm21_t(n: int, k: int) -> int:
    return (n - 4) // divisor(k)


def lemma41_remainder(n: int, k: int) -> int:
    return (n - 3) % (k - 2)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BoundError(msg)


def _thm21_range(n: int, k: int) -> None:
    _need(k >= 11, f"needs k >= 11, got k={k}")
    _need(n >= k - 4 + (k - 1) // 2, f"needs n >= k-4+floor((k-1)/2) = {k - 4 + (k - 1) // 2}, got n={n}")


def thm21_exact(n: int, k: int) -> Fraction:
    _thm21_range(n, k)
    t, r = thm21_t(n, k), thm21_remainder(n, k)
    return Fraction(3 * n - 3 * t + 2 * ((t + 1) // (k - 1)) - min(r + 8, 9))


def thm21_lb(n: int, k: int) -> Fraction:
    _thm21_range(n, k)
    r = thm21_remainder(n, k)
    d = divisor(k)
    slope = 3 - (3 - Fraction(2, k - 1)) / d
    return slope * n + (12 + 3 * r - Fraction(8 + 2 * r, k - 1)) / d + Fraction(4, k - 1) - min(r + 10, 11)


def thm21_small(n: int, k: int) -> Fraction:
    _need(k >= 11 and k <= n <= k - 5 + (k - 1) // 2,
          f"needs k >= 11 and k <= n <= k-5+floor((k-1)/2), got k={k}, n={n}")
    return Fraction(3 * n - 6)


def ghosh_conjecture_rhs(n: int, k: int) -> Fraction:
    _need(k >= 7, f"conjectured for k >= 7, got k={k}")
    _need(n >= 1, "n must be positive")
    return (3 - Fraction(3, k)) * n - 6 - Fraction(6, k)


def cranston_order(k: int, ell: int) -> int:
    """The only orders for which the Cranston et al. bound is stated."""
    v = Fraction((k - 1) * (5 * ell - 2), 2) + 2
    n = v * ((3 * (k - 1)) // 2 - 5) - (5 * ell - 4)
    if n.denominator != 1:
        raise BoundError(f"k={k}, ell={ell} gives non-integral n={n}")
    return int(n)


def cranston_lb(n: Optional[int], k: int, ell: int) -> Fraction:
    _need(k >= 11, f"needs k >= 11, got k={k}")
    _need(ell >= 2 and ell % 2 == 0, f"needs a positive even ell, got ell={ell}")
    order = cranston_order(k, ell)
    _need(n is None or n == order, f"stated only for n = {order} at k={k}, ell={ell}; got n={n}")
    eps = k % 2
    q = divisor(k) * Fraction(k - 1, k - 3) - Fraction(2, k - 3)
    return (3 - 3 / q) * order - 6 - (12 - Fraction(42 - 6 * eps, k - 3)) / q


def lemma41_lb(n: int, k: int) -> Fraction:
    _need(k >= 4 and n >= 2 * k, f"needs n >= 2k >= 8, got n={n}, k={k}")
    r = lemma41_remainder(n, k)
    return (3 - Fraction(1, k - 2)) * n + Fraction(3 + r, k - 2) - 5 + max(1 - r, 0)


def _linear(num: int, off: int, den: int, n_min: int) -> Callable[[int], Fraction]:
    def f(n: int) -> Fraction:
        _need(n >= n_min, f"needs n >= {n_min}, got n={n}")
        return Fraction(num * n + off, den)
    return f


@dataclass(frozen=True)
class FormulaSpec:
    fn: Callable[..., Fraction]
    params: tuple[str, ...]
    citation: str
    remainder: Optional[Callable[[int, int], int]] = None


FORMULAS: dict[str, FormulaSpec] = {
    "dowden_c3": FormulaSpec(_linear(2, -4, 1, 3), ("n",), "Dowden: ex_P(n,C_3) = 2n-4"),
    "dowden_c4": FormulaSpec(_linear(15, -30, 7, 4), ("n",), "Dowden: ex_P(n,C_4) <= 15(n-2)/7"),
    "dowden_c5": FormulaSpec(_linear(12, -33, 5, 11), ("n",), "Dowden: ex_P(n,C_5) <= (12n-33)/5"),
    "lss_theta4": FormulaSpec(_linear(12, -24, 5, 4), ("n",), "Lan-Shi-Song: ex_P(n,Theta_4) <= 12(n-2)/5"),
    "lss_theta5": FormulaSpec(_linear(5, -10, 2, 5), ("n",), "Lan-Shi-Song: ex_P(n,Theta_5) <= 5(n-2)/2"),
    "lss_theta6": FormulaSpec(_linear(18, -36, 7, 6), ("n",), "Lan-Shi-Song: ex_P(n,Theta_6) <= 18(n-2)/7"),
    "ghosh_c6": FormulaSpec(_linear(5, -14, 2, 18), ("n",), "Ghosh et al.: ex_P(n,C_6) <= (5n-14)/2"),
    "ghosh_theta6": FormulaSpec(_linear(18, -48, 7, 14), ("n",), "Ghosh et al.: ex_P(n,Theta_6) <= (18n-48)/7"),
    "ghosh_conjecture_rhs": FormulaSpec(ghosh_conjecture_rhs, ("n", "k"),
                                        "Ghosh et al. conjecture: (3-3/k)n-6-6/k"),
    "cranston_lb": FormulaSpec(cranston_lb, ("n", "k", "ell"), "Cranston et al.: C_k-free planar lower bound at their stated orders"),
    "thm21_small": FormulaSpec(thm21_small, ("n", "k"), "small orders: ex_P(n,C_k) = 3n-6"),
    "thm21_lb": FormulaSpec(thm21_lb, ("n", "k"), "spine-and-blocks construction: lower bound on ex_P(n,C_k)", thm21_remainder),
    "thm21_exact": FormulaSpec(thm21_exact, ("n", "k"),
                               "spine-and-blocks construction: e(G) = 3n-3t+2floor((t+1)/(k-1))-min{r+8,9}", thm21_remainder),
    "lemma41_lb": FormulaSpec(lemma41_lb, ("n", "k"), "ex_P(n,2C_k) lower bound", lemma41_remainder),
    # restatements for the pendant families; identical expressions
    "cor35_c4plus": FormulaSpec(_linear(15, -30, 7, 4), ("n",), "pendant transfer: ex_P(n,C_4^+) <= 15(n-2)/7"),
    "cor35_c5plus": FormulaSpec(_linear(12, -33, 5, 11), ("n",), "pendant transfer: ex_P(n,C_5^+) <= (12n-33)/5"),
    "cor35_c6plus": FormulaSpec(_linear(5, -14, 2, 18), ("n",), "pendant transfer: ex_P(n,C_6^+) <= (5n-14)/2"),
    "cor35_ckplus_lb": FormulaSpec(thm21_lb, ("n", "k"), "pendant transfer: ex_P(n,C_k^+) lower bound",
                                   thm21_remainder),
    "cor54_theta4plus": FormulaSpec(_linear(12, -24, 5, 5), ("n",),
                                    "pendant transfer: ex_P(n,Theta_4^+) <= 12(n-2)/5"),
    "cor54_theta5plus": FormulaSpec(_linear(5, -10, 2, 6), ("n",), "pendant transfer: ex_P(n,Theta_5^+) <= 5(n-2)/2"),
    "cor54_theta6plus": FormulaSpec(_linear(18, -48, 7, 14), ("n",),
                                    "pendant transfer: ex_P(n,Theta_6^+) <= (18n-48)/7"),
    "cor54_thetakplus_lb": FormulaSpec(thm21_lb, ("n", "k"), "pendant transfer: ex_P(n,Theta_k^+) lower bound",
                                       thm21_remainder),
}

APPROXIMATE = {"cranston_conj_rhs": "Cranston et al. conjecture: (3 - 3/(D k^{log2 3})) n"}


def canonical_id(formula: str) -> str:
    return formula.replace("-", "_")


def eval_bound(q: BoundQuery) -> Fraction:
    fid = canonical_id(q.formula)
    if fid in APPROXIMATE:
        raise BoundError(f"{fid} has an irrational exponent; use approx_bound")
    spec = FORMULAS.get(fid)
    if spec is None:
        raise BoundError(f"unknown formula {q.formula!r}; known: {sorted(FORMULAS) + sorted(APPROXIMATE)}")
    args = {}
    for p in spec.params:
        val = getattr(q, p)
        if val is None and not (fid == "cranston_lb" and p == "n"):
            raise BoundError(f"{fid} needs parameter {p}")
        args[p] = val
    return spec.fn(**args)


def approx_bound(q: BoundQuery, dps: int = 30) -> mpmath.mpf:
    """Display-only value of a formula that is not rational."""
    fid = canonical_id(q.formula)
    if fid != "cranston_conj_rhs":
        return mpmath.mpf(eval_bound(q).numerator) / eval_bound(q).denominator
    if q.n is None or q.k is None or q.D is None:
        raise BoundError("cranston_conj_rhs needs n, k and D")
    with mpmath.workdps(dps):
        d = mpmath.mpf(Fraction(q.D).numerator) / Fraction(q.D).denominator
        return (3 - 3 / (d * mpmath.power(q.k, mpmath.log(3, 2)))) * q.n


def render(x: Fraction) -> str:
    """Exact rendering: an integer or ``p/q``."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def decimal(x: Fraction, digits: int = 12) -> str:
    with localcontext() as ctx:
        ctx.prec = digits + 10
        v = Decimal(x.numerator) / Decimal(x.denominator)
        return str(v.quantize(Decimal(1).scaleb(-digits)).normalize())


def conjecture_threshold(k: int) -> Fraction:
    """5 (k - 6 + floor((k-1)/2)) (k-1) / 2."""
    return Fraction(5 * divisor(k) * (k - 1), 2)


def threshold_order(k: int) -> int:
    """Smallest integer n at or above ``conjecture_threshold(k)``."""
    th = conjecture_threshold(k)
    return -((-th.numerator) // th.denominator)


@dataclass(frozen=True)
class ConjectureComparison:
    k: int
    n: int
    construction_edges: Fraction
    conjecture_rhs: Fraction
    margin: Fraction
    beats: bool
    threshold: Fraction
    clears_threshold: bool

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "construction_edges": render(self.construction_edges),
            "conjecture_rhs": render(self.conjecture_rhs),
            "margin": render(self.margin),
            "beats": self.beats,
            "threshold": render(self.threshold),
            "clears_threshold": self.clears_threshold,
        }


def beats_conjecture(k: int, n: int) -> ConjectureComparison:
    if k < 13:
        raise BoundError(f"the comparison is made for k >= 13, got k={k}")
    exact = thm21_exact(n, k)
    rhs = ghosh_conjecture_rhs(n, k)
    th = conjecture_threshold(k)
    return ConjectureComparison(k, n, exact, rhs, exact - rhs, exact > rhs, th, n >= th)


class Regime(str, enum.Enum):
    TRIANGULATION = "triangulation"
    FORMULA = "formula"


def small_n_regime(k: int, n: int) -> Regime:
    if k < 11 or n < k:
        raise BoundError(f"needs k >= 11 and n >= k, got k={k}, n={n}")
    return Regime.TRIANGULATION if n <= k - 5 + (k - 1) // 2 else Regime.FORMULA
