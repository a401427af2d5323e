"""Tutte polynomial, f-vector and h-vector of a matroid."""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from math import comb

from .bitset import bits
from .matroid import BudgetExceeded, Matroid


@dataclass(frozen=True)
class TuttePolynomial:
    """Coefficients ``{(i, j): c}`` of ``x^i y^j``; zero terms are dropped."""

    coefficients: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {k: v for k, v in self.coefficients.items() if v}
        object.__setattr__(self, "coefficients", dict(sorted(clean.items())))

    def __call__(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.coefficients.items())

    def __eq__(self, other):
        return isinstance(other, TuttePolynomial) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(tuple(self.coefficients.items()))

    def swap(self) -> TuttePolynomial:
        """``T(y, x)``, the polynomial of the dual matroid."""
        return TuttePolynomial({(j, i): c for (i, j), c in self.coefficients.items()})

    def x_coefficients(self) -> list[int]:
        """Coefficients of ``T(x, 1)``, constant term first."""
        top = max((i for i, _ in self.coefficients), default=0)
        out = [0] * (top + 1)
        for (i, _), c in self.coefficients.items():
            out[i] += c
        return out

    def to_json(self) -> dict:
        return {f"{i},{j}": c for (i, j), c in self.coefficients.items()}

    @classmethod
    def from_json(cls, data: dict) -> TuttePolynomial:
        return cls({tuple(int(p) for p in k.split(",")): int(v) for k, v in data.items()})

    def __str__(self):
        terms = []
        for (i, j), c in sorted(self.coefficients.items(), key=lambda kv: (-kv[0][0] - kv[0][1], -kv[0][0])):
            mono = "".join(
                part
                for part in (
                    "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                    "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
                )
            )
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"


def _add(acc: dict, poly: dict, shift_x: int = 0, shift_y: int = 0):
    for (i, j), c in poly.items():
        acc[(i + shift_x, j + shift_y)] += c


def tutte(m: Matroid, max_calls: int | None = 2_000_000) -> TuttePolynomial:
    """Deletion-contraction on the smallest element that is neither loop nor bridge.

    Loops and bridges split off as factors of ``y`` and ``x``.  Minors are
    memoized on ``(remaining ground, contracted set)`` of the underlying base
    matroid.
    """
    base, contracted0 = m._base_and_contracted()
    memo: dict[tuple[int, int], dict] = {}
    calls = 0

    def rank(mask, contracted):
        return base._rank(mask | contracted) - base._rank(contracted)

    def rec(ground: int, contracted: int) -> dict:
        nonlocal calls
        key = (ground, contracted)
        if key in memo:
            return memo[key]
        calls += 1
        if max_calls is not None and calls > max_calls:
            raise BudgetExceeded(f"Tutte recursion exceeded {max_calls} calls")
        full = rank(ground, contracted)
        loops = bridges = 0
        pivot = None
        for i in bits(ground):
            b = 1 << i
            if base._rank(b | contracted) == base._rank(contracted):
                loops |= b
            elif rank(ground & ~b, contracted) < full:
                bridges |= b
            elif pivot is None:
                pivot = i
        if pivot is None:
            result = {(bridges.bit_count(), loops.bit_count()): 1}
        else:
            # split off loops and bridges first; they only shift exponents
            core = ground & ~loops & ~bridges
            b = 1 << pivot
            acc: dict = defaultdict(int)
            _add(acc, rec(core & ~b, contracted))
            _add(acc, rec(core & ~b, contracted | b))
            result = {}
            for (i, j), c in acc.items():
                result[(i + bridges.bit_count(), j + loops.bit_count())] = c
        memo[key] = result
        return result

    return TuttePolynomial(dict(rec(m.ground, contracted0)))


def tutte_by_subsets(m: Matroid) -> TuttePolynomial:
    """Rank-generating sum over all subsets (exponential; an oracle for tests)."""
    ground = list(bits(m.ground))
    r = m.full_rank
    acc: dict = defaultdict(int)
    for k in range(1 << len(ground)):
        mask = 0
        for pos, i in enumerate(ground):
            if (k >> pos) & 1:
                mask |= 1 << i
        rs = m._rank(mask)
        # (x-1)^a (y-1)^b expanded binomially
        a, b = r - rs, mask.bit_count() - rs
        for p in range(a + 1):
            cp = comb(a, p) * (-1) ** (a - p)
            for q in range(b + 1):
                acc[(p, q)] += cp * comb(b, q) * (-1) ** (b - q)
    return TuttePolynomial(dict(acc))


def f_vector(m: Matroid) -> list[int]:
    """Number of independent sets of each size, starting at the empty set."""
    return m.independent_set_counts()


def h_vector(m: Matroid, poly: TuttePolynomial | None = None) -> list[int]:
    """Coefficients of ``T(x, 1)`` reversed, padded to length ``r(M) + 1``."""
    if poly is None:
        poly = tutte(m)
    d = m.full_rank
    coeffs = poly.x_coefficients()
    coeffs += [0] * (d + 1 - len(coeffs))
    return coeffs[::-1]


def h_from_f(f: list[int]) -> list[int]:
    """``sum_i f_{i-1} (t-1)^{d-i} = sum_k h_k t^{d-k}`` solved for ``h``."""
    d = len(f) - 1
    h = [0] * (d + 1)
    for i, fi in enumerate(f):
        for j in range(d - i + 1):
            # coefficient of t^j in (t-1)^(d-i), filed under h_{d-j}
            h[d - j] += fi * comb(d - i, j) * (-1) ** (d - i - j)
    return h


def check_main_theorem(m: Matroid, cs, degrees: list[int] | None = None) -> bool:
    """Degree vector of the coparking functions equals the h-vector."""
    from .coparking import degree_vector

    if degrees is None:
        degrees = degree_vector(cs)
    h = h_vector(m)
    n = max(len(h), len(degrees))
    return list(degrees) + [0] * (n - len(degrees)) == h + [0] * (n - len(h))


def to_json(poly: TuttePolynomial) -> str:
    return json.dumps(poly.to_json(), sort_keys=True)
