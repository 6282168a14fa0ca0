"""Exact sparse polynomial arithmetic over Z[beta] with degree truncation.

Monomials are tuples (beta_exp, vars) where vars is a sorted tuple of
(code, exp) pairs; codes pack a variable family x / y / z with a positive
index so the x-block sorts before y before z.  Truncation discards any
monomial whose total degree across x, y, z exceeds the bound; beta is
never truncated.  All coefficients are Python ints, so nothing overflows.

The module also provides the localized ring with inverted (1 + beta*y_i)
factors (YRational), the isobaric divided difference, the ominus series,
the signed star substitution, and the K-supersymmetry check.
"""

from __future__ import annotations

import re
from typing import Callable, Iterable, Iterator

from .weyl import SignedPermutation

X, Y, Z = 0, 1, 2
_FAMILY_NAMES = {X: "x", Y: "y", Z: "z"}
_FAMILY_CODES = {"x": X, "y": Y, "z": Z}
_STRIDE = 1 << 20


def var_code(family: int, index: int) -> int:
    if index < 1:
        raise ValueError(f"variable index must be positive, got {index}")
    return family * _STRIDE + index


def code_family(code: int) -> int:
    return code // _STRIDE


def code_index(code: int) -> int:
    return code % _STRIDE


Monomial = tuple[int, tuple[tuple[int, int], ...]]

_ONE_MONO: Monomial = (0, ())


def mono_degree(mono: Monomial) -> int:
    """Total degree over x, y, z (beta does not count)."""
    return sum(e for _, e in mono[1])


def _merge_vars(a, b):
    if not a:
        return b
    if not b:
        return a
    out = []
    ia = ib = 0
    while ia < len(a) and ib < len(b):
        ca, ea = a[ia]
        cb, eb = b[ib]
        if ca == cb:
            out.append((ca, ea + eb))
            ia += 1
            ib += 1
        elif ca < cb:
            out.append(a[ia])
            ia += 1
        else:
            out.append(b[ib])
            ib += 1
    out.extend(a[ia:])
    out.extend(b[ib:])
    return tuple(out)


class TruncPoly:
    """Sparse polynomial in beta and the x/y/z families, optionally truncated."""

    __slots__ = ("terms", "bound")

    def __init__(self, terms: dict[Monomial, int] | None = None, bound: int | None = None):
        self.terms = terms or {}
        self.bound = bound

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(bound: int | None = None) -> "TruncPoly":
        return TruncPoly({}, bound)

    @staticmethod
    def const(c: int, bound: int | None = None) -> "TruncPoly":
        return TruncPoly({_ONE_MONO: c} if c else {}, bound)

    @staticmethod
    def beta(exp: int = 1, bound: int | None = None) -> "TruncPoly":
        return TruncPoly({(exp, ()): 1}, bound)

    @staticmethod
    def var(family: str, index: int, bound: int | None = None) -> "TruncPoly":
        code = var_code(_FAMILY_CODES[family], index)
        if bound is not None and bound < 1:
            return TruncPoly.zero(bound)
        return TruncPoly({(0, ((code, 1),)): 1}, bound)

    # -- helpers ----------------------------------------------------------

    @staticmethod
    def _join_bound(a: int | None, b: int | None) -> int | None:
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def with_bound(self, bound: int | None) -> "TruncPoly":
        if bound is None:
            return TruncPoly(dict(self.terms), None)
        terms = {m: c for m, c in self.terms.items() if mono_degree(m) <= bound}
        return TruncPoly(terms, bound)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = TruncPoly.const(other)
        return isinstance(other, TruncPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> "TruncPoly":
        if isinstance(other, int):
            other = TruncPoly.const(other)
        if not isinstance(other, TruncPoly):
            return NotImplemented
        bound = self._join_bound(self.bound, other.bound)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            new = terms.get(m, 0) + c
            if new:
                terms[m] = new
            else:
                terms.pop(m, None)
        if bound is not None and (self.bound != bound or other.bound != bound):
            terms = {m: c for m, c in terms.items() if mono_degree(m) <= bound}
        return TruncPoly(terms, bound)

    __radd__ = __add__

    def __neg__(self) -> "TruncPoly":
        return TruncPoly({m: -c for m, c in self.terms.items()}, self.bound)

    def __sub__(self, other) -> "TruncPoly":
        if isinstance(other, int):
            other = TruncPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "TruncPoly":
        return (-self) + other

    def __mul__(self, other) -> "TruncPoly":
        if isinstance(other, int):
            if other == 0:
                return TruncPoly.zero(self.bound)
            return TruncPoly({m: c * other for m, c in self.terms.items()}, self.bound)
        if not isinstance(other, TruncPoly):
            return NotImplemented
        bound = self._join_bound(self.bound, other.bound)
        terms: dict[Monomial, int] = {}
        for (b1, v1), c1 in self.terms.items():
            d1 = sum(e for _, e in v1)
            for (b2, v2), c2 in other.terms.items():
                if bound is not None and d1 + sum(e for _, e in v2) > bound:
                    continue
                m = (b1 + b2, _merge_vars(v1, v2))
                new = terms.get(m, 0) + c1 * c2
                if new:
                    terms[m] = new
                else:
                    del terms[m]
        return TruncPoly(terms, bound)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TruncPoly":
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = TruncPoly.const(1, self.bound)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def divide_beta(self) -> "TruncPoly":
        """Exact division by beta; raises if any term lacks a beta factor."""
        terms = {}
        for (b, v), c in self.terms.items():
            if b == 0:
                raise ArithmeticError("polynomial is not divisible by beta")
            terms[(b - 1, v)] = c
        return TruncPoly(terms, self.bound)

    # -- substitutions ------------------------------------------------------

    def substitute(self, mapping: dict[int, "TruncPoly"], bound: int | None = None) -> "TruncPoly":
        """Replace variables (by code) with polynomials; others are kept."""
        bound = self._join_bound(bound, self.bound)
        result = TruncPoly.zero(bound)
        for (b, v), c in self.terms.items():
            keep = [(code, e) for code, e in v if code not in mapping]
            term = TruncPoly({(b, tuple(keep)): c}, bound)
            for code, e in v:
                if code in mapping:
                    term = term * (mapping[code].with_bound(bound) ** e)
                    if term.is_zero():
                        break
            result = result + term
        return result

    def set_zero(self, families: Iterable[int]) -> "TruncPoly":
        """Kill every monomial using a variable from the given families."""
        fams = set(families)
        terms = {
            m: c
            for m, c in self.terms.items()
            if all(code_family(code) not in fams for code, _ in m[1])
        }
        return TruncPoly(terms, self.bound)

    def rename_family(self, src: int, dst: int) -> "TruncPoly":
        """Move every src-family variable to the same index in family dst."""
        terms: dict[Monomial, int] = {}
        for (b, v), c in self.terms.items():
            new = tuple(
                sorted(
                    (var_code(dst, code_index(code)) if code_family(code) == src else code, e)
                    for code, e in v
                )
            )
            m = (b, new)
            terms[m] = terms.get(m, 0) + c
            if not terms[m]:
                del terms[m]
        return TruncPoly(terms, self.bound)

    def swap_x(self, i: int) -> "TruncPoly":
        """Apply the transposition x_i <-> x_{i+1}."""
        ci, cj = var_code(X, i), var_code(X, i + 1)
        terms: dict[Monomial, int] = {}
        for (b, v), c in self.terms.items():
            new = tuple(
                sorted((cj if code == ci else ci if code == cj else code, e) for code, e in v)
            )
            terms[(b, new)] = c
        return TruncPoly(terms, self.bound)

    def max_index(self, family: int) -> int:
        best = 0
        for _, v in self.terms.items():
            for code, _ in v:
                if code_family(code) == family:
                    best = max(best, code_index(code))
        return best

    def coefficient_of_beta(self, exp: int) -> "TruncPoly":
        return TruncPoly({(0, v): c for (b, v), c in self.terms.items() if b == exp}, self.bound)

    def beta_degrees(self) -> set[int]:
        return {b for (b, _) in self.terms}

    def homogeneous_degree(self) -> int | None:
        """Degree under deg(beta) = -1, deg(var) = 1; None if inhomogeneous."""
        degs = {mono_degree(m) - m[0] for m in self.terms}
        if not degs:
            return 0
        return degs.pop() if len(degs) == 1 else None


ZERO = TruncPoly.zero()
ONE = TruncPoly.const(1)
BETA = TruncPoly.beta()


def xvar(i: int, bound: int | None = None) -> TruncPoly:
    return TruncPoly.var("x", i, bound)


def yvar(i: int, bound: int | None = None) -> TruncPoly:
    return TruncPoly.var("y", i, bound)


def zvar(i: int, bound: int | None = None) -> TruncPoly:
    return TruncPoly.var("z", i, bound)


# -- divided differences -----------------------------------------------


def divided_difference(i: int, f: TruncPoly) -> TruncPoly:
    """The Newton divided difference (f - s_i f) / (x_i - x_{i+1}).

    Computed monomial by monomial, so the division is exact by construction:
    (x^a y^b - x^b y^a)/(x - y) expands to a sum of x^k y^(a+b-1-k).
    """
    ci, cj = var_code(X, i), var_code(X, i + 1)
    result: dict[Monomial, int] = {}
    for (b, v), c in f.terms.items():
        a_exp = e_exp = 0
        rest = []
        for code, e in v:
            if code == ci:
                a_exp = e
            elif code == cj:
                e_exp = e
            else:
                rest.append((code, e))
        if a_exp == e_exp:
            continue
        sign = 1 if a_exp > e_exp else -1
        lo, hi = min(a_exp, e_exp), max(a_exp, e_exp)
        for k in range(lo, hi):
            pair = [(ci, k)] if k else []
            other = a_exp + e_exp - 1 - k
            if other:
                pair.append((cj, other))
            m = (b, tuple(sorted(pair + rest)))
            new = result.get(m, 0) + sign * c
            if new:
                result[m] = new
            else:
                del result[m]
    return TruncPoly(result, f.bound)


def pi_operator(i: int, f: TruncPoly) -> TruncPoly:
    """The isobaric operator ((1+bx_{i+1})f - (1+bx_i) s_i f)/(x_i - x_{i+1})."""
    if i < 1:
        raise ValueError("pi_i needs a positive index")
    return divided_difference(i, (ONE + BETA * xvar(i + 1)) * f)


# -- the ominus series ---------------------------------------------------


def ominus_series(a: TruncPoly, bound: int) -> TruncPoly:
    """The series -a + beta a^2 - beta^2 a^3 + ... truncated at total degree bound."""
    if (0, ()) in a.terms:
        raise ValueError("ominus needs a series with zero constant term")
    a = a.with_bound(bound)
    acc = TruncPoly.zero(bound)
    power = a
    factor = TruncPoly.const(-1, bound)
    while power:
        acc = acc + factor * power
        power = power * a
        factor = factor * (-BETA)
    return acc


# -- the localized coefficient ring --------------------------------------


def _divide_linear(num: TruncPoly, index: int) -> TruncPoly | None:
    """Exact quotient num / (1 + beta*y_index), or None if not divisible."""
    code = var_code(Y, index)
    layers: dict[int, dict[Monomial, int]] = {}
    top = 0
    for (b, v), c in num.terms.items():
        k = 0
        rest = []
        for cd, e in v:
            if cd == code:
                k = e
            else:
                rest.append((cd, e))
        layers.setdefault(k, {})[(b, tuple(rest))] = c
        top = max(top, k)
    q_prev: dict[Monomial, int] = {}
    quotient: dict[Monomial, int] = {}
    for k in range(top + 1):
        layer = dict(layers.get(k, {}))
        # q_k = f_k - beta * q_{k-1}
        for (b, v), c in q_prev.items():
            m = (b + 1, v)
            new = layer.get(m, 0) - c
            if new:
                layer[m] = new
            else:
                layer.pop(m, None)
        for (b, v), c in layer.items():
            mono = (b, _merge_vars(v, ((code, k),)) if k else v)
            quotient[mono] = c
        q_prev = layer
    if q_prev:
        return None
    return TruncPoly(quotient, num.bound)


class YRational:
    """num / prod (1 + beta*y_i)^{e_i}, normalized so no factor divides num."""

    __slots__ = ("num", "den")

    def __init__(self, num: TruncPoly, den: dict[int, int] | None = None):
        den = {i: e for i, e in (den or {}).items() if e}
        if any(e < 0 for e in den.values()):
            raise ValueError("denominator multiplicities must be nonnegative")
        if num.is_zero():
            den = {}
        else:
            for i in sorted(den):
                while den.get(i, 0) > 0:
                    q = _divide_linear(num, i)
                    if q is None:
                        break
                    num = q
                    den[i] -= 1
                if den.get(i) == 0:
                    del den[i]
        self.num = num
        self.den = den

    @staticmethod
    def from_poly(p: TruncPoly) -> "YRational":
        return YRational(p, {})

    @staticmethod
    def const(c: int) -> "YRational":
        return YRational(TruncPoly.const(c), {})

    @staticmethod
    def inverse_unit(i: int, exp: int = 1) -> "YRational":
        """1 / (1 + beta*y_i)^exp."""
        return YRational(ONE, {i: exp})

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return bool(self.num)

    def _den_poly(self, skip: dict[int, int] | None = None) -> TruncPoly:
        skip = skip or {}
        p = ONE
        for i, e in sorted(self.den.items()):
            f = ONE + BETA * yvar(i)
            for _ in range(e - skip.get(i, 0)):
                p = p * f
        return p

    def __add__(self, other) -> "YRational":
        if isinstance(other, int):
            other = YRational.const(other)
        if isinstance(other, TruncPoly):
            other = YRational.from_poly(other)
        lcm = {
            i: max(self.den.get(i, 0), other.den.get(i, 0))
            for i in set(self.den) | set(other.den)
        }
        scale_self = _unit_product({i: lcm[i] - self.den.get(i, 0) for i in lcm})
        scale_other = _unit_product({i: lcm[i] - other.den.get(i, 0) for i in lcm})
        return YRational(self.num * scale_self + other.num * scale_other, lcm)

    __radd__ = __add__

    def __neg__(self) -> "YRational":
        return YRational(-self.num, dict(self.den))

    def __sub__(self, other) -> "YRational":
        if isinstance(other, (int, TruncPoly)):
            other = self.__class__.const(other) if isinstance(other, int) else YRational.from_poly(other)
        return self + (-other)

    def __mul__(self, other) -> "YRational":
        if isinstance(other, int):
            return YRational(self.num * other, dict(self.den))
        if isinstance(other, TruncPoly):
            return YRational(self.num * other, dict(self.den))
        den = dict(self.den)
        for i, e in other.den.items():
            den[i] = den.get(i, 0) + e
        return YRational(self.num * other.num, den)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = YRational.const(other)
        if isinstance(other, TruncPoly):
            other = YRational.from_poly(other)
        if not isinstance(other, YRational):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        # cross-multiply: safe even when truncation spoiled the normal form
        lcm = {
            i: max(self.den.get(i, 0), other.den.get(i, 0))
            for i in set(self.den) | set(other.den)
        }
        scale_self = _unit_product({i: lcm[i] - self.den.get(i, 0) for i in lcm})
        scale_other = _unit_product({i: lcm[i] - other.den.get(i, 0) for i in lcm})
        return self.num * scale_self == other.num * scale_other

    def __hash__(self):
        return hash((self.num, tuple(sorted(self.den.items()))))

    def __repr__(self):
        return f"YRational({yrational_str(self)!r})"

    def divide_beta(self) -> "YRational":
        return YRational(self.num.divide_beta(), dict(self.den))

    def at_y_zero(self) -> TruncPoly:
        """Evaluate every y_i at 0; the denominator units become 1."""
        return self.num.set_zero([Y])

    def homogeneous_degree(self) -> int | None:
        """Degree with deg beta = -1, deg y = 1, deg 1/(1+beta*y) = 0."""
        return self.num.homogeneous_degree()


def _unit_product(exps: dict[int, int]) -> TruncPoly:
    p = ONE
    for i, e in sorted(exps.items()):
        f = ONE + BETA * yvar(i)
        for _ in range(e):
            p = p * f
    return p


def ominus_y(i: int) -> YRational:
    """y_{-i} = -y_i / (1 + beta*y_i)."""
    return YRational(-yvar(i), {i: 1})


def star_action(w: SignedPermutation, f: YRational) -> YRational:
    """Substitute y_i -> y_{w(i)}, reading y_{-j} as -y_j/(1+beta*y_j)."""
    result = YRational.const(0)
    for (b, v), c in f.num.terms.items():
        term = YRational(TruncPoly({(b, ()): c}))
        for code, e in v:
            if code_family(code) != Y:
                term = term * TruncPoly({(0, ((code, e),)): 1})
                continue
            target = w(code_index(code))
            piece = YRational.from_poly(yvar(target)) if target > 0 else ominus_y(-target)
            for _ in range(e):
                term = term * piece
        result = result + term
    for i, e in sorted(f.den.items()):
        target = w(i)
        if target > 0:
            result = result * YRational.inverse_unit(target, e)
        else:
            # 1/(1+beta*y_{-j}) = 1 + beta*y_j
            result = result * _unit_product({-target: e})
    return result


# -- linear combinations over a group -------------------------------------


class FCombo:
    """A finite formal linear combination of group elements.

    Coefficients may be TruncPoly or YRational; zero coefficients are
    dropped eagerly.
    """

    __slots__ = ("group_type", "terms")

    def __init__(self, group_type: str, terms: dict[SignedPermutation, object] | None = None):
        self.group_type = group_type
        self.terms: dict[SignedPermutation, object] = {}
        for w, c in (terms or {}).items():
            self.add_term(w, c)

    def copy(self) -> "FCombo":
        return FCombo(self.group_type, dict(self.terms))

    def add_term(self, w: SignedPermutation, coeff) -> None:
        if not coeff:
            return
        if not w.in_group(self.group_type):
            raise ValueError(f"{w} is not in the group of type {self.group_type}")
        if w in self.terms:
            new = self.terms[w] + coeff
            if new:
                self.terms[w] = new
            else:
                del self.terms[w]
        else:
            self.terms[w] = coeff

    def __add__(self, other: "FCombo") -> "FCombo":
        if self.group_type != other.group_type:
            raise ValueError("cannot mix group types")
        out = self.copy()
        for w, c in other.terms.items():
            out.add_term(w, c)
        return out

    def scale(self, factor) -> "FCombo":
        out = FCombo(self.group_type)
        for w, c in self.terms.items():
            out.add_term(w, c * factor)
        return out

    def map_coeffs(self, fn: Callable) -> "FCombo":
        out = FCombo(self.group_type)
        for w, c in self.terms.items():
            out.add_term(w, fn(c))
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FCombo)
            and self.group_type == other.group_type
            and self.terms == other.terms
        )

    def __iter__(self) -> Iterator[tuple[SignedPermutation, object]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self):
        inner = ", ".join(f"{w}: {c!r}" for w, c in sorted(self.terms.items(), key=lambda t: t[0].window))
        return f"FCombo[{self.group_type}]({inner})"


# -- the K-supersymmetry check ---------------------------------------------


def supersym_check(f: TruncPoly, num_vars: int, bound: int) -> bool:
    """Whether f(t, ominus t, z_3, ...) == f(0, 0, z_3, ...) up to the bound.

    The fresh variable t is modeled as z_{num_vars+1}.
    """
    if num_vars < 2:
        raise ValueError("need at least two z variables")
    t = zvar(num_vars + 1, bound)
    lhs = f.substitute(
        {var_code(Z, 1): t, var_code(Z, 2): ominus_series(t, bound)}, bound
    )
    rhs = f.substitute(
        {var_code(Z, 1): TruncPoly.zero(bound), var_code(Z, 2): TruncPoly.zero(bound)},
        bound,
    )
    return lhs == rhs


# -- rendering and parsing ---------------------------------------------------


def _mono_sort_key(mono: Monomial):
    b, v = mono
    blocks = []
    for fam in (X, Y, Z):
        fam_vars = [(code_index(c), e) for c, e in v if code_family(c) == fam]
        blocks.append((sum(e for _, e in fam_vars), tuple(fam_vars)))
    return (b, *blocks)


def _mono_str(mono: Monomial, coeff: int) -> str:
    b, v = mono
    parts = []
    if abs(coeff) != 1 or (b == 0 and not v):
        parts.append(str(abs(coeff)))
    if b:
        parts.append("b" if b == 1 else f"b^{b}")
    for code, e in v:
        name = f"{_FAMILY_NAMES[code_family(code)]}{code_index(code)}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def poly_str(p: TruncPoly) -> str:
    """Canonical rendering, e.g. "2*z1 + b*z1^2"."""
    if p.is_zero():
        return "0"
    out = []
    for mono in sorted(p.terms, key=_mono_sort_key):
        c = p.terms[mono]
        body = _mono_str(mono, c)
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)


def yrational_str(f: YRational) -> str:
    if f.is_zero():
        return "0"
    den = ""
    if f.den:
        factors = []
        for i, e in sorted(f.den.items()):
            base = f"(1+b*y{i})"
            factors.append(base if e == 1 else f"{base}^{e}")
        den = "/" + "*".join(factors) if len(factors) == 1 else "/(" + "*".join(factors) + ")"
    out = []
    for mono in sorted(f.num.terms, key=_mono_sort_key):
        c = f.num.terms[mono]
        body = _mono_str(mono, c) + den
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)


def _parse_term(chunk: str, text: str) -> tuple[Monomial, int]:
    sign = 1
    if chunk.startswith("-"):
        sign = -1
        chunk = chunk[1:]
    coeff = sign
    beta_exp = 0
    vars_acc: dict[int, int] = {}
    for factor in chunk.split("*"):
        factor = factor.strip()
        if not factor:
            continue
        if factor.isdigit():
            coeff *= int(factor)
        elif factor == "b":
            beta_exp += 1
        elif factor.startswith("b^"):
            beta_exp += int(factor[2:])
        else:
            m = re.fullmatch(r"([xyz])(\d+)(?:\^(\d+))?", factor)
            if not m:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            code = var_code(_FAMILY_CODES[m.group(1)], int(m.group(2)))
            vars_acc[code] = vars_acc.get(code, 0) + int(m.group(3) or 1)
    return (beta_exp, tuple(sorted(vars_acc.items()))), coeff


def _split_terms(text: str) -> list[str]:
    # terms are separated by spaced operators; the + inside a denominator
    # factor (1+b*y1) has no spaces around it
    s = text.strip().replace(" - ", " +-").replace(" + ", " +")
    return [chunk.strip() for chunk in s.split(" +") if chunk.strip()]


def parse_poly(text: str, bound: int | None = None) -> TruncPoly:
    """Parse the canonical rendering back into a TruncPoly."""
    if text.strip() in ("0", ""):
        return TruncPoly.zero(bound)
    result = TruncPoly.zero(bound)
    for chunk in _split_terms(text):
        mono, coeff = _parse_term(chunk, text)
        result = result + TruncPoly({mono: coeff}, bound)
    return result


_DEN = re.compile(r"/\(?((?:\(1\+b\*y\d+\)(?:\^\d+)?\*?)+)\)?$")
_DEN_FACTOR = re.compile(r"\(1\+b\*y(\d+)\)(?:\^(\d+))?")


def parse_yrational(text: str) -> YRational:
    """Parse the canonical rendering, with per-term unit denominators."""
    if text.strip() in ("0", ""):
        return YRational.const(0)
    total = YRational.const(0)
    for chunk in _split_terms(text):
        den: dict[int, int] = {}
        m = _DEN.search(chunk)
        if m:
            chunk = chunk[: m.start()]
            for idx, exp in _DEN_FACTOR.findall(m.group(1)):
                den[int(idx)] = den.get(int(idx), 0) + int(exp or 1)
        mono, coeff = _parse_term(chunk, text)
        total = total + YRational(TruncPoly({mono: coeff}), den)
    return total
