"""The transition recursion: expanding K-Stanley symbols into Grassmannian
terms with nonnegative coefficients.

Everything here is symbolic: a combination maps signed permutations to
polynomials in beta, where the basis symbol of u implicitly carries degree
l(u).  Each coefficient must therefore be a single monomial a * beta^e with
e = l(u) - l(source); that bookkeeping is asserted on every step.
"""

from __future__ import annotations

import io
import os
import struct
from dataclasses import dataclass, field

from .hecke import fstanley
from .rings import TruncPoly, poly_str
from .tableaux import ShiftedSkewShape, gp, gq, w_shape
from .weyl import (
    SignedPermutation,
    is_valid_reflection,
    ld_less,
    length,
    length_increment_ok,
    reflection,
    shape,
)

from .kn import transition_data


def transition_step(t: str, w: SignedPermutation) -> dict[SignedPermutation, TruncPoly]:
    """One application of the symbolic transition: F_w as a nonnegative
    Z[beta]-combination of F_u with u strictly below w in the LD order.

    In type B the sign-change factor acts first, then the t-moves sweep j
    upward from -(support+1); the formal division by beta must be exact.
    """
    if t not in ("B", "C", "D"):
        raise ValueError(f"transition needs type B, C, or D, not {t!r}")
    if not w.in_group(t):
        raise ValueError(f"{w} is not in the group of type {t}")
    v, a, _, _ = transition_data(w)
    combo: dict[SignedPermutation, TruncPoly] = {v: TruncPoly.const(1)}
    beta = TruncPoly.beta()

    def add(d, u, c):
        d[u] = d.get(u, TruncPoly.zero()) + c

    if t == "B":
        extra: dict[SignedPermutation, TruncPoly] = {}
        for u, c in combo.items():
            if length_increment_ok("B", u, 0, a):
                add(extra, u * reflection(0, a), c * beta)
        for u, c in extra.items():
            add(combo, u, c)
    j_min = -(max(v.support, a) + 1)
    for j in range(j_min, a):
        if not is_valid_reflection(t, j, a):
            continue
        extra = {}
        for u, c in combo.items():
            if length_increment_ok(t, u, j, a):
                add(extra, u * reflection(j, a), c * beta)
        for u, c in extra.items():
            add(combo, u, c)
    combo[v] = combo[v] - 1
    lw = length(t, w)
    result: dict[SignedPermutation, TruncPoly] = {}
    for u, c in combo.items():
        if c.is_zero():
            continue
        c = c.divide_beta()
        expected = length(t, u) - lw
        if c.beta_degrees() != {expected} or any(
            coeff <= 0 for coeff in c.terms.values()
        ):
            raise AssertionError(
                f"transition coefficient of {u} is {poly_str(c)}, "
                f"not a positive multiple of b^{expected}"
            )
        if not ld_less(u, w):
            raise AssertionError(f"transition produced {u} not below {w} in LD order")
        result[u] = c
    return result


@dataclass
class ExpansionResult:
    """A finite nonnegative expansion F_w = sum a_lam * beta^(|lam|-l) GP/GQ."""

    group_type: str
    source: SignedPermutation
    length: int
    basis: str
    terms: dict[tuple[int, ...], int]

    def beta_power(self, lam: tuple[int, ...]) -> int:
        return sum(lam) - self.length

    def to_json_dict(self) -> dict:
        return {
            "type": self.group_type,
            "w": list(self.source.window),
            "length": self.length,
            "basis": self.basis,
            "terms": [
                {
                    "lambda": list(lam),
                    "coeff": coeff,
                    "beta_power": self.beta_power(lam),
                }
                for lam, coeff in sorted(self.terms.items())
            ],
        }


_cache: dict[tuple[str, tuple[int, ...]], dict[SignedPermutation, int]] = {}


def _select_key(pending) -> SignedPermutation:
    """A maximal non-Grassmannian key in the LD order, ties by window."""
    candidates = [u for u in pending if not u.is_grassmannian()]
    return max(candidates, key=lambda u: (u.least_descent(), u(u.least_descent()), u.window))


def expand_grassmannian(t: str, w: SignedPermutation) -> ExpansionResult:
    """Fully expand F_w into Grassmannian symbols by iterated transitions.

    The worklist always expands a maximal key, so every intermediate stays
    within the support bound support(w) + LD(w); that containment and the
    nonnegativity of all coefficients are asserted as the engine runs.
    """
    if not w.in_group(t):
        raise ValueError(f"{w} is not in the group of type {t}")
    lw = length(t, w)
    max_support = w.support + w.least_descent()
    cached = _cache.get((t, w.window))
    if cached is None:
        pending: dict[SignedPermutation, int] = {w: 1}
        grassmannian: dict[SignedPermutation, int] = {}
        while True:
            for u in list(pending):
                if u.is_grassmannian():
                    grassmannian[u] = grassmannian.get(u, 0) + pending.pop(u)
            if not pending:
                break
            u = _select_key(pending)
            mult = pending.pop(u)
            sub = _cache.get((t, u.window))
            if sub is not None:
                for g, c in sub.items():
                    grassmannian[g] = grassmannian.get(g, 0) + mult * c
                continue
            lu = length(t, u)
            for v, cpoly in transition_step(t, u).items():
                if v.support > max_support:
                    raise AssertionError(
                        f"intermediate {v} escapes the support bound {max_support}"
                    )
                coeff = cpoly.terms[(length(t, v) - lu, ())]
                pending[v] = pending.get(v, 0) + mult * coeff
        _cache[(t, w.window)] = grassmannian
        cached = grassmannian
    basis = "GQ" if t == "C" else "GP"
    terms: dict[tuple[int, ...], int] = {}
    for u, coeff in cached.items():
        lam = shape(t, u)
        terms[lam] = terms.get(lam, 0) + coeff
    return ExpansionResult(t, w, lw, basis, terms)


def skew_expansion(basis: str, outer, inner=()) -> ExpansionResult:
    """Expand a skew GP or GQ function into straight shapes.

    GP goes through the type B reading-word element, GQ through type C;
    the type D route computes the same GP expansion and is exercised in
    the tests.
    """
    if basis not in ("GP", "GQ"):
        raise ValueError(f"basis must be GP or GQ, got {basis!r}")
    sh = ShiftedSkewShape(outer, inner)
    t = "B" if basis == "GP" else "C"
    return expand_grassmannian(t, w_shape(t, sh))


@dataclass
class VerificationReport:
    """Numerical certification of an expansion against the word oracle."""

    group_type: str
    source: SignedPermutation
    num_vars: int
    bound: int
    expansion: ExpansionResult
    difference: TruncPoly = field(repr=False)

    @property
    def ok(self) -> bool:
        return self.difference.is_zero()


def expansion_poly(result: ExpansionResult, num_vars: int, bound: int) -> TruncPoly:
    """Sum a_lam * beta^(|lam|-l) * GP/GQ_lam at the truncation."""
    fn = gp if result.basis == "GP" else gq
    total = TruncPoly.zero(bound)
    for lam, coeff in result.terms.items():
        term = TruncPoly.beta(result.beta_power(lam), bound) * coeff
        total = total + term * fn(ShiftedSkewShape(lam), num_vars, bound)
    return total


def verify_expansion(
    t: str, w: SignedPermutation, num_vars: int, bound: int
) -> VerificationReport:
    result = expand_grassmannian(t, w)
    recombined = expansion_poly(result, num_vars, bound)
    direct = fstanley(t, w, num_vars, bound)
    return VerificationReport(t, w, num_vars, bound, result, recombined - direct)


# -- cache persistence -------------------------------------------------------

_MAGIC = b"KTRX"
_VERSION = 1


def _write_varint(out: io.BytesIO, value: int) -> None:
    if value < 0:
        raise ValueError("varint must be nonnegative")
    while True:
        byte = value & 0x7F
        value >>= 7
        if value:
            out.write(bytes([byte | 0x80]))
        else:
            out.write(bytes([byte]))
            return


def _read_varint(buf: io.BytesIO) -> int:
    shift = 0
    value = 0
    while True:
        raw = buf.read(1)
        if not raw:
            raise ValueError("truncated varint")
        byte = raw[0]
        value |= (byte & 0x7F) << shift
        if not byte & 0x80:
            return value
        shift += 7


def _zigzag(v: int) -> int:
    return (v << 1) if v >= 0 else ((-v) << 1) - 1


def _unzigzag(v: int) -> int:
    return (v >> 1) if not v & 1 else -((v + 1) >> 1)


def save_cache(path: str) -> int:
    """Write the expansion memo as a versioned, length-prefixed record file."""
    out = io.BytesIO()
    out.write(_MAGIC)
    out.write(struct.pack("<I", _VERSION))
    count = 0
    for (t, window), grassmannian in sorted(_cache.items()):
        rec = io.BytesIO()
        rec.write(t.encode("ascii"))
        _write_varint(rec, len(window))
        for v in window:
            _write_varint(rec, _zigzag(v))
        _write_varint(rec, len(grassmannian))
        for u, coeff in sorted(grassmannian.items(), key=lambda p: p[0].window):
            _write_varint(rec, len(u.window))
            for v in u.window:
                _write_varint(rec, _zigzag(v))
            _write_varint(rec, _zigzag(coeff))
        payload = rec.getvalue()
        _write_varint(out, len(payload))
        out.write(payload)
        count += 1
    tmp = path + ".tmp"
    with open(tmp, "wb") as fh:
        fh.write(out.getvalue())
    os.replace(tmp, path)
    return count


def load_cache(path: str) -> int:
    """Merge a cache file written by save_cache; ignores other versions."""
    with open(path, "rb") as fh:
        buf = io.BytesIO(fh.read())
    if buf.read(4) != _MAGIC:
        raise ValueError(f"{path} is not an expansion cache")
    (version,) = struct.unpack("<I", buf.read(4))
    if version != _VERSION:
        return 0
    count = 0
    while True:
        head = buf.read(1)
        if not head:
            break
        buf.seek(-1, io.SEEK_CUR)
        size = _read_varint(buf)
        rec = io.BytesIO(buf.read(size))
        t = rec.read(1).decode("ascii")
        window = tuple(
            _unzigzag(_read_varint(rec)) for _ in range(_read_varint(rec))
        )
        entries: dict[SignedPermutation, int] = {}
        for _ in range(_read_varint(rec)):
            uwin = tuple(_unzigzag(_read_varint(rec)) for _ in range(_read_varint(rec)))
            entries[SignedPermutation(uwin)] = _unzigzag(_read_varint(rec))
        _cache.setdefault((t, window), entries)
        count += 1
    return count


def cache_dir_file(cache_dir: str) -> str:
    return os.path.join(cache_dir, "expansions.ktrx")
