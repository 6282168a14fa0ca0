"""Signed permutations and the classical Weyl groups B/C/D (plus type A).

A signed permutation is a bijection w of the nonzero integers with
w(-i) = -w(i) that fixes all but finitely many points.  We store the
window (w(1), ..., w(n)) with trailing fixed points trimmed, so equal
group elements have identical windows.

Conventions: products compose as functions, (u*v)(i) = u(v(i)); the
simple generators are t_0 = (-1,1), t_i = (i,i+1)(-i,-i-1) for i >= 1,
and t_{-1} = (1,-2)(2,-1).  Type A elements are the signed permutations
with all-positive windows; type D requires an even number of negative
window entries.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

GROUP_TYPES = ("A", "B", "C", "D")


class SignedPermutation:
    """A finitely supported signed permutation, canonically windowed."""

    __slots__ = ("window",)

    def __init__(self, window: Iterable[int]):
        win = list(window)
        seen = set()
        for v in win:
            if not isinstance(v, int) or v == 0:
                raise ValueError(f"window entries must be nonzero integers: {win}")
            if abs(v) in seen:
                raise ValueError(f"repeated absolute value {abs(v)} in window {win}")
            seen.add(abs(v))
        if seen and seen != set(range(1, len(win) + 1)):
            raise ValueError(f"window {win} is not a signed permutation of 1..{len(win)}")
        while win and win[-1] == len(win):
            win.pop()
        object.__setattr__(self, "window", tuple(win))

    def __setattr__(self, name, value):
        raise AttributeError("SignedPermutation is immutable")

    # -- basic protocol ------------------------------------------------

    def __call__(self, i: int) -> int:
        if i == 0:
            raise ValueError("signed permutations act on nonzero integers")
        n = len(self.window)
        if abs(i) > n:
            return i
        return self.window[i - 1] if i > 0 else -self.window[-i - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, SignedPermutation) and self.window == other.window

    def __hash__(self) -> int:
        return hash(self.window)

    def __repr__(self) -> str:
        return f"SignedPermutation({list(self.window)!r})"

    def __str__(self) -> str:
        return format_oneline(self)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        n = max(len(self.window), len(other.window))
        return SignedPermutation(self(other(i)) for i in range(1, n + 1))

    def inverse(self) -> "SignedPermutation":
        n = len(self.window)
        inv = [0] * n
        for i in range(1, n + 1):
            v = self.window[i - 1]
            if v > 0:
                inv[v - 1] = i
            else:
                inv[-v - 1] = -i
        return SignedPermutation(inv)

    # -- structure -----------------------------------------------------

    @property
    def support(self) -> int:
        return len(self.window)

    def is_identity(self) -> bool:
        return not self.window

    def num_negatives(self) -> int:
        return sum(1 for v in self.window if v < 0)

    def in_group(self, t: str) -> bool:
        if t == "A":
            return all(v > 0 for v in self.window)
        if t in ("B", "C"):
            return True
        if t == "D":
            return self.num_negatives() % 2 == 0
        raise ValueError(f"unknown group type {t!r}")

    def descents(self) -> set[int]:
        """Des(w) = { i > 0 : w(i) > w(i+1) }; only window positions can qualify."""
        n = len(self.window)
        return {i for i in range(1, n + 1) if self(i) > self(i + 1)}

    def least_descent(self) -> int:
        des = self.descents()
        return max(des) if des else 0

    def is_grassmannian(self) -> bool:
        return not self.descents()


IDENTITY = SignedPermutation(())


def identity() -> SignedPermutation:
    return IDENTITY


# -- one-line notation ------------------------------------------------


def parse_oneline(text: str) -> SignedPermutation:
    """Parse comma-separated signed integers, with optional surrounding brackets."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    if not s:
        return IDENTITY
    try:
        entries = [int(tok.strip()) for tok in s.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad one-line notation {text!r}: {exc}") from None
    return SignedPermutation(entries)


def format_oneline(w: SignedPermutation) -> str:
    if not w.window:
        return "1"
    return ",".join(str(v) for v in w.window)


# -- reflections and generators ---------------------------------------


def reflection(i: int, j: int) -> SignedPermutation:
    """The reflection t_{ij} = (i,j)(-j,-i); t_{0j} is the sign change (-j,j)."""
    if i >= j or j <= 0:
        raise ValueError(f"reflection needs i < j with j > 0, got ({i}, {j})")
    if i == -j:
        return IDENTITY
    n = max(abs(i), j)
    win = list(range(1, n + 1))

    def assign(a: int, b: int) -> None:
        # record a |-> b, forcing -a |-> -b
        if a > 0:
            win[a - 1] = b
        else:
            win[-a - 1] = -b

    if i == 0:
        assign(j, -j)
    else:
        assign(i, j)
        assign(j, i)
    return SignedPermutation(win)


def is_valid_reflection(t: str, i: int, j: int) -> bool:
    if i >= j or j <= 0 or i == -j:
        return False
    if t == "A":
        return i > 0
    if t == "D":
        return i != 0
    return True


def generator(t: str, g: int) -> SignedPermutation:
    """The simple generator t_g (s_g in type A)."""
    if g >= 1:
        return reflection(g, g + 1)
    if g == 0:
        if t not in ("B", "C"):
            raise ValueError(f"generator 0 is not in type {t}")
        return reflection(0, 1)
    if g == -1:
        if t != "D":
            raise ValueError("generator -1 only exists in type D")
        return reflection(-1, 2)
    raise ValueError(f"invalid generator index {g}")


def generator_indices(t: str, n: int) -> list[int]:
    """Simple generators of W^t_n, affecting positions <= n."""
    if t == "A":
        return list(range(1, n))
    if t in ("B", "C"):
        return list(range(0, n))
    if t == "D":
        return [-1] + list(range(1, n))
    raise ValueError(f"unknown group type {t!r}")


# -- length ------------------------------------------------------------


def signed_inversions(w: SignedPermutation) -> int:
    """Pairs i < j of nonzero indices in [-n, n] with w(i) > w(j)."""
    n = len(w.window)
    idx = [i for i in range(-n, n + 1) if i != 0]
    vals = [w(i) for i in idx]
    return sum(
        1
        for a in range(len(vals))
        for b in range(a + 1, len(vals))
        if vals[a] > vals[b]
    )


def length(t: str, w: SignedPermutation) -> int:
    """Coxeter length of w in the group of type t."""
    if not w.in_group(t):
        raise ValueError(f"{w} is not in the group of type {t}")
    if t == "A":
        win = w.window
        return sum(
            1
            for a in range(len(win))
            for b in range(a + 1, len(win))
            if win[a] > win[b]
        )
    inv = signed_inversions(w)
    neg = w.num_negatives()
    total = inv + neg if t in ("B", "C") else inv - neg
    if total % 2:
        raise AssertionError(f"non-integer length for {w} in type {t}")
    return total // 2


def right_ascent(t: str, w: SignedPermutation, g: int) -> bool:
    """True iff multiplying by generator g on the right raises length by 1."""
    if g >= 1:
        return w(g) < w(g + 1)
    if g == 0:
        return w(1) > 0
    if g == -1:
        return -w(1) < w(2)
    raise ValueError(f"invalid generator index {g}")


def length_increment_ok(t: str, w: SignedPermutation, i: int, j: int) -> bool:
    """Whether l(w * t_{ij}) = l(w) + 1, decided by window scans only.

    Cases: 0 < i < j; the sign change t_{0j}; and t_{-i,j} with 0 < i < j.
    The last case carries an extra sign condition in types B and C, which
    share one length function.  The strict betweenness scans exclude the
    swapped positions themselves.
    """
    if not is_valid_reflection(t, i, j):
        raise ValueError(f"t_({i},{j}) is not a reflection of type {t}")
    if abs(i) > j:
        i, j = -j, -i
    if i > 0:
        if w(i) >= w(j):
            return False
        lo, hi = w(i), w(j)
        return not any(lo < w(e) < hi for e in range(i + 1, j))
    if i == 0:
        if w(j) <= 0:
            return False
        hi = w(j)
        return not any(-hi < w(e) < hi for e in range(1, j))
    k = -i
    if -w(k) >= w(j):
        return False
    if t in ("B", "C") and not (w(k) < 0 or w(j) < 0):
        return False
    if any(-w(j) < w(e) < w(k) for e in range(1, k)):
        return False
    return not any(-w(k) < w(e) < w(j) for e in range(1, j) if e != k)


# -- words and products -------------------------------------------------


def reduced_word(t: str, w: SignedPermutation) -> list[int]:
    """A reduced word (a_1, ..., a_l) with t_{a_1} ... t_{a_l} = w.

    Greedy right-descent stripping, preferring t_0 / t_{-1} and then the
    smallest index.  Any reduced word works for the callers here.
    """
    if not w.in_group(t):
        raise ValueError(f"{w} is not in the group of type {t}")
    word: list[int] = []
    cur = w
    while not cur.is_identity():
        for g in generator_indices(t, cur.support):
            if not right_ascent(t, cur, g):
                word.append(g)
                cur = cur * generator(t, g)
                break
        else:
            raise AssertionError(f"no descent found for {cur} in type {t}")
    word.reverse()
    return word


def demazure_mul(t: str, u: SignedPermutation, v: SignedPermutation) -> SignedPermutation:
    """The Demazure (0-Hecke) product u o v."""
    if not (u.in_group(t) and v.in_group(t)):
        raise ValueError(f"operands must both lie in type {t}")
    result = u
    for g in reduced_word(t, v):
        if right_ascent(t, result, g):
            result = result * generator(t, g)
    return result


def demazure_apply(t: str, w: SignedPermutation, g: int) -> SignedPermutation:
    """w o t_g for a single generator."""
    return w * generator(t, g) if right_ascent(t, w, g) else w


@lru_cache(maxsize=None)
def elements_up_to_length(t: str, n: int, max_len: int) -> tuple[SignedPermutation, ...]:
    """Elements of W^t_n with length <= max_len, found by raising BFS."""
    gens = [generator(t, g) for g in generator_indices(t, n)]
    gen_idx = generator_indices(t, n)
    seen = {IDENTITY}
    frontier = [IDENTITY]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for g, gi in zip(gens, gen_idx):
                if right_ascent(t, w, gi):
                    u = w * g
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
        frontier = nxt
    return tuple(sorted(seen, key=lambda w: (length(t, w), w.window)))


@lru_cache(maxsize=None)
def group_elements(t: str, n: int) -> tuple[SignedPermutation, ...]:
    """All elements of W^t_n, by breadth-first search from the identity."""
    gens = [generator(t, g) for g in generator_indices(t, n)]
    seen = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                u = w * g
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return tuple(sorted(seen, key=lambda w: (length(t, w), w.window)))


# -- Grassmannian shapes and the LD order --------------------------------


def shape(t: str, w: SignedPermutation) -> tuple[int, ...]:
    """The strict partition attached to a Grassmannian signed permutation."""
    if not w.in_group(t):
        raise ValueError(f"{w} is not in the group of type {t}")
    if not w.is_grassmannian():
        raise ValueError(f"{w} has a descent; no Grassmannian shape")
    n = 0
    for i, v in enumerate(w.window, start=1):
        if v <= 0:
            n = i
    parts = [-w(i) for i in range(1, n + 1)]
    if t == "D":
        parts = [p - 1 for p in parts]
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def ld_less(u: SignedPermutation, v: SignedPermutation) -> bool:
    """The strict partial order driving transition termination."""
    lu, lv = u.least_descent(), v.least_descent()
    if lu < lv:
        return True
    return 0 < lu == lv and u(lu) < v(lv)
