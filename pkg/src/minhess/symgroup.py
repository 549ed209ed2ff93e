"""
The symmetric group S_n as the Weyl group of type A_{n-1}.

Permutations are plain tuples in one-line notation with values ``1..n``, so
``(2, 3, 1)`` is the permutation sending 1 to 2, 2 to 3 and 3 to 1.

>>> length((2, 3, 1))
2
>>> bruhat_leq((2, 1, 3), (2, 3, 1))
True
>>> right_multiply_reflection((1, 3, 2), (1, 3))
(2, 3, 1)
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .rootsys import Root

__all__ = [
    "Permutation",
    "MAX_ENUM_N",
    "EnumerationGuardError",
    "validate_perm",
    "parse_perm",
    "format_perm",
    "identity",
    "longest",
    "inverse",
    "compose",
    "length",
    "lehmer_code",
    "bruhat_leq",
    "bruhat_leq_subword",
    "act_on_root",
    "right_multiply_reflection",
    "inversion_roots",
    "reduced_word",
    "enumerate_perms",
    "lengths",
]

Permutation = tuple[int, ...]

MAX_ENUM_N = 9


class EnumerationGuardError(ValueError):
    """Raised when a brute-force routine is asked for n beyond the guard."""


def check_guard(n: int) -> None:
    if not 1 <= n <= MAX_ENUM_N:
        raise EnumerationGuardError(f"n={n} outside enumeration range 1..{MAX_ENUM_N}")


def validate_perm(word: Sequence[int]) -> Permutation:
    w = tuple(int(a) for a in word)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{len(w)}")
    return w


def parse_perm(text: str) -> Permutation:
    """Parse ``"2 3 1"`` (commas are tolerated)."""
    return validate_perm(text.replace(",", " ").split())


def format_perm(w: Permutation) -> str:
    return " ".join(map(str, w))


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def longest(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for pos, val in enumerate(w, start=1):
        out[val - 1] = pos
    return tuple(out)


def compose(u: Permutation, v: Permutation) -> Permutation:
    """``(u v)(k) = u(v(k))``."""
    return tuple(u[b - 1] for b in v)


def length(w: Permutation) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def lehmer_code(w: Permutation) -> tuple[int, ...]:
    """``c_i = #{j > i : w(j) < w(i)}``."""
    n = len(w)
    return tuple(sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n))


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """
    Bruhat comparison by the rank-matrix criterion.

    ``u <= v`` iff ``#{k <= p : u(k) >= q} <= #{k <= p : v(k) >= q}`` for all
    ``p, q``.  We track the difference of the two counts per threshold ``q`` and
    only re-check thresholds whose difference just went down.
    """
    n = len(u)
    if len(v) != n:
        raise ValueError(f"size mismatch: {n} vs {len(v)}")
    d = [0] * (n + 1)
    for a, b in zip(u, v):
        if a > b:
            for q in range(b + 1, a + 1):
                d[q] -= 1
                if d[q] < 0:
                    return False
        elif a < b:
            for q in range(a + 1, b + 1):
                d[q] += 1
    return True


def act_on_root(w: Permutation, r: tuple[int, int]) -> Root:
    """``w . (t_i - t_j) = t_{w(i)} - t_{w(j)}``."""
    i, j = r
    return Root(w[i - 1], w[j - 1])


def right_multiply_reflection(w: Permutation, r: tuple[int, int]) -> Permutation:
    """``w s_r`` for a positive root ``r = (i, j)``: swap positions i and j."""
    i, j = r
    if not i < j:
        raise ValueError(f"({i},{j}) is not a positive root")
    if j > len(w):
        raise ValueError(f"root ({i},{j}) out of range for S_{len(w)}")
    out = list(w)
    out[i - 1], out[j - 1] = out[j - 1], out[i - 1]
    return tuple(out)


def inversion_roots(w: Permutation) -> frozenset[Root]:
    """Positive roots sent negative by ``w^-1``: ``{(a, b) : a < b, w^-1(a) > w^-1(b)}``."""
    winv = inverse(w)
    n = len(w)
    return frozenset(
        Root(a, b)
        for a in range(1, n + 1)
        for b in range(a + 1, n + 1)
        if winv[a - 1] > winv[b - 1]
    )


def reduced_word(w: Permutation) -> list[int]:
    """
    Lexicographically smallest reduced word ``[i1, ..., ik]`` with
    ``w = s_i1 ... s_ik``.

    Greedy: peel off the smallest left descent each time.
    """
    word = []
    cur = list(w)
    while True:
        inv = inverse(tuple(cur))
        for i in range(1, len(cur)):
            if inv[i - 1] > inv[i]:
                # s_i w swaps the values i and i+1
                a, b = inv[i - 1] - 1, inv[i] - 1
                cur[a], cur[b] = cur[b], cur[a]
                word.append(i)
                break
        else:
            return word


def _word_to_perm(word: Sequence[int], n: int) -> Permutation:
    w = list(range(1, n + 1))
    for i in word:
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def bruhat_leq_subword(u: Permutation, v: Permutation) -> bool:
    """
    Bruhat comparison from the subword definition; exponential, oracle only.

    ``u <= v`` iff some subword of a reduced word of ``v`` is a reduced word
    for ``u``.  By the subword property, one fixed reduced word of ``v`` suffices.
    """
    n = len(u)
    if len(v) != n:
        raise ValueError("size mismatch")
    vword = reduced_word(v)
    lu = length(u)
    for idx in combinations(range(len(vword)), lu):
        sub = [vword[k] for k in idx]
        if _word_to_perm(sub, n) == u:
            return True
    return False


def enumerate_perms(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line words."""
    check_guard(n)
    return permutations(range(1, n + 1))


@lru_cache(maxsize=None)
def lengths(n: int) -> dict[Permutation, int]:
    """Length of every element of S_n (cached)."""
    check_guard(n)
    return {w: length(w) for w in permutations(range(1, n + 1))}
