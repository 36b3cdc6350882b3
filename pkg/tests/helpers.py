"""Shared test utilities: seeded random builders and a reference census.

The reference census here is deliberately independent of the package's
union-find implementation: it walks components from their endpoints,
alternating layers.  Keeping a second route lets the meander tests
cross-check classification instead of trusting one code path.
"""

from __future__ import annotations

import os
import random

from seaweeds import BiComposition, Composition
from seaweeds.parabolic_words import ParabolicWord, _apply_raw_p, letter_p
from seaweeds.seaweed_words import SeaweedWord, _apply_raw, letter

DEFAULT_SEED = 20120521


def fixed_seed() -> int:
    return int(os.environ.get("SEAWEEDS_TEST_SEED", DEFAULT_SEED))


def make_rng() -> random.Random:
    return random.Random(fixed_seed())


def random_composition(rng: random.Random, n: int) -> tuple[int, ...]:
    cuts = sorted(rng.sample(range(1, n), rng.randint(0, n - 1))) if n > 1 else []
    bounds = [0] + cuts + [n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def random_bicomposition(rng: random.Random, n_lo: int = 1, n_hi: int = 8) -> BiComposition:
    n = rng.randint(n_lo, n_hi)
    return BiComposition(
        Composition(random_composition(rng, n)),
        Composition(random_composition(rng, n)),
    )


def random_seaweed_instance(
    rng: random.Random, sum_cap: int = 40, max_len: int = 6, base: BiComposition = None
) -> tuple[BiComposition, SeaweedWord]:
    """A pair (a, w) with w(a) a genuine pair of sum <= sum_cap."""
    a = base if base is not None else random_bicomposition(rng)
    plus, minus = a.plus.parts, a.minus.parts
    applied = []
    for _ in range(rng.randint(0, max_len)):
        budget = sum_cap - sum(plus)
        options = []
        for fam in ("S", "T"):
            for sign in (1, -1):
                side = plus if sign == 1 else minus
                if fam == "T" and len(side) < 2:
                    continue
                for m in range(4):
                    inc = (m + 1) * side[0] if fam == "S" else m * side[0] + (m + 1) * side[1]
                    if inc <= budget:
                        options.append((fam, sign, m))
        if not options:
            break
        fam, sign, m = rng.choice(options)
        plus, minus = _apply_raw(fam, sign, m, plus, minus)
        applied.append(letter(fam, sign, m))
    return a, SeaweedWord(tuple(reversed(applied)))


def random_parabolic_instance(
    rng: random.Random, sum_cap: int = 40, max_len: int = 6, base: Composition = None
) -> tuple[Composition, ParabolicWord]:
    """A pair (a, w) over the parabolic alphabet with s(w(a)) <= sum_cap."""
    if base is None:
        n = rng.randint(1, 8)
        base = Composition(random_composition(rng, n))
    a = base.parts
    applied = []
    for _ in range(rng.randint(0, max_len)):
        budget = sum_cap - sum(a)
        options = []
        for fam in ("S", "T"):
            if fam == "T" and len(a) < 2:
                # T letters idle on one-part compositions; keep generation free
                continue
            for tilde in (False, True):
                for m in range(4):
                    inc = 2 * (m + 1) * a[0] if fam == "S" else 2 * m * a[0] + 2 * (m + 1) * a[1]
                    if inc <= budget:
                        options.append((fam, tilde, m))
        if not options:
            break
        fam, tilde, m = rng.choice(options)
        a = _apply_raw_p(fam, tilde, m, a)
        applied.append(letter_p(fam, tilde, m))
    return base, ParabolicWord(tuple(reversed(applied)))


def reference_census(plus: tuple[int, ...], minus: tuple[int, ...]) -> tuple[int, int]:
    """(cycles, paths) by endpoint walking; independent of union-find."""
    n = sum(plus)

    def partners(parts):
        nbr = [-1] * n
        lo = 0
        for part in parts:
            hi = lo + part - 1
            for i in range(part // 2):
                nbr[lo + i] = hi - i
                nbr[hi - i] = lo + i
            lo = hi + 1
        return nbr

    top, bot = partners(plus), partners(minus)
    seen = [False] * n
    cycles = paths = 0
    for v in range(n):
        if seen[v] or (top[v] >= 0 and bot[v] >= 0):
            continue
        paths += 1
        seen[v] = True
        cur, use_top = v, top[v] >= 0
        while True:
            nxt = top[cur] if use_top else bot[cur]
            if nxt < 0 or seen[nxt]:
                break
            seen[nxt] = True
            cur, use_top = nxt, not use_top
    for v in range(n):
        if seen[v]:
            continue
        cycles += 1
        seen[v] = True
        cur, use_top = top[v], False
        while cur != v:
            seen[cur] = True
            cur = top[cur] if use_top else bot[cur]
            use_top = not use_top
    return cycles, paths
