"""Exact simulation of the Zamolodchikov Y-system for a pair (A_p, A_q).

Variables Y_{i,i'} sit on the p x q grid; one time step applies

    Y_{i,i',t+1} = [prod_j (1+Y_{j,i',t})^{a_ij} /
                    prod_j' (1+Y_{i,j',t}^{-1})^{a'_{i'j'}}] / Y_{i,i',t-1}

with a the incidence matrix of A_p (a_ij = 1 iff |i-j| = 1) and a' that of
A_q; the second product carries inverted variables (the form for which
periodicity actually holds, confirmed empirically: with (1+Y) in both
products the (p,q)=(1,2) system is already non-periodic).  The state is the level pair (time t-1, time t); the recurrence is
invertible, so trajectories are purely periodic.  The Coxeter numbers are
h = p+1 and h' = q+1, so the reference period bound is 2(h+h') = 2(p+q+2).
"""

import random
from fractions import Fraction

from .rational import format_rational, rational


class YState:
    """Level pair of positive rational values on the p x q grid."""

    def __init__(self, p, q, prev, curr):
        self.p = p
        self.q = q
        self.prev = {k: rational(v) for k, v in prev.items()}
        self.curr = {k: rational(v) for k, v in curr.items()}
        keys = {(i, j) for i in range(1, p + 1) for j in range(1, q + 1)}
        for level in (self.prev, self.curr):
            if set(level) != keys:
                raise ValueError("level does not cover the %d x %d grid" % (p, q))
            if any(v <= 0 for v in level.values()):
                raise ValueError("Y-system values must be positive")

    def __eq__(self, other):
        return (isinstance(other, YState) and (self.p, self.q) == (other.p, other.q)
                and self.prev == other.prev and self.curr == other.curr)

    def to_json(self):
        return {"p": self.p, "q": self.q,
                "prev": {"%d,%d" % k: format_rational(v)
                         for k, v in sorted(self.prev.items())},
                "curr": {"%d,%d" % k: format_rational(v)
                         for k, v in sorted(self.curr.items())}}


def y_step(s):
    """Advance the Y-system by one time step."""
    nxt = {}
    for (i, j), prev in s.prev.items():
        num = Fraction(1)
        for i2 in (i - 1, i + 1):
            if 1 <= i2 <= s.p:
                num *= 1 + s.curr[(i2, j)]
        den = Fraction(1)
        for j2 in (j - 1, j + 1):
            if 1 <= j2 <= s.q:
                den *= 1 + 1 / s.curr[(i, j2)]
        nxt[(i, j)] = num / den / prev
    return YState(s.p, s.q, s.curr, nxt)


def _random_positive(rng):
    return Fraction(rng.randint(1, 9), rng.randint(1, 9))


def initial_state(p, q, mode, rng):
    """Random initial level pair.

    full: every variable at t=0 and t=1 seeded freely.
    parity: the autonomous half with i+i'+t even is seeded freely (one value
    per grid point across the level pair); the complementary half is set to
    the all-ones trajectory data, a consistent seeding of its own half-step
    recurrence.
    """
    keys = [(i, j) for i in range(1, p + 1) for j in range(1, q + 1)]
    if mode == "full":
        prev = {k: _random_positive(rng) for k in keys}
        curr = {k: _random_positive(rng) for k in keys}
    elif mode == "parity":
        prev = {}
        curr = {}
        for (i, j) in keys:
            if (i + j) % 2 == 0:        # active at t = 0
                prev[(i, j)] = _random_positive(rng)
                curr[(i, j)] = Fraction(1)
            else:                        # active at t = 1
                prev[(i, j)] = Fraction(1)
                curr[(i, j)] = _random_positive(rng)
    else:
        raise ValueError("unknown init mode %r" % (mode,))
    return YState(p, q, prev, curr)


def find_period(state, max_steps):
    """Minimal T >= 1 with state_T == state_0, or None within max_steps."""
    current = state
    for t in range(1, max_steps + 1):
        current = y_step(current)
        if current == state:
            return t
    return None


def y_period(p, q, init="parity", trials=20, max_steps=None, seed=0):
    """Period report over random trials; bound 2(h+h') = 2(p+q+2)."""
    bound = 2 * (p + q + 2)
    if max_steps is None:
        max_steps = 2 * bound
    if max_steps < bound:
        raise ValueError("max_steps must be at least 2(p+q+2)")
    rng = random.Random(seed)
    periods = []
    for _ in range(trials):
        state = initial_state(p, q, init, rng)
        periods.append(find_period(state, max_steps))
    ok = all(t is not None and bound % t == 0 for t in periods)
    return {"p": p, "q": q, "init": init, "bound": bound,
            "periods": periods, "all_divide_bound": ok}
