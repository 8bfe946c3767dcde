"""The stream algebra: interleaving sum, three fair Cartesian products
(alternating, anti-diagonal, Cantor-indexed), map, constant-space
reduce, scan and online deduplication.

Every pair-producing combinator keeps the first input's element on the
left of each output pair, and every one is fair: on infinite inputs any
fixed pair appears after finitely many outputs.
"""

import math

from .core import Source
from .engines import answer_source
from .values import Pair, value_key

__all__ = [
    "cantor_pair",
    "cantor_unpair",
    "convolution",
    "map1",
    "map2",
    "product",
    "product_cantor",
    "reduce_stream",
    "scan",
    "setify",
    "sum_streams",
]


def sum_streams(g1, g2):
    """Interleave two streams, alternating while both produce; after one
    ends, the survivor supplies the rest.  The empty stream is the
    neutral element."""
    state = [g1, g2]

    def step():
        x = state[0].ask()
        if x is not None:
            state[0], state[1] = state[1], state[0]
            return x
        return state[1].ask()

    def cleanup():
        g1.stop()
        g2.stop()

    return Source(step, cleanup=cleanup)


def product(g1, g2):
    """All pairs of two streams, enumerated by alternating turns.

    Each time a side produces a fresh element it is paired with every
    element the other side has produced so far (newest first); when one
    side ends, each remaining element of the other side is paired with
    the ended side's full history.  The g1 element is always on the left
    of the pair.
    """

    def produce():
        try:
            a = g1.ask()
            if a is None:
                return
            first_active = True  # does the active side feed the left pair slot?
            active, passive = g1, g2
            active_seen, passive_seen = [], []
            while True:
                for y in passive_seen:
                    yield Pair(a, y) if first_active else Pair(y, a)
                b = passive.ask()
                if b is None:
                    break
                active_seen.insert(0, a)
                active, passive = passive, active
                active_seen, passive_seen = passive_seen, active_seen
                a = b
                first_active = not first_active
            while True:
                x = active.ask()
                if x is None:
                    return
                for y in passive_seen:
                    yield Pair(x, y) if first_active else Pair(y, x)
        finally:
            g1.stop()
            g2.stop()

    return answer_source(produce)


class _Buffer:
    """Growable prefix of a stream; remembers the length once exhausted."""

    __slots__ = ("items", "source", "length")

    def __init__(self, source):
        self.items = []
        self.source = source
        self.length = None

    def get(self, i):
        """Element at index i, or None past the end of a finite stream."""
        while self.length is None and len(self.items) <= i:
            x = self.source.ask()
            if x is None:
                self.length = len(self.items)
                break
            self.items.append(x)
        if self.length is not None and i >= self.length:
            return None
        return self.items[i]


def convolution(g1, g2):
    """All pairs of two streams, enumerated anti-diagonal by
    anti-diagonal: diagonal d emits (g1[i], g2[d-i]) for ascending i."""
    b1, b2 = _Buffer(g1), _Buffer(g2)

    def produce():
        try:
            d = 0
            while True:
                if b1.length == 0 or b2.length == 0:
                    return
                if (
                    b1.length is not None
                    and b2.length is not None
                    and d > b1.length + b2.length - 2
                ):
                    return
                for i in range(d + 1):
                    x = b1.get(i)
                    if x is None:
                        break
                    y = b2.get(d - i)
                    if y is None:
                        continue
                    yield Pair(x, y)
                d += 1
        finally:
            g1.stop()
            g2.stop()

    return answer_source(produce)


def cantor_pair(x, y):
    """The pairing bijection N x N -> N: (x+y)(x+y+1)/2 + y."""
    return (x + y) * (x + y + 1) // 2 + y


def cantor_unpair(n):
    """Exact inverse of :func:`cantor_pair`, using integer square root
    only (no float rounding for any n)."""
    t = (math.isqrt(8 * n + 1) - 1) // 2
    y = n - t * (t + 1) // 2
    return t - y, y


def product_cantor(g1, g2):
    """All pairs of two streams, driven by a single counter split with
    Cantor unpairing; indices past a finite input's end are skipped."""
    b1, b2 = _Buffer(g1), _Buffer(g2)

    def produce():
        try:
            n = 0
            emitted = 0
            while True:
                if b1.length == 0 or b2.length == 0:
                    return
                if (
                    b1.length is not None
                    and b2.length is not None
                    and emitted >= b1.length * b2.length
                ):
                    return
                x_i, y_i = cantor_unpair(n)
                n += 1
                x = b1.get(x_i)
                if x is None:
                    continue
                y = b2.get(y_i)
                if y is None:
                    continue
                yield Pair(x, y)
                emitted += 1
        finally:
            g1.stop()
            g2.stop()

    return answer_source(produce)


def map1(f, source):
    """Apply ``f`` to each element, lazily; ``f`` returning ``None``
    ends the stream."""

    def step():
        x = source.ask()
        if x is None:
            return None
        return f(x)

    return Source(step, cleanup=source.stop)


def map2(f, g1, g2):
    """Apply ``f`` pairwise to two streams; ends at the shorter input."""

    def step():
        x = g1.ask()
        if x is None:
            return None
        y = g2.ask()
        if y is None:
            return None
        return f(x, y)

    def cleanup():
        g1.stop()
        g2.stop()

    return Source(step, cleanup=cleanup)


def reduce_stream(f, init, source):
    """A one-element stream holding the fold of ``f`` over a finite
    ``source`` starting from ``init``; the fold runs in constant
    auxiliary space on the first ask.  An empty source folds to ``init``
    itself."""
    done = [False]

    def step():
        if done[0]:
            return None
        done[0] = True
        acc = init
        while True:
            x = source.ask()
            if x is None:
                return acc
            acc = f(acc, x)

    return Source(step, cleanup=source.stop)


def scan(f, init, source):
    """Running fold: yields f(init, x1), then f(that, x2), ...; same
    length as the input, meaningful on infinite streams."""
    acc = [init]

    def step():
        x = source.ask()
        if x is None:
            return None
        acc[0] = f(acc[0], x)
        return acc[0]

    return Source(step, cleanup=source.stop)


def setify(source):
    """Drop duplicates online, keeping first occurrences in order; works
    on infinite streams within memory limits."""
    seen = set()

    def step():
        while True:
            x = source.ask()
            if x is None:
                return None
            k = value_key(x)
            if k not in seen:
                seen.add(k)
                return x

    return Source(step, cleanup=source.stop)
