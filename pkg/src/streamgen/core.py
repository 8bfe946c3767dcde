"""The generator core: single-consumer stream sources with sticky
termination, basic constructors, slicing and display helpers.

A :class:`Source` owns a ``step`` procedure that produces one value per
call, or returns ``None`` to signal exhaustion.  Once a source reports
exhaustion (or is stopped) it stays done forever and its step procedure
is never invoked again; any attached cleanup runs exactly once at that
transition.  ``None`` is not a stream value, so a user callable handed
to :func:`iterate`, :func:`unfold` etc. may return ``None`` to end the
stream, mirroring a failing producer.
"""

import random

from .values import render

__all__ = [
    "Source",
    "constant",
    "cycle_values",
    "drop",
    "from_list",
    "int_range",
    "iterate",
    "naturals",
    "negatives",
    "positives",
    "random_stream",
    "show",
    "slice_",
    "take",
    "unfold",
]


class Source:
    """A stateful, single-consumer stream of values.

    ``ask()`` returns the next value or ``None`` once the stream is
    exhausted; exhaustion is sticky.  ``stop()`` forces exhaustion early
    and releases the step procedure's resources.  Iterating a source
    consumes it.
    """

    __slots__ = ("_step", "_cleanup", "_done")

    def __init__(self, step, cleanup=None):
        self._step = step
        self._cleanup = cleanup
        self._done = False

    def ask(self):
        """Produce the next value, or ``None`` if the stream is done."""
        if self._done:
            return None
        try:
            x = self._step()
        except BaseException:
            self.stop()
            raise
        if x is None:
            self.stop()
            return None
        return x

    def stop(self):
        """Mark the source done and release its resources. Idempotent."""
        if self._done:
            return
        self._done = True
        cleanup = self._cleanup
        self._step = None
        self._cleanup = None
        if cleanup is not None:
            cleanup()

    def is_done(self):
        """True once the source has reported exhaustion or was stopped."""
        return self._done

    def __iter__(self):
        while True:
            x = self.ask()
            if x is None:
                return
            yield x


def show(n, source):
    """Render up to ``n`` elements of ``source`` as ``[e1, e2, ...]``,
    consuming them."""
    items = []
    for _ in range(n):
        x = source.ask()
        if x is None:
            break
        items.append(render(x))
    return "[" + ", ".join(items) + "]"


def constant(v):
    """The infinite stream v, v, v, ..."""
    return Source(lambda: v)


def random_stream(seed):
    """An infinite stream of floats uniform in [0, 1), deterministic in
    ``seed``.  Backed by Python's Mersenne Twister (``random.Random``)."""
    rng = random.Random(seed)
    return Source(rng.random)


def iterate(f, init):
    """The orbit init, f(init), f(f(init)), ... in O(1) state.

    The next state is computed before the current element is yielded, so
    if ``f`` returns ``None`` the stream ends without producing the
    element it was called on.
    """
    state = [init]

    def step():
        x = state[0]
        y = f(x)
        if y is None:
            return None
        state[0] = y
        return x

    return Source(step)


def unfold(advance, init):
    """A stream driven by ``advance(state) -> (new_state, value)`` or
    ``None`` when exhausted; the state need not coincide with the
    elements."""
    state = [init]

    def step():
        out = advance(state[0])
        if out is None:
            return None
        state[0], value = out
        return value

    return Source(step)


def from_list(values):
    """A finite stream of the given values, in order, duplicates kept."""
    it = iter(list(values))

    def step():
        return next(it, None)

    return Source(step)


def int_range(lo, hi):
    """Integers lo, lo+1, ..., hi-1 (half-open); empty when hi <= lo."""
    state = [lo]

    def step():
        x = state[0]
        if x >= hi:
            return None
        state[0] = x + 1
        return x

    return Source(step)


def cycle_values(values):
    """The values repeated forever; the empty cycle is the empty stream."""
    vs = list(values)
    if not vs:
        return from_list([])
    state = [0]

    def step():
        i = state[0]
        state[0] = (i + 1) % len(vs)
        return vs[i]

    return Source(step)


def take(n, source):
    """At most the first ``n`` elements of ``source``."""
    state = [n]

    def step():
        if state[0] <= 0:
            return None
        x = source.ask()
        if x is None:
            return None
        state[0] -= 1
        return x

    return Source(step, cleanup=source.stop)


def drop(n, source):
    """``source`` without its first ``n`` elements (fewer if it runs out)."""
    state = [n]

    def step():
        while state[0] > 0:
            state[0] -= 1
            if source.ask() is None:
                return None
        return source.ask()

    return Source(step, cleanup=source.stop)


def slice_(start, end, source):
    """Elements at positions [start, end) of ``source``; requires
    0 <= start <= end."""
    if not 0 <= start <= end:
        raise ValueError("slice bounds must satisfy 0 <= start <= end")
    return take(end - start, drop(start, source))


def naturals():
    """0, 1, 2, ..."""
    return iterate(lambda x: x + 1, 0)


def positives():
    """1, 2, 3, ..."""
    return iterate(lambda x: x + 1, 1)


def negatives():
    """-1, -2, -3, ..."""
    return iterate(lambda x: x - 1, -1)
