"""Shared test helpers: instrumented sources and small oracles."""

from streamgen import Source


class CountedSteps:
    """Wraps a finite or infinite element sequence as a Source while
    counting every step invocation, to check sticky termination."""

    def __init__(self, items=None, infinite_from=None):
        self.calls = 0
        if items is not None:
            self._items = list(items)
        else:
            self._items = None
            self._next = infinite_from

    def step(self):
        self.calls += 1
        if self._items is not None:
            if not self._items:
                return None
            return self._items.pop(0)
        x = self._next
        self._next += 1
        return x

    def source(self):
        return Source(self.step)


def prefix(n, source):
    out = []
    for _ in range(n):
        x = source.ask()
        if x is None:
            break
        out.append(x)
    return out
