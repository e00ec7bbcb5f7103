def compositions(n, parts):
    """Generator over all ordered tuples of `parts` non-negative integers summing to n.

    The first coordinate runs from n down to 0, so (n, 0, ..., 0) comes first."""
    if parts == 0:
        if n == 0:
            yield ()
        return

    if parts == 1:
        yield (n,)
        return

    for first in range(n, -1, -1):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest
