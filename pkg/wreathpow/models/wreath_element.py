from wreathpow.exc import PreconditionError


class WreathElement:
    """An element (f, pi) of G wr S_n on the points 0 .. n-1.

    :ivar f: f[i] is the G-element index sitting at point i
    :type f: tuple[int]
    :ivar pi: pi[i] is the image of point i
    :type pi: tuple[int]"""

    def __init__(self, f, pi):
        self.f = tuple(f)
        self.pi = tuple(pi)

        if len(self.f) != len(self.pi):
            raise PreconditionError(f"f has {len(self.f)} coordinates but pi acts on {len(self.pi)} points")
        if sorted(self.pi) != list(range(len(self.pi))):
            raise PreconditionError(f"{self.pi} is not a permutation of 0..{len(self.pi) - 1}")

    @staticmethod
    def identity(n, group):
        return WreathElement([group.identity] * n, range(n))

    @property
    def n(self):
        return len(self.pi)

    def pi_inverse(self):
        inverse = [0] * len(self.pi)
        for i, image in enumerate(self.pi):
            inverse[image] = i
        return tuple(inverse)

    def cycles(self):
        """The cycles of pi, each listed from its least point along pi^-1: j, pi^-1(j), pi^-2(j), ..."""
        inverse = self.pi_inverse()
        seen = [False] * self.n
        result = []
        for start in range(self.n):
            if seen[start]:
                continue
            cycle = []
            point = start
            while not seen[point]:
                seen[point] = True
                cycle.append(point)
                point = inverse[point]
            result.append(cycle)
        return result

    def __eq__(self, other):
        if not isinstance(other, WreathElement):
            return False

        return self.f == other.f and self.pi == other.pi

    def __hash__(self):
        return hash((self.f, self.pi))

    def __repr__(self):
        return f"WreathElement(f={self.f}, pi={self.pi})"
