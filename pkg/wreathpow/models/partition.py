from wreathpow.exc import PreconditionError


class Partition:
    """A partition of n in multiplicity form, 1^m1 2^m2 ... i^mi ...

    Only nonzero multiplicities are stored. A Partition doubles as the cycle type of a permutation.
    :ivar n: The partitioned integer
    :type n: int"""

    def __init__(self, mults):
        cleaned = {}
        for part, mult in mults.items():
            if part < 1 or mult < 0:
                raise PreconditionError(f"invalid part {part} with multiplicity {mult}")
            if mult > 0:
                cleaned[part] = mult

        self._mults = tuple(sorted(cleaned.items(), reverse=True))
        self.n = sum(part * mult for part, mult in self._mults)

    @staticmethod
    def from_parts(parts):
        mults = {}
        for part in parts:
            mults[part] = mults.get(part, 0) + 1
        return Partition(mults)

    @staticmethod
    def parse(text):
        """Parse the "2^1 1^1" form. An empty string is the empty partition of 0"""
        mults = {}
        for token in text.split():
            part, sep, mult = token.partition("^")
            try:
                part = int(part)
                mult = int(mult) if sep else 1
            except ValueError:
                raise PreconditionError(f"invalid partition token {token!r} (expected e.g. 2^1)")
            if part < 1 or mult < 1:
                raise PreconditionError(f"invalid partition token {token!r}, parts and multiplicities must be positive")
            if part in mults:
                raise PreconditionError(f"part {part} appears twice in {text!r}")
            mults[part] = mult
        return Partition(mults)

    @property
    def mults(self):
        return dict(self._mults)

    def items(self):
        """(part, multiplicity) pairs, largest part first"""
        return self._mults

    def parts(self):
        result = []
        for part, mult in self._mults:
            result.extend([part] * mult)
        return result

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return False

        return self._mults == other._mults

    def __hash__(self):
        return hash(self._mults)

    def __str__(self):
        return " ".join(f"{part}^{mult}" for part, mult in self._mults)

    def __repr__(self):
        return f"Partition({self} |- {self.n})"
