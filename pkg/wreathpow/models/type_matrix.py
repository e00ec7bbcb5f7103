from wreathpow.exc import PreconditionError
from wreathpow.models.partition import Partition


class TypeMatrix:
    """The type of an element of G wr S_n: entry (i, j) counts the j-cycles whose cycle product lies in class i.

    Class indices i are 0-based (the canonical ClassStructure order), cycle lengths j run from 1 to n.
    Only nonzero entries are stored; absent entries read as 0.
    :ivar s: Number of conjugacy classes of G
    :type s: int
    :ivar n: Degree of the symmetric group
    :type n: int"""

    def __init__(self, s, n, entries):
        self.s = s
        self.n = n

        cleaned = {}
        total = 0
        for (i, j), a in entries.items():
            if not (0 <= i < s and 1 <= j <= n) or a < 0:
                raise PreconditionError(f"entry ({i}, {j}) = {a} does not fit a {s}x{n} type matrix")
            if a > 0:
                cleaned[(i, j)] = a
                total += j * a

        if total != n:
            raise PreconditionError(f"type matrix entries sum to {total} (weighted by cycle length), expected {n}")

        self._entries = tuple(sorted(cleaned.items()))
        self._lookup = dict(self._entries)

    @staticmethod
    def from_dense(rows):
        s = len(rows)
        n = len(rows[0]) if rows else 0
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != n:
                raise PreconditionError(f"row {i} has {len(row)} entries, expected {n}")
            for j, a in enumerate(row, start=1):
                if a:
                    entries[(i, j)] = a
        return TypeMatrix(s, n, entries)

    @staticmethod
    def from_row_partitions(s, n, row_partitions):
        entries = {}
        for i, lam in enumerate(row_partitions):
            for part, mult in lam.items():
                entries[(i, part)] = mult
        return TypeMatrix(s, n, entries)

    @staticmethod
    def parse(text):
        """Parse the dense text form, rows separated by ';' and entries by ',', e.g. "1,0,0;1,0,0;1,0,0" """
        try:
            rows = [[int(entry) for entry in row.split(",")] for row in text.strip().split(";")]
        except ValueError:
            raise PreconditionError(f"invalid type matrix {text!r} (expected e.g. 1,0;1,0)")
        return TypeMatrix.from_dense(rows)

    def get(self, i, j):
        return self._lookup.get((i, j), 0)

    def items(self):
        """((i, j), a) pairs for the nonzero entries, sorted by (i, j)"""
        return self._entries

    def dense(self):
        rows = [[0] * self.n for _ in range(self.s)]
        for (i, j), a in self._entries:
            rows[i][j - 1] = a
        return rows

    def dense_key(self):
        return tuple(a for row in self.dense() for a in row)

    def row_partition(self, i):
        return Partition({j: a for (row, j), a in self._entries if row == i})

    def to_text(self):
        return ";".join(",".join(str(a) for a in row) for row in self.dense())

    def monomial(self):
        """t_{ij} monomial with 1-based indices, e.g. "t11^2 t21" """
        separator = "," if self.s >= 10 or self.n >= 10 else ""
        factors = []
        for (i, j), a in self._entries:
            factor = f"t{i + 1}{separator}{j}"
            if a > 1:
                factor += f"^{a}"
            factors.append(factor)
        return " ".join(factors)

    def __eq__(self, other):
        if not isinstance(other, TypeMatrix):
            return False

        return self.s == other.s and self.n == other.n and self._entries == other._entries

    def __hash__(self):
        return hash((self.s, self.n, self._entries))

    def __repr__(self):
        return f"TypeMatrix({self.to_text()})"


class WreathClassInfo:
    """Size data of one conjugacy class of G wr S_n.
    :ivar type: The class type
    :type type: TypeMatrix
    :ivar centralizer_size: Order of the centralizer of any element of the class
    :type centralizer_size: int
    :ivar class_size: Number of elements in the class
    :type class_size: int
    :ivar class_probability: class_size / (|G|^n n!), reduced
    :type class_probability: fractions.Fraction"""

    def __init__(self, type, centralizer_size, class_size, class_probability):
        self.type = type
        self.centralizer_size = centralizer_size
        self.class_size = class_size
        self.class_probability = class_probability

    def __repr__(self):
        return f"{self.type.to_text()}: size {self.class_size}, centralizer {self.centralizer_size}"
