import logging

from wreathpow.exc import InvalidGroup

log = logging.getLogger(__name__)


class GroupModel:
    """A finite group given by its full multiplication table.

    Elements are referred to by index (0 .. order - 1); `labels` holds their printable names.
    :ivar name: Human readable name, e.g. "C3" or the group file path
    :type name: str
    :ivar labels: Element names, index i is the name of element i
    :type labels: tuple[str]
    :ivar table: table[a][b] is the index of the product a*b
    :type table: tuple[tuple[int]]
    :ivar identity: Index of the identity element
    :type identity: int
    :ivar inverses: inverses[x] is the index of x^-1
    :type inverses: tuple[int]"""

    def __init__(self, name, labels, table, identity=0, check_associativity=True):
        self.name = name
        self.labels = tuple(labels)
        self.table = tuple(tuple(row) for row in table)
        self.identity = identity
        self.inverses = ()

        self.validate(check_associativity=check_associativity)

    @property
    def order(self):
        return len(self.labels)

    def multiply(self, a, b):
        return self.table[a][b]

    def inverse(self, x):
        return self.inverses[x]

    def power(self, x, exponent):
        result = self.identity
        base = x
        while exponent > 0:
            if exponent & 1:
                result = self.table[result][base]
            base = self.table[base][base]
            exponent >>= 1
        return result

    def conjugate(self, x, by):
        """by * x * by^-1"""
        return self.table[self.table[by][x]][self.inverses[by]]

    def element_order(self, x):
        k = 1
        y = x
        while y != self.identity:
            y = self.table[y][x]
            k += 1
        return k

    def validate(self, check_associativity=True):
        m = len(self.labels)
        if m < 1:
            raise InvalidGroup("a group needs at least one element")

        if len(set(self.labels)) != m:
            raise InvalidGroup("element labels must be distinct")

        if len(self.table) != m:
            raise InvalidGroup(f"table has {len(self.table)} rows, expected {m}")

        full_row = set(range(m))
        for a, row in enumerate(self.table):
            if len(row) != m:
                raise InvalidGroup(f"row {self.labels[a]} has {len(row)} entries, expected {m}")
            if set(row) != full_row:
                raise InvalidGroup(f"row {self.labels[a]} is not a permutation of the elements")

        for b in range(m):
            column = {self.table[a][b] for a in range(m)}
            if column != full_row:
                raise InvalidGroup(f"column {self.labels[b]} is not a permutation of the elements")

        e = self.identity
        for x in range(m):
            if self.table[e][x] != x or self.table[x][e] != x:
                raise InvalidGroup(f"{self.labels[e]} is not a two-sided identity (fails at {self.labels[x]})")

        inverses = []
        for x in range(m):
            # Latin rows guarantee exactly one y with x*y = e
            y = self.table[x].index(e)
            if self.table[y][x] != e:
                raise InvalidGroup(f"{self.labels[x]} has no two-sided inverse")
            inverses.append(y)
        self.inverses = tuple(inverses)

        if check_associativity:
            table = self.table
            for a in range(m):
                row_a = table[a]
                for b in range(m):
                    ab = row_a[b]
                    row_ab = table[ab]
                    row_b = table[b]
                    for c in range(m):
                        if row_ab[c] != row_a[row_b[c]]:
                            raise InvalidGroup(
                                f"multiplication is not associative: "
                                f"({self.labels[a]}*{self.labels[b]})*{self.labels[c]} != "
                                f"{self.labels[a]}*({self.labels[b]}*{self.labels[c]})"
                            )
        else:
            log.debug("Skipping the associativity check for %s (order %s)", self.name, m)

    def to_cayley_text(self):
        lines = [f"# {self.name}", str(self.order), " ".join(self.labels)]
        for row in self.table:
            lines.append(" ".join(self.labels[k] for k in row))
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"{self.name} (order {self.order})"
