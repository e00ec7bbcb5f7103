from fractions import Fraction

from wreathpow.exc import ConsistencyError


class ClassStructure:
    """The conjugacy classes of a GroupModel in canonical order.

    Members inside a class are sorted by element index, classes are sorted by their least member,
    so class 0 is always the class of the identity (which has index 0 in every GroupModel we build).
    :ivar group: The group the classes belong to
    :type group: GroupModel
    :ivar members: members[i] is the sorted tuple of element indices in class i
    :type members: tuple[tuple[int]]"""

    def __init__(self, group, members):
        self.group = group
        self.members = tuple(tuple(sorted(cell)) for cell in sorted(members, key=min))

        class_of = [None] * group.order
        for i, cell in enumerate(self.members):
            for x in cell:
                class_of[x] = i
        if any(c is None for c in class_of):
            raise ConsistencyError(f"classes of {group.name} do not cover every element")
        self._class_of = tuple(class_of)

        self._power_maps = {}

    @property
    def num_classes(self):
        return len(self.members)

    @property
    def sizes(self):
        return tuple(len(cell) for cell in self.members)

    @property
    def representatives(self):
        return tuple(cell[0] for cell in self.members)

    def class_of(self, x):
        return self._class_of[x]

    def alphas(self):
        """The class fractions |C_i| / |G|"""
        return tuple(Fraction(size, self.group.order) for size in self.sizes)

    def power_map(self, exponent):
        """Tuple mapping class index i to the class index of x^exponent for x in class i.

        Every member of every class is powered, so a table that is not actually a group
        (or a bug in the class computation) is caught here instead of producing wrong counts."""
        if exponent in self._power_maps:
            return self._power_maps[exponent]

        result = []
        for i, cell in enumerate(self.members):
            images = {self._class_of[self.group.power(x, exponent)] for x in cell}
            if len(images) != 1:
                raise ConsistencyError(
                    f"power map x -> x^{exponent} is not constant on class {i} of {self.group.name}: {sorted(images)}"
                )
            result.append(images.pop())

        result = tuple(result)
        self._power_maps[exponent] = result
        return result

    def roots(self, i, exponent):
        """All classes k (ascending) with (C_k)^exponent = C_i"""
        power_map = self.power_map(exponent)
        return tuple(k for k, image in enumerate(power_map) if image == i)

    def __eq__(self, other):
        if not isinstance(other, ClassStructure):
            return False

        return self.group is other.group and self.members == other.members

    def __hash__(self):
        return hash((id(self.group), self.members))

    def __repr__(self):
        return f"ClassStructure({self.group.name}, sizes={self.sizes})"


class ClassLabeling:
    """Class order with the classes that are not r-th powers in G first.

    :ivar r: The prime exponent the labeling was made for
    :type r: int
    :ivar order: Permutation of canonical class indices, non-power classes first (each part ascending)
    :type order: tuple[int]
    :ivar d: Number of classes that are not r-th powers
    :type d: int"""

    def __init__(self, r, order, d):
        self.r = r
        self.order = tuple(order)
        self.d = d
        self.nonpower = frozenset(self.order[:d])

    def is_power_class(self, i):
        return i not in self.nonpower

    @property
    def nonpower_classes(self):
        return self.order[: self.d]

    @property
    def power_classes(self):
        return self.order[self.d :]

    def __eq__(self, other):
        if not isinstance(other, ClassLabeling):
            return False

        return self.r == other.r and self.order == other.order and self.d == other.d

    def __hash__(self):
        return hash((self.r, self.order, self.d))

    def __repr__(self):
        return f"ClassLabeling(r={self.r}, d={self.d}, order={self.order})"
