import functools
import logging
from math import gcd

from sympy.combinatorics import Permutation
from sympy.combinatorics.named_groups import DihedralGroup
from sympy.combinatorics.named_groups import SymmetricGroup

from wreathpow import constants
from wreathpow.exc import CatalogRangeError
from wreathpow.exc import ConsistencyError
from wreathpow.exc import InvalidGroupFile
from wreathpow.exc import InvalidGroupSpec
from wreathpow.models.class_structure import ClassLabeling
from wreathpow.models.class_structure import ClassStructure
from wreathpow.models.group import GroupModel
from wreathpow.utils import require_prime
from wreathpow.utils import time_method

log = logging.getLogger(__name__)

CATALOG_KINDS = ("trivial", "cyclic", "dihedral", "symmetric")


def _content_lines(text):
    """(line number, stripped line) for every line that is neither blank nor a comment"""
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped


def build_from_cayley(text, name="group"):
    """Parse the group file format into a validated GroupModel.

    line 1: the order m, line 2: the m element names (identity first),
    then m rows of m names where row g, column k holds the name of g*k"""
    lines = list(_content_lines(text))
    if not lines:
        raise InvalidGroupFile(f"{name}: file is empty")

    lineno, first = lines[0]
    try:
        m = int(first)
    except ValueError:
        raise InvalidGroupFile(f"{name}:{lineno}: expected the group order, got {first!r}")
    if m < 1:
        raise InvalidGroupFile(f"{name}:{lineno}: group order must be positive, got {m}")

    if len(lines) != m + 2:
        raise InvalidGroupFile(f"{name}: expected {m + 2} non-comment lines (order, names, {m} rows), got {len(lines)}")

    lineno, names_line = lines[1]
    labels = names_line.split()
    if len(labels) != m:
        raise InvalidGroupFile(f"{name}:{lineno}: expected {m} element names, got {len(labels)}")
    index = {}
    for label in labels:
        if label in index:
            raise InvalidGroupFile(f"{name}:{lineno}: element name {label!r} is listed twice")
        index[label] = len(index)

    table = []
    for row_number, (lineno, row_line) in enumerate(lines[2:]):
        entries = row_line.split()
        if len(entries) != m:
            raise InvalidGroupFile(
                f"{name}:{lineno}: row {labels[row_number]} has {len(entries)} entries, expected {m}"
            )
        row = []
        for column, entry in enumerate(entries):
            if entry not in index:
                raise InvalidGroupFile(
                    f"{name}:{lineno}: unknown element {entry!r} at row {labels[row_number]}, column {labels[column]}"
                )
            row.append(index[entry])
        table.append(row)

    return GroupModel(name, labels, table, identity=0, check_associativity=True)


def load_group_file(path):
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except UnicodeDecodeError as e:
        raise InvalidGroupFile(f"{path}: not a UTF-8 text file ({e.reason} at byte {e.start})")
    return build_from_cayley(text, name=path)


def _permutation_label(array_form):
    cycles = Permutation(list(array_form)).cyclic_form
    if not cycles:
        return "e"
    return "".join("(" + ",".join(str(point + 1) for point in cycle) + ")" for cycle in cycles)


def _from_permutation_group(name, sympy_group, check_associativity):
    # sorting the array forms puts the identity first
    elements = sorted(tuple(p.array_form) for p in sympy_group.generate())
    index = {element: k for k, element in enumerate(elements)}

    # sympy multiplies left to right: (a*b)(i) = b(a(i))
    table = [[index[tuple(b[a[i]] for i in range(len(a)))] for b in elements] for a in elements]
    labels = [_permutation_label(element) for element in elements]

    return GroupModel(name, labels, table, identity=0, check_associativity=check_associativity)


def catalog_group(kind, m=1, associativity_check_limit=constants.ASSOCIATIVITY_CHECK_LIMIT):
    """Build one of the catalog groups: the trivial group, the cyclic group C_m,
    the dihedral group of order 2m, or the symmetric group S_m (m <= 6)"""
    if not isinstance(m, int) or m < 1:
        raise CatalogRangeError(f"catalog groups need a positive integer parameter, got {m!r}")

    if kind == "trivial":
        if m != 1:
            raise CatalogRangeError(f"the trivial group takes no parameter other than 1, got {m}")
        return GroupModel("1", ["e"], [[0]])

    if kind == "cyclic":
        if m > constants.MAX_CATALOG_ORDER:
            raise CatalogRangeError(f"C:{m} exceeds the catalog order limit of {constants.MAX_CATALOG_ORDER}")
        labels = ["e", "a"] + [f"a^{k}" for k in range(2, m)]
        table = [[(a + b) % m for b in range(m)] for a in range(m)]
        return GroupModel(f"C:{m}", labels[:m], table, check_associativity=m <= associativity_check_limit)

    if kind == "dihedral":
        if 2 * m > constants.MAX_CATALOG_ORDER:
            raise CatalogRangeError(f"D:{m} exceeds the catalog order limit of {constants.MAX_CATALOG_ORDER}")
        return _from_permutation_group(f"D:{m}", DihedralGroup(m), 2 * m <= associativity_check_limit)

    if kind == "symmetric":
        if m > constants.MAX_SYMMETRIC_DEGREE:
            raise CatalogRangeError(f"S:{m} is too large, the catalog stops at S:{constants.MAX_SYMMETRIC_DEGREE}")
        order = 1
        for k in range(2, m + 1):
            order *= k
        return _from_permutation_group(f"S:{m}", SymmetricGroup(m), order <= associativity_check_limit)

    raise CatalogRangeError(f"unknown catalog kind {kind!r}, expected one of {', '.join(CATALOG_KINDS)}")


def catalog_groups_up_to(order_bound, associativity_check_limit=constants.ASSOCIATIVITY_CHECK_LIMIT):
    """One catalog group per catalog isomorphism type with order <= order_bound, sorted by (order, name).

    C:2 also appears as D:1 and S:2, S:3 also appears as D:3, so those aliases are skipped."""
    entries = [("trivial", 1, 1)]
    for m in range(2, order_bound + 1):
        entries.append(("cyclic", m, m))
    for m in range(2, order_bound // 2 + 1):
        if m != 3:
            entries.append(("dihedral", m, 2 * m))
    order = 1
    for m in range(2, constants.MAX_SYMMETRIC_DEGREE + 1):
        order *= m
        if m >= 3 and order <= order_bound:
            entries.append(("symmetric", m, order))

    groups = [catalog_group(kind, m, associativity_check_limit) for kind, m, _ in entries]
    return sorted(groups, key=lambda g: (g.order, g.name))


@functools.lru_cache(maxsize=64)
@time_method
def conjugacy_classes(group):
    seen = [False] * group.order
    members = []
    for x in range(group.order):
        if seen[x]:
            continue
        orbit = {group.conjugate(x, by) for by in range(group.order)}
        for y in orbit:
            seen[y] = True
        members.append(orbit)

    classes = ClassStructure(group, members)
    log.debug("%s has %s conjugacy classes of sizes %s", group.name, classes.num_classes, classes.sizes)
    return classes


def nonpower_classes(classes, r):
    """Relabel the classes so those that are not r-th powers in G come first"""
    require_prime(r)

    image = set(classes.power_map(r))
    nonpower = [i for i in range(classes.num_classes) if i not in image]
    power = [i for i in range(classes.num_classes) if i in image]

    if gcd(r, classes.group.order) == 1 and nonpower:
        raise ConsistencyError(f"x -> x^{r} should be onto in {classes.group.name}, but classes {nonpower} are missed")

    return ClassLabeling(r, nonpower + power, len(nonpower))


def is_power_surjective(group, exponent):
    """Whether x -> x^exponent is onto, decided by powering every element"""
    if not isinstance(exponent, int) or exponent < 1:
        raise ValueError(f"exponent must be a positive integer, got {exponent!r}")

    image = {group.power(x, exponent) for x in range(group.order)}
    return len(image) == group.order


def resolve_group_spec(spec, associativity_check_limit=constants.ASSOCIATIVITY_CHECK_LIMIT):
    """Turn a group spec into a GroupModel.

    "1" is the trivial group, "C:m" / "S:m" / "D:m" are catalog groups (D:m has order 2m),
    anything else is read as the path of a group file."""
    spec = spec.strip()
    if spec == "1":
        return catalog_group("trivial", 1)

    kinds = {"C": "cyclic", "S": "symmetric", "D": "dihedral"}
    prefix, sep, parameter = spec.partition(":")
    if sep and prefix.upper() in kinds:
        try:
            m = int(parameter)
        except ValueError:
            raise InvalidGroupSpec(f"invalid catalog parameter in {spec!r} (examples: C:3, S:4, D:5)")
        return catalog_group(kinds[prefix.upper()], m, associativity_check_limit)

    try:
        return load_group_file(spec)
    except FileNotFoundError:
        raise InvalidGroupSpec(f"{spec!r} is neither a catalog group (1, C:m, S:m, D:m) nor an existing group file")
    except OSError as e:
        raise InvalidGroupSpec(f"{spec!r} cannot be read as a group file: {e.strerror}")
