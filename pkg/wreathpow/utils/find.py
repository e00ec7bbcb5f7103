def find(predicate, seq):
    """First element of seq that satisfies predicate, or None"""
    for element in seq:
        if predicate(element):
            return element
    return None
