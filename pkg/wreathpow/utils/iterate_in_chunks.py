from itertools import islice


def iterate_in_chunks(iterable, chunk_size):
    """Cut any iterable (also generators) into lists of at most chunk_size items"""
    iterator = iter(iterable)
    while True:
        chunk = list(islice(iterator, chunk_size))
        if not chunk:
            return
        yield chunk
