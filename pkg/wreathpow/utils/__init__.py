from .compositions import compositions
from .find import find
from .init_logging import init_logging
from .iterate_in_chunks import iterate_in_chunks
from .load_config import load_config
from .parse_args import parse_args
from .require_prime import require_prime
from .time_method import time_method
from .write_table import write_table
