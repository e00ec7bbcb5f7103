import logging

from wreathpow import constants
from wreathpow.commands.base import BaseCommand
from wreathpow.utils import write_table
from wreathpow.wreath import class_info
from wreathpow.wreath import count_classes
from wreathpow.wreath import enumerate_types
from wreathpow.wreath import wreath_order

log = logging.getLogger(__name__)


class ClassesCommand(BaseCommand):
    ID = "classes"
    NAME = "Conjugacy classes"
    DESCRIPTION = "Lists every conjugacy class of G wr S_n by type, with class and centralizer sizes"
    PRIME_EXPONENT = False

    @classmethod
    def add_arguments(cls, parser):
        cls.add_group_argument(parser)
        parser.add_argument("-n", type=int, required=True, help="degree of the symmetric group")

    def run(self, args, out):
        classes = self.resolve_classes(args)

        rows = []
        for t in enumerate_types(classes.num_classes, args.n):
            info = class_info(t, classes)
            rows.append((t.to_text(), info.class_size, info.centralizer_size))

        write_table(out, ("type", "class_size", "centralizer_size"), rows)
        out.write(f"CC\t{count_classes(classes.num_classes, args.n)}\n")
        out.write(f"order\t{wreath_order(classes, args.n)}\n")
        return constants.EXIT_OK
