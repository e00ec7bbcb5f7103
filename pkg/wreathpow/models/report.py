class CheckReport:
    """Outcome of a named verification run: an ordered list of individual checks.

    :ivar name: What was verified, e.g. "plateau C:3 r=2"
    :type name: str
    :ivar checks: (passed, description) pairs in the order they were made
    :type checks: list[tuple[bool, str]]"""

    def __init__(self, name):
        self.name = name
        self.checks = []

    def check(self, passed, description):
        self.checks.append((bool(passed), description))
        return passed

    @property
    def failures(self):
        return [description for passed, description in self.checks if not passed]

    @property
    def passed(self):
        """False when nothing was checked"""
        return bool(self.checks) and not self.failures

    @property
    def status(self):
        return "PASS" if self.passed else "FAIL"

    def lines(self):
        """One "PASS<TAB>description" / "FAIL<TAB>description" line per check, then the summary line"""
        result = [f"{'PASS' if passed else 'FAIL'}\t{description}" for passed, description in self.checks]
        result.append(f"{self.status}\t{self.name}\t{len(self.checks) - len(self.failures)}/{len(self.checks)} checks")
        return result

    def __repr__(self):
        return f"CheckReport({self.name}: {self.status})"
