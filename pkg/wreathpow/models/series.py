from fractions import Fraction

from wreathpow.exc import SeriesDomainError


class TruncatedSeries:
    """A formal power series c_0 + c_1 u + ... + c_N u^N with exact rational coefficients.

    Everything above the cap N is unknown, so combining two series keeps the smaller cap.
    :ivar cap: Highest degree that is known exactly
    :type cap: int"""

    def __init__(self, coeffs, cap):
        if cap < 0:
            raise ValueError(f"series cap must be non-negative, got {cap}")

        self.cap = cap
        padded = [Fraction(c) for c in coeffs[: cap + 1]]
        padded.extend([Fraction(0)] * (cap + 1 - len(padded)))
        self._coeffs = tuple(padded)

    @staticmethod
    def constant(value, cap):
        return TruncatedSeries([value], cap)

    @staticmethod
    def monomial(coefficient, degree, cap):
        if degree > cap:
            return TruncatedSeries([], cap)
        return TruncatedSeries([0] * degree + [coefficient], cap)

    @property
    def coeffs(self):
        return self._coeffs

    def coefficient(self, k):
        if k > self.cap:
            raise SeriesDomainError(f"coefficient of u^{k} is unknown, the series is only exact up to u^{self.cap}")
        return self._coeffs[k] if k >= 0 else Fraction(0)

    def truncate(self, cap):
        return TruncatedSeries(self._coeffs, min(cap, self.cap))

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.cap)

    def __add__(self, other):
        other = self._coerce(other)
        cap = min(self.cap, other.cap)
        return TruncatedSeries([self._coeffs[k] + other._coeffs[k] for k in range(cap + 1)], cap)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self._coeffs], self.cap)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            scalar = Fraction(other)
            return TruncatedSeries([scalar * c for c in self._coeffs], self.cap)

        cap = min(self.cap, other.cap)
        result = [Fraction(0)] * (cap + 1)
        for i, a in enumerate(self._coeffs[: cap + 1]):
            if a == 0:
                continue
            for j in range(cap + 1 - i):
                b = other._coeffs[j]
                if b:
                    result[i + j] += a * b
        return TruncatedSeries(result, cap)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return self.pow_rational(exponent)
        if exponent < 0:
            return self.reciprocal() ** -exponent

        result = TruncatedSeries.constant(1, self.cap)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def reciprocal(self):
        a = self._coeffs
        if a[0] == 0:
            raise SeriesDomainError("reciprocal needs a nonzero constant term, got 0")

        inverse_a0 = 1 / a[0]
        b = [inverse_a0]
        for k in range(1, self.cap + 1):
            b.append(-inverse_a0 * sum(a[i] * b[k - i] for i in range(1, k + 1)))
        return TruncatedSeries(b, self.cap)

    def exp(self):
        f = self._coeffs
        if f[0] != 0:
            raise SeriesDomainError(f"exp needs constant term 0, got {f[0]}")

        g = [Fraction(1)]
        for k in range(1, self.cap + 1):
            g.append(sum(i * f[i] * g[k - i] for i in range(1, k + 1)) / k)
        return TruncatedSeries(g, self.cap)

    def log(self):
        f = self._coeffs
        if f[0] != 1:
            raise SeriesDomainError(f"log needs constant term 1, got {f[0]}")

        g = [Fraction(0)]
        for k in range(1, self.cap + 1):
            g.append(f[k] - sum((i * g[i] * f[k - i] for i in range(1, k)), Fraction(0)) / k)
        return TruncatedSeries(g, self.cap)

    def pow_rational(self, q):
        """f^q = exp(q log f) for a rational q, which needs constant term 1 unless q is a non-negative integer"""
        q = Fraction(q)
        if q.denominator == 1 and q >= 0:
            return self ** int(q)
        if self._coeffs[0] != 1:
            raise SeriesDomainError(f"raising to the power {q} needs constant term 1, got {self._coeffs[0]}")
        return (self.log() * q).exp()

    def substitute_power(self, k):
        """f(u^k). The first unknown term of f lands at degree k (cap + 1), so the result is exact below it"""
        if k < 1:
            raise ValueError(f"substitution exponent must be positive, got {k}")

        cap = k * (self.cap + 1) - 1
        result = [Fraction(0)] * (cap + 1)
        for degree, c in enumerate(self._coeffs):
            result[degree * k] = c
        return TruncatedSeries(result, cap)

    def derivative(self):
        if self.cap == 0:
            return TruncatedSeries([], 0)
        return TruncatedSeries([k * self._coeffs[k] for k in range(1, self.cap + 1)], self.cap - 1)

    def integral(self):
        """Antiderivative with constant term 0, exact one degree further than the integrand"""
        return TruncatedSeries([0] + [c / (k + 1) for k, c in enumerate(self._coeffs)], self.cap + 1)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return False

        return self.cap == other.cap and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.cap, self._coeffs))

    def __repr__(self):
        terms = [f"{c}*u^{k}" for k, c in enumerate(self._coeffs) if c]
        return f"TruncatedSeries({' + '.join(terms) or '0'} + O(u^{self.cap + 1}))"
