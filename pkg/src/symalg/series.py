"""Truncated power series, dense polynomials and dimension formulas.

The dimension bookkeeping for graded Lie algebras runs through three maps:

* ``log_power_sums``: extract the coefficients a_d with
  -log p(t) = sum_d (a_d/d) t^d for a polynomial p with p(0) = 1
  (equivalently the power sums of the inverse roots of p),
* ``mobius``: the classical Moebius function,
* ``dims_from_series``: recover graded component dimensions nu_j from the
  a_d of the enveloping algebra's inverse Hilbert series via
  nu_j = ((-1)^j / j) * sum_{d|j} (-1)^d a_d mu(j/d).

All coefficients are exact rationals; results that must be integers are
checked to be so.
"""

from fractions import Fraction


class DensePolynomial:
    """Coefficient list, constant term first, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = cs

    def __getitem__(self, d):
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else Fraction(0)

    def degree(self):
        return len(self.coeffs) - 1

    def __eq__(self, other):
        return isinstance(other, DensePolynomial) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"DensePolynomial({self.coeffs})"

    def series(self, order):
        return PowerSeries([self[d] for d in range(order + 1)], order)


class PowerSeries:
    """Power series truncated at a fixed order (inclusive)."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order):
        cs = [Fraction(c) for c in coeffs[: order + 1]]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs = cs
        self.order = order

    def __getitem__(self, d):
        if d < 0:
            return Fraction(0)
        if d > self.order:
            raise IndexError(f"coefficient {d} beyond truncation order {self.order}")
        return self.coeffs[d]

    def __eq__(self, other):
        return (
            isinstance(other, PowerSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"PowerSeries({self.coeffs}, order={self.order})"

    def __add__(self, other):
        n = min(self.order, other.order)
        return PowerSeries([self[d] + other[d] for d in range(n + 1)], n)

    def __sub__(self, other):
        n = min(self.order, other.order)
        return PowerSeries([self[d] - other[d] for d in range(n + 1)], n)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return PowerSeries(out, n)

    def inverse(self):
        if self.coeffs[0] == 0:
            raise ValueError("inverse requires a nonzero constant term")
        n = self.order
        inv = [Fraction(0)] * (n + 1)
        inv[0] = 1 / self.coeffs[0]
        for d in range(1, n + 1):
            acc = Fraction(0)
            for k in range(1, d + 1):
                if self.coeffs[k]:
                    acc += self.coeffs[k] * inv[d - k]
            inv[d] = -acc / self.coeffs[0]
        return PowerSeries(inv, n)

    def log(self):
        """log of a series with constant term 1, via (log f)' = f'/f."""
        if self.coeffs[0] != 1:
            raise ValueError("log requires constant term 1")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        # d * out[d] = d*f[d] - sum_{k=1}^{d-1} k*out[k]*f[d-k]
        for d in range(1, n + 1):
            acc = d * self.coeffs[d]
            for k in range(1, d):
                if out[k] and self.coeffs[d - k]:
                    acc -= k * out[k] * self.coeffs[d - k]
            out[d] = acc / d
        return PowerSeries(out, n)

    def exp(self):
        if self.coeffs[0] != 0:
            raise ValueError("exp requires zero constant term")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = Fraction(1)
        # d * out[d] = sum_{k=1}^{d} k*self[k]*out[d-k]
        for d in range(1, n + 1):
            acc = Fraction(0)
            for k in range(1, d + 1):
                if self.coeffs[k] and out[d - k]:
                    acc += k * self.coeffs[k] * out[d - k]
            out[d] = acc / d
        return PowerSeries(out, n)


def mobius(n):
    if n < 1 or n != int(n):
        raise ValueError("mobius is defined for positive integers")
    n = int(n)
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1 if p == 2 else 2
    if n > 1:
        result = -result
    return result


def divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def log_power_sums(p, max_d):
    """Coefficients a_1..a_max_d with -log p(t) = sum a_d t^d / d.

    If p = prod (1 - t/lambda_i), then a_d = sum lambda_i**(-d).
    """
    if not isinstance(p, DensePolynomial):
        p = DensePolynomial(p)
    if p[0] != 1:
        raise ValueError("constant term must be 1")
    neg_log = p.series(max_d).log()
    return [-d * neg_log[d] for d in range(1, max_d + 1)]


def newton_power_sums(p, max_d):
    """Power sums of inverse roots via Newton's identities (cross-check).

    Writing p(t) = 1 + c_1 t + ... + c_m t^m = prod (1 - mu_i t), the power
    sums P_d = sum mu_i^d obey
    P_d = -d c_d - sum_{k=1}^{d-1} c_k P_{d-k}.
    """
    if not isinstance(p, DensePolynomial):
        p = DensePolynomial(p)
    if p[0] != 1:
        raise ValueError("constant term must be 1")
    P = []
    for d in range(1, max_d + 1):
        acc = -d * p[d]
        for k in range(1, d):
            acc -= p[k] * P[d - k - 1]
        P.append(acc)
    return P


def dims_from_series(p, max_j):
    """Graded Lie component dimensions from the inverse Hilbert series.

    p must be the polynomial with 1/p the Hilbert series of the enveloping
    algebra.  Raises if any resulting dimension is non-integral or negative.
    """
    a = log_power_sums(p, max_j)
    dims = []
    for j in range(1, max_j + 1):
        acc = Fraction(0)
        for d in divisors(j):
            m = mobius(j // d)
            if m:
                acc += (-1) ** d * a[d - 1] * m
        nu = Fraction((-1) ** j) * acc / j
        if nu.denominator != 1 or nu < 0:
            raise ValueError(f"inconsistent Hilbert data at degree {j}: nu={nu}")
        dims.append(int(nu))
    return dims


def _binomial(n, k):
    out = 1
    for j in range(k):
        out = out * (n - j) // (j + 1)
    return out


def enveloping_series(dims, order):
    """Hilbert series of the free graded-supercommutative algebra on a
    graded space with dimension nu_i in degree i (odd degrees = odd parity):
    prod_i (1 - (-1)^i t^i)^(-(-1)^i nu_i).
    """
    out = PowerSeries([1], order)
    for i, nu in enumerate(dims, start=1):
        if i > order or nu == 0:
            continue
        cs = [Fraction(0)] * (order + 1)
        for k in range(order // i + 1):
            # even degree: (1-t^i)^(-nu); odd degree: (1+t^i)^nu
            cs[i * k] = _binomial(nu + k - 1, k) if i % 2 == 0 else _binomial(nu, k)
        out = out * PowerSeries(cs, order)
    return out
