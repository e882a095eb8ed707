"""Sparse multivariate Laurent polynomials and rational functions.

Monomials are stored as sorted tuples of (variable-id, nonzero exponent)
pairs; the empty tuple is 1.  Coefficients are arbitrary-precision ints.
RatFuncs are *not* gcd-reduced; equality is decided by cross-multiplication,
and degrees are representation-independent because max-exponents are
additive over products in an integral domain.
"""

from fractions import Fraction


def _mono(exps):
    """Normalize a {var: exp} mapping into the canonical monomial tuple."""
    return tuple(sorted((v, e) for v, e in exps.items() if e != 0))


def _mono_mul(a, b):
    exps = dict(a)
    for v, e in b:
        e2 = exps.get(v, 0) + e
        if e2:
            exps[v] = e2
        else:
            del exps[v]
    return tuple(sorted(exps.items()))


def _mono_key(mono):
    # graded lexicographic on sorted variable ids
    return (sum(e for _, e in mono), mono)


class SparsePoly:
    """Integer-coefficient sparse Laurent polynomial."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for mono, coeff in (terms.items() if isinstance(terms, dict) else terms):
                if coeff:
                    mono = tuple(mono)
                    c = t.get(mono, 0) + coeff
                    if c:
                        t[mono] = c
                    elif mono in t:
                        del t[mono]
        self.terms = t

    @classmethod
    def const(cls, c):
        p = cls()
        if c:
            p.terms[()] = int(c)
        return p

    @classmethod
    def var(cls, name, exp=1):
        p = cls()
        if exp == 0:
            p.terms[()] = 1
        else:
            p.terms[((name, exp),)] = 1
        return p

    zero = classmethod(lambda cls: cls())
    one = classmethod(lambda cls: cls.const(1))

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = SparsePoly.const(other)
        return isinstance(other, SparsePoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        p = SparsePoly()
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def _coerce(self, other):
        if isinstance(other, int):
            return SparsePoly.const(other)
        if isinstance(other, SparsePoly):
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t = dict(self.terms)
        for m, c in other.terms.items():
            c2 = t.get(m, 0) + c
            if c2:
                t[m] = c2
            elif m in t:
                del t[m]
        p = SparsePoly()
        p.terms = t
        return p

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                c = t.get(m, 0) + c1 * c2
                if c:
                    t[m] = c
                elif m in t:
                    del t[m]
        p = SparsePoly()
        p.terms = t
        return p

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a SparsePoly; use RatFunc")
        result = SparsePoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def is_monomial(self):
        return len(self.terms) == 1

    def max_exp(self, var):
        """Max exponent of var over all terms (0 when absent from a term)."""
        if not self.terms:
            raise ValueError("max_exp of the zero polynomial")
        return max(dict(m).get(var, 0) for m in self.terms)

    def variables(self):
        return {v for m in self.terms for v, _ in m}

    def coefficients(self):
        return list(self.terms.values())

    def leading_coeff(self):
        if not self.terms:
            return 0
        return self.terms[max(self.terms, key=_mono_key)]

    def evaluate(self, values):
        total = Fraction(0)
        for m, c in self.terms.items():
            term = Fraction(c)
            for v, e in m:
                term *= Fraction(values[v]) ** e
            total += term
        return total

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: _mono_key(mc[0]), reverse=True)

    def to_json(self):
        return [{"coeff": str(c), "monomial": dict(m)} for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data):
        return cls([(_mono(d["monomial"]), int(d["coeff"])) for d in data])

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = [str(c)] if (c != 1 or not m) else []
            factors += ["%s^%d" % (v, e) if e != 1 else v for v, e in m]
            parts.append("*".join(factors))
        return " + ".join(parts)


class RatFunc:
    """Quotient of SparsePolys, normalized only by the sign of den's leading term."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = SparsePoly.const(num)
        if den is None:
            den = SparsePoly.one()
        elif isinstance(den, int):
            den = SparsePoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.leading_coeff() < 0:
            num, den = -num, -den
        self.num = num
        self.den = den

    @classmethod
    def var(cls, name, exp=1):
        return cls(SparsePoly.var(name, exp))

    one = classmethod(lambda cls: cls(1))

    def is_zero(self):
        return self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, (int, SparsePoly)):
            return RatFunc(other if isinstance(other, SparsePoly) else SparsePoly.const(other))
        if isinstance(other, RatFunc):
            return other
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k):
        if k < 0:
            return RatFunc(self.den, self.num) ** (-k)
        return RatFunc(self.num ** k, self.den ** k)

    def inverse(self):
        return RatFunc(self.den, self.num)

    def evaluate(self, values):
        return self.num.evaluate(values) / self.den.evaluate(values)

    def __repr__(self):
        return "(%r) / (%r)" % (self.num, self.den)


def poly_arith(a, b, op):
    """Dispatch helper matching the documented add|sub|mul|div interface."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if isinstance(a, SparsePoly):
            a = RatFunc(a)
        return a / b
    raise ValueError("unknown op %r" % (op,))


def deg_in(F, var):
    """deg of F in var at the basic lamination: maxexp(num) - maxexp(den)."""
    if not isinstance(F, RatFunc):
        F = RatFunc(F)
    if F.num.is_zero():
        raise ValueError("degree of the zero rational function")
    return F.num.max_exp(var) - F.den.max_exp(var)
