"""Exact sparse multivariate polynomial arithmetic over the rationals.

Coefficients are arbitrary-precision rationals (gmpy2.mpq when available,
fractions.Fraction otherwise).  Polynomials are stored sparsely as a map
from exponent tuples to nonzero coefficients, relative to a fixed
:class:`VarRegistry` that declares variable names, their order, and their
weights for the graded structure.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ


class PolyError(Exception):
    pass


class RegistryMismatch(PolyError):
    pass


class InexactDivision(PolyError):
    pass


class UnboundVariable(PolyError):
    pass


def rat(value, den=None):
    """Coerce to an exact rational."""
    if den is not None:
        return QQ(value, den)
    if isinstance(value, str):
        if "/" in value:
            a, b = value.split("/")
            return QQ(int(a), int(b))
        return QQ(int(value))
    return QQ(value)


def rat_str(q):
    """Render a rational as 'num' or 'num/den'."""
    return str(QQ(q))


class VarRegistry:
    """Ordered list of named variables with integer weights.

    The registry fixes the exponent-tuple layout of every MPoly built
    against it; two polynomials interoperate only if they share a registry.
    """

    def __init__(self, variables):
        names = []
        degrees = []
        for name, deg in variables:
            if deg < 1:
                raise ValueError(f"variable {name} must have positive degree")
            names.append(name)
            degrees.append(int(deg))
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        self._index = {n: i for i, n in enumerate(names)}
        self.size = len(names)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnboundVariable(f"unknown variable {name!r}") from None

    def __contains__(self, name):
        return name in self._index

    def zero(self):
        return MPoly(self, {})

    def one(self):
        return self.const(1)

    def const(self, value):
        q = rat(value)
        if q == 0:
            return MPoly(self, {})
        return MPoly(self, {(0,) * self.size: q})

    def var(self, name, power=1):
        exps = [0] * self.size
        exps[self.index(name)] = power
        return MPoly(self, {tuple(exps): QQ(1)})

    def monomial(self, coeff, exps_by_name):
        exps = [0] * self.size
        for name, e in exps_by_name.items():
            exps[self.index(name)] = int(e)
        q = rat(coeff)
        if q == 0:
            return self.zero()
        return MPoly(self, {tuple(exps): q})

    def weighted_degree(self, exps):
        return sum(e * d for e, d in zip(exps, self.degrees))

    def sort_key(self, exps):
        # descending graded reverse lexicographic when sorted ascending
        return (-self.weighted_degree(exps), tuple(reversed(exps)))


class MPoly:
    """Sparse multivariate polynomial with exact rational coefficients.

    Treat instances as immutable: every operation returns a new polynomial.
    """

    __slots__ = ("reg", "terms")

    def __init__(self, reg, terms):
        self.reg = reg
        self.terms = terms

    # -- basics ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if not isinstance(other, MPoly):
            other = self.reg.const(other)
        elif other.reg is not self.reg:
            raise RegistryMismatch("operands built on different registries")
        return other

    def __eq__(self, other):
        if isinstance(other, (int, str)) or type(other).__name__ in ("mpq", "Fraction"):
            other = self.reg.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.reg is other.reg and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.reg), frozenset(self.terms.items())))

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MPoly(self.reg, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.reg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            q = rat(other)
            if q == 0:
                return self.reg.zero()
            return MPoly(self.reg, {m: c * q for m, c in self.terms.items()})
        other = self._check(other)
        if len(self.terms) > len(other.terms):
            big, small = self.terms, other.terms
        else:
            big, small = other.terms, self.terms
        out = {}
        for m2, c2 in small.items():
            for m1, c1 in big.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return MPoly(self.reg, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = self.reg.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    # -- structure ------------------------------------------------------

    def degree(self):
        """Maximum weighted total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        wd = self.reg.weighted_degree
        return max(wd(m) for m in self.terms)

    def is_homogeneous(self):
        if not self.terms:
            return True
        wd = self.reg.weighted_degree
        degs = {wd(m) for m in self.terms}
        return len(degs) == 1

    def homogeneous_part(self, d):
        wd = self.reg.weighted_degree
        return MPoly(self.reg, {m: c for m, c in self.terms.items() if wd(m) == d})

    def variables(self):
        """Names of variables occurring with nonzero exponent."""
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(self.reg.names[i])
        return used

    def coefficient(self, exps_by_name):
        """Rational coefficient of the given monomial (by variable name)."""
        exps = [0] * self.reg.size
        for name, e in exps_by_name.items():
            exps[self.reg.index(name)] = int(e)
        return QQ(self.terms.get(tuple(exps), 0))

    def sorted_terms(self):
        key = self.reg.sort_key
        return sorted(self.terms.items(), key=lambda t: key(t[0]))

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = self.reg.sort_key
        m = min(self.terms, key=key)
        return m, self.terms[m]

    # -- division and substitution -------------------------------------

    def divide_exact(self, den):
        """Exact quotient self/den; raises InexactDivision otherwise."""
        den = self._check(den)
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        dm, dc = den.leading_term()
        rem = dict(self.terms)
        out = {}
        key = self.reg.sort_key
        while rem:
            m = min(rem, key=key)
            c = rem[m]
            q = tuple(a - b for a, b in zip(m, dm))
            if any(e < 0 for e in q):
                raise InexactDivision("nonzero remainder in exact division")
            qc = c / dc
            out[q] = qc
            for m2, c2 in den.terms.items():
                mm = tuple(a + b for a, b in zip(q, m2))
                s = rem.get(mm, 0) - qc * c2
                if s:
                    rem[mm] = s
                else:
                    rem.pop(mm, None)
        return MPoly(self.reg, out)

    def substitute(self, bindings):
        """Simultaneously substitute variables by polynomials or rationals.

        Bindings map variable names to MPoly (same registry) or rationals.
        Unbound variables pass through untouched.
        """
        reg = self.reg
        idx = {}
        for name, val in bindings.items():
            if not isinstance(val, MPoly):
                val = reg.const(val)
            elif val.reg is not reg:
                raise RegistryMismatch("binding on a different registry")
            idx[reg.index(name)] = val
        powers = {i: {0: reg.one()} for i in idx}

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = idx[i] ** e
            return cache[e]

        result = reg.zero()
        for m, c in self.terms.items():
            kept = list(m)
            factor = None
            for i in idx:
                e = m[i]
                if e:
                    kept[i] = 0
                    p = power(i, e)
                    factor = p if factor is None else factor * p
            base = MPoly(reg, {tuple(kept): c})
            result = result + (base if factor is None else base * factor)
        return result

    def convert(self, new_reg, name_map=None):
        """Re-express on another registry, optionally renaming variables.

        Every variable that actually occurs must exist (after renaming) in
        the target registry, with the same weight.
        """
        name_map = name_map or {}
        out = {}
        src = self.reg
        mapping = {}
        for i, name in enumerate(src.names):
            tgt = name_map.get(name, name)
            mapping[i] = new_reg.index(tgt) if tgt in new_reg else None
        for m, c in self.terms.items():
            exps = [0] * new_reg.size
            for i, e in enumerate(m):
                if not e:
                    continue
                j = mapping[i]
                if j is None:
                    raise UnboundVariable(
                        f"variable {src.names[i]!r} missing from target registry"
                    )
                exps[j] += e
            key = tuple(exps)
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                del out[key]
        return MPoly(new_reg, out)

    # -- serialization --------------------------------------------------

    def to_obj(self):
        """JSON-ready list of terms in canonical monomial order."""
        names = self.reg.names
        obj = []
        for m, c in self.sorted_terms():
            obj.append(
                {
                    "coeff": rat_str(c),
                    "exps": {names[i]: e for i, e in enumerate(m) if e},
                }
            )
        return obj

    @classmethod
    def from_obj(cls, reg, obj):
        p = reg.zero()
        for term in obj:
            p = p + reg.monomial(rat(term["coeff"]), term.get("exps", {}))
        return p

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.reg.names
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(names[i])
                elif e:
                    factors.append(f"{names[i]}^{e}")
            mono = "*".join(factors)
            cs = rat_str(c)
            if mono:
                if cs == "1":
                    term = mono
                elif cs == "-1":
                    term = "-" + mono
                else:
                    term = f"{cs}*{mono}"
            else:
                term = cs
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += " - " + term[1:] if term.startswith("-") else " + " + term
        return out

    __repr__ = __str__


class RatFun:
    """Rational function as an unnormalized numerator/denominator pair.

    Equality is tested by cross-multiplication; no GCD reduction is ever
    attempted.  Used only as an intermediate carrier: localization sums are
    turned back into polynomials with :meth:`to_poly`.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = num.reg.one()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.reg is not num.reg:
            raise RegistryMismatch("numerator and denominator registries differ")
        self.num = num
        self.den = den

    def __add__(self, other):
        if not isinstance(other, RatFun):
            other = RatFun(self.num.reg.const(other))
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    def __mul__(self, other):
        if not isinstance(other, RatFun):
            other = RatFun(self.num.reg.const(other))
        return RatFun(self.num * other.num, self.den * other.den)

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, RatFun):
            other = RatFun(self.num.reg.const(other))
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, RatFun):
            other = RatFun(self.num.reg.const(other))
        return (self.num * other.den) == (other.num * self.den)

    def to_poly(self):
        return self.num.divide_exact(self.den)
