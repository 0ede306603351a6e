"""Exact sparse Laurent polynomials with integer coefficients.

A polynomial is a map from monomials to nonzero Python ints, so coefficients
are arbitrary precision for free.  Monomials are sorted tuples of
``(variable id, exponent)`` pairs with no zero exponents; negative exponents
are first class, there is no separate plain-polynomial type.

Everything is immutable after construction and every operation returns a new
value in canonical form, which makes structural equality the same thing as
mathematical equality and makes values safe to share across threads.

Printing is deterministic: terms are ordered by total degree, ties broken by
the dense exponent vector, with variables ordered as in the ``VarTable``.
The text format is the one used by the CLI and the golden tests, e.g.
``1 - Y[1,1]^2*X{0^2}``.
"""

from __future__ import annotations

from typing import Iterable, Mapping

# A monomial: ((var id, exponent), ...), sorted by var id, exponents nonzero.
Monomial = tuple[tuple[int, int], ...]


class ExactDivisionError(ArithmeticError):
    """Raised when a supposedly exact polynomial division leaves a remainder."""


class VarTable:
    """Bijection between dense variable ids ``0..V-1`` and display names.

    Names follow the conventions of the rest of the package: ``Y[i,j]`` for
    the weight variables, ``X{...}`` for element variables, plain identifiers
    (``q``, ``Y``, ``x0``) for anything generic.  The table itself does not
    care; it only guarantees the bijection.
    """

    __slots__ = ("names", "_ids")

    def __init__(self, names: Iterable[str]):
        self.names: tuple[str, ...] = tuple(names)
        self._ids: dict[str, int] = {}
        for i, name in enumerate(self.names):
            if name in self._ids:
                raise ValueError(f"duplicate variable name {name!r}")
            self._ids[name] = i

    def id(self, name: str) -> int:
        return self._ids[name]

    def name(self, vid: int) -> str:
        return self.names[vid]

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._ids

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VarTable):
            return NotImplemented
        return self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VarTable({list(self.names)!r})"


def _mono_mul(m: Monomial, n: Monomial) -> Monomial:
    if not m:
        return n
    if not n:
        return m
    d = dict(m)
    for v, e in n:
        e2 = d.get(v, 0) + e
        if e2:
            d[v] = e2
        else:
            del d[v]
    return tuple(sorted(d.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


class LaurentPoly:
    """An immutable sparse Laurent polynomial over a fixed ``VarTable``."""

    __slots__ = ("table", "terms")

    def __init__(self, table: VarTable, terms: dict[Monomial, int]):
        # Trusted constructor: `terms` must already be canonical (sorted
        # monomials, no zero coefficients).  Use the factories otherwise.
        self.table = table
        self.terms = terms

    # -- factories -----------------------------------------------------

    @classmethod
    def zero(cls, table: VarTable) -> "LaurentPoly":
        return cls(table, {})

    @classmethod
    def const(cls, table: VarTable, c: int) -> "LaurentPoly":
        c = int(c)
        return cls(table, {(): c} if c else {})

    @classmethod
    def variable(cls, table: VarTable, vid: int, exponent: int = 1) -> "LaurentPoly":
        if not 0 <= vid < len(table):
            raise ValueError(f"variable id {vid} out of range")
        if exponent == 0:
            return cls.const(table, 1)
        return cls(table, {((vid, exponent),): 1})

    @classmethod
    def monomial(cls, table: VarTable, exps: Mapping[int, int], coeff: int = 1) -> "LaurentPoly":
        coeff = int(coeff)
        if coeff == 0:
            return cls.zero(table)
        m = tuple(sorted((v, e) for v, e in exps.items() if e))
        return cls(table, {m: coeff})

    # -- basic structure -----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(): 1}

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def term_count(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == ({(): other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.table == other.table and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.table, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"<LaurentPoly {self.text()}>"

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            if other.table is not self.table and other.table != self.table:
                raise ValueError("operands use different variable tables")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(self.table, other)
        return None

    def __add__(self, other) -> "LaurentPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in q.terms.items():
            c2 = out.get(m, 0) + c
            if c2:
                out[m] = c2
            else:
                del out[m]
        return LaurentPoly(self.table, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.table, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other) -> "LaurentPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if not self.terms or not q.terms:
            return LaurentPoly.zero(self.table)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in q.terms.items():
                m = _mono_mul(m1, m2)
                c = out.get(m, 0) + c1 * c2
                if c:
                    out[m] = c
                elif m in out:
                    del out[m]
        return LaurentPoly(self.table, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = LaurentPoly.const(self.table, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- variable maps ---------------------------------------------------

    def invert_vars(self, vids: Iterable[int]) -> "LaurentPoly":
        """Negate every exponent of the selected variables."""
        s = set(vids)
        if not s:
            return self
        out = {}
        for m, c in self.terms.items():
            m2 = tuple(sorted((v, -e if v in s else e) for v, e in m))
            out[m2] = c
        return LaurentPoly(self.table, out)

    def eval_at_one(self, vids: Iterable[int]) -> "LaurentPoly":
        """Substitute 1 for each selected variable and renormalize."""
        s = set(vids)
        if not s:
            return self
        out: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            m2 = tuple((v, e) for v, e in m if v not in s)
            c2 = out.get(m2, 0) + c
            if c2:
                out[m2] = c2
            elif m2 in out:
                del out[m2]
        return LaurentPoly(self.table, out)

    def subs(
        self,
        images: Mapping[int, "LaurentPoly | int"],
        table: VarTable | None = None,
    ) -> "LaurentPoly":
        """Apply a ring homomorphism sending each mapped variable to its image.

        Unmapped variables are sent to the variable of the same name in the
        target table.  A variable occurring with a negative exponent may only
        be mapped to a unit (a single monomial with coefficient +-1).
        """
        target = table if table is not None else self.table
        acc = LaurentPoly.zero(target)
        img_cache: dict[int, LaurentPoly] = {}

        def image_of(v: int) -> LaurentPoly:
            if v not in img_cache:
                img = images.get(v)
                if img is None:
                    img_cache[v] = LaurentPoly.variable(target, target.id(self.table.name(v)))
                elif isinstance(img, int):
                    img_cache[v] = LaurentPoly.const(target, img)
                else:
                    if img.table != target:
                        raise ValueError("substitution image uses the wrong variable table")
                    img_cache[v] = img
            return img_cache[v]

        for m, c in self.terms.items():
            term = LaurentPoly.const(target, c)
            for v, e in m:
                img = image_of(v)
                if e >= 0:
                    term = term * img**e
                else:
                    if len(img.terms) != 1:
                        raise ValueError(
                            f"variable {self.table.name(v)!r} occurs with a negative exponent; "
                            "its image must be a unit monomial"
                        )
                    ((mono, coeff),) = img.terms.items()
                    if coeff not in (1, -1):
                        raise ValueError("negative exponent of a non-unit image")
                    powered = tuple(sorted((w, ex * e) for w, ex in mono))
                    term = term * LaurentPoly(target, {powered: coeff if e % 2 else 1})
            acc = acc + term
        return acc

    # -- inspection --------------------------------------------------------

    def variables(self) -> set[int]:
        out: set[int] = set()
        for m in self.terms:
            out.update(v for v, _ in m)
        return out

    def total_degree(self, vids: Iterable[int] | None = None) -> int:
        """Max over terms of the exponent sum, restricted to ``vids`` if given."""
        if not self.terms:
            return 0
        if vids is None:
            return max(_mono_degree(m) for m in self.terms)
        s = set(vids)
        return max(sum(e for v, e in m if v in s) for m in self.terms)

    def has_negative_exponent(self, vids: Iterable[int] | None = None) -> bool:
        s = None if vids is None else set(vids)
        for m in self.terms:
            for v, e in m:
                if e < 0 and (s is None or v in s):
                    return True
        return False

    # -- canonical rendering ------------------------------------------------

    def _dense(self, m: Monomial) -> tuple[int, ...]:
        row = [0] * len(self.table)
        for v, e in m:
            row[v] = e
        return tuple(row)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda kv: (_mono_degree(kv[0]), self._dense(kv[0])))

    def text(self) -> str:
        """Canonical text form, bit-exact across runs."""
        if not self.terms:
            return "0"
        parts: list[str] = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            factors = []
            if abs(c) != 1 or not m:
                factors.append(str(abs(c)))
            for v, e in m:
                name = self.table.name(v)
                factors.append(name if e == 1 else f"{name}^{e}")
            body = "*".join(factors)
            if i == 0:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def json_terms(self) -> list[dict]:
        """JSON-ready term list; coefficients as decimal strings."""
        out = []
        for m, c in self.sorted_terms():
            out.append({"coeff": str(c), "monomial": {self.table.name(v): e for v, e in m}})
        return out


# -- exact division ----------------------------------------------------------


def _content_shift(p: LaurentPoly) -> tuple[dict[Monomial, int], Monomial]:
    """Normalize so every occurring variable has minimum exponent 0.

    Returns the shifted term dict and the monomial that was divided out.
    """
    allvars = p.variables()
    mins: dict[int, int] = {}
    for m in p.terms:
        seen = dict(m)
        for v in allvars:
            e = seen.get(v, 0)
            if v not in mins or e < mins[v]:
                mins[v] = e
    shift = tuple(sorted((v, e) for v, e in mins.items() if e))
    if not shift:
        return dict(p.terms), ()
    neg = tuple(sorted((v, -e) for v, e in shift))
    return {_mono_mul(m, neg): c for m, c in p.terms.items()}, shift


def exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Divide ``p`` by ``d``, asserting that the division is exact.

    Long division by leading term in the canonical (graded, then dense
    lexicographic) order, after normalizing both operands by their monomial
    content.  A nonzero remainder raises ``ExactDivisionError``.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return p
    if p.table != d.table:
        raise ValueError("operands use different variable tables")

    num, shift_p = _content_shift(p)
    den, shift_d = _content_shift(d)

    def key(m: Monomial):
        return (_mono_degree(m), p._dense(m))

    lead_d = max(den, key=key)
    lead_dc = den[lead_d]
    lead_d_exps = dict(lead_d)

    quot: dict[Monomial, int] = {}
    rem = dict(num)
    while rem:
        lm = max(rem, key=key)
        lc = rem[lm]
        lm_exps = dict(lm)
        q_exps = {}
        ok = True
        for v in set(lm_exps) | set(lead_d_exps):
            e = lm_exps.get(v, 0) - lead_d_exps.get(v, 0)
            if e < 0:
                ok = False
                break
            if e:
                q_exps[v] = e
        if not ok or lc % lead_dc:
            raise ExactDivisionError("nonzero remainder in exact division")
        qm = tuple(sorted(q_exps.items()))
        qc = lc // lead_dc
        quot[qm] = quot.get(qm, 0) + qc
        for m, c in den.items():
            m2 = _mono_mul(qm, m)
            c2 = rem.get(m2, 0) - qc * c
            if c2:
                rem[m2] = c2
            elif m2 in rem:
                del rem[m2]

    # Undo the content normalization: p/d = (num/den) * shift_p / shift_d.
    adjust = _mono_mul(shift_p, tuple(sorted((v, -e) for v, e in shift_d)))
    if adjust:
        quot = {_mono_mul(m, adjust): c for m, c in quot.items()}
    return LaurentPoly(p.table, quot)


# -- q-analogs ---------------------------------------------------------------


def y_integer(table: VarTable, n: int, v: int) -> LaurentPoly:
    """[n] = 1 + Y + ... + Y^(n-1); the empty sum for n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    terms: dict[Monomial, int] = {}
    for e in range(n):
        terms[() if e == 0 else ((v, e),)] = 1
    return LaurentPoly(table, terms)


def y_factorial(table: VarTable, n: int, v: int) -> LaurentPoly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = LaurentPoly.const(table, 1)
    for i in range(1, n + 1):
        result = result * y_integer(table, i, v)
    return result


def y_binomial(table: VarTable, n: int, k: int, v: int) -> LaurentPoly:
    """Gaussian binomial via the product formula and exact division."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"binomial parameters out of range: n={n}, k={k}")
    num = LaurentPoly.const(table, 1)
    den = LaurentPoly.const(table, 1)
    one = LaurentPoly.const(table, 1)
    for i in range(1, k + 1):
        num = num * (one - LaurentPoly.variable(table, v, n - k + i))
        den = den * (one - LaurentPoly.variable(table, v, i))
    return exact_div(num, den)


def y_multinomial(table: VarTable, n: int, thresholds: Iterable[int], v: int) -> LaurentPoly:
    """Telescoping product of Gaussian binomials over a multiset in [n]."""
    es = sorted(thresholds)
    if any(e < 1 or e > n for e in es):
        raise ValueError(f"multiset members must lie in [1, {n}]")
    es.append(n)
    result = LaurentPoly.const(table, 1)
    for i in range(len(es) - 1):
        result = result * y_binomial(table, es[i + 1], es[i], v)
    return result
