"""Sparse multivariate polynomial arithmetic over exact rationals.

Terms live in a dict keyed by a packed integer encoding of the exponent
vector.  The packing puts the total degree in the top field and the
exponents below it, most significant variable first, so that ordinary
integer comparison of keys realises the graded lexicographic monomial
order: leading-term extraction is ``max`` over the key set, and printing
in canonical order is a single sort.

Coefficients are exact rationals.  Integer-valued coefficients are kept
as plain ``int`` (a rational with denominator one); everything else is a
``fractions.Fraction``.  Both normalise on every operation, so equality
of dicts is equality of polynomials.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Coeff = Union[int, Fraction]
Scalar = Union[int, Fraction]

_BITS = 16
_MASK = (1 << _BITS) - 1


def _norm_coeff(c: Coeff) -> Coeff:
    # store denominator-1 values as int so hot loops run native arithmetic
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    if type(c) is bool:
        return int(c)
    return c


def _clean(terms: dict) -> dict:
    out = {}
    for k, c in terms.items():
        c = _norm_coeff(c)
        if c:
            out[k] = c
    return out


def _dict_mul(f: dict, g: dict) -> dict:
    """Raw term-dict product; zero coefficients are pruned by the caller."""
    if not f or not g:
        return {}
    if len(f) == 1 and 0 in f and f[0] == 1:
        return dict(g)
    if len(g) == 1 and 0 in g and g[0] == 1:
        return dict(f)
    if len(f) > len(g):
        f, g = g, f
    items = list(g.items())
    out: dict = {}
    get = out.get
    for ka, ca in f.items():
        for kb, cb in items:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return out


def _dict_sub(f: dict, g: dict) -> dict:
    out = dict(f)
    get = out.get
    for k, c in g.items():
        out[k] = get(k, 0) - c
    return out


def _div_rational(a: Coeff, b: Coeff) -> Coeff:
    return Fraction(a) / b


def _div_integer(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("inexact coefficient division")
    return q


def _dict_exact_div(num: dict, den: dict, nvars: int, integer_mode: bool) -> dict:
    """Divide num by den, both raw term dicts; the division must be exact.

    Processes the remainder's leading term via a lazy max-heap so the cost
    is O(|quotient|*|den|) heap updates rather than repeated full scans.
    """
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if not num:
        return {}
    div = _div_integer if integer_mode else _div_rational
    dk0 = max(den)
    dc0 = den[dk0]
    den_items = list(den.items())
    dshift = nvars * _BITS
    r = dict(num)
    q: dict = {}
    heap = [-k for k in r]
    heapq.heapify(heap)
    push, pop = heapq.heappush, heapq.heappop
    get = r.get
    while heap:
        k = -pop(heap)
        c = get(k)
        if not c:
            continue
        qk = k - dk0
        if qk < 0 or any((qk >> (i * _BITS)) & _MASK > (k >> (i * _BITS)) & _MASK
                         for i in range(nvars + 1)):
            raise ArithmeticError("inexact polynomial division")
        qc = div(c, dc0)
        q[qk] = qc
        for dk, dc in den_items:
            kk = qk + dk
            old = get(kk)
            if old is None:
                r[kk] = -qc * dc
                if kk != k:
                    push(heap, -kk)
            else:
                v = old - qc * dc
                if v:
                    r[kk] = v
                else:
                    del r[kk]
    if r:
        raise ArithmeticError("inexact polynomial division")
    assert dshift >= 0
    return q


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class MPoly:
    """A sparse multivariate polynomial over the rationals."""

    __slots__ = ("_vars", "_terms", "_n")

    def __init__(self, variables: Sequence[str], terms: Mapping, _clean_input: bool = True):
        vs = tuple(variables)
        if list(vs) != sorted(vs) or len(set(vs)) != len(vs):
            raise ValueError("variable universe must be sorted and duplicate-free")
        self._vars = vs
        self._n = len(vs)
        self._terms = _clean(terms) if _clean_input else dict(terms)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str] = ()) -> "MPoly":
        return cls(sorted(variables), {})

    @classmethod
    def constant(cls, value: Scalar, variables: Sequence[str] = ()) -> "MPoly":
        c = _norm_coeff(_as_fraction(value))
        return cls(sorted(variables), {0: c} if c else {})

    @classmethod
    def variable(cls, name: str) -> "MPoly":
        if not re.fullmatch(r"[A-Za-z_]\w*", name):
            raise ValueError(f"bad variable name: {name!r}")
        return cls((name,), {(1 << _BITS) | 1: 1})

    @classmethod
    def from_terms(cls, variables: Sequence[str],
                   terms: Mapping[tuple, Scalar]) -> "MPoly":
        vs = tuple(sorted(variables))
        n = len(vs)
        out: dict = {}
        for exps, c in terms.items():
            if len(exps) != n:
                raise ValueError("exponent vector length mismatch")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            key = sum(exps) << (n * _BITS)
            for i, e in enumerate(exps):
                key |= e << ((n - 1 - i) * _BITS)
            out[key] = out.get(key, 0) + _as_fraction(c)
        return cls(vs, out)

    # -- introspection -----------------------------------------------------

    @property
    def variables(self) -> tuple:
        return self._vars

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def term_count(self) -> int:
        return len(self._terms)

    def _shift(self, var: str) -> int:
        try:
            i = self._vars.index(var)
        except ValueError:
            raise ValueError(f"unknown variable: {var!r}") from None
        return (self._n - 1 - i) * _BITS

    def _unpack(self, key: int) -> tuple:
        n = self._n
        return tuple((key >> ((n - 1 - i) * _BITS)) & _MASK for i in range(n))

    def terms(self) -> Iterator[tuple]:
        """Yield (exponent_vector, coefficient) in descending graded-lex order."""
        for key in sorted(self._terms, reverse=True):
            yield self._unpack(key), self._terms[key]

    def coefficients(self) -> Iterator[Coeff]:
        for key in sorted(self._terms, reverse=True):
            yield self._terms[key]

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(self._terms) >> (self._n * _BITS)

    def degree(self, var: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        sh = self._shift(var)
        if not self._terms:
            return -1
        return max((k >> sh) & _MASK for k in self._terms)

    def coefficient(self, var: str, power: int) -> "MPoly":
        """The coefficient of var**power, over the remaining variables."""
        sh = self._shift(var)
        rest = tuple(v for v in self._vars if v != var)
        table = _remap_table(self._vars, rest)
        out: dict = {}
        for k, c in self._terms.items():
            if (k >> sh) & _MASK == power:
                kk = _remap_key(k - (power << sh) - (power << (self._n * _BITS)),
                                self._n, table)
                out[kk] = c
        return MPoly(rest, out, _clean_input=False)

    def constant_value(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1 and 0 in self._terms:
            return Fraction(self._terms[0])
        raise ValueError("polynomial is not constant")

    # -- ring operations ---------------------------------------------------

    def _aligned(self, other: "MPoly") -> tuple:
        if self._vars == other._vars:
            return self._vars, self._terms, other._terms
        union = tuple(sorted(set(self._vars) | set(other._vars)))
        return (union,
                _remap_terms(self._terms, self._vars, union),
                _remap_terms(other._terms, other._vars, union))

    def in_universe(self, variables: Sequence[str]) -> "MPoly":
        """The same polynomial re-expressed over a superset universe."""
        vs = tuple(sorted(variables))
        if vs == self._vars:
            return self
        if not set(self._vars) <= set(vs):
            raise ValueError("universe does not contain all variables")
        return MPoly(vs, _remap_terms(self._terms, self._vars, vs), _clean_input=False)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        vs, f, g = self._aligned(other)
        out = dict(f)
        get = out.get
        for k, c in g.items():
            out[k] = get(k, 0) + c
        return MPoly(vs, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        vs, f, g = self._aligned(other)
        return MPoly(vs, _dict_sub(f, g))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__sub__(self)

    def __neg__(self):
        return MPoly(self._vars, {k: -c for k, c in self._terms.items()},
                     _clean_input=False)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        vs, f, g = self._aligned(other)
        return MPoly(vs, _dict_mul(f, g))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, MPoly):
            raise TypeError("use monic_divrem for polynomial division")
        c = _as_fraction(scalar)
        if not c:
            raise ZeroDivisionError("division by zero")
        inv = 1 / c
        return MPoly(self._vars, {k: v * inv for k, v in self._terms.items()})

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MPoly(self._vars, {0: 1}, _clean_input=False)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        _, f, g = self._aligned(other)
        return f == g

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    # -- calculus and substitution ----------------------------------------

    def diff(self, var: str) -> "MPoly":
        """Partial derivative; the variable must be in the universe."""
        sh = self._shift(var)
        dsh = self._n * _BITS
        out: dict = {}
        for k, c in self._terms.items():
            e = (k >> sh) & _MASK
            if e:
                out[k - (1 << sh) - (1 << dsh)] = c * e
        return MPoly(self._vars, out)

    def substitute(self, bindings: Mapping[str, object]) -> "MPoly":
        """Simultaneous substitution of polynomials (or scalars) for variables.

        Bindings for variables outside the universe are inert.  Unbound
        variables pass through unchanged.
        """
        bound = {}
        for v, b in bindings.items():
            if v in self._vars:
                bound[v] = b if isinstance(b, MPoly) else MPoly.constant(b)
        if not bound or not self._terms:
            return self
        keep = tuple(v for v in self._vars if v not in bound)
        uni = set(keep)
        for b in bound.values():
            uni |= set(b._vars)
        target = tuple(sorted(uni))
        nt = len(target)
        bound_aligned = {v: _remap_terms(b._terms, b._vars, target)
                         for v, b in bound.items()}
        pow_cache: dict = {v: [{0: 1}] for v in bound}
        keep_table = _remap_table(self._vars, target)
        shifts = {v: self._shift(v) for v in bound}
        dsh = self._n * _BITS
        acc: dict = {}
        for k, c in self._terms.items():
            base = k
            for v, sh in shifts.items():
                e = (k >> sh) & _MASK
                base -= (e << sh) + (e << dsh)
            cur = {_remap_key(base, self._n, keep_table): c}
            for v, sh in shifts.items():
                e = (k >> sh) & _MASK
                if not e:
                    continue
                cache = pow_cache[v]
                while len(cache) <= e:
                    cache.append(_dict_mul(cache[-1], bound_aligned[v]))
                cur = _dict_mul(cur, cache[e])
            get = acc.get
            for kk, cc in cur.items():
                acc[kk] = get(kk, 0) + cc
        assert nt == len(target)
        return MPoly(target, acc)

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """Full evaluation at rational values for every variable."""
        missing = [v for v in self._vars if v not in values]
        if missing:
            raise ValueError(f"missing values for {missing}")
        return self.substitute(values).constant_value()

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"MPoly({format_poly(self)!r})"


def _coerce(x):
    if isinstance(x, MPoly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return MPoly.constant(x)
    return NotImplemented


def _remap_table(old: tuple, new: tuple) -> tuple:
    """Per-old-variable bit shifts in the new packing (degree field excluded)."""
    n_new = len(new)
    pos = {v: (n_new - 1 - i) * _BITS for i, v in enumerate(new)}
    return tuple(pos[v] for v in old if v in pos), tuple(
        i for i, v in enumerate(old) if v in pos), n_new

def _remap_key(key: int, n_old: int, table: tuple) -> int:
    shifts, idxs, n_new = table
    td = key >> (n_old * _BITS)
    out = td << (n_new * _BITS)
    for sh, i in zip(shifts, idxs):
        out |= ((key >> ((n_old - 1 - i) * _BITS)) & _MASK) << sh
    return out


def _remap_terms(terms: dict, old: tuple, new: tuple) -> dict:
    if old == new:
        return terms
    table = _remap_table(old, new)
    n_old = len(old)
    return {_remap_key(k, n_old, table): c for k, c in terms.items()}


# -- canonical text format -------------------------------------------------

def format_poly(f: MPoly) -> str:
    """Canonical text rendering; ``parse_poly(format_poly(f)) == f``."""
    if not f._terms:
        return "0"
    pieces = []
    for exps, c in f.terms():
        mono = "*".join(
            v if e == 1 else f"{v}^{e}"
            for v, e in zip(f._vars, exps) if e)
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        pieces.append((neg, body))
    first_neg, first = pieces[0]
    out = [("-" if first_neg else "") + first]
    for neg, body in pieces[1:]:
        out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|([+\-*/^]))")


def _tokenize(text: str) -> list:
    tokens = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if not m or m.end() == i:
            if text[i:].strip():
                raise ValueError(f"cannot parse polynomial near {text[i:i+12]!r}")
            break
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1))))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2)))
        else:
            tokens.append(("op", m.group(3)))
        i = m.end()
    return tokens


def parse_poly(text: str, variables: Iterable[str] = ()) -> MPoly:
    """Parse the canonical text format (signs, ``*`` factors, ``^`` powers,

    rational coefficients written ``p/q``).  Extra universe variables may be
    supplied; variables found in the text are added automatically.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    raw_terms = []
    names = set(variables)
    expect_term = True
    sign = 1
    while pos < len(tokens):
        kind, val = peek()
        if kind == "op" and val in "+-":
            if expect_term and val == "-":
                sign = -sign
            elif expect_term:
                pass
            else:
                sign = -1 if val == "-" else 1
                expect_term = True
            pos += 1
            continue
        if not expect_term:
            raise ValueError("missing operator between terms")
        # one term: factors joined by '*'
        coeff = Fraction(sign)
        exps: dict = {}
        while True:
            kind, val = peek()
            if kind == "num":
                pos += 1
                num = val
                if peek() == ("op", "/"):
                    pos += 1
                    kind2, den = peek()
                    if kind2 != "num" or den == 0:
                        raise ValueError("bad rational coefficient")
                    pos += 1
                    coeff *= Fraction(num, den)
                else:
                    coeff *= num
            elif kind == "name":
                pos += 1
                e = 1
                if peek() == ("op", "^"):
                    pos += 1
                    kind2, ev = peek()
                    if kind2 != "num":
                        raise ValueError("bad exponent")
                    pos += 1
                    e = ev
                names.add(val)
                exps[val] = exps.get(val, 0) + e
            else:
                raise ValueError("expected a coefficient or variable")
            if peek() == ("op", "*"):
                pos += 1
                continue
            break
        raw_terms.append((coeff, exps))
        sign = 1
        expect_term = False
    if expect_term and raw_terms:
        raise ValueError("dangling sign")
    vs = tuple(sorted(names))
    acc: dict = {}
    for coeff, exps in raw_terms:
        vec = tuple(exps.get(v, 0) for v in vs)
        key = sum(vec) << (len(vs) * _BITS)
        for i, e in enumerate(vec):
            key |= e << ((len(vs) - 1 - i) * _BITS)
        acc[key] = acc.get(key, 0) + coeff
    return MPoly(vs, acc)


# -- univariate-style division --------------------------------------------

def monic_divrem(f: MPoly, g: MPoly, var: str) -> tuple:
    """Euclidean division of f by g with respect to ``var``.

    g must be monic in ``var``: its leading coefficient, a polynomial in
    the remaining variables, must be the constant 1.  Returns (q, r) with
    f == q*g + r and deg_var(r) < deg_var(g).
    """
    if not isinstance(f, MPoly) or not isinstance(g, MPoly):
        raise TypeError("monic_divrem expects MPoly operands")
    vs, ft, gt = f._aligned(g)
    if var not in vs:
        raise ValueError(f"unknown variable: {var!r}")
    n = len(vs)
    sh = (n - 1 - vs.index(var)) * _BITS
    dsh = n * _BITS
    dg = max(((k >> sh) & _MASK for k in gt), default=-1)
    if dg < 0:
        raise ZeroDivisionError("division by the zero polynomial")
    lead = {k: c for k, c in gt.items() if (k >> sh) & _MASK == dg}
    if lead != {(dg << sh) | (dg << dsh): 1}:
        raise ValueError(f"divisor is not monic in {var!r}")
    r = dict(ft)
    q: dict = {}
    while True:
        dr = max(((k >> sh) & _MASK for k in r), default=-1)
        if dr < dg:
            break
        # stripping dg from the exponent leaves the quotient term at dr - dg
        qpart = {k - (dg << sh) - (dg << dsh): c
                 for k, c in r.items() if (k >> sh) & _MASK == dr}
        for k, c in qpart.items():
            q[k] = q.get(k, 0) + c
        r = {k: c for k, c in _dict_sub(r, _dict_mul(qpart, gt)).items() if c}
    return MPoly(vs, q), MPoly(vs, r)


# -- matrices and determinants --------------------------------------------

class PolyMatrix:
    """A dense rows x cols matrix of MPoly entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError("entry count does not match matrix shape")
        self.rows = rows
        self.cols = cols
        self.entries = [e if isinstance(e, MPoly) else MPoly.constant(e)
                        for e in entries]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "PolyMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, [e for row in rows for e in row])

    def entry(self, i: int, j: int) -> MPoly:
        return self.entries[i * self.cols + j]


def _det_cofactor(grid: list, n: int) -> dict:
    if n == 1:
        return dict(grid[0][0])
    if n == 2:
        return _dict_sub(_dict_mul(grid[0][0], grid[1][1]),
                         _dict_mul(grid[0][1], grid[1][0]))
    # n == 3
    acc: dict = {}
    for j in range(3):
        cols = [c for c in range(3) if c != j]
        minor = _dict_sub(_dict_mul(grid[1][cols[0]], grid[2][cols[1]]),
                          _dict_mul(grid[1][cols[1]], grid[2][cols[0]]))
        part = _dict_mul(grid[0][j], minor)
        get = acc.get
        for k, c in part.items():
            acc[k] = get(k, 0) + c if j != 1 else get(k, 0) - c
    return acc


def _det_bareiss(grid: list, n: int, nvars: int, integer_mode: bool) -> dict:
    sign = 1
    prev: dict = {}
    for k in range(n - 1):
        if not grid[k][k]:
            for i in range(k + 1, n):
                if grid[i][k]:
                    grid[k], grid[i] = grid[i], grid[k]
                    sign = -sign
                    break
            else:
                return {}
        piv = grid[k][k]
        for i in range(k + 1, n):
            rik = grid[i][k]
            row_i = grid[i]
            row_k = grid[k]
            for j in range(k + 1, n):
                num = _dict_mul(piv, row_i[j])
                if rik and row_k[j]:
                    num = _dict_sub(num, _dict_mul(rik, row_k[j]))
                num = {kk: c for kk, c in num.items() if c}
                if prev:
                    num = _dict_exact_div(num, prev, nvars, integer_mode)
                row_i[j] = num
            row_i[k] = {}
        prev = piv if len(piv) != 1 or 0 not in piv or piv[0] != 1 else {}
    out = grid[n - 1][n - 1]
    if sign < 0:
        out = {k: -c for k, c in out.items()}
    return out


def det_fraction_free(matrix) -> MPoly:
    """Exact determinant of a square PolyMatrix (or list of rows).

    Uses Bareiss fraction-free elimination with exact polynomial divisions;
    matrices below 4x4 go through direct cofactor expansion.
    """
    if not isinstance(matrix, PolyMatrix):
        matrix = PolyMatrix.from_rows(matrix)
    if matrix.rows != matrix.cols:
        raise ValueError("determinant of a non-square matrix")
    n = matrix.rows
    if n == 0:
        return MPoly.constant(1)
    uni: set = set()
    for e in matrix.entries:
        uni |= set(e._vars)
    vs = tuple(sorted(uni))
    nvars = len(vs)
    grid = [[_remap_terms(matrix.entry(i, j)._terms, matrix.entry(i, j)._vars, vs)
             for j in range(n)] for i in range(n)]
    if n <= 3:
        return MPoly(vs, _det_cofactor(grid, n))
    integer_mode = all(type(c) is int for row in grid for e in row for c in e.values())
    grid = [[dict(e) for e in row] for row in grid]
    return MPoly(vs, _det_bareiss(grid, n, nvars, integer_mode))
