"""Exact sparse multivariate polynomials over GF(p) and over Q.

Representation
--------------
A ring declares an ordered list of variables, each with an integer grading
weight (its polynomial degree; cohomological degree is twice that).  A
monomial packs one exponent per variable into fixed-width bit fields of a
single int key, first declared variable in the lowest field.  A polynomial
is a dict {key: coefficient}, zero coefficients never stored.  This makes
equality canonical and keeps the hot loops (see e6inv.backend) operating on
flat int->int dicts.

A ring may mark one variable as invertible (x4 in every use here); its
exponents are stored shifted by a per-field offset so they can go negative.

The canonical term order is graded lexicographic: compare weighted degree,
then the packed key itself, which makes later-declared variables more
significant (t < t1 < ... < t5 in the base ring).  Text format: terms
joined by " + ", each "c*v1^e1*v2^e2" with unit coefficients and unit
exponents omitted; "0" for the zero polynomial.  The parser also accepts
"-" between terms as multiplication by p-1.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from e6inv import backend


class RingMismatchError(ValueError):
    """Operands live in different rings."""


class StructuralError(ValueError):
    """Operation precondition violated (unmapped variable, zero input, ...)."""


Coeff = Union[int, Fraction]


class PolyRing:
    """Ambient ring metadata: variables, grading, prime, key packing."""

    def __init__(
        self,
        name: str,
        variables: Iterable[tuple[str, int]],
        prime: int = 3,
        width: int | None = None,
        widths: Iterable[int] | None = None,
        invertible: Iterable[str] = (),
    ):
        self.name = name
        vars_ = list(variables)
        self.varnames = [v for v, _ in vars_]
        self.degrees = [d for _, d in vars_]
        self.prime = prime
        self.nvars = len(vars_)
        if widths is None:
            if width is None:
                width = max(4, 60 // max(self.nvars, 1))
            widths = [width] * self.nvars
        self.widths = list(widths)
        if sum(self.widths) > 63:
            raise ValueError(f"packed key too wide for ring {name}")
        self.shifts = []
        s = 0
        for w in self.widths:
            self.shifts.append(s)
            s += w
        self.masks = [(1 << w) - 1 for w in self.widths]
        self.index = {v: i for i, v in enumerate(self.varnames)}
        inv = set(invertible)
        unknown = inv - set(self.varnames)
        if unknown:
            raise ValueError(f"invertible variables not in ring: {unknown}")
        self.invertible = inv
        self.offsets = [
            (1 << (self.widths[i] - 1)) if self.varnames[i] in inv else 0
            for i in range(self.nvars)
        ]
        self.offkey = sum(o << s for o, s in zip(self.offsets, self.shifts))
        self.degree_bias = sum(o * d for o, d in zip(self.offsets, self.degrees))
        self._var_cache: dict[str, SparsePoly] = {}

    # -- packing ----------------------------------------------------------

    def pack(self, exps: Iterable[int]) -> int:
        key = 0
        for i, e in enumerate(exps):
            ee = e + self.offsets[i]
            if ee < 0 or ee > self.masks[i]:
                raise OverflowError(
                    f"exponent {e} of {self.varnames[i]} out of range in {self.name}"
                )
            key |= ee << self.shifts[i]
        return key

    def unpack(self, key: int) -> tuple[int, ...]:
        return tuple(
            ((key >> self.shifts[i]) & self.masks[i]) - self.offsets[i]
            for i in range(self.nvars)
        )

    def key_degree(self, key: int) -> int:
        d = 0
        for i in range(self.nvars):
            d += ((key >> self.shifts[i]) & self.masks[i]) * self.degrees[i]
        return d - self.degree_bias

    def order_key(self, key: int) -> tuple[int, int]:
        return (self.key_degree(key), key)

    # -- element constructors ---------------------------------------------

    def _norm(self, c: Coeff) -> Coeff:
        if self.prime:
            if isinstance(c, Fraction):
                if c.denominator % self.prime == 0:
                    raise StructuralError(
                        f"denominator {c.denominator} not invertible mod {self.prime}"
                    )
                return (
                    c.numerator
                    * pow(c.denominator, self.prime - 2, self.prime)
                    % self.prime
                )
            return int(c) % self.prime
        return Fraction(c)

    def zero(self) -> "SparsePoly":
        return SparsePoly(self, {})

    def one(self) -> "SparsePoly":
        return self.const(1)

    def const(self, c: Coeff) -> "SparsePoly":
        c = self._norm(c)
        if not c:
            return SparsePoly(self, {})
        return SparsePoly(self, {self.offkey: c})

    def var(self, name: str) -> "SparsePoly":
        p = self._var_cache.get(name)
        if p is None:
            if name not in self.index:
                raise StructuralError(f"no variable {name!r} in ring {self.name}")
            exps = [0] * self.nvars
            exps[self.index[name]] = 1
            p = SparsePoly(self, {self.pack(exps): self._norm(1)})
            self._var_cache[name] = p
        return p

    def monomial(self, exps: Mapping[str, int], coeff: Coeff = 1) -> "SparsePoly":
        c = self._norm(coeff)
        if not c:
            return self.zero()
        ee = [0] * self.nvars
        for v, e in exps.items():
            if v not in self.index:
                raise StructuralError(f"no variable {v!r} in ring {self.name}")
            ee[self.index[v]] = e
        return SparsePoly(self, {self.pack(ee): c})

    def linear(self, coeffs: Mapping[str, Coeff], const: Coeff = 0) -> "SparsePoly":
        out = self.const(const)
        for v, c in coeffs.items():
            out = out + self.var(v) * c
        return out

    def from_terms(self, terms: dict) -> "SparsePoly":
        return SparsePoly(self, terms)

    # -- text format --------------------------------------------------------

    _TOKEN = re.compile(r"\s*([A-Za-z][A-Za-z0-9]*|\d+/\d+|\d+|\*\*|[\^*+-])")

    def parse(self, text: str) -> "SparsePoly":
        """Parse the text format; whitespace-tolerant, '-' negates a term."""
        pos = 0
        tokens = []
        while pos < len(text):
            m = self._TOKEN.match(text, pos)
            if not m:
                if text[pos:].strip():
                    raise StructuralError(
                        f"bad polynomial text at {text[pos:pos + 20]!r}"
                    )
                break
            tokens.append(m.group(1))
            pos = m.end()
        out = self.zero()
        i = 0
        n = len(tokens)
        sign = 1
        while i < n:
            t = tokens[i]
            if t == "+":
                sign = 1
                i += 1
                continue
            if t == "-":
                sign = -sign
                i += 1
                continue
            coeff: Coeff = Fraction(1)
            exps: dict[str, int] = {}
            saw_factor = False
            while i < n and tokens[i] not in ("+", "-"):
                tok = tokens[i]
                if tok == "*":
                    i += 1
                    continue
                if tok[0].isdigit():
                    coeff = coeff * Fraction(tok)
                    saw_factor = True
                    i += 1
                    continue
                vname = tok
                e = 1
                i += 1
                if i < n and tokens[i] in ("^", "**"):
                    i += 1
                    neg = False
                    if i < n and tokens[i] == "-":
                        neg = True
                        i += 1
                    if i >= n or not tokens[i].isdigit():
                        raise StructuralError("missing exponent")
                    e = int(tokens[i])
                    if neg:
                        e = -e
                    i += 1
                exps[vname] = exps.get(vname, 0) + e
                saw_factor = True
            if not saw_factor:
                raise StructuralError("dangling sign in polynomial text")
            term = self.monomial(exps, coeff)
            out = out + term if sign == 1 else out - term
            sign = 1
        return out

    def __repr__(self):
        return f"PolyRing({self.name})"


class SparsePoly:
    """Immutable-by-convention sparse polynomial bound to a PolyRing."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- basics -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.ring is other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self == self.ring.const(other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def _check(self, other: "SparsePoly"):
        if self.ring is not other.ring:
            raise RingMismatchError(
                f"cannot combine {self.ring.name} with {other.ring.name}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        self._check(other)
        p = self.ring.prime
        if p:
            return SparsePoly(
                self.ring, backend.K.add_scaled(self.terms, other.terms, 1, p)
            )
        return SparsePoly(self.ring, _q_add_scaled(self.terms, other.terms, Fraction(1)))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        self._check(other)
        p = self.ring.prime
        if p:
            return SparsePoly(
                self.ring, backend.K.add_scaled(self.terms, other.terms, p - 1, p)
            )
        return SparsePoly(self.ring, _q_add_scaled(self.terms, other.terms, Fraction(-1)))

    def __neg__(self):
        p = self.ring.prime
        if p:
            return SparsePoly(self.ring, backend.K.scalar_mul(self.terms, p - 1, p))
        return SparsePoly(self.ring, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = self.ring._norm(other)
            p = self.ring.prime
            if p:
                return SparsePoly(self.ring, backend.K.scalar_mul(self.terms, c, p))
            if not c:
                return self.ring.zero()
            return SparsePoly(self.ring, {k: v * c for k, v in self.terms.items()})
        self._check(other)
        p = self.ring.prime
        if p:
            return SparsePoly(
                self.ring, backend.K.mul(self.terms, other.terms, p, self.ring.offkey)
            )
        return SparsePoly(self.ring, _q_mul(self.terms, other.terms, self.ring.offkey))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        ring = self.ring
        if n < 0:
            # only monomials are invertible, and only where the ring allows
            # the negated exponents
            if len(self.terms) != 1 or not ring.prime:
                raise StructuralError("negative power of a non-monomial")
            (k, c), = self.terms.items()
            ik = 2 * ring.offkey - k
            exps = ring.unpack(ik)
            ring.pack(exps)  # range check; raises if not representable
            cinv = pow(int(c), ring.prime - 2, ring.prime)
            return SparsePoly(ring, {ik: cinv}) ** (-n)
        if n == 0:
            return ring.one()
        p = ring.prime
        if p and not ring.offkey:
            # write n in base p; p-th powers are Frobenius twists (free)
            result = None
            base = self
            nn = n
            while nn:
                d = nn % p
                if d:
                    piece = base
                    for _ in range(d - 1):
                        piece = piece * base
                    result = piece if result is None else result * piece
                nn //= p
                if nn:
                    base = SparsePoly(ring, backend.K.frobenius(base.terms, p, 0))
            return result
        result = ring.one()
        base = self
        while True:
            if n & 1:
                result = result * base
            n >>= 1
            if not n:
                return result
            base = base * base

    def frobenius(self) -> "SparsePoly":
        """p-th power (exact and cheap in characteristic p)."""
        p = self.ring.prime
        if not p:
            raise StructuralError("Frobenius needs prime characteristic")
        return SparsePoly(
            self.ring, backend.K.frobenius(self.terms, p, self.ring.offkey)
        )

    # -- grading ------------------------------------------------------------

    def degree(self) -> int:
        """Polynomial degree (max weighted degree of a term); -1 for zero."""
        if not self.terms:
            return -1
        kd = self.ring.key_degree
        return max(kd(k) for k in self.terms)

    def cohomological_degree(self) -> int:
        return 2 * self.degree()

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        kd = self.ring.key_degree
        it = iter(self.terms)
        d0 = kd(next(it))
        return all(kd(k) == d0 for k in it)

    def graded_parts(self) -> dict[int, "SparsePoly"]:
        """Split into homogeneous parts, keyed by cohomological degree."""
        ring = self.ring
        raw = backend.K.graded_split(
            self.terms, ring.nvars, ring.shifts, ring.masks, ring.degrees
        )
        return {2 * (d - ring.degree_bias): SparsePoly(ring, t) for d, t in raw.items()}

    def graded_component(self, cohomological_degree: int) -> "SparsePoly":
        """Terms of exactly the given cohomological degree."""
        if cohomological_degree % 2:
            return self.ring.zero()
        want = cohomological_degree // 2
        ring = self.ring
        kd = ring.key_degree
        return SparsePoly(ring, {k: c for k, c in self.terms.items() if kd(k) == want})

    def leading_term(self) -> tuple[int, Coeff]:
        if not self.terms:
            raise StructuralError("zero polynomial has no leading term")
        k = max(self.terms, key=self.ring.order_key)
        return k, self.terms[k]

    def leading_form(self, weights: Mapping[str, Optional[int]]) -> "SparsePoly":
        """Sum of the minimal-weight terms under a variable weighting.

        A weight of None means +infinity: terms containing such a variable
        are dropped, unless every term does, in which case the image in the
        associated graded ring is zero and the zero polynomial is returned.
        """
        if not self.terms:
            raise StructuralError("leading_form of zero polynomial")
        ring = self.ring
        wvec = []
        for v in ring.varnames:
            if v not in weights:
                raise StructuralError(f"no weight for variable {v!r}")
            wvec.append(weights[v])
        best: Optional[int] = None
        bucket: dict = {}
        for k, c in self.terms.items():
            w = 0
            infinite = False
            for i in range(ring.nvars):
                e = ((k >> ring.shifts[i]) & ring.masks[i]) - ring.offsets[i]
                if not e:
                    continue
                if wvec[i] is None:
                    infinite = True
                    break
                w += e * wvec[i]
            if infinite:
                continue
            if best is None or w < best:
                best = w
                bucket = {k: c}
            elif w == best:
                bucket[k] = c
        return SparsePoly(ring, bucket)

    # -- substitution ---------------------------------------------------------

    def substitute(
        self, mapping: Mapping[str, "SparsePoly"], target: PolyRing | None = None
    ) -> "SparsePoly":
        """Ring-homomorphism image under variable -> polynomial assignments.

        Every variable occurring in self with nonzero exponent must be
        mapped; all images must share one target ring.
        """
        ring = self.ring
        if target is None:
            for img in mapping.values():
                target = img.ring
                break
            if target is None:
                target = ring
        for img in mapping.values():
            if img.ring is not target:
                raise RingMismatchError("substitution images in different rings")
        idx_map: list[Optional[SparsePoly]] = [None] * ring.nvars
        for v, img in mapping.items():
            if v not in ring.index:
                raise StructuralError(f"no variable {v!r} in ring {ring.name}")
            idx_map[ring.index[v]] = img
        pow_cache: dict[tuple[int, int], dict] = {}
        p = target.prime

        def power(i: int, e: int) -> dict:
            got = pow_cache.get((i, e))
            if got is None:
                got = (idx_map[i] ** e).terms
                pow_cache[(i, e)] = got
            return got

        acc: dict = {}
        for k, c in self.terms.items():
            prod: Optional[dict] = None
            for i in range(ring.nvars):
                e = ((k >> ring.shifts[i]) & ring.masks[i]) - ring.offsets[i]
                if not e:
                    continue
                if idx_map[i] is None:
                    raise StructuralError(
                        f"unmapped variable {ring.varnames[i]!r} with nonzero exponent"
                    )
                pw = power(i, e)
                if prod is None:
                    prod = pw
                elif p:
                    prod = backend.K.mul(prod, pw, p, target.offkey)
                else:
                    prod = _q_mul(prod, pw, target.offkey)
            if prod is None:
                prod = {target.offkey: 1}
            if p:
                acc = backend.K.add_scaled(acc, prod, int(c), p)
            else:
                acc = _q_add_scaled(acc, prod, Fraction(c))
        return SparsePoly(target, acc)

    # -- division ---------------------------------------------------------------

    def exact_divide(self, g: "SparsePoly"):
        """Exact division: returns (quotient, None) or (None, witness).

        Repeated cancellation of the canonical leading term.  If at some
        step the divisor's leading monomial does not divide the remainder's
        leading monomial, the current remainder is returned as the
        non-divisibility witness (second slot).
        """
        self._check(g)
        if g.is_zero():
            raise StructuralError("division by zero polynomial")
        ring = self.ring
        p = ring.prime
        if not p:
            raise StructuralError("exact_divide implemented for GF(p) rings only")
        if not self.terms:
            return ring.zero(), None
        gk, gc = g.leading_term()
        gexp = [(gk >> s) & m for s, m in zip(ring.shifts, ring.masks)]
        gc_inv = pow(int(gc), p - 2, p)
        inv_field = [bool(o) for o in ring.offsets]

        def try_quotient_key(rk: int) -> Optional[int]:
            nk = ring.offkey
            for i in range(ring.nvars):
                e = ((rk >> ring.shifts[i]) & ring.masks[i]) - gexp[i]
                if not inv_field[i]:
                    if e < 0:
                        return None
                    nk |= e << ring.shifts[i]
                else:
                    e += ring.offsets[i]  # gexp included the offset once
                    if e < 0 or e > ring.masks[i]:
                        return None
                    nk = (nk & ~(ring.masks[i] << ring.shifts[i])) | (
                        e << ring.shifts[i]
                    )
            return nk

        rem = dict(self.terms)
        qterms: dict = {}
        kd = ring.key_degree
        heap: list[tuple[int, int]] = [(-kd(k), -k) for k in rem]
        heapq.heapify(heap)
        gitems = g.terms
        while heap:
            d, nk_ = heapq.heappop(heap)
            rk = -nk_
            if rk not in rem:
                continue
            qk = try_quotient_key(rk)
            if qk is None:
                return None, SparsePoly(ring, rem)
            qc = rem[rk] * gc_inv % p
            qterms[qk] = qc
            piece = backend.K.mul({qk: qc}, gitems, p, ring.offkey)
            rem = backend.K.add_scaled(rem, piece, p - 1, p)
            for k in piece:
                if k in rem and k != rk:
                    heapq.heappush(heap, (-kd(k), -k))
        if rem:
            return None, SparsePoly(ring, rem)
        return SparsePoly(ring, qterms), None

    # -- display ---------------------------------------------------------------

    def sorted_terms(self):
        return sorted(
            self.terms.items(), key=lambda kv: self.ring.order_key(kv[0]), reverse=True
        )

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        ring = self.ring
        parts = []
        for k, c in self.sorted_terms():
            factors = []
            for i in range(ring.nvars):
                e = ((k >> ring.shifts[i]) & ring.masks[i]) - ring.offsets[i]
                if not e:
                    continue
                if e == 1:
                    factors.append(ring.varnames[i])
                else:
                    factors.append(f"{ring.varnames[i]}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        text = self.to_text()
        if len(text) > 120:
            text = f"<{len(self.terms)} terms, degree {self.degree()}>"
        return f"SparsePoly({self.ring.name}: {text})"


# -- rational-coefficient kernels (root-system support; no speed demands) ----


def _q_mul(a: dict, b: dict, offkey: int) -> dict:
    out: dict = {}
    for ka, ca in a.items():
        base = ka - offkey
        for kb, cb in b.items():
            k = base + kb
            c = out.get(k)
            if c is None:
                out[k] = ca * cb
            else:
                c = c + ca * cb
                if c:
                    out[k] = c
                else:
                    del out[k]
    return out


def _q_add_scaled(a: dict, b: dict, c: Fraction) -> dict:
    out = dict(a)
    for k, cb in b.items():
        v = out.get(k)
        if v is None:
            out[k] = c * cb
        else:
            v = v + c * cb
            if v:
                out[k] = v
            else:
                del out[k]
    return out
