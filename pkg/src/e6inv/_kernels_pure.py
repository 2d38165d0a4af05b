"""Pure-Python term-map kernels.

A polynomial is a dict mapping a packed monomial key (int) to a nonzero
coefficient in [1, p).  Exponents are packed into fixed-width bit fields,
one field per variable, lowest field = first declared variable.  Rings with
an inverted variable store exponents with a per-field offset baked into the
key; `offkey` is the packed key of the all-zero monomial for such rings
(0 for ordinary rings), and multiplication corrects for it with a single
subtraction since offsets add up termwise.

The compiled kernel in ``e6inv._speedups`` implements the same functions
with identical semantics; ``e6inv.backend`` picks one at import time.
"""

from __future__ import annotations


def mul(a: dict, b: dict, p: int, offkey: int) -> dict:
    """Product of two term maps over GF(p)."""
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    bi = list(b.items())
    for ka, ca in a.items():
        base = ka - offkey
        for kb, cb in bi:
            k = base + kb
            c = get(k)
            if c is None:
                out[k] = ca * cb % p
            else:
                c = (c + ca * cb) % p
                if c:
                    out[k] = c
                else:
                    del out[k]
    return out


def add_scaled(a: dict, b: dict, c: int, p: int) -> dict:
    """a + c*b over GF(p)."""
    c %= p
    if not c or not b:
        return dict(a)
    out = dict(a)
    get = out.get
    for k, cb in b.items():
        v = get(k)
        if v is None:
            out[k] = c * cb % p
        else:
            v = (v + c * cb) % p
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def scalar_mul(a: dict, c: int, p: int) -> dict:
    c %= p
    if not c:
        return {}
    if c == 1:
        return dict(a)
    return {k: v * c % p for k, v in a.items()}


def frobenius(a: dict, p: int, offkey: int) -> dict:
    """p-th power via the Frobenius: exponents scale by p, coefficients fixed.

    Valid over GF(p) only; the caller guarantees the scaled exponents still
    fit their bit fields.
    """
    shift = (p - 1) * offkey
    return {k * p - shift: v for k, v in a.items()}


def apply_var_table(a: dict, shift: int, mask: int, tables, p: int) -> dict:
    """Substitute one variable by a linear form, given expansion tables.

    ``tables[e]`` lists ``(key_delta, mult)`` pairs describing the expansion
    of (old monomial with exponent e in the target variable) into new
    monomials; used for shears v_i -> v_i + c*v_j and scalings v_i -> c*v_i.
    """
    out: dict = {}
    get = out.get
    for k, ca in a.items():
        e = (k >> shift) & mask
        if e == 0:
            v = get(k)
            if v is None:
                out[k] = ca
            else:
                v = (v + ca) % p
                if v:
                    out[k] = v
                else:
                    del out[k]
            continue
        for delta, m in tables[e]:
            kk = k + delta
            c = ca * m % p
            if not c:
                continue
            v = get(kk)
            if v is None:
                out[kk] = c
            else:
                v = (v + c) % p
                if v:
                    out[kk] = v
                else:
                    del out[kk]
    return out


def signed_permute(a: dict, nvars: int, width: int, perm, flips, p: int) -> dict:
    """Permute variables (uniform field width) with optional sign flips.

    ``perm[i]`` is the destination slot of variable i; ``flips[i]`` nonzero
    negates the monomial once per odd exponent of variable i.
    """
    mask = (1 << width) - 1
    out: dict = {}
    pm1 = p - 1
    for k, c in a.items():
        nk = 0
        neg = 0
        for i in range(nvars):
            e = (k >> (i * width)) & mask
            if e:
                nk |= e << (perm[i] * width)
                if flips[i] and (e & 1):
                    neg ^= 1
        out[nk] = c * pm1 % p if neg else c
    return out


def graded_split(a: dict, nvars: int, shifts, masks, weights) -> dict:
    """Split a term map by weighted degree; returns {degree: term map}."""
    out: dict = {}
    for k, c in a.items():
        d = 0
        for i in range(nvars):
            e = (k >> shifts[i]) & masks[i]
            if e:
                d += e * weights[i]
        bucket = out.get(d)
        if bucket is None:
            out[d] = {k: c}
        else:
            bucket[k] = c
    return out


BACKEND = "pure"
