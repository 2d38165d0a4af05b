# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled term-map kernels; semantics identical to e6inv._kernels_pure.

Term maps are Python dicts {packed key: coefficient in [1, p)}.  The heavy
loops run on C arrays and an open-addressing hash table (linear probing,
power-of-two size, golden-ratio multiplicative hash).  Zero-valued slots
are left in the table and filtered when the result dict is built.
"""

from cpython.dict cimport PyDict_Next, PyDict_SetItem
from cpython.mem cimport PyMem_Free, PyMem_Malloc
from cpython.object cimport PyObject
from cpython.long cimport PyLong_AsUnsignedLongLong, PyLong_AsLongLong

ctypedef unsigned long long u64
ctypedef long long i64

cdef u64 EMPTY = 0xFFFFFFFFFFFFFFFFULL
cdef u64 GOLD = 0x9E3779B97F4A7C15ULL

BACKEND = "compiled"


cdef struct Tab:
    u64 *keys
    long *vals
    u64 mask
    Py_ssize_t used
    int logsize


cdef int tab_init(Tab *t, int logsize) except -1:
    cdef Py_ssize_t n = (<Py_ssize_t> 1) << logsize
    cdef Py_ssize_t i
    t.keys = <u64 *> PyMem_Malloc(n * sizeof(u64))
    if t.keys == NULL:
        raise MemoryError()
    t.vals = <long *> PyMem_Malloc(n * sizeof(long))
    if t.vals == NULL:
        PyMem_Free(t.keys)
        raise MemoryError()
    for i in range(n):
        t.keys[i] = EMPTY
    t.mask = <u64> (n - 1)
    t.used = 0
    t.logsize = logsize
    return 0


cdef void tab_free(Tab *t):
    if t.keys != NULL:
        PyMem_Free(t.keys)
        t.keys = NULL
    if t.vals != NULL:
        PyMem_Free(t.vals)
        t.vals = NULL


cdef int tab_grow(Tab *t) except -1:
    cdef Tab nt
    cdef Py_ssize_t i, n = (<Py_ssize_t> 1) << t.logsize
    cdef u64 k, idx
    tab_init(&nt, t.logsize + 1)
    cdef int shift = 64 - nt.logsize
    for i in range(n):
        k = t.keys[i]
        if k != EMPTY:
            idx = (k * GOLD) >> shift
            while nt.keys[idx] != EMPTY:
                idx = (idx + 1) & nt.mask
            nt.keys[idx] = k
            nt.vals[idx] = t.vals[i]
    nt.used = t.used
    tab_free(t)
    t[0] = nt
    return 0


cdef inline int tab_add(Tab *t, u64 key, long add, long p) except -1:
    cdef u64 idx = (key * GOLD) >> (64 - t.logsize)
    cdef u64 k
    while True:
        k = t.keys[idx]
        if k == key:
            t.vals[idx] = (t.vals[idx] + add) % p
            return 0
        if k == EMPTY:
            t.keys[idx] = key
            t.vals[idx] = add % p
            t.used += 1
            if t.used * 10 > ((<Py_ssize_t> 1) << t.logsize) * 7:
                tab_grow(t)
            return 0
        idx = (idx + 1) & t.mask


cdef dict tab_export(Tab *t):
    cdef dict out = {}
    cdef Py_ssize_t i, n = (<Py_ssize_t> 1) << t.logsize
    cdef long v
    for i in range(n):
        if t.keys[i] != EMPTY:
            v = t.vals[i]
            if v:
                PyDict_SetItem(out, t.keys[i], v)
    return out


cdef int start_logsize(Py_ssize_t hint):
    cdef int ls = 4
    while ((<Py_ssize_t> 1) << ls) < hint and ls < 26:
        ls += 1
    return ls


cdef int dict_to_arrays(dict d, u64 **keys, long **vals) except -1:
    """Copy a term dict into freshly allocated C arrays; caller frees."""
    cdef Py_ssize_t n = len(d)
    cdef u64 *ks = <u64 *> PyMem_Malloc(max(n, 1) * sizeof(u64))
    cdef long *vs = <long *> PyMem_Malloc(max(n, 1) * sizeof(long))
    if ks == NULL or vs == NULL:
        if ks != NULL:
            PyMem_Free(ks)
        if vs != NULL:
            PyMem_Free(vs)
        raise MemoryError()
    cdef Py_ssize_t pos = 0, i = 0
    cdef PyObject *pk
    cdef PyObject *pv
    while PyDict_Next(d, &pos, &pk, &pv):
        ks[i] = PyLong_AsUnsignedLongLong(<object> pk)
        vs[i] = PyLong_AsLongLong(<object> pv)
        i += 1
    keys[0] = ks
    vals[0] = vs
    return 0


def mul(dict a, dict b, long p, u64 offkey):
    """Product of two term maps over GF(p)."""
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    cdef u64 *bk
    cdef long *bv
    dict_to_arrays(b, &bk, &bv)
    cdef Py_ssize_t nb = len(b)
    cdef Tab t
    cdef Py_ssize_t hint = len(a) * nb
    if hint > (1 << 22):
        hint = 1 << 22
    tab_init(&t, start_logsize(hint * 2))
    cdef Py_ssize_t pos = 0, j
    cdef PyObject *pk
    cdef PyObject *pv
    cdef u64 ka, base
    cdef long ca
    try:
        while PyDict_Next(a, &pos, &pk, &pv):
            ka = PyLong_AsUnsignedLongLong(<object> pk)
            ca = PyLong_AsLongLong(<object> pv)
            base = ka - offkey
            for j in range(nb):
                tab_add(&t, base + bk[j], ca * bv[j], p)
        return tab_export(&t)
    finally:
        tab_free(&t)
        PyMem_Free(bk)
        PyMem_Free(bv)


def add_scaled(dict a, dict b, long c, long p):
    """a + c*b over GF(p)."""
    c = c % p
    if not c or not b:
        return dict(a)
    cdef dict out = dict(a)
    cdef Py_ssize_t pos = 0
    cdef PyObject *pk
    cdef PyObject *pv
    cdef object v
    cdef long nv
    while PyDict_Next(b, &pos, &pk, &pv):
        v = out.get(<object> pk)
        if v is None:
            nv = (c * PyLong_AsLongLong(<object> pv)) % p
            if nv:
                out[<object> pk] = nv
        else:
            nv = (PyLong_AsLongLong(v) + c * PyLong_AsLongLong(<object> pv)) % p
            if nv:
                out[<object> pk] = nv
            else:
                del out[<object> pk]
    return out


def scalar_mul(dict a, long c, long p):
    c = c % p
    if not c:
        return {}
    if c == 1:
        return dict(a)
    cdef dict out = {}
    cdef Py_ssize_t pos = 0
    cdef PyObject *pk
    cdef PyObject *pv
    while PyDict_Next(a, &pos, &pk, &pv):
        out[<object> pk] = (c * PyLong_AsLongLong(<object> pv)) % p
    return out


def frobenius(dict a, long p, u64 offkey):
    """p-th power: exponents scale by p, coefficients fixed (Fermat)."""
    cdef u64 shift = (<u64> (p - 1)) * offkey
    cdef dict out = {}
    cdef Py_ssize_t pos = 0
    cdef PyObject *pk
    cdef PyObject *pv
    cdef u64 k
    while PyDict_Next(a, &pos, &pk, &pv):
        k = PyLong_AsUnsignedLongLong(<object> pk) * (<u64> p) - shift
        out[k] = <object> pv
    return out


def apply_var_table(dict a, int shift, u64 mask, list tables, long p):
    """Substitute one variable by a linear form, given expansion tables."""
    cdef Py_ssize_t ntab = len(tables)
    cdef Py_ssize_t total = 0
    cdef Py_ssize_t e, j
    for e in range(ntab):
        if tables[e] is not None:
            total += len(tables[e])
    cdef i64 *deltas = <i64 *> PyMem_Malloc(max(total, 1) * sizeof(i64))
    cdef long *mults = <long *> PyMem_Malloc(max(total, 1) * sizeof(long))
    cdef Py_ssize_t *offs = <Py_ssize_t *> PyMem_Malloc((ntab + 1) * sizeof(Py_ssize_t))
    if deltas == NULL or mults == NULL or offs == NULL:
        if deltas != NULL:
            PyMem_Free(deltas)
        if mults != NULL:
            PyMem_Free(mults)
        if offs != NULL:
            PyMem_Free(offs)
        raise MemoryError()
    cdef Py_ssize_t w = 0
    for e in range(ntab):
        offs[e] = w
        if tables[e] is not None:
            for item in tables[e]:
                deltas[w] = item[0]
                mults[w] = item[1]
                w += 1
    offs[ntab] = w
    cdef Tab t
    tab_init(&t, start_logsize(len(a) * 2))
    cdef Py_ssize_t pos = 0
    cdef PyObject *pk
    cdef PyObject *pv
    cdef u64 ka, ee
    cdef long ca
    try:
        while PyDict_Next(a, &pos, &pk, &pv):
            ka = PyLong_AsUnsignedLongLong(<object> pk)
            ca = PyLong_AsLongLong(<object> pv)
            ee = (ka >> shift) & mask
            if ee == 0:
                tab_add(&t, ka, ca, p)
                continue
            for j in range(offs[ee], offs[ee + 1]):
                tab_add(&t, <u64> (<i64> ka + deltas[j]), ca * mults[j], p)
        return tab_export(&t)
    finally:
        tab_free(&t)
        PyMem_Free(deltas)
        PyMem_Free(mults)
        PyMem_Free(offs)


def signed_permute(dict a, int nvars, int width, perm, flips, long p):
    """Permute equal-width variable fields, negating per odd flipped exponent."""
    cdef int i
    cdef int nv = nvars
    cdef int *cperm = <int *> PyMem_Malloc(nv * sizeof(int))
    cdef int *cflip = <int *> PyMem_Malloc(nv * sizeof(int))
    if cperm == NULL or cflip == NULL:
        if cperm != NULL:
            PyMem_Free(cperm)
        if cflip != NULL:
            PyMem_Free(cflip)
        raise MemoryError()
    for i in range(nv):
        cperm[i] = perm[i]
        cflip[i] = 1 if flips[i] else 0
    cdef u64 mask = ((<u64> 1) << width) - 1
    cdef dict out = {}
    cdef Py_ssize_t pos = 0
    cdef PyObject *pk
    cdef PyObject *pv
    cdef u64 ka, nk, e
    cdef long c
    cdef int neg
    try:
        while PyDict_Next(a, &pos, &pk, &pv):
            ka = PyLong_AsUnsignedLongLong(<object> pk)
            nk = 0
            neg = 0
            for i in range(nv):
                e = (ka >> (i * width)) & mask
                if e:
                    nk |= e << (cperm[i] * width)
                    if cflip[i] and (e & 1):
                        neg ^= 1
            c = PyLong_AsLongLong(<object> pv)
            if neg:
                c = (c * (p - 1)) % p
            out[nk] = c
        return out
    finally:
        PyMem_Free(cperm)
        PyMem_Free(cflip)


def graded_split(dict a, int nvars, shifts, masks, weights):
    """Split a term map by weighted degree; returns {degree: term map}."""
    cdef int nv = nvars
    cdef int *csh = <int *> PyMem_Malloc(nv * sizeof(int))
    cdef u64 *cma = <u64 *> PyMem_Malloc(nv * sizeof(u64))
    cdef long *cwt = <long *> PyMem_Malloc(nv * sizeof(long))
    if csh == NULL or cma == NULL or cwt == NULL:
        if csh != NULL:
            PyMem_Free(csh)
        if cma != NULL:
            PyMem_Free(cma)
        if cwt != NULL:
            PyMem_Free(cwt)
        raise MemoryError()
    cdef int i
    for i in range(nv):
        csh[i] = shifts[i]
        cma[i] = masks[i]
        cwt[i] = weights[i]
    cdef dict out = {}
    cdef object bucket
    cdef Py_ssize_t pos = 0
    cdef PyObject *pk
    cdef PyObject *pv
    cdef u64 ka, e
    cdef long d
    try:
        while PyDict_Next(a, &pos, &pk, &pv):
            ka = PyLong_AsUnsignedLongLong(<object> pk)
            d = 0
            for i in range(nv):
                e = (ka >> csh[i]) & cma[i]
                if e:
                    d += (<long> e) * cwt[i]
            bucket = out.get(d)
            if bucket is None:
                out[d] = {(<object> pk): (<object> pv)}
            else:
                (<dict> bucket)[<object> pk] = <object> pv
        return out
    finally:
        PyMem_Free(csh)
        PyMem_Free(cma)
        PyMem_Free(cwt)
