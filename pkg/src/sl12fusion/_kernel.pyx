# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled incremental integer echelon.

Rows live in a flat int64 buffer.  Every multiply and subtract is overflow
checked; on the first overflow the instance migrates its rows to the
pure-Python implementation and keeps working with arbitrary precision, so
results never depend on which path ran.
"""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy

from sl12fusion._kernel_py import Echelon as _PyEchelon

cdef extern from *:
    """
    static inline int sl12_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int sl12_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int sl12_mul_ovf(long long a, long long b, long long *r) nogil
    int sl12_sub_ovf(long long a, long long b, long long *r) nogil

cdef long long LIMIT = 1LL << 62
cdef long long SOFT = 1LL << 40


cdef inline long long _abs(long long a) nogil:
    return -a if a < 0 else a


cdef inline long long _gcd(long long a, long long b) nogil:
    a = _abs(a)
    b = _abs(b)
    while b:
        a, b = b, a % b
    return a


cdef long long _content(long long *v, int n) nogil:
    cdef long long g = 0
    cdef int j
    for j in range(n):
        if v[j]:
            g = _gcd(g, v[j])
            if g == 1:
                return 1
    return g


class _Overflow(Exception):
    pass


cdef class Echelon:
    cdef readonly int n
    cdef long long *data
    cdef int *piv
    cdef int nrows
    cdef int cap
    cdef object big
    cdef long long *work

    def __cinit__(self, int n):
        self.n = n
        self.nrows = 0
        self.cap = 0
        self.data = NULL
        self.piv = NULL
        self.big = None
        self.work = <long long *> malloc(max(n, 1) * sizeof(long long))
        if self.work == NULL:
            raise MemoryError()

    def __dealloc__(self):
        free(self.data)
        free(self.piv)
        free(self.work)

    def __len__(self):
        if self.big is not None:
            return len(self.big)
        return self.nrows

    @property
    def rows(self):
        if self.big is not None:
            return self.big.rows
        return [[self.data[i * self.n + j] for j in range(self.n)] for i in range(self.nrows)]

    @property
    def pivots(self):
        if self.big is not None:
            return self.big.pivots
        return [self.piv[i] for i in range(self.nrows)]

    @property
    def compiled(self):
        return self.big is None

    cdef void _migrate(self):
        py = _PyEchelon(self.n)
        py.rows = self.rows
        py.pivots = self.pivots
        self.big = py

    cdef int _load(self, vec) except -1:
        cdef int j = 0
        cdef object x
        if len(vec) != self.n:
            raise ValueError("length mismatch")
        for x in vec:
            if x >= LIMIT or x <= -LIMIT:
                return 1
            self.work[j] = x
            j += 1
        return 0

    cdef int _reduce_work(self, int k) nogil:
        # returns 1 on overflow, 0 otherwise; result left in self.work
        cdef int i, j, p, n = self.n
        cdef long long a, b, g, t1, t2, r, big
        cdef long long *row
        cdef long long *v = self.work
        for i in range(k):
            p = self.piv[i]
            a = v[p]
            if a == 0:
                continue
            row = self.data + i * n
            b = row[p]
            g = _gcd(a, b)
            a = a // g
            b = b // g
            big = 0
            if b == 1:
                for j in range(p, n):
                    r = row[j]
                    if r:
                        if sl12_mul_ovf(a, r, &t1):
                            return 1
                        if sl12_sub_ovf(v[j], t1, &t2):
                            return 1
                        v[j] = t2
                        if _abs(t2) > big:
                            big = _abs(t2)
            else:
                for j in range(n):
                    if sl12_mul_ovf(b, v[j], &t1):
                        return 1
                    if sl12_mul_ovf(a, row[j], &t2):
                        return 1
                    if sl12_sub_ovf(t1, t2, &r):
                        return 1
                    v[j] = r
                    if _abs(r) > big:
                        big = _abs(r)
            if big > SOFT:
                g = _content(v, n)
                if g > 1:
                    for j in range(n):
                        v[j] = v[j] // g
        for j in range(n):
            if v[j] >= LIMIT or v[j] <= -LIMIT:
                return 1
        return 0

    cdef object _residual(self):
        cdef int j, lead = -1, n = self.n
        cdef long long g
        cdef long long *v = self.work
        for j in range(n):
            if v[j]:
                lead = j
                break
        if lead < 0:
            return None
        g = _content(v, n)
        if v[lead] < 0:
            g = -g
        return [v[j] // g for j in range(n)]

    def reduce(self, vec, int limit=-1):
        cdef int k = self.nrows if limit < 0 or limit > self.nrows else limit
        if self.big is not None:
            return self.big.reduce(vec, limit)
        if self._load(vec) or self._reduce_work(k):
            self._migrate()
            return self.big.reduce(vec, limit)
        return self._residual()

    def add(self, vec):
        cdef int j, p = -1, n = self.n
        if self.big is not None:
            return self.big.add(vec)
        res = self.reduce(vec)
        if self.big is not None:
            # migrated during reduction
            return self.big.add(vec)
        if res is None:
            return False
        if self.nrows == self.cap:
            self.cap = max(8, 2 * self.cap)
            self.data = <long long *> realloc(self.data, self.cap * max(n, 1) * sizeof(long long))
            self.piv = <int *> realloc(self.piv, self.cap * sizeof(int))
            if self.data == NULL or self.piv == NULL:
                raise MemoryError()
        for j in range(n):
            self.data[self.nrows * n + j] = res[j]
            if p < 0 and res[j]:
                p = j
        self.piv[self.nrows] = p
        self.nrows += 1
        return True

    def contains(self, vec, int limit=-1):
        return self.reduce(vec, limit) is None

    def copy(self, int limit=-1):
        cdef int k = self.nrows if limit < 0 or limit > self.nrows else limit
        cdef Echelon e = Echelon(self.n)
        if self.big is not None:
            e.big = self.big.copy(limit)
            return e
        if k:
            e.cap = k
            e.data = <long long *> malloc(k * max(self.n, 1) * sizeof(long long))
            e.piv = <int *> malloc(k * sizeof(int))
            memcpy(e.data, self.data, k * self.n * sizeof(long long))
            memcpy(e.piv, self.piv, k * sizeof(int))
            e.nrows = k
        return e
