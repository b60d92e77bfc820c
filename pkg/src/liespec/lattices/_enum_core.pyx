# cython: boundscheck=False, wraparound=False, cdivision=True
# Short-vector enumeration on an integer quadratic form.
#
# Floating point is used only to steer the search: every coordinate interval
# is widened by a slack margin plus one full unit on each side, and every
# candidate leaf is verified exactly in 64-bit integer arithmetic before it
# is emitted.  The wrapper only routes problems here whose integer sizes
# make the exact leaf accumulation overflow-free (see enumeration module),
# and the pure-Python kernel answers everything else.

from libc.math cimport ceil, floor, sqrt

DEF MAXDIM = 16


cdef class _Enum:
    cdef int m
    cdef long long a[MAXDIM][MAXDIM]
    cdef double d[MAXDIM]
    cdef double u[MAXDIM][MAXDIM]
    cdef long long x[MAXDIM]
    cdef long long bound
    cdef double budget
    cdef list out

    cdef int rec(self, int i, double used, bint zerotail) except -1:
        cdef double c = 0.0
        cdef double remaining, s, r, eps, t2
        cdef long long lo, hi, xi, q
        cdef int j, k
        cdef bint zt
        remaining = self.budget - used
        if remaining < 0:
            return 0
        for j in range(i + 1, self.m):
            c += self.u[i][j] * self.x[j]
        s = remaining / self.d[i]
        if s < 0:
            s = 0
        r = sqrt(s)
        eps = 1e-9 * (1.0 + (c if c >= 0 else -c) + r) + 1e-12
        lo = <long long> ceil(-c - r - eps) - 1
        hi = <long long> floor(-c + r + eps) + 1
        if zerotail and lo < 0:
            lo = 0
        for xi in range(lo, hi + 1):
            t2 = used + self.d[i] * (xi + c) * (xi + c)
            if t2 > self.budget:
                continue
            self.x[i] = xi
            zt = zerotail and xi == 0
            if i > 0:
                self.rec(i - 1, t2, zt)
            elif not zt:
                q = 0
                for j in range(self.m):
                    q += self.a[j][j] * self.x[j] * self.x[j]
                    for k in range(j + 1, self.m):
                        q += 2 * self.a[j][k] * self.x[j] * self.x[k]
                if q <= self.bound:
                    self.out.append(
                        (tuple([self.x[k] for k in range(self.m)]), q)
                    )
        self.x[i] = 0
        return 0


def short_vectors_int(a_rows, long long bound):
    """Canonical-sign nonzero integer vectors with x^T A x <= bound.

    Same contract as the pure kernel: returns (coords, value) pairs where
    the highest-index nonzero coordinate of coords is positive.
    """
    cdef int m = len(a_rows)
    cdef int i, j, k
    cdef double work[MAXDIM][MAXDIM]
    cdef double scale
    if m > MAXDIM:
        raise ValueError("dimension too large for compiled kernel")
    if bound < 0:
        return []
    e = _Enum()
    e.m = m
    e.bound = bound
    e.budget = <double> bound + 1e-6 * (<double> bound + 1.0) + 1.0
    e.out = []
    scale = 0.0
    for i in range(m):
        row = a_rows[i]
        for j in range(m):
            e.a[i][j] = row[j]
            work[i][j] = <double> e.a[i][j]
        if work[i][i] > scale:
            scale = work[i][i]
    # double-precision analogue of the rational square completion
    for i in range(m):
        e.d[i] = work[i][i]
        if e.d[i] <= 1e-10 * scale:
            raise RuntimeError("numerical breakdown in compiled kernel")
        for j in range(i + 1, m):
            e.u[i][j] = work[i][j] / e.d[i]
        for j in range(i + 1, m):
            for k in range(j, m):
                work[j][k] -= e.d[i] * e.u[i][j] * e.u[i][k]
        e.x[i] = 0
    e.rec(m - 1, 0.0, True)
    return e.out
