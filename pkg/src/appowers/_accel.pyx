# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled int64 kernels for the two hot counting loops.

`scan_progression` is the brute-force per-term scan (the oracle loop);
`interval_walk` walks the t-window of the value interval.  Callers must
ensure every intermediate value fits in 62 bits; the pure-Python twin in
``_accel_py`` handles everything else.
"""

from libc.math cimport pow as fpow


cdef int _cmp_pow(long long b, long long k, long long v) nogil:
    # compare b**k with v; b >= 0, v >= 0; never overflows
    cdef long long acc = 1
    cdef long long i
    if b == 0:
        return -1 if v > 0 else 0
    for i in range(k):
        if acc > v // b:
            return 1
        acc *= b
    return -1 if acc < v else (1 if acc > v else 0)


cdef long long _root_floor(long long v, long long k) nogil:
    # largest r >= 0 with r**k <= v
    cdef long long r
    if v <= 0:
        return 0
    if k >= 63:
        return 1
    r = <long long>fpow(<double>v, 1.0 / <double>k)
    if r < 0:
        r = 0
    while r > 0 and _cmp_pow(r, k, v) > 0:
        r -= 1
    while _cmp_pow(r + 1, k, v) <= 0:
        r += 1
    return r


cdef long long _ipow(long long t, long long k) nogil:
    # t**k; caller guarantees the result fits
    cdef long long acc = 1
    cdef long long i
    for i in range(k):
        acc *= t
    return acc


def scan_progression(long long k, long long a, long long q, long long N):
    """Brute-force scan of a + i*q for i in [1, N]; returns (count_t, count_values)."""
    cdef long long i, v, u, r
    cdef long long ct = 0, cv = 0
    cdef bint even = (k % 2 == 0)
    with nogil:
        for i in range(1, N + 1):
            v = a + i * q
            if even and v < 0:
                continue
            u = v if v >= 0 else -v
            r = _root_floor(u, k)
            if _cmp_pow(r, k, u) == 0:
                cv += 1
                if even and v > 0:
                    ct += 2
                else:
                    ct += 1
    return ct, cv


def interval_walk(long long k, long long a, long long q, long long N):
    """Walk the t-window of [a+q, a+N*q], keep t**k = a (mod q); returns (count_t, count_values)."""
    cdef long long lo = a + q
    cdef long long hi = a + N * q
    cdef long long ct = 0, cv = 0
    cdef long long t, v, rmin, rmax, t_lo, t_hi
    cdef bint even = (k % 2 == 0)
    with nogil:
        if even:
            if hi >= 0:
                rmax = _root_floor(hi, k)
                if lo <= 0:
                    rmin = 0
                else:
                    rmin = _root_floor(lo, k)
                    if _cmp_pow(rmin, k, lo) != 0:
                        rmin += 1
                for t in range(rmin, rmax + 1):
                    v = _ipow(t, k)
                    if (v - a) % q == 0:
                        ct += 1
                        cv += 1
                        if t > 0:
                            ct += 1  # the mirror solution -t
        else:
            # smallest t with t**k >= lo
            if lo >= 0:
                t_lo = _root_floor(lo, k)
                if _cmp_pow(t_lo, k, lo) != 0:
                    t_lo += 1
            else:
                t_lo = -_root_floor(-lo, k)
            # largest t with t**k <= hi
            if hi >= 0:
                t_hi = _root_floor(hi, k)
            else:
                rmax = _root_floor(-hi, k)
                if _cmp_pow(rmax, k, -hi) != 0:
                    rmax += 1
                t_hi = -rmax
            for t in range(t_lo, t_hi + 1):
                if t >= 0:
                    v = _ipow(t, k)
                else:
                    v = -_ipow(-t, k)
                if (v - a) % q == 0:
                    ct += 1
                    cv += 1
    return ct, cv
