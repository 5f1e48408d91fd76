# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``.

All arithmetic runs on 64-bit integers with every multiply/add checked; any
overflow raises ``OverflowError`` and the caller retries on the Python path.
"""

from libc.stdlib cimport malloc, free

BACKEND = "cython"

cdef extern from *:
    """
    static inline int ck_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int ck_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int ck_sub(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int ck_mul(long long a, long long b, long long *r) nogil
    int ck_add(long long a, long long b, long long *r) nogil
    int ck_sub(long long a, long long b, long long *r) nogil


cdef inline long long floordiv(long long a, long long b) nogil:
    cdef long long q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline long long llabs_(long long a) nogil:
    return -a if a < 0 else a


cdef long long gcd_ll(long long a, long long b) nogil:
    a = llabs_(a)
    b = llabs_(b)
    while b:
        a, b = b, a % b
    return a


cdef int dot(long long *u, long long *x, int n, long long *out) nogil:
    cdef long long s = 0, t
    cdef int i
    for i in range(n):
        if ck_mul(u[i], x[i], &t):
            return 1
        if ck_add(s, t, &s):
            return 1
    out[0] = s
    return 0


cdef int bareiss_det(long long *m, int k, long long *out) nogil:
    """Determinant of the k x k row-major matrix m (destroyed)."""
    cdef int i, j, r, c
    cdef long long prev = 1, piv, t1, t2, tmp
    cdef int sign = 1
    if k == 0:
        out[0] = 1
        return 0
    for c in range(k - 1):
        if m[c * k + c] == 0:
            r = -1
            for i in range(c + 1, k):
                if m[i * k + c] != 0:
                    r = i
                    break
            if r < 0:
                out[0] = 0
                return 0
            for j in range(k):
                tmp = m[c * k + j]
                m[c * k + j] = m[r * k + j]
                m[r * k + j] = tmp
            sign = -sign
        piv = m[c * k + c]
        for i in range(c + 1, k):
            for j in range(c + 1, k):
                if ck_mul(m[i * k + j], piv, &t1):
                    return 1
                if ck_mul(m[i * k + c], m[c * k + j], &t2):
                    return 1
                if ck_sub(t1, t2, &t1):
                    return 1
                m[i * k + j] = t1 / prev
        prev = piv
    out[0] = sign * m[(k - 1) * k + (k - 1)]
    return 0


cdef int bareiss_rank(long long *m, int rows, int cols, int *out) nogil:
    cdef int r = 0, c, i, j, p
    cdef long long prev = 1, piv, t1, t2, tmp
    for c in range(cols):
        if r == rows:
            break
        p = -1
        for i in range(r, rows):
            if m[i * cols + c] != 0:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            for j in range(cols):
                tmp = m[r * cols + j]
                m[r * cols + j] = m[p * cols + j]
                m[p * cols + j] = tmp
        piv = m[r * cols + c]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                if ck_mul(m[i * cols + j], piv, &t1):
                    return 1
                if ck_mul(m[i * cols + c], m[r * cols + j], &t2):
                    return 1
                if ck_sub(t1, t2, &t1):
                    return 1
                m[i * cols + j] = t1 / prev
            m[i * cols + c] = 0
        prev = piv
        r += 1
    out[0] = r
    return 0


cdef long long *to_array(object rows, int n) except NULL:
    cdef Py_ssize_t count = len(rows)
    cdef long long *arr = <long long *> malloc((count * n + 1) * sizeof(long long))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    cdef int j
    try:
        for i in range(count):
            row = rows[i]
            for j in range(n):
                arr[i * n + j] = row[j]
    except BaseException:
        free(arr)
        raise
    return arr


def hull(points, int n):
    """Facets and vertex flags of a full-dimensional point set (see _pykernels.hull)."""
    cdef int npts = len(points)
    cdef long long *pts = to_array(points, n)
    cdef int *idx = <int *> malloc((n + 1) * sizeof(int))
    cdef long long *diffs = <long long *> malloc((n * n + 1) * sizeof(long long))
    cdef long long *minor = <long long *> malloc((n * n + 1) * sizeof(long long))
    cdef long long *nv = <long long *> malloc((n + 1) * sizeof(long long))
    cdef int cap = 64, nfound = 0
    cdef long long *found = <long long *> malloc(cap * (n + 1) * sizeof(long long))
    cdef int i, j, k, r, col, q, ok, pos, neg, dup, ntight, rk
    cdef long long d, g, b, s
    cdef long long *tmp
    cdef long long *tight = NULL
    overflow = False
    try:
        if npts < n:
            return [], [False] * npts
        for i in range(n):
            idx[i] = i
        while True:
            # normal through points idx[0..n-1]
            for r in range(n - 1):
                for k in range(n):
                    if ck_sub(pts[idx[r + 1] * n + k], pts[idx[0] * n + k], &diffs[r * n + k]):
                        overflow = True
            if overflow:
                break
            g = 0
            for k in range(n):
                for r in range(n - 1):
                    col = 0
                    for j in range(n):
                        if j != k:
                            minor[r * (n - 1) + col] = diffs[r * n + j]
                            col += 1
                if bareiss_det(minor, n - 1, &d):
                    overflow = True
                    break
                nv[k] = -d if (k % 2) else d
                g = gcd_ll(g, d)
            if overflow:
                break
            if g != 0:
                for k in range(n):
                    nv[k] = nv[k] / g
                if dot(nv, &pts[idx[0] * n], n, &b):
                    overflow = True
                    break
                pos = 0
                neg = 0
                for q in range(npts):
                    if dot(nv, &pts[q * n], n, &s):
                        overflow = True
                        break
                    if s > b:
                        pos = 1
                    elif s < b:
                        neg = 1
                    if pos and neg:
                        break
                if overflow:
                    break
                if not (pos and neg):
                    if neg:
                        for k in range(n):
                            nv[k] = -nv[k]
                    else:
                        b = -b
                    # facet: <nv, x> + b >= 0
                    dup = 0
                    for r in range(nfound):
                        ok = 1
                        for k in range(n + 1):
                            if found[r * (n + 1) + k] != (nv[k] if k < n else b):
                                ok = 0
                                break
                        if ok:
                            dup = 1
                            break
                    if not dup:
                        if nfound == cap:
                            cap *= 2
                            tmp = <long long *> malloc(cap * (n + 1) * sizeof(long long))
                            for r in range(nfound * (n + 1)):
                                tmp[r] = found[r]
                            free(found)
                            found = tmp
                        for k in range(n):
                            found[nfound * (n + 1) + k] = nv[k]
                        found[nfound * (n + 1) + n] = b
                        nfound += 1
            # next combination
            i = n - 1
            while i >= 0 and idx[i] == npts - n + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, n):
                idx[j] = idx[j - 1] + 1
        if overflow:
            raise OverflowError("hull kernel overflow")
        facets = sorted(
            (tuple([found[r * (n + 1) + k] for k in range(n)]), found[r * (n + 1) + n])
            for r in range(nfound)
        )
        tight = <long long *> malloc((nfound * n + 1) * sizeof(long long))
        flags = []
        for q in range(npts):
            ntight = 0
            for r in range(nfound):
                if dot(&found[r * (n + 1)], &pts[q * n], n, &s):
                    raise OverflowError("hull kernel overflow")
                if s + found[r * (n + 1) + n] == 0:
                    for k in range(n):
                        tight[ntight * n + k] = found[r * (n + 1) + k]
                    ntight += 1
            if ntight < n:
                flags.append(False)
                continue
            if bareiss_rank(tight, ntight, n, &rk):
                raise OverflowError("hull kernel overflow")
            flags.append(rk == n)
        return facets, flags
    finally:
        free(pts)
        free(idx)
        free(diffs)
        free(minor)
        free(nv)
        free(found)
        if tight != NULL:
            free(tight)


cdef long long scan(long long *u, long long *c, int nf, long long *lo, long long *hi,
                    int n, long long th, list out) except -2:
    cdef int last = n - 1, i, f
    cdef long long *x = <long long *> malloc((n + 1) * sizeof(long long))
    cdef long long low, high, s, t, a, total = 0, v
    try:
        for i in range(last):
            x[i] = lo[i]
            if lo[i] > hi[i]:
                return 0
        while True:
            low = lo[last]
            high = hi[last]
            for f in range(nf):
                if ck_sub(c[f], th, &s):
                    raise OverflowError
                for i in range(last):
                    if ck_mul(u[f * n + i], x[i], &t) or ck_add(s, t, &s):
                        raise OverflowError
                a = u[f * n + last]
                if a > 0:
                    t = -floordiv(s, a)
                    if t > low:
                        low = t
                elif a < 0:
                    t = floordiv(s, -a)
                    if t < high:
                        high = t
                elif s < 0:
                    high = low - 1
                if high < low:
                    break
            if low <= high:
                total += high - low + 1
                if out is not None:
                    prefix = tuple([x[i] for i in range(last)])
                    v = low
                    while v <= high:
                        out.append(prefix + (v,))
                        v += 1
            i = last - 1
            while i >= 0:
                if x[i] < hi[i]:
                    x[i] += 1
                    break
                x[i] = lo[i]
                i -= 1
            if i < 0:
                break
        return total
    finally:
        free(x)


def count_points(normals, offsets, lo, hi, bint strict):
    cdef int nf = len(normals), n = len(lo)
    cdef long long *u = to_array(normals, n)
    cdef long long *c = to_array([[o] for o in offsets], 1)
    cdef long long *l = to_array([lo], n)
    cdef long long *h = to_array([hi], n)
    try:
        return scan(u, c, nf, l, h, n, 1 if strict else 0, None)
    finally:
        free(u); free(c); free(l); free(h)


def list_points(normals, offsets, lo, hi, bint strict):
    cdef int nf = len(normals), n = len(lo)
    cdef long long *u = to_array(normals, n)
    cdef long long *c = to_array([[o] for o in offsets], 1)
    cdef long long *l = to_array([lo], n)
    cdef long long *h = to_array([hi], n)
    out = []
    try:
        scan(u, c, nf, l, h, n, 1 if strict else 0, out)
        return out
    finally:
        free(u); free(c); free(l); free(h)


def layer_covered(normals, offsets, long long k, small, big):
    cdef int nf = len(normals)
    cdef int n = len(normals[0]) if nf else 0
    cdef int ns = len(small), nb = len(big)
    cdef long long *u = to_array(normals, n)
    cdef long long *sm = to_array(small, n)
    cdef long long *bg = to_array(big, n)
    cdef long long *ay = <long long *> malloc((ns * nf + 1) * sizeof(long long))
    cdef long long *base = <long long *> malloc((nf + 1) * sizeof(long long))
    cdef long long *kc = <long long *> malloc((nf + 1) * sizeof(long long))
    cdef int i, j, f, hit
    cdef long long t
    try:
        for f in range(nf):
            if ck_mul(k, <long long> offsets[f], &kc[f]):
                raise OverflowError
        for j in range(ns):
            for f in range(nf):
                if dot(&u[f * n], &sm[j * n], n, &ay[j * nf + f]):
                    raise OverflowError
        for i in range(nb):
            for f in range(nf):
                if dot(&u[f * n], &bg[i * n], n, &t) or ck_add(t, kc[f], &base[f]):
                    raise OverflowError
            hit = 0
            for j in range(ns):
                hit = 1
                for f in range(nf):
                    if base[f] < ay[j * nf + f]:
                        hit = 0
                        break
                if hit:
                    break
            if not hit:
                return False
        return True
    finally:
        free(u); free(sm); free(bg); free(ay); free(base); free(kc)


cdef int row_cmp(long long *a, long long *b, int n) nogil:
    cdef int i
    for i in range(n):
        if a[i] < b[i]:
            return -1
        if a[i] > b[i]:
            return 1
    return 0


def symmetry_key(verts, syms, lo):
    """Smallest sorted vertex tuple over signed axis permutations, translated to ``lo``."""
    cdef int m = len(verts), n = len(lo)
    cdef long long *v = to_array(verts, n)
    cdef long long *img = <long long *> malloc((m * n + 1) * sizeof(long long))
    cdef long long *best = <long long *> malloc((m * n + 1) * sizeof(long long))
    cdef long long *row = <long long *> malloc((n + 1) * sizeof(long long))
    cdef long long *mins = <long long *> malloc((n + 1) * sizeof(long long))
    cdef long long *low = to_array([lo], n)
    cdef int *perm = <int *> malloc((n + 1) * sizeof(int))
    cdef int *flip = <int *> malloc((n + 1) * sizeof(int))
    cdef int have = 0, i, j, k, c
    cdef long long x
    try:
        for j in range(m * n):
            if llabs_(v[j]) > (1LL << 60):
                raise OverflowError
        for i in range(n):
            if llabs_(low[i]) > (1LL << 60):
                raise OverflowError
        for perm_t, flip_t in syms:
            for i in range(n):
                perm[i] = perm_t[i]
                flip[i] = 1 if flip_t[i] else 0
            for i in range(n):
                mins[i] = 0
            for j in range(m):
                for i in range(n):
                    x = v[j * n + perm[i]]
                    if flip[i]:
                        x = -x
                    img[j * n + i] = x
                    if j == 0 or x < mins[i]:
                        mins[i] = x
            for j in range(m):
                for i in range(n):
                    img[j * n + i] = img[j * n + i] - mins[i] + low[i]
            # insertion sort of rows
            for j in range(1, m):
                for i in range(n):
                    row[i] = img[j * n + i]
                k = j - 1
                while k >= 0 and row_cmp(&img[k * n], row, n) > 0:
                    for i in range(n):
                        img[(k + 1) * n + i] = img[k * n + i]
                    k -= 1
                for i in range(n):
                    img[(k + 1) * n + i] = row[i]
            c = 1 if not have else row_cmp(img, best, m * n)
            if c < 0 or not have:
                for i in range(m * n):
                    best[i] = img[i]
                have = 1
        return tuple(tuple([best[j * n + i] for i in range(n)]) for j in range(m))
    finally:
        free(v); free(img); free(best); free(row); free(mins); free(low); free(perm); free(flip)
