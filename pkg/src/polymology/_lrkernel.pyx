# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Littlewood-Richardson kernel; same algorithm as ``_lr_py``."""

from libc.stdlib cimport malloc, free


cdef struct State:
    int R
    int L
    int *lamp      # R
    int *rem       # L
    int *total     # L
    int *crow      # R * L, per-row letter counts
    int *cum       # (R + 1) * (L + 1), cum[r][j] = cells of row r with letters < j
    int *shape     # R


cdef void _record(State *st, int r, dict out):
    cdef int i
    parts = []
    for i in range(st.R):
        v = st.shape[i] if i < r else st.lamp[i]
        if v:
            parts.append(v)
    key = tuple(parts)
    out[key] = out.get(key, 0) + 1


cdef int _any_rem(State *st):
    cdef int j
    for j in range(st.L):
        if st.rem[j]:
            return 1
    return 0


cdef void _place(State *st, int r, int j, int s, int jmax, dict out):
    cdef int L = st.L
    cdef int *cum = st.cum + (r + 1) * (L + 1)
    cdef int *prevcum = st.cum + r * (L + 1)
    cdef int *crow = st.crow + r * L
    cdef int upper, lat, col, x, t
    if j > jmax:
        for t in range(j, L):
            cum[t + 1] = s
        st.shape[r] = st.lamp[r] + s
        _row(st, r + 1, out)
        return
    upper = st.rem[j]
    if j:
        lat = (st.total[j - 1] - crow[j - 1]) - st.total[j]
        if lat < upper:
            upper = lat
    if r:
        col = st.lamp[r - 1] + prevcum[j] - st.lamp[r] - s
        if col < upper:
            upper = col
    if upper < 0:
        return
    x = upper
    while x >= 0:
        crow[j] = x
        st.total[j] += x
        st.rem[j] -= x
        cum[j + 1] = s + x
        _place(st, r, j + 1, s + x, jmax, out)
        st.total[j] -= x
        st.rem[j] += x
        x -= 1
    crow[j] = 0


cdef void _row(State *st, int r, dict out):
    cdef int j, jmax
    if not _any_rem(st):
        _record(st, r, out)
        return
    if r == st.R:
        return
    jmax = r if r < st.L - 1 else st.L - 1
    for j in range(st.L):
        st.crow[r * st.L + j] = 0
    st.cum[(r + 1) * (st.L + 1)] = 0
    _place(st, r, 0, 0, jmax, out)


def lr_product_table(tuple lam, tuple mu, int max_rows):
    """``{nu: c^nu_{lam, mu}}`` over all nu with at most ``max_rows`` rows."""
    cdef State st
    cdef int i, R, L
    if len(lam) > max_rows or len(mu) > max_rows:
        return {}
    if not mu:
        return {lam: 1}
    if not lam:
        return {mu: 1}
    L = len(mu)
    R = min(max_rows, len(lam) + L)
    st.R = R
    st.L = L
    st.lamp = <int *> malloc(R * sizeof(int))
    st.shape = <int *> malloc(R * sizeof(int))
    st.rem = <int *> malloc(L * sizeof(int))
    st.total = <int *> malloc(L * sizeof(int))
    st.crow = <int *> malloc(R * L * sizeof(int))
    st.cum = <int *> malloc((R + 1) * (L + 1) * sizeof(int))
    if not (st.lamp and st.shape and st.rem and st.total and st.crow and st.cum):
        free(st.lamp); free(st.shape); free(st.rem)
        free(st.total); free(st.crow); free(st.cum)
        raise MemoryError()
    out = {}
    try:
        for i in range(R):
            st.lamp[i] = lam[i] if i < len(lam) else 0
            st.shape[i] = st.lamp[i]
        for i in range(L):
            st.rem[i] = mu[i]
            st.total[i] = 0
        for i in range((R + 1) * (L + 1)):
            st.cum[i] = 0
        _row(&st, 0, out)
    finally:
        free(st.lamp); free(st.shape); free(st.rem)
        free(st.total); free(st.crow); free(st.cum)
    return out
