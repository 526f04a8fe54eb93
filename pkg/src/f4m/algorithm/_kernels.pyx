# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled engine: hot kernels for the sum-of-minimum evolutionary loop.

Mirrors ``_pyloop.py`` / ``ops.py`` operation for operation, drawing from the
same numpy BitGenerator stream, so compiled and pure-Python runs are
bit-identical.  Any formula change here must be applied to the Python side
too (the backend test suite enforces agreement).
"""

from cpython.pycapsule cimport PyCapsule_GetPointer
from libc.math cimport M_PI, cos, fabs, floor, pow, sin
from numpy.random cimport bitgen_t

import numpy as np

cdef double EPS01 = 1e-10
cdef double HALF_PI = 0.5 * M_PI

KERNELS_AVAILABLE = True


cdef inline bitgen_t* _bitgen(object rng) except NULL:
    capsule = rng.bit_generator.capsule
    return <bitgen_t*> PyCapsule_GetPointer(capsule, "BitGenerator")


cdef inline double _next(bitgen_t* bg) nogil:
    return bg.next_double(bg.state)


cdef inline long _pick_index(double u, long n) nogil:
    cdef long i = <long>(u * n)
    return n - 1 if i >= n else i


cdef inline double _clamp01(double v) nogil:
    if v < 0.0 and v >= -EPS01:
        return 0.0
    if v > 1.0 and v <= 1.0 + EPS01:
        return 1.0
    return v


# ---------------------------------------------------------------------------
# problem evaluation
# ---------------------------------------------------------------------------

cdef void _dtlz_into(int variant, int q, int d, double* x, double* out) nogil:
    cdef int i, j
    cdef double g = 0.0
    cdef double t, f, y
    if variant == 1:
        for j in range(q - 1, d):
            t = x[j] - 0.5
            g += t * t - cos(20.0 * M_PI * t)
        g = 100.0 * (<double>(d - q + 1) + g)
        for i in range(q):
            f = 0.5 * (1.0 + g)
            for j in range(q - 1 - i):
                f *= x[j]
            if i > 0:
                f *= 1.0 - x[q - 1 - i]
            out[i] = f
    else:
        if variant == 3:
            for j in range(q - 1, d):
                t = x[j] - 0.5
                g += t * t - cos(20.0 * M_PI * t)
            g = 100.0 * (<double>(d - q + 1) + g)
        else:
            for j in range(q - 1, d):
                t = x[j] - 0.5
                g += t * t
        for i in range(q):
            f = 1.0 + g
            for j in range(q - 1 - i):
                y = x[j]
                if variant == 4:
                    y = pow(y, 100.0)
                f *= cos(HALF_PI * y)
            if i > 0:
                y = x[q - 1 - i]
                if variant == 4:
                    y = pow(y, 100.0)
                f *= sin(HALF_PI * y)
            out[i] = f


cdef inline double _s_linear(double y, double a) nogil:
    return _clamp01(fabs(y - a) / fabs(floor(a - y) + a))


cdef inline double _s_multi(double y, double a, double b, double c) nogil:
    cdef double t1 = fabs(y - c) / (2.0 * (floor(c - y) + c))
    cdef double t2 = (4.0 * a + 2.0) * M_PI * (0.5 - t1)
    return _clamp01((1.0 + cos(t2) + 4.0 * b * t1 * t1) / (b + 2.0))


cdef inline double _b_flat(double y, double a, double b, double c) nogil:
    cdef double m1 = floor(y - b)
    cdef double m2 = floor(c - y)
    if m1 > 0.0:
        m1 = 0.0
    if m2 > 0.0:
        m2 = 0.0
    return _clamp01(a + m1 * (a * (b - y) / b) - m2 * ((1.0 - a) * (y - c) / (1.0 - c)))


cdef void _wfg_into(int variant, int q, int d, double* x, double* out,
                    double* y, double* t, double* xx) nogil:
    cdef int kpos = q - 1
    cdef int l = d - kpos
    cdef int i, j, jj, ii, half, m1, gap
    cdef double num, den, s, a, b, tm, aj, scale, h, aux, c

    for i in range(d):
        y[i] = x[i] / (2.0 * (i + 1))

    if variant == 4:
        for i in range(d):
            y[i] = _s_multi(y[i], 30.0, 10.0, 0.35)
    else:
        for i in range(kpos, d):
            y[i] = _s_linear(y[i], 0.35)

    gap = kpos / (q - 1)
    if variant == 1:
        for i in range(kpos, d):
            y[i] = _b_flat(y[i], 0.8, 0.75, 0.85)
        for i in range(d):
            y[i] = _clamp01(pow(y[i], 0.02))
        for jj in range(q - 1):
            num = 0.0
            den = 0.0
            for i in range(jj * gap, (jj + 1) * gap):
                s = 2.0 * (i + 1)
                num += s * y[i]
                den += s
            t[jj] = _clamp01(num / den)
        num = 0.0
        den = 0.0
        for i in range(kpos, d):
            s = 2.0 * (i + 1)
            num += s * y[i]
            den += s
        t[q - 1] = _clamp01(num / den)
    elif variant == 2 or variant == 3:
        half = l / 2
        for ii in range(half):
            a = y[kpos + 2 * ii]
            b = y[kpos + 2 * ii + 1]
            y[kpos + ii] = _clamp01((a + b + 2.0 * fabs(a - b)) / 3.0)
        for jj in range(q - 1):
            s = 0.0
            for i in range(jj * gap, (jj + 1) * gap):
                s += y[i]
            t[jj] = _clamp01(s / gap)
        s = 0.0
        for i in range(kpos, kpos + half):
            s += y[i]
        t[q - 1] = _clamp01(s / half)
    else:
        for jj in range(q - 1):
            s = 0.0
            for i in range(jj * gap, (jj + 1) * gap):
                s += y[i]
            t[jj] = _clamp01(s / gap)
        s = 0.0
        for i in range(kpos, d):
            s += y[i]
        t[q - 1] = _clamp01(s / l)

    tm = t[q - 1]
    for j in range(q - 1):
        aj = 0.0 if (variant == 3 and j >= 1) else 1.0
        scale = tm if tm > aj else aj
        xx[j] = scale * (t[j] - 0.5) + 0.5
    xx[q - 1] = tm

    for i in range(q):
        m1 = i + 1
        if variant == 1 or variant == 2:
            if m1 < q:
                h = 1.0
                for j in range(q - m1):
                    h *= 1.0 - cos(HALF_PI * xx[j])
                if m1 > 1:
                    h *= 1.0 - sin(HALF_PI * xx[q - m1])
            elif variant == 1:
                aux = 10.0 * M_PI
                h = 1.0 - xx[0] - cos(aux * xx[0] + HALF_PI) / aux
            else:
                c = cos(5.0 * M_PI * xx[0])
                h = 1.0 - xx[0] * c * c
        elif variant == 3:
            if m1 == 1:
                h = 1.0
                for j in range(q - 1):
                    h *= xx[j]
            elif m1 < q:
                h = 1.0
                for j in range(q - m1):
                    h *= xx[j]
                h *= 1.0 - xx[q - m1]
            else:
                h = 1.0 - xx[0]
        else:
            h = 1.0
            for j in range(q - m1):
                h *= sin(HALF_PI * xx[j])
            if m1 > 1:
                h *= cos(HALF_PI * xx[q - m1])
        out[i] = xx[q - 1] + (2.0 * m1) * _clamp01(h)


cdef void _nmlr_into(double[:, ::1] a, double[::1] b, double* x, double* out) nogil:
    cdef int i, j
    cdef int m = b.shape[0]
    cdef int d = a.shape[1]
    cdef double s, r
    for i in range(m):
        s = 0.0
        for j in range(d):
            s += a[i, j] * x[j]
        r = s - b[i]
        out[i] = r * r


cdef void _transform_into(double* base, double[:, ::1] w, double[::1] zs,
                          double* out) nogil:
    cdef int i, j
    cdef int m = w.shape[0]
    cdef int q = w.shape[1]
    cdef double best, t
    for i in range(m):
        best = 0.0
        for j in range(q):
            t = w[i, j] * fabs(base[j] - zs[j])
            if t > best:
                best = t
        out[i] = best


cdef void _eval_native(int kind, int variant, int q, int d,
                       bint transform, double[:, ::1] w, double[::1] zs,
                       double[:, ::1] na, double[::1] nb,
                       double* x, double* base, double* out,
                       double* wy, double* wt, double* wxx) nogil:
    cdef double* target = base if transform else out
    if kind == 0:
        _dtlz_into(variant, q, d, x, target)
    elif kind == 1:
        _wfg_into(variant, q, d, x, target, wy, wt, wxx)
    else:
        _nmlr_into(na, nb, x, target)
    if transform:
        _transform_into(base, w, zs, out)


# ---------------------------------------------------------------------------
# variation operators and removal
# ---------------------------------------------------------------------------

cdef void _sbx_mutate_child(bitgen_t* bg, double* p1, double* p2,
                            double[::1] lo, double[::1] hi, int d,
                            double eta_c, double eta_m, double p_c, double p_m,
                            double* child) nogil:
    cdef int j
    cdef double u_gate, u_mask, u_beta, u_sign, u_site, u
    cdef double beta, mean, diff, span, d1, d2, dq, val
    cdef double exp_c = 1.0 / (eta_c + 1.0)
    cdef double exp_m = 1.0 / (eta_m + 1.0)
    cdef bint gate

    u_gate = _next(bg)
    gate = u_gate <= p_c
    for j in range(d):
        u_mask = _next(bg)
        u_beta = _next(bg)
        u_sign = _next(bg)
        if (not gate) or u_mask >= 0.5:
            child[j] = p1[j]
            continue
        if u_beta <= 0.5:
            beta = pow(2.0 * u_beta, exp_c)
        else:
            beta = pow(2.0 - 2.0 * u_beta, -exp_c)
        if u_sign < 0.5:
            beta = -beta
        mean = 0.5 * (p1[j] + p2[j])
        diff = 0.5 * (p1[j] - p2[j])
        val = mean + beta * diff
        if val < lo[j]:
            val = lo[j]
        if val > hi[j]:
            val = hi[j]
        child[j] = val

    for j in range(d):
        u_site = _next(bg)
        u = _next(bg)
        if u_site >= p_m:
            continue
        span = hi[j] - lo[j]
        if u <= 0.5:
            d1 = (child[j] - lo[j]) / span
            dq = pow(2.0 * u + (1.0 - 2.0 * u) * pow(1.0 - d1, eta_m + 1.0), exp_m) - 1.0
        else:
            d2 = (hi[j] - child[j]) / span
            dq = 1.0 - pow(2.0 * (1.0 - u) + 2.0 * (u - 0.5) * pow(1.0 - d2, eta_m + 1.0),
                           exp_m)
        val = child[j] + dq * span
        if val < lo[j]:
            val = lo[j]
        if val > hi[j]:
            val = hi[j]
        child[j] = val


cdef long _fast_removal(double[:, ::1] pop_f, double[::1] v, double* off_f,
                        double u_rem, unsigned char* improves,
                        double* cand_v, double* best_v) nogil:
    """Mirror of ops.fast_removal; writes the surviving minima into best_v."""
    cdef long k = pop_f.shape[0]
    cdef long m = pop_f.shape[1]
    cdef long i, jj, x_idx, removed
    cdef long n_improve = 0
    cdef double g_min, g, vi, mn

    for i in range(m):
        if off_f[i] <= v[i]:
            improves[i] = 1
            n_improve += 1
        else:
            improves[i] = 0

    if n_improve == m:
        for i in range(m):
            best_v[i] = off_f[i]
        return _pick_index(u_rem, k)

    g_min = 0.0
    for i in range(m):
        g_min += v[i]
        best_v[i] = v[i]
    removed = k
    for x_idx in range(k):
        g = 0.0
        for i in range(m):
            if improves[i]:
                vi = off_f[i]
            elif pop_f[x_idx, i] == v[i]:
                mn = off_f[i]
                for jj in range(k):
                    if jj != x_idx and pop_f[jj, i] < mn:
                        mn = pop_f[jj, i]
                vi = mn
            else:
                vi = v[i]
            cand_v[i] = vi
            g += vi
        if g < g_min:
            g_min = g
            removed = x_idx
            for i in range(m):
                best_v[i] = cand_v[i]
    return removed


cdef void _make_parent2(bitgen_t* bg, double[:, ::1] pop_x, double[:, ::1] arch_x,
                        double[::1] v, double[::1] u_vec, long k, long m,
                        bint use_archive, bint use_p, double* pwork,
                        double** parent2) nogil:
    cdef double u2 = _next(bg)
    cdef double norm, cum
    cdef long i, slot
    if not use_archive:
        parent2[0] = &pop_x[_pick_index(u2, k), 0]
        return
    if use_p:
        norm = 0.0
        for i in range(m):
            pwork[i] = v[i] - u_vec[i]
            norm += pwork[i]
        if norm > 0.0:
            for i in range(m):
                pwork[i] = pwork[i] / norm
        else:
            for i in range(m):
                pwork[i] = 1.0 / m
    else:
        for i in range(m):
            pwork[i] = 1.0 / m
    slot = m - 1
    cum = 0.0
    for i in range(m):
        cum += pwork[i]
        if u2 < cum:
            slot = i
            break
    parent2[0] = &arch_x[slot, 0]


cdef long _post_eval(bitgen_t* bg, double* child, double* off_f,
                     double[:, ::1] pop_x, double[:, ::1] pop_f, double[::1] v,
                     double[:, ::1] arch_x, double[:, ::1] arch_f, double[::1] u_vec,
                     double[::1] hist_min, bint debug,
                     unsigned char* improves, double* cand_v, double* best_v) nogil:
    """Archive update, removal, replacement and debug check; returns the debug
    violation increment (0 or 1)."""
    cdef long k = pop_f.shape[0]
    cdef long m = pop_f.shape[1]
    cdef long d = pop_x.shape[1]
    cdef long i, j, removed
    cdef double u_rem

    for i in range(m):
        if off_f[i] < u_vec[i]:
            for j in range(d):
                arch_x[i, j] = child[j]
            for j in range(m):
                arch_f[i, j] = off_f[j]
            u_vec[i] = off_f[i]

    u_rem = _next(bg)
    removed = _fast_removal(pop_f, v, off_f, u_rem, improves, cand_v, best_v)
    if removed != k:
        for j in range(d):
            pop_x[removed, j] = child[j]
        for j in range(m):
            pop_f[removed, j] = off_f[j]
    for i in range(m):
        v[i] = best_v[i]

    if debug:
        for i in range(m):
            if off_f[i] < hist_min[i]:
                hist_min[i] = off_f[i]
        for i in range(m):
            if u_vec[i] != hist_min[i]:
                return 1
    return 0


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------

def evaluate_batch(desc, xs):
    """Evaluate every row of ``xs`` on a native problem descriptor."""
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    cdef long n = xs.shape[0]
    cdef int d = desc.d
    cdef int m = desc.m
    cdef int q = desc.q
    cdef int kind = desc.kind
    cdef int variant = desc.variant
    cdef bint transform = desc.transform
    if kind == 3:
        raise ValueError("compiled evaluate_batch only handles native problems")
    out = np.empty((n, m), dtype=np.float64)
    base = np.empty(q, dtype=np.float64)
    wy = np.empty(d, dtype=np.float64)
    wt = np.empty(q, dtype=np.float64)
    wxx = np.empty(q, dtype=np.float64)
    cdef double[:, ::1] xs_v = xs
    cdef double[:, ::1] out_v = out
    cdef double[::1] base_v = base
    cdef double[::1] wy_v = wy
    cdef double[::1] wt_v = wt
    cdef double[::1] wxx_v = wxx
    cdef double[:, ::1] w_v = desc.weights
    cdef double[::1] zs_v = desc.z_star
    cdef double[:, ::1] na_v = desc.nmlr_a
    cdef double[::1] nb_v = desc.nmlr_b
    cdef long i
    with nogil:
        for i in range(n):
            _eval_native(kind, variant, q, d, transform, w_v, zs_v, na_v, nb_v,
                         &xs_v[i, 0], &base_v[0], &out_v[i, 0],
                         &wy_v[0], &wt_v[0], &wxx_v[0])
    return out


def fast_removal(pop_f, v, off_f, double u_rem):
    """Single-shot compiled removal (test and benchmark surface)."""
    pop_f = np.ascontiguousarray(pop_f, dtype=np.float64)
    v = np.ascontiguousarray(v, dtype=np.float64)
    off_f = np.ascontiguousarray(off_f, dtype=np.float64)
    cdef long m = pop_f.shape[1]
    improves = np.empty(m, dtype=np.uint8)
    cand_v = np.empty(m, dtype=np.float64)
    best_v = np.empty(m, dtype=np.float64)
    cdef double[:, ::1] pop_v = pop_f
    cdef double[::1] v_v = v
    cdef double[::1] off_v = off_f
    cdef unsigned char[::1] imp_v = improves
    cdef double[::1] cand_vv = cand_v
    cdef double[::1] best_vv = best_v
    cdef long removed = _fast_removal(pop_v, v_v, &off_v[0], u_rem,
                                      &imp_v[0], &cand_vv[0], &best_vv[0])
    return removed, best_v


def run_generations(desc, pop_x, pop_f, v, arch_x, arch_f, u, hist_min, rng,
                    long n_gens, double eta_c, double eta_m, double p_c,
                    double p_m, bint use_archive, bint use_p, bint debug):
    """Advance the loop by ``n_gens`` generations in place; returns the debug
    violation count."""
    cdef bitgen_t* bg = _bitgen(rng)
    cdef double[:, ::1] pop_x_v = pop_x
    cdef double[:, ::1] pop_f_v = pop_f
    cdef double[::1] v_v = v
    cdef double[:, ::1] arch_x_v = arch_x
    cdef double[:, ::1] arch_f_v = arch_f
    cdef double[::1] u_v = u
    cdef double[::1] hist_v = hist_min
    cdef double[::1] lo_v = desc.lo
    cdef double[::1] hi_v = desc.hi
    cdef long k = pop_x.shape[0]
    cdef int d = desc.d
    cdef int m = desc.m
    cdef int q = desc.q
    cdef int kind = desc.kind
    cdef int variant = desc.variant
    cdef bint transform = desc.transform
    cdef double[:, ::1] w_v = desc.weights
    cdef double[::1] zs_v = desc.z_star
    cdef double[:, ::1] na_v = desc.nmlr_a
    cdef double[::1] nb_v = desc.nmlr_b

    child = np.empty(d, dtype=np.float64)
    off_f = np.empty(m, dtype=np.float64)
    base = np.empty(q, dtype=np.float64)
    pwork = np.empty(m, dtype=np.float64)
    wy = np.empty(d, dtype=np.float64)
    wt = np.empty(q, dtype=np.float64)
    wxx = np.empty(q, dtype=np.float64)
    improves = np.empty(m, dtype=np.uint8)
    cand_v = np.empty(m, dtype=np.float64)
    best_v = np.empty(m, dtype=np.float64)
    cdef double[::1] child_v = child
    cdef double[::1] off_v = off_f
    cdef double[::1] base_v = base
    cdef double[::1] pwork_v = pwork
    cdef double[::1] wy_v = wy
    cdef double[::1] wt_v = wt
    cdef double[::1] wxx_v = wxx
    cdef unsigned char[::1] imp_v = improves
    cdef double[::1] cand_vv = cand_v
    cdef double[::1] best_vv = best_v

    cdef long violations = 0
    cdef long g, i1
    cdef double u1
    cdef double* parent2
    pyfunc = desc.pyfunc

    if kind == 3:
        for g in range(n_gens):
            u1 = _next(bg)
            i1 = _pick_index(u1, k)
            _make_parent2(bg, pop_x_v, arch_x_v, v_v, u_v, k, m,
                          use_archive, use_p, &pwork_v[0], &parent2)
            _sbx_mutate_child(bg, &pop_x_v[i1, 0], parent2, lo_v, hi_v, d,
                              eta_c, eta_m, p_c, p_m, &child_v[0])
            off_f[:] = np.asarray(pyfunc(child.copy()), dtype=np.float64)
            violations += _post_eval(bg, &child_v[0], &off_v[0], pop_x_v, pop_f_v,
                                     v_v, arch_x_v, arch_f_v, u_v, hist_v, debug,
                                     &imp_v[0], &cand_vv[0], &best_vv[0])
    else:
        with nogil:
            for g in range(n_gens):
                u1 = _next(bg)
                i1 = _pick_index(u1, k)
                _make_parent2(bg, pop_x_v, arch_x_v, v_v, u_v, k, m,
                              use_archive, use_p, &pwork_v[0], &parent2)
                _sbx_mutate_child(bg, &pop_x_v[i1, 0], parent2, lo_v, hi_v, d,
                                  eta_c, eta_m, p_c, p_m, &child_v[0])
                _eval_native(kind, variant, q, d, transform, w_v, zs_v, na_v, nb_v,
                             &child_v[0], &base_v[0], &off_v[0],
                             &wy_v[0], &wt_v[0], &wxx_v[0])
                violations += _post_eval(bg, &child_v[0], &off_v[0], pop_x_v,
                                         pop_f_v, v_v, arch_x_v, arch_f_v, u_v,
                                         hist_v, debug, &imp_v[0], &cand_vv[0],
                                         &best_vv[0])
    return violations
