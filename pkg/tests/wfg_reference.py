"""Independent vectorized WFG1-4 reference used as a cross-implementation
oracle by the problem tests.

Array-pipeline formulation (transformations / reductions / shapes as
whole-population operations), structurally unrelated to the package's scalar
staged evaluator; agreement between the two to 1e-9 is asserted in
test_problems_wfg.py.
"""

import numpy as np


def correct_to_01(x, epsilon=1.0e-10):
    x = np.asarray(x, dtype=np.float64)
    x = np.where((x < 0) & (x >= -epsilon), 0.0, x)
    x = np.where((x > 1) & (x <= 1 + epsilon), 1.0, x)
    return x


def t_shift_linear(y, a=0.35):
    return correct_to_01(np.fabs(y - a) / np.fabs(np.floor(a - y) + a))


def t_shift_multimodal(y, a, b, c):
    t1 = np.fabs(y - c) / (2.0 * (np.floor(c - y) + c))
    t2 = (4.0 * a + 2.0) * np.pi * (0.5 - t1)
    return correct_to_01((1.0 + np.cos(t2) + 4.0 * b * t1**2) / (b + 2.0))


def t_bias_flat(y, a, b, c):
    ret = (
        a
        + np.minimum(0, np.floor(y - b)) * (a * (b - y) / b)
        - np.minimum(0, np.floor(c - y)) * ((1.0 - a) * (y - c) / (1.0 - c))
    )
    return correct_to_01(ret)


def t_bias_poly(y, alpha):
    return correct_to_01(y**alpha)


def r_weighted_sum(y, w):
    return correct_to_01(np.dot(y, w) / w.sum())


def r_uniform_sum(y):
    return correct_to_01(y.mean(axis=1))


def r_nonsep_pairs(y):
    # non-separable reduction with degree 2 over column pairs
    n, m = y.shape
    num = np.zeros(n)
    for j in range(m):
        num += y[:, j] + np.fabs(y[:, j] - y[:, (1 + j) % m])
    denom = m * 1.0 * (1.0 + 2.0 * 2 - 2.0 * 1.0) / 2.0
    return correct_to_01(num / denom)


def shape_convex(x, m):
    big_m = x.shape[1]
    if m == 1:
        ret = np.prod(1.0 - np.cos(0.5 * x * np.pi), axis=1)
    elif m <= big_m:
        ret = np.prod(1.0 - np.cos(0.5 * x[:, : big_m - m + 1] * np.pi), axis=1)
        ret *= 1.0 - np.sin(0.5 * x[:, big_m - m + 1] * np.pi)
    else:
        ret = 1.0 - np.sin(0.5 * x[:, 0] * np.pi)
    return correct_to_01(ret)


def shape_concave(x, m):
    big_m = x.shape[1]
    if m == 1:
        ret = np.prod(np.sin(0.5 * x * np.pi), axis=1)
    elif m <= big_m:
        ret = np.prod(np.sin(0.5 * x[:, : big_m - m + 1] * np.pi), axis=1)
        ret *= np.cos(0.5 * x[:, big_m - m + 1] * np.pi)
    else:
        ret = np.cos(0.5 * x[:, 0] * np.pi)
    return correct_to_01(ret)


def shape_linear(x, m):
    big_m = x.shape[1]
    if m == 1:
        ret = np.prod(x, axis=1)
    elif m <= big_m:
        ret = np.prod(x[:, : big_m - m + 1], axis=1)
        ret *= 1.0 - x[:, big_m - m + 1]
    else:
        ret = 1.0 - x[:, 0]
    return correct_to_01(ret)


def shape_mixed(x0, alpha=1.0, a=5.0):
    aux = 2.0 * a * np.pi
    return correct_to_01(np.power(1.0 - x0 - (np.cos(aux * x0 + 0.5 * np.pi) / aux), alpha))


def shape_disconnected(x0, alpha=1.0, beta=1.0, a=5.0):
    aux = np.cos(a * np.pi * x0**beta)
    return correct_to_01(1.0 - x0**alpha * aux**2)


def _post(t, a_vec):
    cols = []
    for i in range(t.shape[1] - 1):
        cols.append(np.maximum(t[:, -1], a_vec[i]) * (t[:, i] - 0.5) + 0.5)
    cols.append(t[:, -1])
    return np.column_stack(cols)


def _apply(t, s_vec, h_cols):
    return t[:, -1][:, None] + s_vec * np.column_stack(h_cols)


def wfg_reference(variant, z, q):
    """Evaluate WFG<variant> at rows of z with q objectives, k_pos = q - 1."""
    z = np.atleast_2d(np.asarray(z, dtype=np.float64))
    n = z.shape[1]
    kpos = q - 1
    s_vec = 2.0 * np.arange(1, q + 1)
    a_vec = np.ones(q - 1)
    if variant == 3:
        a_vec[1:] = 0.0
    y = z / (2.0 * np.arange(1, n + 1))

    if variant == 1:
        y[:, kpos:] = t_shift_linear(y[:, kpos:], 0.35)
        y[:, kpos:] = t_bias_flat(y[:, kpos:], 0.8, 0.75, 0.85)
        y = t_bias_poly(y, 0.02)
        w = 2.0 * np.arange(1, n + 1)
        gap = kpos // (q - 1)
        t = [
            r_weighted_sum(y[:, (j - 1) * gap : j * gap], w[(j - 1) * gap : j * gap])
            for j in range(1, q)
        ]
        t.append(r_weighted_sum(y[:, kpos:], w[kpos:]))
        t = np.column_stack(t)
        x = _post(t, a_vec)
        h = [shape_convex(x[:, :-1], m + 1) for m in range(q - 1)]
        h.append(shape_mixed(x[:, 0], alpha=1.0, a=5.0))
        return _apply(x, s_vec, h)

    if variant in (2, 3):
        y[:, kpos:] = t_shift_linear(y[:, kpos:], 0.35)
        l = n - kpos
        pairs = [
            r_nonsep_pairs(y[:, kpos + 2 * i : kpos + 2 * i + 2]) for i in range(l // 2)
        ]
        y = np.column_stack([y[:, :kpos]] + pairs)
        gap = kpos // (q - 1)
        t = [r_uniform_sum(y[:, (j - 1) * gap : j * gap]) for j in range(1, q)]
        t.append(r_uniform_sum(y[:, kpos:]))
        t = np.column_stack(t)
        x = _post(t, a_vec)
        if variant == 2:
            h = [shape_convex(x[:, :-1], m + 1) for m in range(q - 1)]
            h.append(shape_disconnected(x[:, 0], alpha=1.0, beta=1.0, a=5.0))
        else:
            h = [shape_linear(x[:, :-1], m + 1) for m in range(q)]
        return _apply(x, s_vec, h)

    if variant == 4:
        y = t_shift_multimodal(y, 30.0, 10.0, 0.35)
        gap = kpos // (q - 1)
        t = [r_uniform_sum(y[:, (j - 1) * gap : j * gap]) for j in range(1, q)]
        t.append(r_uniform_sum(y[:, kpos:]))
        t = np.column_stack(t)
        x = _post(t, a_vec)
        h = [shape_concave(x[:, :-1], m + 1) for m in range(q)]
        return _apply(x, s_vec, h)

    raise ValueError(variant)
