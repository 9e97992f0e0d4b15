"""Brute-force reference computations, independent of the package code paths."""

import math

import numpy as np


def ruin_probability(dist, level, top=200):
    """P(an integer-valued walk ever reaches <= -level).

    h(s) = P(hit <= 0 from s) solves h(s) = sum_j p_j h(s + j) on 1..top,
    with h = 1 at or below 0 and h = 0 above top (error of order e^{-alpha top}).
    """
    A = np.eye(top)
    b = np.zeros(top)
    for s in range(1, top + 1):
        for x, p in dist.atoms:
            t = s + int(x)
            if t <= 0:
                b[s - 1] += p
            elif t <= top:
                A[s - 1, t - 1] -= p
    return float(np.linalg.solve(A, b)[level - 1])


def chain_expected_max(p, d):
    """E[M_d] for the +-1 walk by solving the drawdown-level Markov chain.

    V(k) is the expected further rise of the running maximum from drawdown k:
    V(k) = p [k = 0](1 + V(0)) + p [k > 0] V(k-1) + q [k + 1 < d] V(k+1).
    """
    d = math.ceil(d)
    q = 1 - p
    A = np.eye(d)
    b = np.zeros(d)
    for k in range(d):
        if k == 0:
            A[0, 0] -= p
            b[0] += p
        else:
            A[k, k - 1] -= p
        if k + 1 < d:
            A[k, k + 1] -= q
    return float(np.linalg.solve(A, b)[0])


def exact_leaves(tree):
    """Enumerate root-to-leaf paths: (atom, probability, quadratic time, chain max)."""
    out = []
    stack = [(0, 1.0, 0.0, tree.position[0])]
    while stack:
        node, p, q, top = stack.pop()
        if tree.atom[node] >= 0:
            out.append((int(tree.atom[node]), p, q, top))
            continue
        lo, hi = tree.down[node], tree.up[node]
        a, b, m = tree.position[lo], tree.position[hi], tree.position[node]
        q += (m - a) * (b - m)
        stack.append((hi, p * tree.p_up[node], q, max(top, b)))
        stack.append((lo, p * (1 - tree.p_up[node]), q, max(top, a)))
    return out
