"""Independent brute-force oracles used by the tests.

Everything here deliberately avoids the production code paths it checks:
the symmetrizer is the literal average over all orderings, word reduction
rewrites a randomly chosen inversion, and the inverse problems are solved
as dense exact linear systems.
"""

import itertools
import random

from orbitstar import CPoly, NCPoly, iter_monomials, laplacian, quadratic_invariant
from orbitstar.enveloping import pbw_reduce
from orbitstar.rationals import ZERO, rat


def brute_weyl(f: CPoly) -> NCPoly:
    """Average of all orderings of every monomial, via word reduction."""
    alg = f.algebra
    out = NCPoly.zero(alg)
    for key, coeff in f.coeffs.items():
        word = []
        for idx, e in enumerate(key[:-1]):
            word.extend([idx] * e)
        total = NCPoly.zero(alg)
        count = 0
        for perm in itertools.permutations(word):
            total = total + pbw_reduce(perm, alg)
            count += 1
        if count:
            total = total * rat(1, count)
        else:
            total = NCPoly.constant(alg, 1)
        from orbitstar import HScalar

        out = out + total * HScalar.h_power(key[-1], coeff)
    return out


def random_order_reduce(word, algebra, rng: random.Random) -> NCPoly:
    """Free-word reduction rewriting a random inversion each step."""
    states = {(tuple(word), 0): rat(1)}
    out = {}
    while states:
        (w, he), c = states.popitem()
        if not c:
            continue
        positions = [p for p in range(len(w) - 1) if w[p] > w[p + 1]]
        if not positions:
            exps = [0] * algebra.dim
            for idx in w:
                exps[idx] += 1
            key = tuple(exps) + (he,)
            nv = out.get(key, ZERO) + c
            if nv:
                out[key] = nv
            else:
                del out[key]
            continue
        p = rng.choice(positions)
        a, b = w[p], w[p + 1]
        swapped = w[:p] + (b, a) + w[p + 2 :]
        states[(swapped, he)] = states.get((swapped, he), ZERO) + c
        if not states[(swapped, he)]:
            del states[(swapped, he)]
        for t, ct in algebra.bracket_terms(b, a):
            tk = (w[:p] + (t,) + w[p + 2 :], he + 1)
            nv = states.get(tk, ZERO) - c * ct
            if nv:
                states[tk] = nv
            else:
                states.pop(tk, None)
    return NCPoly(algebra, out)


def gauss_solve(rows, rhs):
    """Solve the exact linear system rows * x = rhs (one solution or None)."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    aug = [list(rows[i]) + [rhs[i]] for i in range(m)]
    pivots = []
    r = 0
    for col in range(n):
        pivot = None
        for k in range(r, m):
            if aug[k][col]:
                pivot = k
                break
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = rat(1) / aug[r][col]
        aug[r] = [v * inv for v in aug[r]]
        for k in range(m):
            if k != r and aug[k][col]:
                factor = aug[k][col]
                aug[k] = [a - factor * b for a, b in zip(aug[k], aug[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    for k in range(r, m):
        if aug[k][n]:
            return None  # inconsistent
    x = [ZERO] * n
    for row_idx, col in enumerate(pivots):
        x[col] = aug[row_idx][n]
    return x


def dense_weyl_inverse(a: NCPoly, forward=brute_weyl) -> CPoly:
    """Solve W(f) = a as a dense linear system over the packed basis."""
    alg = a.algebra
    xdeg = max(a.x_degree, 0)
    hdeg = max(a.h_degree, 0)
    basis = []
    for xm in iter_monomials(alg.dim, xdeg):
        for he in range(hdeg + xdeg + 1):
            basis.append(xm + (he,))
    columns = []
    row_keys = set()
    images = []
    for key in basis:
        img = forward(CPoly(alg, {key: rat(1)}))
        images.append(img)
        row_keys.update(img.coeffs)
    row_keys.update(a.coeffs)
    row_index = {k: i for i, k in enumerate(sorted(row_keys))}
    for img in images:
        col = [ZERO] * len(row_index)
        for k, v in img.coeffs.items():
            col[row_index[k]] = v
        columns.append(col)
    rows = [[columns[j][i] for j in range(len(basis))] for i in range(len(row_index))]
    rhs = [ZERO] * len(row_index)
    for k, v in a.coeffs.items():
        rhs[row_index[k]] = v
    solution = gauss_solve(rows, rhs)
    assert solution is not None, "forward map misses the target element"
    coeffs = {key: val for key, val in zip(basis, solution) if val}
    return CPoly(alg, coeffs)


def dense_harmonic_parts(f: CPoly):
    """Harmonic decomposition through an explicit linear solve.

    For each homogeneous piece of degree d the coefficients of every
    p^k eta_k (eta_k a general polynomial of degree d - 2k subject to
    Delta eta_k = 0) are solved for directly.
    """
    alg = f.algebra
    p = quadratic_invariant(alg)
    parts = {}
    degrees = sorted({sum(k[:-1]) for k in f.coeffs})
    for d in degrees:
        comp = f.homogeneous_component(d)
        if comp.is_zero:
            continue
        unknowns = []  # (k, monomial key of eta_k)
        for k in range(d // 2 + 1):
            for xm in iter_monomials(alg.dim, d - 2 * k):
                if sum(xm) == d - 2 * k:
                    unknowns.append((k, xm))
        row_keys = set(comp.coeffs)
        images = []
        for k, xm in unknowns:
            img = p**k * CPoly(alg, {xm + (0,): rat(1)})
            images.append(img)
            row_keys.update(img.coeffs)
        row_index = {kk: i for i, kk in enumerate(sorted(row_keys))}
        rows = [[ZERO] * len(unknowns) for _ in range(len(row_index))]
        for j, img in enumerate(images):
            for kk, v in img.coeffs.items():
                rows[row_index[kk]][j] = v
        for he in sorted({key[-1] for key in comp.coeffs}):
            rhs = [ZERO] * len(row_index)
            for kk, v in comp.coeffs.items():
                if kk[-1] == he:
                    rhs[row_index[kk[:-1] + (0,)]] = v
            sol = None
            # search for the solution whose eta_k are harmonic by solving the
            # combined system with harmonicity rows
            lap_rows = []
            lap_rhs = []
            lap_keys = {}
            for j, (k, xm) in enumerate(unknowns):
                lap = laplacian(CPoly(alg, {xm + (0,): rat(1)}))
                for kk, v in lap.coeffs.items():
                    lap_keys.setdefault((k, kk), len(lap_keys))
            lap_rows = [[ZERO] * len(unknowns) for _ in range(len(lap_keys))]
            for j, (k, xm) in enumerate(unknowns):
                lap = laplacian(CPoly(alg, {xm + (0,): rat(1)}))
                for kk, v in lap.coeffs.items():
                    lap_rows[lap_keys[(k, kk)]][j] = v
            full_rows = rows + lap_rows
            full_rhs = rhs + [ZERO] * len(lap_rows)
            sol = gauss_solve(full_rows, full_rhs)
            assert sol is not None
            for j, (k, xm) in enumerate(unknowns):
                if sol[j]:
                    acc = parts.setdefault(k, {})
                    key = xm + (he,)
                    nv = acc.get(key, ZERO) + sol[j]
                    if nv:
                        acc[key] = nv
                    else:
                        del acc[key]
    return {k: CPoly(f.algebra, v) for k, v in parts.items() if v}
