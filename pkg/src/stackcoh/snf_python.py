"""Smith normal form over the integers, pure Python reference kernel.

All arithmetic is exact (Python ints).  The compiled twin in ``_snfcore``
implements the same pivoting rule; ``stackcoh.snf`` picks whichever is
available at import time.
"""


def smith_normal_form(rows, nrows, ncols):
    """Return (U, D, V) as lists of lists with U*M*V = D.

    U (nrows x nrows) and V (ncols x ncols) are unimodular, D is diagonal
    with a nonnegative divisibility chain d_1 | d_2 | ...

    Pivot selection is deterministic: smallest absolute value, ties broken
    by row-major position.
    """
    M = [list(r) for r in rows]
    U = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    V = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    _eliminate(M, U, V, nrows, ncols, 0)

    # enforce the divisibility chain d_t | d_{t+1}
    n = min(nrows, ncols)
    t = 0
    while t + 1 < n:
        d = M[t][t]
        if d == 0:
            break
        bad = next((k for k in range(t + 1, n) if M[k][k] % d != 0), None)
        if bad is None:
            t += 1
            continue
        # fold the offending diagonal entry into column t and re-eliminate;
        # the new d_t = gcd(d_t, d_bad) keeps the chain below t intact
        for r in M:
            r[t] += r[bad]
        for r in V:
            r[t] += r[bad]
        _eliminate(M, U, V, nrows, ncols, t)
    return U, M, V


def _eliminate(M, U, V, nrows, ncols, start):
    # diagonalize M in place from position `start`, recording row ops in U
    # and column ops in V
    n = min(nrows, ncols)
    t = start
    while t < n:
        best = None
        for i in range(t, nrows):
            Mi = M[i]
            for j in range(t, ncols):
                x = Mi[j]
                if x != 0 and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            return
        _, pi, pj = best
        if pi != t:
            M[t], M[pi] = M[pi], M[t]
            U[t], U[pi] = U[pi], U[t]
        if pj != t:
            for r in M:
                r[t], r[pj] = r[pj], r[t]
            for r in V:
                r[t], r[pj] = r[pj], r[t]
        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            U[t] = [-x for x in U[t]]

        while True:
            p = M[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                x = M[i][t]
                if x:
                    q = x // p
                    if q:
                        Mi, Mt = M[i], M[t]
                        for k in range(t, ncols):
                            Mi[k] -= q * Mt[k]
                        Ui, Ut = U[i], U[t]
                        for k in range(nrows):
                            Ui[k] -= q * Ut[k]
                    if M[i][t]:
                        # nonzero remainder beats the pivot: promote it
                        M[t], M[i] = M[i], M[t]
                        U[t], U[i] = U[i], U[t]
                        if M[t][t] < 0:
                            M[t] = [-x for x in M[t]]
                            U[t] = [-x for x in U[t]]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, ncols):
                x = M[t][j]
                if x:
                    q = x // p
                    if q:
                        for r in M:
                            r[j] -= q * r[t]
                        for r in V:
                            r[j] -= q * r[t]
                    if M[t][j]:
                        for r in M:
                            r[t], r[j] = r[j], r[t]
                        for r in V:
                            r[t], r[j] = r[j], r[t]
                        dirty = True
                        break
            if not dirty:
                break
        t += 1
