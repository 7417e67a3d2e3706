"""Generic exact linear algebra over a field.

Entries may be any objects implementing +, -, *, unary -, ==, is_zero()
and inv() (FieldElement and RationalFunction both qualify).  Everything
here is deterministic: pivoting always picks the first nonzero entry, so
kernel bases come out in a fixed reduced-echelon order.
"""


def rref(rows):
    """Reduced row echelon form.  Returns (new_rows, pivot_columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if not rows[i][c].is_zero():
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inv()
        rows[r] = [inv * v for v in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def matrix_rank(rows):
    return len(rref(rows)[1])


def solve(rows, rhs):
    """One solution of rows · x = rhs (free variables set to 0), or None."""
    if not rows:
        return []
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    ncols = len(rows[0])
    if ncols in pivots:
        return None  # inconsistent: pivot in the augmented column
    zero = rows[0][0] - rows[0][0]
    x = [zero] * ncols
    for i, c in enumerate(pivots):
        x[c] = red[i][ncols]
    return x


def kernel_basis(rows, ncols, one):
    """Basis of {x : rows · x = 0}, in reduced-echelon order.

    Each basis vector has a 1 in one free column and the pivot-column
    entries forced by the reduced system; vectors are ordered by free
    column index.
    """
    zero = one - one
    if not rows:
        return [[one if j == k else zero for j in range(ncols)]
                for k in range(ncols)]
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [zero] * ncols
        v[free] = one
        for i, c in enumerate(pivots):
            v[c] = -red[i][free]
        basis.append(v)
    return basis
