"""Column-deletion coefficients on ordered-partition tableaux.

Draw a composition of i into j ordered positive parts as rows of boxes and
delete its first s+1 columns.  For each source composition the remainder is
another composition; these coefficients count remainders by dimension
(number of surviving rows, index k) or by weight (number of surviving
boxes, index g), with multiplicity over the source compositions.

Two conventions coexist for the corner c(i, i, 0).  The tabulated matrices
define it as i (each single-column tableau is charged once per cell), while
the occurrence formulas need the plain remainder count 1.  `c_coeff` takes a
`tableau` flag; everything that feeds sequence counting uses tableau mode.
"""

from __future__ import annotations

from .exactmath import binomial, compositions, demoivre


def c_tableau(i: int, j: int, k: int) -> int:
    """Dimension-k remainders after one column deletion: C(j, k) * M(k, i - j).

    The demoivre convention M(0, 0) = 1 makes this a single formula with no
    k = 0 case split; in particular c_tableau(i, i, 0) = 1.
    """
    if i < 0 or j < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    return binomial(j, k) * demoivre(k, i - j) if i >= j else 0


def c_coeff(i: int, j: int, k: int, *, tableau: bool = False) -> int:
    """One-column-deletion coefficient, matrix convention by default.

    Matrix convention: (k/(i-j)) C(j,k) C(i-j,k) for j < i and i*delta(0,k)
    on the diagonal.  With tableau=True the diagonal corner counts the single
    empty remainder once instead.
    """
    if i < 1 or j < 0 or k < 0:
        raise ValueError(f"need i >= 1, j >= 0, k >= 0, got ({i}, {j}, {k})")
    if tableau:
        return c_tableau(i, j, k)
    if i == j:
        return i if k == 0 else 0
    if k == 0 or j > i:
        return 0
    num = k * binomial(j, k) * binomial(i - j, k)
    q, r = divmod(num, i - j)
    assert r == 0, "coefficient must be integral"
    return q


def c_coeff_by_recurrence(i: int, j: int, k: int) -> int:
    """Same contract as c_coeff (matrix convention), by the ratio recurrence in k.

    Seeded from the closed form at k = 1, where the coefficient is plainly j.
    """
    if i < 1 or j < 0 or k < 0:
        raise ValueError(f"need i >= 1, j >= 0, k >= 0, got ({i}, {j}, {k})")
    if i == j:
        return i if k == 0 else 0
    if k == 0:
        return 0
    if j == 0 or k > j or k > i - j:
        return 0
    value = j  # k = 1
    kk = 1
    while kk < k:
        num = value * (j - kk) * (i - j - kk)
        q, r = divmod(num, kk * (kk + 1))
        assert r == 0, "recurrence step must divide exactly"
        value = q
        kk += 1
    return value


def c_prime(i: int, j: int, k: int) -> int:
    """Two-column-deletion coefficient: dimension-k remainders.

    Sums C(j, f) C(f, k) M(k, i - j - f) over the intermediate dimension f.
    The k = 0 value C(j, i - j) (for i <= 2j) falls out of the M(0, 0) = 1
    convention; both corner conventions agree here.
    """
    if i < 1 or j < 0 or k < 0:
        raise ValueError(f"need i >= 1, j >= 0, k >= 0, got ({i}, {j}, {k})")
    return sum(
        binomial(j, f) * binomial(f, k) * demoivre(k, i - j - f)
        for f in range(k, j + 1)
        if i - j - f >= 0
    )


def c_general(s: int, i: int, j: int, k: int) -> int:
    """Dimension-k remainders after deleting s+1 columns (tableau counting).

    Enumerates the descending chains j >= f1 >= ... >= fs >= k of intermediate
    dimensions explicitly; for s = 0 and s = 1 this reduces to c_tableau and
    c_prime.
    """
    if s < 0:
        raise ValueError(f"need s >= 0, got {s}")
    if i < 1 or j < 0 or k < 0:
        raise ValueError(f"need i >= 1, j >= 0, k >= 0, got ({i}, {j}, {k})")
    if s == 0:
        return c_tableau(i, j, k)
    budget = i - j
    total = 0

    def descend(depth: int, prev: int, used: int, ways: int) -> None:
        nonlocal total
        if depth == s:
            total += ways * binomial(prev, k) * demoivre(k, budget - used)
            return
        for f in range(k, prev + 1):
            if used + f > budget:
                break
            descend(depth + 1, f, used + f, ways * binomial(prev, f))

    descend(0, j, 0, 1)
    return total


def c_weight_tableau(s: int, m: int, g: int, h: int) -> int:
    """Weight-g remainders after deleting s+1 columns from height-h tableaux of m.

    For s = 0 the remainder weight is forced to m - h, so the count is the
    full composition count at g = m - h and zero elsewhere.
    """
    if s < 0:
        raise ValueError(f"need s >= 0, got {s}")
    if m < 0 or g < 0 or h < 0:
        raise ValueError("indices must be nonnegative")
    if s == 0:
        return demoivre(h, m) if g == m - h else 0
    target = m - h - g
    if target < 0:
        return 0
    total = 0

    def descend(depth: int, prev: int, used: int, ways: int) -> None:
        nonlocal total
        if depth == s:
            if used == target:
                total += ways * sum(
                    binomial(prev, k) * demoivre(k, g) for k in range(prev + 1)
                )
            return
        for f in range(prev + 1):
            if used + f > target:
                break
            descend(depth + 1, f, used + f, ways * binomial(prev, f))

    descend(0, h, 0, 1)
    return total


def c_weight(s: int, m: int, g: int, h: int) -> int:
    """Weight-indexed deletion coefficient.

    s = 0 returns C(m-1, g) independently of h (counting runs over all
    heights at once in that case); s >= 1 returns the per-height tableau
    count, identical to c_weight_tableau.
    """
    if s < 0:
        raise ValueError(f"need s >= 0, got {s}")
    if s == 0:
        if m < 1:
            raise ValueError(f"need m >= 1, got {m}")
        return binomial(m - 1, g)
    return c_weight_tableau(s, m, g, h)


def c_dim_enumerated(s: int, i: int, j: int, k: int) -> int:
    """Brute-force dimension count: delete s+1 columns from every composition."""
    drop = s + 1
    return sum(
        1
        for comp in compositions(i, j)
        if sum(1 for part in comp if part > drop) == k
    )


def c_weight_enumerated(s: int, m: int, g: int, h: int) -> int:
    """Brute-force weight count: delete s+1 columns from every composition."""
    drop = s + 1
    return sum(
        1
        for comp in compositions(m, h)
        if sum(part - drop for part in comp if part > drop) == g
    )


# --- matrix emission -------------------------------------------------------

APPENDIX_KINDS = ("c_by_k", "c_by_i", "cprime_by_k", "cprime_weight")

_SHAPES = {
    # kind: (fixed index values, row range, column range)
    "c_by_k": (range(0, 6), range(1, 13), range(1, 13)),
    "c_by_i": (range(3, 11), range(1, 11), range(0, 6)),
    "cprime_by_k": (range(0, 4), range(1, 13), range(1, 12)),
    "cprime_weight": (range(0, 4), range(1, 11), range(1, 10)),
}


def appendix_cell(kind: str, fixed: int, row: int, col: int) -> int:
    """Single cell of an emitted matrix, in that matrix's own row/column convention."""
    if kind == "c_by_k":
        return c_coeff(row, col, fixed)
    if kind == "c_by_i":
        return c_coeff(fixed, row, col) if row <= fixed else 0
    if kind == "cprime_by_k":
        return c_prime(row, col, fixed)
    if kind == "cprime_weight":
        return c_weight_tableau(1, row, fixed, col)
    raise ValueError(f"unknown matrix kind {kind!r}")


def appendix_tables(kind: str, index: int | None = None) -> list[dict]:
    """Emit coefficient matrices as {kind, fixed_index, rows} dictionaries.

    Rows are dense integer grids; structural zeros are plain 0 here and
    become blanks only in the human-readable rendering.
    """
    if kind not in _SHAPES:
        raise ValueError(f"unknown matrix kind {kind!r}; expected one of {APPENDIX_KINDS}")
    fixed_values, row_range, col_range = _SHAPES[kind]
    if index is not None:
        if index not in fixed_values:
            raise ValueError(f"index {index} out of range for {kind}")
        fixed_values = [index]
    out = []
    for fixed in fixed_values:
        rows = [
            [appendix_cell(kind, fixed, r, c) for c in col_range] for r in row_range
        ]
        out.append({"kind": kind, "fixed_index": fixed, "rows": rows})
    return out


def pascal_identity_check(k: int, bound: int = 12) -> dict:
    """Check the two-deletion matrix is the one-deletion matrix times the
    upper Pascal matrix: c_prime(i, j, k) = sum_f c_tableau(i-j, f, k) C(j, f).

    Both sides are taken in tableau convention (the k = 0 corner needs the
    remainder count, not the matrix diagonal).  Returns per-cell mismatches,
    expected to be none.
    """
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    mismatches = []
    for i in range(1, bound + 1):
        for j in range(0, i + 1):
            left = c_prime(i, j, k)
            right = sum(
                c_tableau(i - j, f, k) * binomial(j, f) for f in range(0, j + 1)
            )
            if left != right:
                mismatches.append({"i": i, "j": j, "left": left, "right": right})
    return {"k": k, "bound": bound, "ok": not mismatches, "mismatches": mismatches}
