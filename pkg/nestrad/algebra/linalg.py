from fractions import Fraction


def solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """
    Solve the square system `matrix @ x = rhs` exactly by Gauss-Jordan elimination
    over the rationals.

    The matrix and right-hand side are copied, not modified.

    Args:
        matrix (list[list[Fraction]]): n x n coefficient rows
        rhs (list[Fraction]): length n right-hand side

    Raises:
        ZeroDivisionError: the matrix is singular

    Returns:
        list[Fraction]: the unique solution
    """
    n = len(matrix)
    rows = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]

    for col in range(n):
        # first nonzero pivot from the diagonal downwards
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is not invertible")
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]

        lead = rows[col][col]
        pivot_row = [value / lead for value in rows[col]]
        rows[col] = pivot_row

        for r in range(n):
            if r == col:
                continue
            factor = rows[r][col]
            if factor != 0:
                row = rows[r]
                rows[r] = [a - factor * b for a, b in zip(row, pivot_row)]

    return [rows[i][n] for i in range(n)]
