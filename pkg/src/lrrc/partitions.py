"""Integer partitions as plain tuples of weakly decreasing positive ints."""

from functools import lru_cache


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts) -> tuple:
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts!r}")
    return parts


def size(parts) -> int:
    return sum(parts)


def part(parts, i: int) -> int:
    """i-th part, 1-indexed, 0 beyond the stored length."""
    return parts[i - 1] if 1 <= i <= len(parts) else 0


def transpose(parts) -> tuple:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= c) for c in range(1, parts[0] + 1))


def q_count(parts, n: int) -> int:
    """Number of cells in the first n columns: Q_n = sum of min(part, n)."""
    if n <= 0:
        return 0
    return sum(min(p, n) for p in parts)


def mult(parts, n: int) -> int:
    """Number of parts equal to n."""
    return sum(1 for p in parts if p == n)


def column_height(parts, n: int) -> int:
    """Height of the n-th column (1-indexed), i.e. the n-th transpose part."""
    return sum(1 for p in parts if p >= n)


def contains_cell(parts, row: int, col: int) -> bool:
    """Whether the cell (row, col), both 1-indexed, lies in the diagram."""
    return 1 <= row <= len(parts) and 1 <= col <= parts[row - 1]


def contains(outer, inner) -> bool:
    return all(part(outer, i + 1) >= p for i, p in enumerate(inner))


def corners(parts):
    """Removable corner cells as (row, col) pairs, 1-indexed."""
    out = []
    for i, p in enumerate(parts):
        if i + 1 == len(parts) or parts[i + 1] < p:
            out.append((i + 1, p))
    return out


def remove_corner_in_column(parts, col: int) -> tuple:
    """Remove the corner cell lying in the given column; ValueError if none."""
    for row, c in corners(parts):
        if c == col:
            new = list(parts)
            new[row - 1] -= 1
            return tuple(p for p in new if p > 0)
    raise ValueError(f"no removable corner in column {col} of {parts}")


def add_corner_in_column(parts, col: int) -> tuple:
    """Add a cell in the given column so the result is still a partition."""
    row = column_height(parts, col) + 1
    new = list(parts)
    if row - 1 < len(new):
        new[row - 1] += 1
    else:
        new.append(1)
    if col != new[row - 1]:
        raise ValueError(f"cannot add a corner in column {col} of {parts}")
    return check_partition(new)


def dominates(lam, mu) -> bool:
    """Dominance order: equal sizes and prefix sums of lam >= those of mu."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += part(lam, i + 1)
        b += part(mu, i + 1)
        if a < b:
            return False
    return True


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple:
    """All partitions of n with parts bounded by max_part, largest-first order."""
    if n == 0:
        return ((),)
    if max_part is None:
        max_part = n
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def partitions_in_box(height: int, width: int) -> tuple:
    """Partitions with at most `height` parts, each at most `width`."""
    if height <= 0 or width <= 0:
        return ((),)
    out = []
    for first in range(width, -1, -1):
        if first == 0:
            out.append(())
            continue
        for rest in partitions_in_box(height - 1, first):
            out.append((first,) + rest)
    return tuple(out)
