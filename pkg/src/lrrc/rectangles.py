"""Sequences of rectangles (width, height) and their structural moves.

A rectangle sequence is a tuple of (width, height) pairs; text form is
"3x2,2x4,1x3" (width x height) and JSON form [[3,2],[2,4],[1,3]].
"""

from . import partitions as pt


def check_rects(rects) -> tuple:
    rects = tuple((int(w), int(h)) for w, h in rects)
    if any(w < 1 or h < 1 for w, h in rects):
        raise ValueError(f"rectangles need positive width and height: {rects}")
    return rects


def total_size(rects) -> int:
    return sum(w * h for w, h in rects)


def widths(rects) -> tuple:
    return tuple(w for w, _ in rects)


def heights(rects) -> tuple:
    return tuple(h for _, h in rects)


def transpose(rects) -> tuple:
    return tuple((h, w) for w, h in rects)


def xi(rects, k: int) -> tuple:
    """Partition of the heights of the width-k rectangles."""
    return tuple(sorted((h for w, h in rects if w == k), reverse=True))


def parse(text: str) -> tuple:
    """Parse "3x2,2x4,1x3"; the empty string is the empty sequence."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for token in text.split(","):
        w, _, h = token.strip().partition("x")
        out.append((int(w), int(h)))
    return check_rects(out)


def render(rects) -> str:
    return ",".join(f"{w}x{h}" for w, h in rects)


def hat(rects) -> tuple:
    """Split the last column off the last rectangle."""
    if not rects:
        raise ValueError("hat of the empty sequence")
    w, h = rects[-1]
    if w == 1:
        return rects
    return rects[:-1] + ((w - 1, h), (1, h))


def bar(rects) -> tuple:
    """Remove one cell from the last rectangle, which must be a column."""
    if not rects:
        raise ValueError("bar of the empty sequence")
    w, h = rects[-1]
    if w != 1:
        raise ValueError("bar needs a single-column last rectangle")
    return rects[:-1] + (((1, h - 1),) if h > 1 else ())


def check(rects) -> tuple:
    """Split the first column off the first rectangle."""
    if not rects:
        raise ValueError("check of the empty sequence")
    w, h = rects[0]
    if w == 1:
        return rects
    return ((1, h), (w - 1, h)) + rects[1:]


def tilde(rects) -> tuple:
    """Remove one cell from the first rectangle, which must be a column."""
    if not rects:
        raise ValueError("tilde of the empty sequence")
    w, h = rects[0]
    if w != 1:
        raise ValueError("tilde needs a single-column first rectangle")
    return (((1, h - 1),) if h > 1 else ()) + rects[1:]


def ev(rects) -> tuple:
    """Reverse the sequence."""
    return tuple(reversed(rects))


def split_last_row(rects) -> tuple:
    """Split the last row off the last rectangle; the row goes last."""
    if not rects:
        raise ValueError("split_last_row of the empty sequence")
    w, h = rects[-1]
    if h == 1:
        return rects
    return rects[:-1] + ((w, h - 1), (w, 1))


def split_first_row(rects) -> tuple:
    """Split the first row off the first rectangle; the row goes first."""
    if not rects:
        raise ValueError("split_first_row of the empty sequence")
    w, h = rects[0]
    if h == 1:
        return rects
    return ((w, 1), (w, h - 1)) + rects[1:]


def rows(rects) -> tuple:
    """Slice every rectangle into single rows."""
    out = []
    for w, h in rects:
        out.extend([(w, 1)] * h)
    return tuple(out)


def remove_last_row_cell(rects) -> tuple:
    """Remove one cell from the last rectangle, which must be a single row."""
    if not rects:
        raise ValueError("empty sequence")
    w, h = rects[-1]
    if h != 1:
        raise ValueError("needs a single-row last rectangle")
    return rects[:-1] + (((w - 1, 1),) if w > 1 else ())


def dominates(r1, r2) -> bool:
    """Width-classwise dominance of the height partitions."""
    ks = set(widths(r1)) | set(widths(r2))
    return all(pt.dominates(xi(r1, k), xi(r2, k)) for k in ks)


def swap(rects, p: int) -> tuple:
    """Exchange rectangles p and p+1 (1-indexed)."""
    if not 1 <= p <= len(rects) - 1:
        raise ValueError(f"swap position {p} out of range")
    out = list(rects)
    out[p - 1], out[p] = out[p], out[p - 1]
    return tuple(out)


def e1_step(rects) -> tuple:
    """Move a cell row from the first rectangle to the second.

    Requires the first two rectangles to share a width c with heights
    a, b satisfying a - 1 >= b + 1; yields heights a-1, b+1.
    """
    if len(rects) < 2:
        raise ValueError("e1_step needs two rectangles")
    (w1, a), (w2, b) = rects[0], rects[1]
    if w1 != w2:
        raise ValueError("e1_step needs equal widths")
    if a - 1 < b + 1:
        raise ValueError("e1_step needs a - 1 >= b + 1")
    return ((w1, a - 1), (w1, b + 1)) + rects[2:]


def e1_split(rects) -> tuple:
    """Degenerate transfer with an empty partner: split one row off the
    first rectangle, the new height-1 rectangle going second."""
    if not rects:
        raise ValueError("e1_split of the empty sequence")
    w, a = rects[0]
    if a < 2:
        raise ValueError("e1_split needs height >= 2")
    return ((w, a - 1), (w, 1)) + rects[1:]


def apply_move(rects, move) -> tuple:
    kind = move[0]
    if kind == "swap":
        return swap(rects, move[1])
    if kind == "e1":
        return e1_step(rects)
    if kind == "e1split":
        return e1_split(rects)
    raise ValueError(f"unknown move {move!r}")


def _bubble_to_front(rects, pos, moves, target_slot):
    """Emit swaps moving the rectangle at index pos (0-based) to target_slot."""
    while pos > target_slot:
        moves.append(("swap", pos))
        rects = swap(rects, pos)
        pos -= 1
    return rects


def decompose(rects, target) -> tuple:
    """A canonical sequence of swap/e1/e1split moves from rects to target.

    Within each width class the height partition steps down the dominance
    order by single-cell transfers, tallest-surplus to first-deficit;
    a final bubble pass matches the exact order of target.
    """
    rects, target = check_rects(rects), check_rects(target)
    if not dominates(rects, target):
        raise ValueError("decompose requires dominance of the target")
    moves: list[tuple] = []
    cur = rects

    def class_mismatch():
        for k in sorted(set(widths(cur)) | set(widths(target))):
            mu, nu = xi(cur, k), xi(target, k)
            if mu != nu:
                return k, mu, nu
        return None

    while (m := class_mismatch()) is not None:
        k, mu, nu = m
        bound = max(len(mu), len(nu))
        get = lambda p, i: p[i] if i < len(p) else 0
        i = next(i for i in range(bound) if get(mu, i) > get(nu, i))
        j = next(j for j in range(bound) if get(mu, j) < get(nu, j))
        a, b = get(mu, i), get(mu, j)
        # locate a width-k rectangle of height a, bring it to the front
        pos_a = next(p for p, r in enumerate(cur) if r == (k, a))
        cur = _bubble_to_front(cur, pos_a, moves, 0)
        if b == 0:
            moves.append(("e1split",))
            cur = e1_split(cur)
        else:
            pos_b = next(
                p for p, r in enumerate(cur) if p >= 1 and r == (k, b)
            )
            cur = _bubble_to_front(cur, pos_b, moves, 1)
            moves.append(("e1",))
            cur = e1_step(cur)

    # same multiset now; sort into target's exact order with adjacent swaps
    cur_list = list(cur)
    for slot in range(len(target)):
        pos = slot + cur_list[slot:].index(target[slot])
        while pos > slot:
            moves.append(("swap", pos))
            cur_list[pos - 1], cur_list[pos] = cur_list[pos], cur_list[pos - 1]
            pos -= 1
    assert tuple(cur_list) == target
    return tuple(moves)


def pair_norm(rects) -> int:
    """Sum over pairs i<j of the intersection sizes min-width * min-height."""
    n = 0
    for i in range(len(rects)):
        for j in range(i + 1, len(rects)):
            (wi, hi), (wj, hj) = rects[i], rects[j]
            n += min(wi, wj) * min(hi, hj)
    return n


def termination_sequence(rects) -> tuple:
    """The unique hat/bar reduction of a sequence down to the empty one.

    bar is applied whenever the last rectangle is a single column, hat
    otherwise; returns the op names in order.
    """
    ops = []
    cur = check_rects(rects)
    while cur:
        if cur[-1][0] == 1:
            ops.append("bar")
            cur = bar(cur)
        else:
            ops.append("hat")
            cur = hat(cur)
    return tuple(ops)
