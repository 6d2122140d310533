"""Pure-Python Littlewood-Richardson kernel.

Enumerates LR skew tableaux of shape nu/lam and content mu for every nu at
once, filling rows top to bottom.  Inside a row the letters are weakly
increasing, so a row is fixed by how many copies of each letter it holds.
The constraints checked per (row, letter) are

* column strictness: the cells of row r carrying letters <= j sit under
  cells of row r-1 that are in lam or carry letters < j;
* the lattice condition on the reverse reading word: reading a row right to
  left meets all its j's before its (j-1)'s, so the running count of j must
  stay below the count of j-1 accumulated in the rows above.
"""
from __future__ import annotations

from typing import Dict, Tuple

Partition = Tuple[int, ...]


def lr_product_table(lam: Partition, mu: Partition, max_rows: int) -> Dict[Partition, int]:
    """``{nu: c^nu_{lam, mu}}`` over all nu with at most ``max_rows`` rows."""
    if len(lam) > max_rows or len(mu) > max_rows:
        return {}
    if not mu:
        return {lam: 1}
    if not lam:
        return {mu: 1}
    L = len(mu)
    R = min(max_rows, len(lam) + L)
    lamp = list(lam) + [0] * (R - len(lam))
    rem = list(mu)
    total = [0] * L          # letters placed so far, current row included
    shape = list(lamp)
    out: Dict[Partition, int] = {}

    def record():
        nu = tuple(x for x in shape if x)
        out[nu] = out.get(nu, 0) + 1

    def do_row(r: int, prevcum: list) -> None:
        # prevcum[j] = number of cells of row r-1 carrying letters < j
        if not any(rem):
            saved = shape[r:]
            shape[r:] = lamp[r:]
            record()
            shape[r:] = saved
            return
        if r == R:
            return
        jmax = min(r, L - 1)
        cum = [0] * (L + 1)
        crow = [0] * L

        def place(j: int, s: int) -> None:
            if j > jmax:
                for t in range(j, L):
                    cum[t + 1] = s
                shape[r] = lamp[r] + s
                do_row(r + 1, cum[:])
                return
            upper = rem[j]
            if j:
                lat = (total[j - 1] - crow[j - 1]) - total[j]
                if lat < upper:
                    upper = lat
            if r:
                col = lamp[r - 1] + prevcum[j] - lamp[r] - s
                if col < upper:
                    upper = col
            if upper < 0:
                return
            for x in range(upper, -1, -1):
                crow[j] = x
                total[j] += x
                rem[j] -= x
                cum[j + 1] = s + x
                place(j + 1, s + x)
                total[j] -= x
                rem[j] += x
            crow[j] = 0

        place(0, 0)

    do_row(0, [0] * (L + 1))
    return out
