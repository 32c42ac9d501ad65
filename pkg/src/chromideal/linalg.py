"""Exact linear-system kernels for certificate search.

Two solvers for A x = b given column-wise sparse input:

* solve_gf2: dense bit-packed Gauss-Jordan elimination on numpy uint64
  words; leftmost pivot column, first available pivot row.
* solve_sparse: row-dict elimination over any exact field with
  Markowitz-style pivoting (emptiest active column first, emptiest row
  within it), deterministic tie-breaking by index, and an optional fill
  budget that fails loudly instead of exhausting memory.

Both return one solution (free variables set to zero) or None when the
system is inconsistent, and are deterministic for fixed input.
"""

from __future__ import annotations

import heapq
from typing import Mapping, Sequence

import numpy as np

from .fields import PrimeField


def solve_gf2(
    n_rows: int, col_rows: Sequence[Sequence[int]], rhs_rows: Sequence[int]
) -> list[int] | None:
    """Solve over GF(2).  Columns are given by their nonzero row indices
    (0-based, each listed once); rhs_rows lists the rows where b = 1."""
    n_cols = len(col_rows)
    words = (n_cols + 1 + 63) // 64 or 1
    m = np.zeros((max(n_rows, 1), words), dtype=np.uint64)
    for j, rows in enumerate(col_rows):
        if rows:
            m[np.asarray(rows, dtype=np.intp), j >> 6] |= np.uint64(1 << (j & 63))
    for i in rhs_rows:
        m[i, n_cols >> 6] |= np.uint64(1 << (n_cols & 63))

    used = np.zeros(m.shape[0], dtype=bool)
    pivot_of_col = np.full(n_cols, -1, dtype=np.int64)
    for j in range(n_cols):
        w, b = divmod(j, 64)
        has = ((m[:, w] >> np.uint64(b)) & np.uint64(1)).astype(bool)
        candidates = np.flatnonzero(has & ~used)
        if candidates.size == 0:
            continue
        piv = int(candidates[0])
        used[piv] = True
        pivot_of_col[j] = piv
        sel = np.flatnonzero(has)
        sel = sel[sel != piv]
        if sel.size:
            m[sel] ^= m[piv]

    wb, bb = divmod(n_cols, 64)
    rhs_bits = ((m[:, wb] >> np.uint64(bb)) & np.uint64(1)).astype(bool)
    if bool(np.any(rhs_bits & ~used)):
        return None
    x = [0] * n_cols
    for j in range(n_cols):
        piv = pivot_of_col[j]
        if piv >= 0 and rhs_bits[piv]:
            x[j] = 1
    return x


def solve_sparse(
    col_entries: Sequence[Sequence[tuple[int, object]]],
    rhs: Mapping[int, object],
    field,
    entry_budget: int | None = None,
) -> list | None:
    """Solve over any exact field; rows are arbitrary hashable indices.

    Rows never touched by a column are the equations 0 = rhs, so a nonzero
    rhs on such a row makes the system inconsistent immediately.  When
    entry_budget is set, elimination raises RuntimeError as soon as fill-in
    pushes the stored nonzero count past it.
    """
    zero = field.zero
    if isinstance(field, PrimeField):
        p = field.p

        def submul(a, f, v):
            return (a - f * v) % p

        def inv(a):
            return pow(a, p - 2, p)

        def mul(a, b):
            return (a * b) % p

    else:
        def submul(a, f, v):
            return field.sub(a, field.mul(f, v))

        inv = field.inv
        mul = field.mul

    rows: dict[int, dict[int, object]] = {}
    col_rows: dict[int, set[int]] = {}
    nonzeros = 0
    for j, entries in enumerate(col_entries):
        members = set()
        for i, c in enumerate_nonzero(entries, field):
            rows.setdefault(i, {})
            cur = rows[i].get(j, zero)
            cur = field.add(cur, c)
            if field.is_zero(cur):
                if rows[i].pop(j, None) is not None:
                    nonzeros -= 1
                members.discard(i)
            else:
                if j not in rows[i]:
                    nonzeros += 1
                rows[i][j] = cur
                members.add(i)
        col_rows[j] = members

    rhs_d = {i: field.element(c) for i, c in rhs.items() if not field.is_zero(field.element(c))}
    for i in list(rhs_d):
        if not rows.get(i):
            return None  # equation 0 = nonzero

    heap: list[tuple[int, int]] = []
    for j, members in col_rows.items():
        if members:
            heapq.heappush(heap, (len(members), j))
    done_cols: set[int] = set()
    pivots: list[tuple[int, int]] = []

    while heap:
        count, j = heapq.heappop(heap)
        members = col_rows.get(j)
        if j in done_cols or not members or len(members) != count:
            continue
        i = min(members, key=lambda r: (len(rows[r]), r))
        piv_val = rows[i][j]
        piv_inv = inv(piv_val)
        piv_row = rows[i]
        piv_rhs = rhs_d.get(i, zero)
        for r in [r for r in members if r != i]:
            factor = mul(rows[r][j], piv_inv)
            target = rows[r]
            for c, v in piv_row.items():
                nv = submul(target.get(c, zero), factor, v)
                if field.is_zero(nv):
                    if c in target:
                        del target[c]
                        nonzeros -= 1
                        cr = col_rows[c]
                        cr.discard(r)
                        if cr and c not in done_cols:
                            heapq.heappush(heap, (len(cr), c))
                else:
                    if c not in target:
                        nonzeros += 1
                        cr = col_rows[c]
                        cr.add(r)
                        if c not in done_cols:
                            heapq.heappush(heap, (len(cr), c))
                    target[c] = nv
            if not field.is_zero(piv_rhs):
                nr = submul(rhs_d.get(r, zero), factor, piv_rhs)
                if field.is_zero(nr):
                    rhs_d.pop(r, None)
                else:
                    rhs_d[r] = nr
            if not target:
                if r in rhs_d:
                    return None  # row collapsed to 0 = nonzero
                del rows[r]
        # retire the pivot row and column
        for c in piv_row:
            if c != j:
                cr = col_rows[c]
                cr.discard(i)
                if cr and c not in done_cols:
                    heapq.heappush(heap, (len(cr), c))
        col_rows[j] = set()
        done_cols.add(j)
        pivots.append((i, j))
        if entry_budget is not None and nonzeros > entry_budget:
            raise RuntimeError(f"elimination fill-in exceeded {entry_budget} entries")

    # remaining active rows are empty; back-substitute with free columns at 0
    x: dict[int, object] = {}
    for i, j in reversed(pivots):
        s = rhs_d.get(i, zero)
        row = rows[i]
        for c, v in row.items():
            if c == j:
                continue
            xc = x.get(c)
            if xc is not None:
                s = submul(s, v, xc)
        x[j] = mul(s, inv(row[j]))
    return [x.get(j, zero) for j in range(len(col_entries))]


def enumerate_nonzero(entries, field):
    for i, c in entries:
        cc = field.element(c)
        if not field.is_zero(cc):
            yield i, cc
