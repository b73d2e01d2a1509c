"""Binary linear codes: GF(2) matrices, rank, systematic form, minimum distance.

A generator matrix ``A`` with ``rows = n + k`` and ``cols = k`` defines the
code ``{A x : x in GF(2)^k}``.  Matrix rows are stored as integers whose
bit ``j`` is the entry in column ``j``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Tuple, Union

from . import kernels
from .errors import CapExceeded, InputError
from .graph import iter_bits, popcount

MIN_DISTANCE_CAP = 24


@dataclass(frozen=True)
class BinaryMatrix:
    rows: int
    cols: int
    data: Tuple[int, ...]

    def __post_init__(self):
        # zero rows are allowed: a systematic (I_k; A') split may leave A' empty
        if self.rows < 0 or self.cols < 1:
            raise InputError(f"invalid shape {self.rows}x{self.cols}")
        data = tuple(int(r) for r in self.data)
        object.__setattr__(self, "data", data)
        if len(data) != self.rows:
            raise InputError(f"expected {self.rows} rows, got {len(data)}")
        for i, r in enumerate(data):
            if r < 0 or r >> self.cols:
                raise InputError(f"row {i} wider than {self.cols} columns")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], cols: Optional[int] = None) -> "BinaryMatrix":
        if cols is None:
            if not entries:
                raise InputError("cannot infer column count of an empty matrix")
            cols = len(entries[0])
        data = []
        for line in entries:
            if len(line) != cols:
                raise InputError("ragged matrix")
            if any(x not in (0, 1) for x in line):
                raise InputError("entries must be 0 or 1")
            data.append(sum(1 << j for j, x in enumerate(line) if x))
        return cls(len(entries), cols, tuple(data))

    @classmethod
    def identity(cls, k: int) -> "BinaryMatrix":
        return cls(k, k, tuple(1 << i for i in range(k)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BinaryMatrix":
        return cls(rows, cols, (0,) * rows)

    def entry(self, i: int, j: int) -> int:
        return self.data[i] >> j & 1

    def to_lists(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def columns(self) -> list[int]:
        """Column ``j`` as an integer with bit ``i`` = entry ``(i, j)``."""
        cols = [0] * self.cols
        for i, r in enumerate(self.data):
            for j in iter_bits(r):
                cols[j] |= 1 << i
        return cols

    def transpose(self) -> "BinaryMatrix":
        return BinaryMatrix(self.cols, self.rows, tuple(self.columns()))

    def stack(self, other: "BinaryMatrix") -> "BinaryMatrix":
        if other.cols != self.cols:
            raise InputError("column counts differ")
        return BinaryMatrix(self.rows + other.rows, self.cols, self.data + other.data)

    def matmul(self, other: "BinaryMatrix") -> "BinaryMatrix":
        if self.cols != other.rows:
            raise InputError("inner dimensions differ")
        out = []
        for r in self.data:
            acc = 0
            for j in iter_bits(r):
                acc ^= other.data[j]
            out.append(acc)
        return BinaryMatrix(self.rows, other.cols, tuple(out))


def mul_bits(m: BinaryMatrix, x: int) -> int:
    """``m x`` with ``x`` and the result packed as integers."""
    out = 0
    for i, r in enumerate(m.data):
        if popcount(r & x) & 1:
            out |= 1 << i
    return out


def gf2_mul(m: BinaryMatrix, x: Sequence[int]) -> Tuple[int, ...]:
    if len(x) != m.cols:
        raise InputError(f"vector length {len(x)} != {m.cols} columns")
    xb = sum(1 << j for j, b in enumerate(x) if b & 1)
    y = mul_bits(m, xb)
    return tuple(y >> i & 1 for i in range(m.rows))


def rank(m: BinaryMatrix) -> int:
    return len(_pivot_rows(m.data))


def _pivot_rows(data: Sequence[int]) -> list[int]:
    """Indices of the first rows forming a basis of the row space, in order."""
    basis: dict[int, int] = {}  # leading bit -> reduced row
    picked = []
    for i, r in enumerate(data):
        x = r
        while x:
            lead = x.bit_length() - 1
            if lead not in basis:
                basis[lead] = x
                picked.append(i)
                break
            x ^= basis[lead]
    return picked


def kernel_dim(m: BinaryMatrix) -> int:
    return m.cols - rank(m)


def invert(m: BinaryMatrix) -> BinaryMatrix:
    """Inverse of a square nonsingular matrix by Gauss-Jordan elimination."""
    k = m.rows
    if m.cols != k:
        raise InputError("matrix is not square")
    rows = [m.data[i] | (1 << (k + i)) for i in range(k)]
    for col in range(k):
        piv = next((i for i in range(col, k) if rows[i] >> col & 1), None)
        if piv is None:
            raise InputError("matrix is singular")
        rows[col], rows[piv] = rows[piv], rows[col]
        for i in range(k):
            if i != col and rows[i] >> col & 1:
                rows[i] ^= rows[col]
    return BinaryMatrix(k, k, tuple(r >> k for r in rows))


@dataclass(frozen=True)
class SystematicForm:
    """``A`` rewritten as ``(I_k; A')`` up to a coordinate permutation.

    ``row_order[t]`` is the row of ``A`` placed at position ``t``, and
    ``transform`` maps messages back: ``A[row_order] @ transform == (I; A')``.
    """

    aprime: BinaryMatrix
    row_order: Tuple[int, ...]
    transform: BinaryMatrix

    def message_for(self, x: int) -> int:
        """Message for the original ``A`` yielding the same codeword as ``x``."""
        return mul_bits(self.transform, x)


def systematic_form(a: BinaryMatrix) -> SystematicForm:
    k = a.cols
    pivots = _pivot_rows(a.data)
    if len(pivots) < k:
        raise InputError("code has nonzero kernel, min weight is 0")
    rest = [i for i in range(a.rows) if i not in set(pivots)]
    order = tuple(pivots + rest)
    top = BinaryMatrix(k, k, tuple(a.data[i] for i in pivots))
    t = invert(top)
    bottom = BinaryMatrix(len(rest), k, tuple(a.data[i] for i in rest))
    return SystematicForm(bottom.matmul(t), order, t)


def parse_matrix(text: str) -> BinaryMatrix:
    """Parse ``"rows cols"`` then ``rows`` lines of 0/1 characters."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise InputError("matrix file is empty")
    try:
        rows, cols = (int(x) for x in lines[0].split())
    except ValueError:
        raise InputError(f"bad header {lines[0]!r}, expected 'rows cols'") from None
    body = lines[1:]
    if len(body) != rows:
        raise InputError(f"header announces {rows} rows, found {len(body)}")
    entries = []
    for ln in body:
        if len(ln) != cols or set(ln) - {"0", "1"}:
            raise InputError(f"bad matrix row {ln!r}")
        entries.append([int(ch) for ch in ln])
    return BinaryMatrix.from_lists(entries, cols)


def format_matrix(m: BinaryMatrix) -> str:
    lines = [f"{m.rows} {m.cols}"]
    lines += ["".join(str(x) for x in row) for row in m.to_lists()]
    return "\n".join(lines) + "\n"


def read_matrix(path: Union[str, Path]) -> BinaryMatrix:
    return parse_matrix(Path(path).read_text())


@dataclass(frozen=True)
class MinDistance:
    value: int
    witness: int  # message x packed as an integer; 0 when the kernel is nontrivial
    kernel_dim: int

    def witness_bits(self, k: int) -> list[int]:
        return [self.witness >> j & 1 for j in range(k)]


def min_distance(a: BinaryMatrix, cap: int = MIN_DISTANCE_CAP) -> MinDistance:
    """Minimum Hamming weight of ``A x`` over nonzero messages ``x``.

    The witness is the first minimiser in Gray-code order.  A code with a
    nontrivial kernel has distance 0, witnessed by a kernel vector.
    """
    kd = kernel_dim(a)
    if kd > 0:
        return MinDistance(0, _kernel_vector(a), kd)
    if a.cols > cap:
        raise CapExceeded(f"exponential search too large: 2^{a.cols} messages exceeds cap 2^{cap}")
    cols = a.columns()
    best, best_i, _ = kernels.gray_min(cols, [0] * len(cols), 1, 1 << a.cols)
    return MinDistance(best, kernels.gray_subset(best_i), 0)


def _kernel_vector(a: BinaryMatrix) -> int:
    # reduce columns; a dependency among them is a kernel vector
    basis: dict[int, Tuple[int, int]] = {}
    for j, col in enumerate(a.columns()):
        x, combo = col, 1 << j
        while x:
            lead = x.bit_length() - 1
            if lead not in basis:
                basis[lead] = (x, combo)
                break
            bx, bc = basis[lead]
            x ^= bx
            combo ^= bc
        if x == 0:
            return combo
    raise AssertionError("no kernel vector found")


def min_distance_by_support(a: BinaryMatrix) -> int:
    """Independent oracle: smallest weight ``w`` such that some vector of
    weight ``w`` lies in the column space.  Exponential in ``rows``."""
    if kernel_dim(a) > 0:
        return 0
    r = rank(a)
    cols = a.columns()
    from itertools import combinations

    for w in range(1, a.rows + 1):
        for support in combinations(range(a.rows), w):
            y = sum(1 << i for i in support)
            if len(_pivot_rows(cols + [y])) == r:
                return w
    raise AssertionError("full-rank code with no nonzero codeword")


def in_column_space(a: BinaryMatrix, y: int) -> bool:
    cols = a.columns()
    return len(_pivot_rows(cols + [y])) == len(_pivot_rows(cols))


def gadget_distance(b: BinaryMatrix) -> int:
    """``min(d(I; B), d(I; B^T))``, which equals ``δ_loc + 1`` of the
    bipartite graph with biadjacency ``B``."""
    top_left = BinaryMatrix.identity(b.cols).stack(b)
    top_right = BinaryMatrix.identity(b.rows).stack(b.transpose())
    return min(min_distance(top_left).value, min_distance(top_right).value)


def random_matrix(rows: int, cols: int, rng: random.Random) -> BinaryMatrix:
    return BinaryMatrix(rows, cols, tuple(rng.getrandbits(cols) for _ in range(rows)))


def circulant(first_row: int, side: int) -> BinaryMatrix:
    """Square matrix whose row ``s`` is ``first_row`` rotated left by ``s``."""
    full = (1 << side) - 1
    return BinaryMatrix(side, side, tuple(((first_row << s) | (first_row >> (side - s))) & full
                                          for s in range(side)))


GADGET_FAMILIES = ("uniform", "circulant")


def gadget_code_search(side: int, required_d: int, attempts: int, seed: int,
                       family: str = "uniform") -> Optional[BinaryMatrix]:
    """Random square ``B`` with ``gadget_distance(B) >= required_d``.

    ``family="uniform"`` draws every entry independently with probability
    1/2.  ``family="circulant"`` draws a uniform first row and rotates it;
    then ``B^T`` is a coordinate permutation of ``B`` so both codes share
    their distance, which makes distance-6 gadgets at side 10 reachable.
    """
    if required_d < 1:
        raise InputError("required_d must be at least 1")
    if side < 1:
        raise InputError("side must be at least 1")
    if family not in GADGET_FAMILIES:
        raise InputError(f"unknown gadget family {family!r}")
    rng = random.Random(seed)
    for _ in range(attempts):
        if family == "circulant":
            b = circulant(rng.getrandbits(side), side)
        else:
            b = random_matrix(side, side, rng)
        if gadget_distance(b) >= required_d:
            return b
    return None
