"""Yale-format (compressed sparse row) matrices with exact arithmetic.

A matrix is stored as three arrays: `data` holds the nonzero values scanned
left-to-right top-to-bottom, `indptr` (length rows+1) holds the index into
`data` where each row starts, and `indices` holds the column of each stored
value. The JSON interchange keys are the classic array names A, IA, JA.

Values are exact: Python ints and fractions.Fraction. The "sparsity" metric
here is the NONZERO fraction nnz/(m*n); the complementary measure is exposed
as zero_fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FormatError, RinguaError

Value = int | Fraction


def _coerce_value(v) -> Value:
    """Accept ints, Fractions, integral floats, and "p/q" strings."""
    if isinstance(v, bool):
        raise FormatError(f"boolean {v!r} is not a matrix value")
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else v
    if isinstance(v, float):
        if v.is_integer():
            return int(v)
        raise FormatError(
            f"non-integral float {v!r}: use an exact \"p/q\" string instead"
        )
    if isinstance(v, str):
        try:
            f = Fraction(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"cannot parse {v!r} as a rational value") from exc
        return int(f) if f.denominator == 1 else f
    raise FormatError(f"unsupported matrix value {v!r}")


def _encode_value(v: Value):
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return v


@dataclass(frozen=True)
class CsrMatrix:
    rows: int
    cols: int
    data: tuple[Value, ...]
    indptr: tuple[int, ...]
    indices: tuple[int, ...]

    def __post_init__(self):
        validate_csr(self)

    @property
    def nnz(self) -> int:
        return len(self.data)

    def to_json(self) -> dict:
        return {
            "m": self.rows,
            "n": self.cols,
            "A": [_encode_value(v) for v in self.data],
            "IA": list(self.indptr),
            "JA": list(self.indices),
        }


def validate_csr(c: CsrMatrix) -> None:
    """Check every structural invariant, naming the first one violated."""
    if c.rows < 1 or c.cols < 1:
        raise FormatError("matrix dimensions must be positive")
    if len(c.indptr) != c.rows + 1:
        raise FormatError(
            f"IA must have length rows+1 = {c.rows + 1}, got {len(c.indptr)}"
        )
    if c.indptr[0] != 0:
        raise FormatError(f"IA[0] must be 0, got {c.indptr[0]}")
    if c.indptr[-1] != len(c.data):
        raise FormatError(
            f"IA[m] must equal NNZ = {len(c.data)}, got {c.indptr[-1]}"
        )
    for i in range(c.rows):
        if c.indptr[i] > c.indptr[i + 1]:
            raise FormatError(f"IA must be nondecreasing; IA[{i}] > IA[{i + 1}]")
    if len(c.indices) != len(c.data):
        raise FormatError(
            f"JA must have length NNZ = {len(c.data)}, got {len(c.indices)}"
        )
    for k, j in enumerate(c.indices):
        if not 0 <= j < c.cols:
            raise FormatError(f"JA[{k}] = {j} outside [0, {c.cols})")
    for i in range(c.rows):
        row = c.indices[c.indptr[i]:c.indptr[i + 1]]
        for a, b in zip(row, row[1:]):
            if a >= b:
                raise FormatError(
                    f"JA must be strictly increasing within row {i}: {a} >= {b}"
                )
    for k, v in enumerate(c.data):
        if v == 0:
            raise FormatError(f"A[{k}] stores an explicit zero")


def _check_dense(dense) -> tuple[int, int]:
    if not isinstance(dense, (list, tuple)) or not dense:
        raise FormatError("dense matrix must be a nonempty list of rows")
    m = len(dense)
    n = len(dense[0])
    if n == 0:
        raise FormatError("dense matrix rows must be nonempty")
    for i, row in enumerate(dense):
        if len(row) != n:
            raise FormatError(f"ragged dense matrix: row {i} has {len(row)} entries, expected {n}")
    return m, n


def to_yale(dense) -> CsrMatrix:
    """Encode a dense grid, scanning nonzeros left-to-right top-to-bottom."""
    m, n = _check_dense(dense)
    data: list[Value] = []
    indptr = [0]
    indices: list[int] = []
    for row in dense:
        for j, raw in enumerate(row):
            v = _coerce_value(raw)
            if v != 0:
                data.append(v)
                indices.append(j)
        indptr.append(len(data))
    return CsrMatrix(m, n, tuple(data), tuple(indptr), tuple(indices))


def from_yale(c: CsrMatrix) -> list[list[Value]]:
    """Expand to a dense grid; inverse of to_yale."""
    dense = [[0] * c.cols for _ in range(c.rows)]
    for i in range(c.rows):
        for k in range(c.indptr[i], c.indptr[i + 1]):
            dense[i][c.indices[k]] = c.data[k]
    return dense


def sparsity(dense) -> Fraction:
    """Nonzero fraction nnz/(m*n), exact."""
    m, n = _check_dense(dense)
    nnz = sum(1 for row in dense for v in row if _coerce_value(v) != 0)
    return Fraction(nnz, m * n)


def zero_fraction(dense) -> Fraction:
    return 1 - sparsity(dense)


def csr_multiply(a: CsrMatrix, b: CsrMatrix) -> CsrMatrix:
    """Exact sparse product; row-at-a-time accumulation, zeros dropped."""
    if a.cols != b.rows:
        raise RinguaError(
            f"dimension mismatch: ({a.rows}x{a.cols}) * ({b.rows}x{b.cols})"
        )
    data: list[Value] = []
    indptr = [0]
    indices: list[int] = []
    for i in range(a.rows):
        acc: dict[int, Value] = {}
        for k in range(a.indptr[i], a.indptr[i + 1]):
            va = a.data[k]
            col = a.indices[k]
            for kb in range(b.indptr[col], b.indptr[col + 1]):
                j = b.indices[kb]
                acc[j] = acc.get(j, 0) + va * b.data[kb]
        for j in sorted(acc):
            if acc[j] != 0:
                data.append(acc[j])
                indices.append(j)
        indptr.append(len(data))
    return CsrMatrix(a.rows, b.cols, tuple(data), tuple(indptr), tuple(indices))


def csr_from_json(data: dict) -> CsrMatrix:
    if not isinstance(data, dict):
        raise FormatError("CSR document must be a JSON object")
    missing = {"m", "n", "A", "IA", "JA"} - data.keys()
    if missing:
        raise FormatError(f"CSR document missing keys: {sorted(missing)}")
    for key in ("IA", "JA"):
        if not isinstance(data[key], list) or any(
            not isinstance(v, int) or isinstance(v, bool) for v in data[key]
        ):
            raise FormatError(f"'{key}' must be a list of integers")
    if not isinstance(data["m"], int) or not isinstance(data["n"], int):
        raise FormatError("'m' and 'n' must be integers")
    values = tuple(_coerce_value(v) for v in data["A"])
    return CsrMatrix(data["m"], data["n"], values, tuple(data["IA"]), tuple(data["JA"]))


def dense_from_json(data) -> list[list[Value]]:
    if not isinstance(data, list):
        raise FormatError("dense matrix document must be a JSON array of rows")
    _check_dense(data)
    return [[_coerce_value(v) for v in row] for row in data]


def dense_to_json(dense) -> list:
    return [[_encode_value(_coerce_value(v)) for v in row] for row in dense]
