"""Quasi-ribbon tableaux, crystal operators and degenerate quantum group
modules.

A quasi-ribbon tableau of shape alpha has row k weakly increasing, with row
k+1 starting under the last cell of row k, and entries strictly increasing
down each column; because of the ribbon layout this amounts to
row_k[-1] < row_{k+1}[0].  Reading column by column, bottom to top, left to
right identifies tableaux with quasi-ribbon words.

The crystal operators use the standard cancellation: scan the {i, i+1}
subword, repeatedly removing (i+1)i pairs; the raising operator lowers the
leftmost surviving i+1, the lowering operator raises the rightmost
surviving i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algmod import UQ0, AlgModule
from .compositions import Composition, bullet, is_strong, refinement_indices
from .exactlin import QMat
from .tensor import Word, content

__all__ = [
    "QRTableau", "qrt_enumerate", "read_word", "tab", "is_qr_word",
    "crystal_e", "crystal_f", "build_D", "wt", "wt_inverse",
    "u0_action_on_tensor", "u0_generator_matrices",
]


@dataclass(frozen=True)
class QRTableau:
    """Shape and row fillings of a quasi-ribbon tableau."""

    shape: Composition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if tuple(len(row) for row in self.rows) != tuple(self.shape):
            raise ValueError("row lengths do not match the shape")
        for row in self.rows:
            if any(row[k] > row[k + 1] for k in range(len(row) - 1)):
                raise ValueError("rows must weakly increase")
        for k in range(len(self.rows) - 1):
            if self.rows[k][-1] >= self.rows[k + 1][0]:
                raise ValueError("columns must strictly increase")


def _column_starts(alpha: Composition) -> list[int]:
    """1-based starting column of each row (row k+1 starts under the last
    cell of row k)."""
    starts, c = [], 1
    for part in alpha:
        starts.append(c)
        c += part - 1
    return starts


def qrt_enumerate(n: int, alpha: Composition) -> list[QRTableau]:
    """All quasi-ribbon tableaux of the given shape over alphabet 1..n."""
    if not is_strong(alpha):
        raise ValueError(f"{alpha} is not strong")
    if not alpha:
        return [QRTableau((), ())]
    out: list[QRTableau] = []

    def weakly_increasing_rows(length: int, lo: int):
        def rec(prefix, lo_):
            if len(prefix) == length:
                yield tuple(prefix)
                return
            for v in range(lo_, n + 1):
                yield from rec(prefix + [v], v)
        yield from rec([], lo)

    def rec(k: int, rows: list[tuple[int, ...]]):
        if k == len(alpha):
            out.append(QRTableau(alpha, tuple(rows)))
            return
        lo = rows[-1][-1] + 1 if rows else 1
        for row in weakly_increasing_rows(alpha[k], lo):
            rec(k + 1, rows + [row])

    rec(0, [])
    return out


def read_word(t: QRTableau) -> Word:
    """Column reading: each column bottom to top, columns left to right."""
    starts = _column_starts(t.shape)
    cells: dict[tuple[int, int], int] = {}
    for k, row in enumerate(t.rows):
        for off, entry in enumerate(row):
            cells[(k, starts[k] + off)] = entry
    if not cells:
        return ()
    out = []
    for col in range(1, max(c for _, c in cells) + 1):
        for k in sorted((k for k, c in cells if c == col), reverse=True):
            out.append(cells[(k, col)])
    return tuple(out)


def tab(word: Word, alpha: Composition) -> QRTableau:
    """Place the letters column by column, bottom to top, left to right;
    raises when the filling is not a quasi-ribbon tableau."""
    if sum(alpha) != len(word):
        raise ValueError("word length does not match shape size")
    starts = _column_starts(alpha)
    columns: dict[int, list[int]] = {}
    for k, part in enumerate(alpha):
        for off in range(part):
            columns.setdefault(starts[k] + off, []).append(k)
    rows = [[0] * part for part in alpha]
    pos = 0
    for col in sorted(columns):
        for k in sorted(columns[col], reverse=True):
            rows[k][col - starts[k]] = word[pos]
            pos += 1
    return QRTableau(alpha, tuple(tuple(row) for row in rows))


def is_qr_word(word: Word, alpha: Composition) -> bool:
    """Whether the word is the reading word of some tableau of this shape."""
    try:
        t = tab(word, alpha)
    except ValueError:
        return False
    return read_word(t) == word


def _cancelled_positions(word: Word, i: int) -> list[int]:
    """Positions (0-based) of the surviving i / i+1 letters after removing
    adjacent (i+1)i pairs from the {i, i+1} subword, left to right."""
    stack: list[int] = []
    for pos, letter in enumerate(word):
        if letter == i + 1:
            stack.append(pos)
        elif letter == i:
            if stack and word[stack[-1]] == i + 1:
                stack.pop()
            else:
                stack.append(pos)
    return stack


def crystal_e(i: int, word: Word) -> Word | None:
    """Raising operator: lower the leftmost surviving i+1, or None."""
    stack = _cancelled_positions(word, i)
    for pos in stack:
        if word[pos] == i + 1:
            return word[:pos] + (i,) + word[pos + 1:]
    return None


def crystal_f(i: int, word: Word) -> Word | None:
    """Lowering operator: raise the rightmost surviving i, or None."""
    stack = _cancelled_positions(word, i)
    for pos in reversed(stack):
        if word[pos] == i:
            return word[:pos] + (i + 1,) + word[pos + 1:]
    return None


def wt(t: QRTableau, n: int) -> Composition:
    """Entry content of the tableau, as a weight in Lambda(n, r)."""
    out = [0] * n
    for row in t.rows:
        for entry in row:
            out[entry - 1] += 1
    return tuple(out)


def wt_inverse(mu: Composition, alpha: Composition) -> QRTableau:
    """The tableau of shape alpha and weight mu, for mu refining
    alpha_bullet: row k takes the letters of the k-th refinement block."""
    n = len(mu)
    idx = refinement_indices(mu, bullet(alpha, n))
    if idx is None:
        raise ValueError(f"{mu} does not refine the padded {alpha}")
    rows = []
    for k in range(len(alpha)):
        row: list[int] = []
        for j in range(idx[k], idx[k + 1]):
            row.extend([j] * mu[j - 1])
        rows.append(tuple(row))
    return QRTableau(alpha, tuple(rows))


def build_D(alpha: Composition, n: int) -> AlgModule:
    """The quantum group module on quasi-ribbon tableaux of shape alpha.

    Raising/lowering act through the crystal operators on reading words,
    kept only when the result is again a quasi-ribbon word of the same
    shape; k_i fixes tableaux without entry i and kills the rest.  Zero
    module when the shape is longer than the alphabet.
    """
    tableaux = qrt_enumerate(n, alpha)
    labels = tuple(tableaux)
    d = len(labels)
    index = {t: k for k, t in enumerate(labels)}
    actions: dict[str, QMat] = {}
    for i in range(1, n):
        for name, op in ((f"e{i}", crystal_e), (f"f{i}", crystal_f)):
            cols = []
            for t in labels:
                col = [0] * d
                word = op(i, read_word(t))
                if word is not None and is_qr_word(word, alpha):
                    col[index[tab(word, alpha)]] = 1
                cols.append(col)
            actions[name] = QMat(list(zip(*cols))) if cols else QMat([])
    for i in range(1, n + 1):
        actions[f"k{i}"] = QMat([[1 if (a == b and wt(labels[a], n)[i - 1] == 0) else 0
                                  for b in range(d)] for a in range(d)])
    return AlgModule(UQ0, (n, sum(alpha)), labels, actions,
                     weights={t: wt(t, n) for t in labels})


# --- the coproduct action on tensor space -----------------------------------


def u0_action_on_tensor(kind: str, index: int, n: int, r: int) -> QMat:
    """Iterated-coproduct action of a generator on the word basis.

    k_i acts site-wise (killing any word containing i); e_i is the sum over
    sites t of 1 x...x e_i x k_i x...x k_i, and f_i the sum over sites of
    k_{i+1} x...x k_{i+1} x f_i x 1 x...x 1, with the one-site actions
    e_i = E_{i,i+1}, f_i = E_{i+1,i}, k_i = sum of E_{jj} over j != i.
    """
    from .tensor import TensorSpace

    space = TensorSpace(n, r)
    d = space.dim
    cols: list[list[int]] = [[0] * d for _ in range(d)]

    def site_apply(word: Word, ops) -> Word | None:
        out = []
        for letter, op in zip(word, ops):
            if op == "1":
                out.append(letter)
            elif op[0] == "k":
                if letter == int(op[1:]):
                    return None
                out.append(letter)
            elif op[0] == "e":
                if letter != int(op[1:]) + 1:
                    return None
                out.append(int(op[1:]))
            elif op[0] == "f":
                if letter != int(op[1:]):
                    return None
                out.append(int(op[1:]) + 1)
        return tuple(out)

    for ci, word in enumerate(space.words):
        images: list[Word] = []
        if kind == "k":
            img = site_apply(word, [f"k{index}"] * r)
            if img is not None:
                images.append(img)
        elif kind == "e":
            for t in range(r):
                ops = ["1"] * t + [f"e{index}"] + [f"k{index}"] * (r - t - 1)
                img = site_apply(word, ops)
                if img is not None:
                    images.append(img)
        elif kind == "f":
            for t in range(r):
                ops = [f"k{index + 1}"] * t + [f"f{index}"] + ["1"] * (r - t - 1)
                img = site_apply(word, ops)
                if img is not None:
                    images.append(img)
        else:
            raise ValueError(f"unknown generator kind {kind}")
        for img in images:
            cols[ci][space.index[img]] += 1
    return QMat(list(zip(*cols)))


def u0_generator_matrices(n: int, r: int) -> dict[str, QMat]:
    """All generator matrices of the coproduct action on the word basis."""
    out = {}
    for i in range(1, n):
        out[f"e{i}"] = u0_action_on_tensor("e", i, n, r)
        out[f"f{i}"] = u0_action_on_tensor("f", i, n, r)
    for i in range(1, n + 1):
        out[f"k{i}"] = u0_action_on_tensor("k", i, n, r)
    return out
