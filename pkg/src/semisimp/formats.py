"""JSON and text encodings for complexes, sequences and matrix windows.

Complex JSON::

    {"kind":"augsset","dim":2,"levels":[{"n":-1,"size":1},
     {"n":0,"size":3,"faces":[[0,0,0]]}, ...]}

``faces[i][s]`` is the index of d_i(s). Complexes embedded in a standard
simplex also carry ``"ambient"`` and per-level ``"labels"`` (vertex lists)
so that they survive a round trip through a pipe. The empty complex has
``"dim": null``. Output is compact with a fixed key order, so encoding a
decoded document reproduces it byte for byte.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import ValidationError
from .seqmat import AugMatrix, AugSequence, Scalar, scalar
from .sscore import AugSSet, require_valid

_SEP = (",", ":")


def _jsonable(label: Any) -> Any:
    if isinstance(label, tuple):
        return [_jsonable(x) for x in label]
    return label


def _tupled(value: Any) -> Any:
    if isinstance(value, list):
        return tuple(_tupled(x) for x in value)
    return value


def augsset_to_obj(X: AugSSet) -> dict:
    obj: dict[str, Any] = {"kind": "augsset", "dim": None if X.is_empty else X.dim}
    keep_labels = X.ambient is not None and X.labels is not None
    if keep_labels:
        obj["ambient"] = X.ambient
    levels = []
    for n in X.levels():
        lv: dict[str, Any] = {"n": n, "size": X.size(n)}
        if n >= 0:
            lv["faces"] = [list(d) for d in X.faces[n]]
        if keep_labels:
            lv["labels"] = [_jsonable(lab) for lab in X.labels[n + 1]]
        levels.append(lv)
    obj["levels"] = levels
    return obj


def augsset_to_json(X: AugSSet) -> str:
    return json.dumps(augsset_to_obj(X), separators=_SEP, ensure_ascii=False)


def augsset_from_obj(obj: Any) -> AugSSet:
    if not isinstance(obj, dict) or obj.get("kind") != "augsset":
        raise ValidationError('expected an object with "kind": "augsset"')
    levels = obj.get("levels")
    if not isinstance(levels, list):
        raise ValidationError('"levels" must be a list')
    sizes, faces, labels = [], [], []
    for k, lv in enumerate(levels):
        if not isinstance(lv, dict) or lv.get("n") != k - 1:
            raise ValidationError(f"level entry {k} must have n = {k - 1}")
        size = lv.get("size")
        if not isinstance(size, int) or isinstance(size, bool) or size < 0:
            raise ValidationError(f"level {k - 1}: bad size {size!r}")
        sizes.append(size)
        if k > 0:
            f = lv.get("faces")
            if (not isinstance(f, list)
                    or not all(isinstance(d, list) and all(isinstance(x, int) for x in d) for d in f)):
                raise ValidationError(f"level {k - 1}: faces must be a list of integer lists")
            faces.append(tuple(tuple(d) for d in f))
        if "labels" in lv:
            labels.append(tuple(_tupled(x) for x in lv["labels"]))
    ambient = obj.get("ambient")
    has_labels = ambient is not None and len(labels) == len(sizes)
    X = AugSSet(tuple(sizes), tuple(faces),
                labels=tuple(labels) if has_labels else None,
                ambient=ambient if has_labels else None)
    expected_dim = None if X.is_empty else X.dim
    if obj.get("dim") != expected_dim:
        raise ValidationError(f'"dim" is {obj.get("dim")!r} but the levels give {expected_dim!r}')
    return require_valid(X)


def augsset_from_json(text: str) -> AugSSet:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"not JSON: {exc}") from exc
    return augsset_from_obj(obj)


# ---------------------------------------------------------------- sequences and matrices

def _s(x: Scalar) -> str:
    return str(scalar(x))


def seq_to_json(a: AugSequence, hi: int = 16) -> str:
    """Finite sequences are written in full; lazy ones up to index ``hi``."""
    if a.is_finite:
        entries = [_s(x) for x in a.entries]
    else:
        entries = [_s(x) for x in a.window(-1, hi)]
    obj = {"kind": "seq", "start": -1, "entries": entries, "tail": a.tail}
    return json.dumps(obj, separators=_SEP)


def seq_from_json(text: str) -> AugSequence:
    obj = json.loads(text)
    if obj.get("kind") != "seq" or obj.get("start") != -1:
        raise ValidationError("expected a sequence document starting at -1")
    if obj.get("tail") != "zero":
        raise ValidationError("only sequences with a zero tail can be read back exactly")
    return AugSequence(scalar(x) for x in obj["entries"])


def matwin_to_json(A: AugMatrix, rows: tuple[int, int], cols: tuple[int, int]) -> str:
    obj = {"kind": "matwin", "name": A.name, "rows": list(rows), "cols": list(cols),
           "data": [[_s(x) for x in r] for r in A.window(rows, cols)]}
    return json.dumps(obj, separators=_SEP)


def render_table(A: AugMatrix, rows: tuple[int, int], cols: tuple[int, int]) -> str:
    """Right-aligned text window with row and column indices as headers."""
    data = A.window(rows, cols)
    corner = A.name or ""
    header = [corner] + [str(j) for j in range(cols[0], cols[1] + 1)]
    body = [[str(i)] + [_s(x) for x in r] for i, r in zip(range(rows[0], rows[1] + 1), data)]
    widths = [max(len(r[k]) for r in [header] + body) for k in range(len(header))]
    lines = []
    for k, r in enumerate([header] + body):
        first = r[0].rjust(widths[0]) + " |"
        rest = " ".join(c.rjust(w) for c, w in zip(r[1:], widths[1:]))
        lines.append(f"{first} {rest}")
        if k == 0:
            lines.append("-" * len(lines[0]))
    return "\n".join(lines)
