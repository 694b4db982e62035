"""Text formats: the ``upalg v1`` Cayley-table file, printed sets,
partitions and morphisms, and DOT export of the UP-ordering."""
from __future__ import annotations

from pathlib import Path

from .core import ElementSet, Magma, make_algebra, up_ordering
from .errors import MalformedTable, ParseError

MAGIC = "upalg v1"


def format_algebra(alg) -> str:
    """Serialize to the v1 format; the constant is listed first."""
    m = alg if isinstance(alg, Magma) else alg.as_magma()
    m = m.normalized()
    names = m.names
    width = max(len(s) for s in names)
    lines = [MAGIC, "elements: " + " ".join(names), "table:"]
    for row in m.table:
        lines.append(" ".join(names[v].ljust(width) for v in row).rstrip())
    return "\n".join(lines) + "\n"


def parse_algebra(text: str, path="<string>") -> Magma:
    """Parse v1 text into an unvalidated :class:`Magma` (constant = first
    listed element).  Raises :class:`ParseError` with a line number."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        lines.append((lineno, s))
    if not lines:
        raise ParseError("empty file", path)
    lineno, head = lines[0]
    if head.split() != MAGIC.split():
        raise ParseError(f"expected header {MAGIC!r}, got {head!r}", path, lineno)
    if len(lines) < 3:
        raise ParseError("missing 'elements:' or 'table:' section", path, lines[-1][0])
    lineno, el = lines[1]
    if not el.startswith("elements:"):
        raise ParseError("expected 'elements:' line", path, lineno)
    names = el[len("elements:"):].split()
    if not names:
        raise ParseError("no elements listed", path, lineno)
    seen = set()
    for s in names:
        if s in seen:
            raise ParseError(f"duplicate element label {s!r}", path, lineno)
        seen.add(s)
    lineno, tl = lines[2]
    if tl.rstrip(":").strip() != "table" or not tl.endswith(":"):
        raise ParseError("expected 'table:' line", path, lineno)
    index = {s: i for i, s in enumerate(names)}
    rows = lines[3:]
    n = len(names)
    if len(rows) != n:
        at = rows[n][0] if len(rows) > n else (rows[-1][0] if rows else lineno)
        raise ParseError(f"expected {n} table rows, found {len(rows)}", path, at)
    table = []
    for lineno, s in rows:
        cells = s.split()
        if len(cells) != n:
            raise ParseError(f"row has {len(cells)} entries, expected {n}", path, lineno)
        row = []
        for c in cells:
            if c not in index:
                raise ParseError(f"unknown element {c!r}", path, lineno)
            row.append(index[c])
        table.append(row)
    try:
        return Magma(tuple(names), tuple(tuple(r) for r in table), 0)
    except MalformedTable as exc:
        raise ParseError(str(exc), path) from None


def read_magma(path) -> Magma:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ParseError(exc.strerror or str(exc), str(p)) from None
    return parse_algebra(text, str(p))


def load_algebra(path):
    """Read and validate; raises ``AxiomViolation`` if the table is not a
    UP-algebra."""
    m = read_magma(path)
    return make_algebra(m.names, m.zero, m.table)


def format_set(alg, s: ElementSet) -> str:
    return "{" + ",".join(alg.names[i] for i in s) + "}"


def format_partition(alg, p) -> str:
    return "{" + ",".join(format_set(alg, blk) for blk in p.classes) + "}"


def format_morphism(f) -> str:
    src, dst = f.source.names, f.target.names
    return " ".join(f"{src[x]}↦{dst[v]}" for x, v in enumerate(f.mapping))


def parse_labels(alg, text: str) -> ElementSet:
    """Comma-separated labels -> element set (empty string -> empty set)."""
    labels = [s.strip() for s in text.split(",") if s.strip()]
    return alg.subset(labels)


def parse_map(src, dst, text: str) -> tuple[int, ...]:
    """Either ``x=y`` pairs covering the source, or target labels listed in
    source order."""
    items = [s.strip() for s in text.split(",") if s.strip()]
    if items and all("=" in s for s in items):
        out: dict[int, int] = {}
        for s in items:
            a, b = (t.strip() for t in s.split("=", 1))
            x = src.index(a)
            if x in out:
                raise ValueError(f"{a!r} mapped twice")
            out[x] = dst.index(b)
        missing = [src.names[x] for x in src.elements if x not in out]
        if missing:
            raise ValueError(f"no image given for {', '.join(missing)}")
        return tuple(out[x] for x in src.elements)
    if any("=" in s for s in items):
        raise ValueError("mixing 'x=y' pairs with bare labels")
    if len(items) != src.n:
        raise ValueError(f"map lists {len(items)} images, source has {src.n} elements")
    return tuple(dst.index(s) for s in items)


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(alg, name: str = "up_order") -> str:
    """Hasse diagram of the UP-ordering; edges point upward toward 0."""
    poset = up_ordering(alg)
    lines = [f"digraph {_dot_id(name)} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for s in alg.names:
        lines.append(f"  {_dot_id(s)};")
    for x, y in poset.covers():
        lines.append(f"  {_dot_id(alg.names[x])} -> {_dot_id(alg.names[y])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
