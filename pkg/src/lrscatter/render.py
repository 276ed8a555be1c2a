"""Deterministic SVG and ASCII drawings of wiring diagrams, web diagrams,
and triangular patterns.

ASCII glyphs: ``|`` strand, ``X`` crossing (with ``\\ /`` approaches) in
wiring diagrams; ``\\`` type-1, ``/`` type-2, ``-`` type-3 pieces and ``*``
fork nodes in web diagrams (``+`` where several overlap).
"""

from __future__ import annotations

from typing import Union

from .permutations import ReducedWord, evaluate_word
from .web import BZPattern, WebDiagram, lattice_points

SVG_FORMAT = "svg"
ASCII_FORMAT = "ascii"


def render(obj: Union[ReducedWord, WebDiagram, BZPattern], fmt: str) -> str:
    """Draw one of the supported combinatorial objects."""
    if fmt not in (SVG_FORMAT, ASCII_FORMAT):
        raise ValueError(f"unsupported format {fmt!r}")
    if isinstance(obj, ReducedWord):
        return _wiring_svg(obj) if fmt == SVG_FORMAT else _wiring_ascii(obj)
    if isinstance(obj, WebDiagram):
        return _web_svg(obj) if fmt == SVG_FORMAT else _web_ascii(obj)
    if isinstance(obj, BZPattern):
        return _bz_svg(obj) if fmt == SVG_FORMAT else _bz_ascii(obj)
    raise ValueError(f"cannot render object of type {type(obj).__name__}")


def _svg_document(width: float, height: float, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">'
    )
    return "\n".join([head] + body + ["</svg>"]) + "\n"


# -- wiring diagrams ---------------------------------------------------------


def _strand_positions(word: ReducedWord) -> list[list[int]]:
    """Position of each pseudo-line at every height of the diagram; row 0 is
    the bottom arrangement, row ``len(word)`` the top (identity)."""
    perm, reduced = evaluate_word(word)
    if not reduced:
        raise ValueError("word is not reduced")
    arrangement = list(perm.inverse().images)  # position -> line
    rows = [list(arrangement)]
    for a in word.letters:
        arrangement[a - 1], arrangement[a] = arrangement[a], arrangement[a - 1]
        rows.append(list(arrangement))
    return rows


def _wiring_ascii(word: ReducedWord) -> str:
    n = word.n
    cols = 4 * (n - 1) + 1
    x = lambda p: 4 * (p - 1)
    rows = _strand_positions(word)
    lines = []
    lines.append("".join(str(p).rjust(1).ljust(4) for p in range(1, n + 1)).rstrip())
    for level in range(len(word.letters), 0, -1):
        a = word.letters[level - 1]
        top = [" "] * cols
        mid = [" "] * cols
        bot = [" "] * cols
        for p in range(1, n + 1):
            if p not in (a, a + 1):
                top[x(p)] = mid[x(p)] = bot[x(p)] = "|"
        top[x(a) + 1] = "\\"
        top[x(a + 1) - 1] = "/"
        mid[x(a) + 2] = "X"
        bot[x(a) + 1] = "/"
        bot[x(a + 1) - 1] = "\\"
        lines += ["".join(top).rstrip(), "".join(mid).rstrip(), "".join(bot).rstrip()]
    bottom = rows[0]
    lines.append("".join(str(v).rjust(1).ljust(4) for v in bottom).rstrip())
    return "\n".join(lines) + "\n"


def _wiring_svg(word: ReducedWord) -> str:
    n, l = word.n, len(word.letters)
    dx, dy, margin = 40, 36, 30
    width = margin * 2 + dx * (n - 1)
    height = margin * 2 + dy * (l + 1)
    x = lambda p: margin + dx * (p - 1)
    y = lambda k: margin + dy * (l + 1 - k)  # k heights from bottom: 0 .. l+1
    rows = _strand_positions(word)
    # track positions of each line at each height
    pos_at = []  # height index 0..l -> line -> position
    for arrangement in rows:
        pos_at.append({line: p + 1 for p, line in enumerate(arrangement)})
    body = []
    for line in range(1, n + 1):
        pts = [(x(pos_at[0][line]), y(0))]
        for k in range(l + 1):
            pts.append((x(pos_at[k][line]), y(k) - dy // 2))
        pts.append((x(pos_at[l][line]), y(l + 1)))
        path = " ".join(f"{px},{py}" for px, py in pts)
        body.append(
            f'<polyline points="{path}" fill="none" stroke="black" stroke-width="1.5"/>'
        )
    for k, a in enumerate(word.letters, start=1):
        cx = (x(a) + x(a + 1)) / 2
        cy = (y(k - 1) + y(k)) / 2 - dy // 2
        body.append(f'<circle cx="{cx:.1f}" cy="{cy:.1f}" r="3" fill="black"/>')
    for p in range(1, n + 1):
        body.append(
            f'<text x="{x(p)}" y="{margin - 10}" font-size="14" '
            f'text-anchor="middle">U{p}</text>'
        )
        body.append(
            f'<text x="{x(p)}" y="{height - margin + 20}" font-size="14" '
            f'text-anchor="middle">L{p}</text>'
        )
    return _svg_document(width, height, body)


# -- web diagrams ------------------------------------------------------------


def _web_elements(d: WebDiagram):
    """Segments and clipped rays as doubled-coordinate endpoint pairs."""
    pts = [n.point for n, _ in d.nodes]
    if not pts:
        return [], (0, 0, 0, 0)
    rmin = min(p[2] for p in pts) - 4
    rmax = max(p[2] for p in pts) + 4
    pieces = []
    for seg, mult in d.segments:
        pieces.append((seg.axis, seg.a, seg.b, mult))
    for ray, mult in d.rays:
        reach = (rmax - ray.origin[2]) if ray.direction[2] > 0 else (ray.origin[2] - rmin)
        if ray.direction[2] == 0:
            reach = 6
        end = tuple(ray.origin[k] + ray.direction[k] * reach for k in range(3))
        pieces.append((ray.axis, ray.origin, end, mult))
    xs = [q - p for (_, (p, q, _r), _b, _m) in pieces] + [
        b[1] - b[0] for (_, _a, b, _m) in pieces
    ]
    return pieces, (min(xs), max(xs), rmin, rmax)


def _web_svg(d: WebDiagram) -> str:
    pieces, (xmin, xmax, rmin, rmax) = _web_elements(d)
    unit, margin = 14, 30
    width = margin * 2 + (xmax - xmin) * unit
    height = margin * 2 + (rmax - rmin) * unit
    to_px = lambda pt: (
        margin + ((pt[1] - pt[0]) - xmin) * unit,
        margin + (rmax - pt[2]) * unit,
    )
    perp = {0: (1, 1), 1: (1, -1), 2: (0, 1)}
    body = []
    for axis, a, b, mult in sorted(pieces):
        (x1, y1), (x2, y2) = to_px(a), to_px(b)
        px, py = perp[axis]
        norm = (px * px + py * py) ** 0.5
        for k in range(mult):
            off = (k - (mult - 1) / 2) * 3.0
            ox, oy = off * px / norm, off * py / norm
            body.append(
                f'<line x1="{x1 + ox:.1f}" y1="{y1 + oy:.1f}" '
                f'x2="{x2 + ox:.1f}" y2="{y2 + oy:.1f}" '
                f'stroke="black" stroke-width="1.5"/>'
            )
    for node, mult in sorted(d.nodes):
        cx, cy = to_px(node.point)
        body.append(
            f'<circle cx="{cx:.1f}" cy="{cy:.1f}" r="{2.5 + 1.5 * (mult - 1):.1f}" '
            f'fill="black"/>'
        )
    return _svg_document(width, height, body)


def _web_ascii(d: WebDiagram) -> str:
    pieces, (xmin, xmax, rmin, rmax) = _web_elements(d)
    if not pieces:
        return "(empty diagram)\n"
    ncols = xmax - xmin + 1
    nrows = rmax - rmin + 1
    grid = [[" "] * ncols for _ in range(nrows)]
    glyph = {0: "\\", 1: "/", 2: "-"}

    def plot(col: int, row: int, ch: str) -> None:
        if 0 <= row < nrows and 0 <= col < ncols:
            cur = grid[row][col]
            grid[row][col] = ch if cur in (" ", ch) else "+"

    for axis, a, b, _mult in sorted(pieces):
        if axis == 2:
            row = rmax - a[2]
            c1, c2 = sorted((a[1] - a[0] - xmin, b[1] - b[0] - xmin))
            for col in range(c1, c2 + 1):
                plot(col, row, "-")
        else:
            steps = abs(b[2] - a[2])
            dr = -1 if b[2] > a[2] else 1
            dcol = (b[1] - b[0] - (a[1] - a[0])) // steps if steps else 0
            col, row = a[1] - a[0] - xmin, rmax - a[2]
            for _ in range(steps + 1):
                plot(col, row, glyph[axis])
                col += dcol
                row += dr
    for node, _mult in d.nodes:
        p = node.point
        col, row = p[1] - p[0] - xmin, rmax - p[2]
        if 0 <= row < nrows and 0 <= col < ncols:
            grid[row][col] = "*"
    return "\n".join("".join(row).rstrip() for row in grid).rstrip("\n") + "\n"


# -- BZ patterns -------------------------------------------------------------


def _bz_rows(pattern: BZPattern) -> list[list[int]]:
    """Pattern values by row, top of the triangle first."""
    rows: dict[int, list[int]] = {}
    for p in lattice_points(pattern.rank):
        rows.setdefault(p[2], []).append(pattern.values[p])
    return [rows[r] for r in sorted(rows, reverse=True)]


def _bz_ascii(pattern: BZPattern) -> str:
    rows = _bz_rows(pattern)
    if not rows:
        return "(empty pattern)\n"
    cell = max(2, max(len(str(v)) for row in rows for v in row) + 1)
    width = len(rows[-1]) * cell
    out = []
    for row in rows:
        text = "".join(str(v).center(cell) for v in row)
        out.append(text.center(width).rstrip())
    return "\n".join(out) + "\n"


def _bz_svg(pattern: BZPattern) -> str:
    unit, margin = 26, 30
    pts = lattice_points(pattern.rank)
    if not pts:
        return _svg_document(2 * margin, 2 * margin, [])
    xs = [q - p for (p, q, _r) in pts]
    xmin, xmax = min(xs), max(xs)
    rmax = max(p[2] for p in pts)
    to_px = lambda pt: (
        margin + ((pt[1] - pt[0]) - xmin) * unit / 2,
        margin + (rmax - pt[2]) * unit,
    )
    width = margin * 2 + (xmax - xmin) * unit / 2
    height = margin * 2 + (rmax - 1) * unit
    body = []
    for p in pts:
        x, y = to_px(p)
        body.append(
            f'<text x="{x:.1f}" y="{y:.1f}" font-size="13" text-anchor="middle" '
            f'dominant-baseline="middle">{pattern.values[p]}</text>'
        )
    return _svg_document(width, height, body)
