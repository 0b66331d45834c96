"""Framed handle complexes of the double covers, and the moves that simplify them.

Complexes live at the level of the linking matrix: every 2-handle records its
framing, its row of linking numbers and the dotted circles it runs over.
Moves are congruences of that matrix plus bookkeeping of handle counts.
"""
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx
from sympy import Matrix, symbols

from .cover import lift_framing
from .errors import NotBlowdownable, RangeError, UnexpectedShape
from .models import FramedHandleComplex, Handle2, MoveEntry, MoveKind, MoveLog
from .utils.logging import logger

Target = Union[int, str]

_x = symbols("x")


def _sign_changes(coefficients: Sequence[int]) -> int:
    signs = [1 if c > 0 else -1 for c in coefficients if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def signature(c: FramedHandleComplex) -> int:
    """
    Signature of the linking matrix of the 2-handles.

    The characteristic polynomial of a symmetric matrix is real-rooted, so
    Descartes' rule counts its positive and negative roots exactly.
    """
    if not c.handles2:
        return 0
    coefficients = [int(a) for a in Matrix(c.matrix()).charpoly(_x).all_coeffs()]
    degree = len(coefficients) - 1
    mirrored = [a * (-1) ** (degree - k) for k, a in enumerate(coefficients)]
    return _sign_changes(coefficients) - _sign_changes(mirrored)


def euler(c: FramedHandleComplex) -> int:
    return c.euler


def _build(dotted: int, framings_and_rows, runs_over, labels, handles3: int) -> FramedHandleComplex:
    handles = tuple(
        Handle2(framing=row[i], linking=tuple(row), runs_over=tuple(over), label=label)
        for i, (row, over, label) in enumerate(zip(framings_and_rows, runs_over, labels))
    )
    return FramedHandleComplex(dotted=dotted, handles2=handles, handles3=handles3)


def _rows(c: FramedHandleComplex) -> List[List[int]]:
    return [list(h.linking) for h in c.handles2]


def _index(c: FramedHandleComplex, target: Target) -> int:
    if isinstance(target, str):
        try:
            return c.index_of(target)
        except KeyError:
            raise UnexpectedShape(f"no 2-handle labelled {target!r}")
    if not 0 <= target < len(c.handles2):
        raise UnexpectedShape(f"no 2-handle at position {target}")
    return target


def _entry(move: MoveKind, targets, before: FramedHandleComplex, after: FramedHandleComplex) -> MoveEntry:
    return MoveEntry(
        move=move,
        targets=tuple(targets),
        chi_before=before.euler,
        chi_after=after.euler,
        signature_before=signature(before),
        signature_after=signature(after),
    )


def emit_gamma0_model(h: int, g: Optional[int] = None, extended: bool = False) -> FramedHandleComplex:
    """
    Handle complex of Σ_h×D² as the double cover of S²×D² branched over 2h+2 disks.

    Args:
        h: Fiber genus
        g: Genus of the separating vanishing cycle (needed for the extended model)
        extended: Also lift the blown-up separating model, giving 2h+2 dotted
            circles, the lifts of δ₀ and ε₀ and one 3-handle. Both lifts of ε₀
            are meridians of delta0~2, the lift running over the last dotted circle.

    Raises:
        RangeError: h < 1, or g outside 1..h-1
    """
    if h < 1:
        raise RangeError(f"genus must be at least 1, got {h}")
    if g is not None and not 1 <= g <= h - 1:
        raise RangeError(f"separating genus {g} outside 1..{h - 1}")
    if extended and g is None:
        raise RangeError("the extended model needs a separating genus")

    lam = lift_framing(0, h + 1)
    dots = tuple(range(1, 2 * h + 2))
    if not extended:
        return _build(2 * h + 1, [[lam, h + 1], [h + 1, lam]], [dots, dots], ["lambda1", "lambda2"], 0)

    delta = lift_framing(-1, g + 1)
    eps = lift_framing(-2, -1)
    arrow = 2 * h + 2
    rows = [
        [lam, h + 1, 0, 0, 0, 0],
        [h + 1, lam, 0, 0, 0, 0],
        [0, 0, delta, g + 1, 0, 0],
        [0, 0, g + 1, delta, 1, 1],
        [0, 0, 0, 1, eps, -1],
        [0, 0, 0, 1, -1, eps],
    ]
    over = [dots, dots, tuple(range(1, 2 * g + 2)), (arrow,), (), ()]
    labels = ["lambda1", "lambda2", "delta0~1", "delta0~2", "eps0~1", "eps0~2"]
    return _build(2 * h + 2, rows, over, labels, 1)


def emit_sep_base_model(g: int) -> FramedHandleComplex:
    """S²×D² (the 0-framed handle U) with δ₀ framed −1 and its meridian ε₀ framed −2."""
    if g < 1:
        raise RangeError(f"separating genus must be at least 1, got {g}")
    rows = [[0, 0, 0], [0, -1, 1], [0, 1, -2]]
    return _build(0, rows, [(), (), ()], ["U", "delta0", "eps0"], 0)


def blow_down(c: FramedHandleComplex, target: Target) -> FramedHandleComplex:
    """
    Remove a ±1-framed 2-handle that runs over no 1-handles.

    Every other framing and linking number changes by ∓ the product of the
    linking numbers with the target.

    Raises:
        NotBlowdownable: The target is not ±1-framed, or runs over a 1-handle
    """
    t = _index(c, target)
    handle = c.handles2[t]
    if handle.framing not in (1, -1):
        raise NotBlowdownable(f"handle {handle.label or t} has framing {handle.framing}")
    if handle.runs_over:
        raise NotBlowdownable(f"handle {handle.label or t} runs over 1-handles {list(handle.runs_over)}")
    eps = handle.framing
    rows = _rows(c)
    keep = [i for i in range(len(rows)) if i != t]
    new_rows = [[rows[a][b] - eps * rows[a][t] * rows[b][t] for b in keep] for a in keep]
    return _build(
        c.dotted,
        new_rows,
        [c.handles2[i].runs_over for i in keep],
        [c.handles2[i].label for i in keep],
        c.handles3,
    )


def blow_up(c: FramedHandleComplex, linking: Sequence[int], sign: int, label: str = "") -> FramedHandleComplex:
    """Add a `sign`-framed 2-handle with the given linking numbers; inverse of blow_down."""
    if sign not in (1, -1):
        raise ValueError(f"blow-up sign must be +1 or -1, got {sign}")
    rows = _rows(c)
    if len(linking) != len(rows):
        raise ValueError(f"expected {len(rows)} linking numbers, got {len(linking)}")
    new_rows = [[rows[a][b] + sign * linking[a] * linking[b] for b in range(len(rows))] for a in range(len(rows))]
    for a, row in enumerate(new_rows):
        row.append(linking[a])
    new_rows.append(list(linking) + [sign])
    return _build(
        c.dotted,
        new_rows,
        [h.runs_over for h in c.handles2] + [()],
        [h.label for h in c.handles2] + [label],
        c.handles3,
    )


def slide(c: FramedHandleComplex, moving: Target, over: Target, sign: int = 1) -> FramedHandleComplex:
    """Slide one 2-handle over another: the moving handle becomes a + sign·b."""
    a, b = _index(c, moving), _index(c, over)
    if a == b:
        raise UnexpectedShape("a handle cannot slide over itself")
    rows = _rows(c)
    n = len(rows)
    # row operation then the matching column operation
    for k in range(n):
        rows[a][k] += sign * rows[b][k]
    for k in range(n):
        rows[k][a] += sign * rows[k][b]
    runs = [list(h.runs_over) for h in c.handles2]
    if sign > 0:
        runs[a] = sorted(runs[a] + runs[b])
    else:
        remaining = list(runs[a])
        extra = []
        for dot in runs[b]:
            if dot in remaining:
                remaining.remove(dot)
            else:
                extra.append(dot)
        runs[a] = sorted(remaining + extra)
    return _build(c.dotted, rows, runs, [h.label for h in c.handles2], c.handles3)


def cancel_pair_12(c: FramedHandleComplex, handle: Target, dot: int) -> FramedHandleComplex:
    """Cancel a dotted circle against a 2-handle running over it exactly once."""
    t = _index(c, handle)
    if c.handles2[t].runs_over.count(dot) != 1:
        raise UnexpectedShape(f"handle {c.handles2[t].label or t} does not run once over dot {dot}")
    for i, other in enumerate(c.handles2):
        if i != t and dot in other.runs_over:
            raise UnexpectedShape(f"handle {other.label or i} also runs over dot {dot}")
    rows = _rows(c)
    keep = [i for i in range(len(rows)) if i != t]
    return _build(
        c.dotted - 1,
        [[rows[a][b] for b in keep] for a in keep],
        [tuple(d - 1 if d > dot else d for d in c.handles2[i].runs_over) for i in keep],
        [c.handles2[i].label for i in keep],
        c.handles3,
    )


def cancel_pair_23(c: FramedHandleComplex, handle: Target) -> FramedHandleComplex:
    """Cancel a split 0-framed unknot against a 3-handle."""
    t = _index(c, handle)
    if c.handles3 < 1:
        raise UnexpectedShape("no 3-handle to cancel")
    if t not in split_off_handles(c):
        raise UnexpectedShape(f"handle {c.handles2[t].label or t} is not a split 0-framed unknot")
    rows = _rows(c)
    keep = [i for i in range(len(rows)) if i != t]
    return _build(
        c.dotted,
        [[rows[a][b] for b in keep] for a in keep],
        [c.handles2[i].runs_over for i in keep],
        [c.handles2[i].label for i in keep],
        c.handles3 - 1,
    )


def linking_graph(c: FramedHandleComplex) -> nx.Graph:
    """Graph on the 2-handles with an edge wherever two handles link."""
    graph = nx.Graph()
    for i, handle in enumerate(c.handles2):
        graph.add_node(i, label=handle.label, framing=handle.framing, runs_over=handle.runs_over)
    for i, handle in enumerate(c.handles2):
        for j in range(i + 1, len(c.handles2)):
            if handle.linking[j]:
                graph.add_edge(i, j, weight=handle.linking[j])
    return graph


def split_off_handles(c: FramedHandleComplex) -> List[int]:
    """0-framed 2-handles that link nothing and run over no 1-handles."""
    graph = linking_graph(c)
    return [
        i
        for i in nx.isolates(graph)
        if graph.nodes[i]["framing"] == 0 and not graph.nodes[i]["runs_over"]
    ]


_EXTENDED_LABELS = ("lambda1", "lambda2", "delta0~1", "delta0~2", "eps0~1", "eps0~2")
_SIMPLIFIED_LABELS = ("lambda1", "lambda2", "gamma0", "alpha")


def simplify_model(c: FramedHandleComplex) -> Tuple[FramedHandleComplex, MoveLog]:
    """
    Replay the simplification of the extended γ₀ model.

    Cancels the dotted circle coming from the (-2)-sphere against one lift of
    δ₀, slides one lift of ε₀ over the other to split off a 0-framed unknot,
    and cancels that unknot against the 3-handle. The surviving lifts of δ₀
    and ε₀ are relabelled gamma0 and alpha; α is a split −1-framed unknot, so
    both carry relative framing −1.

    Raises:
        UnexpectedShape: `c` is neither the extended model nor its simplification
    """
    if c.labels() == _SIMPLIFIED_LABELS and c.handles3 == 0:
        return c, MoveLog()
    if c.labels() != _EXTENDED_LABELS or c.handles3 != 1:
        raise UnexpectedShape(f"not an extended γ₀ model: handles {list(c.labels())}")

    log = MoveLog()
    arrow = c.dotted
    step = cancel_pair_12(c, "delta0~2", arrow)
    log = log.append(_entry(MoveKind.CANCEL_PAIR_12, ["delta0~2", f"dot{arrow}"], c, step))

    slid = slide(step, "eps0~2", "eps0~1", sign=-1)
    log = log.append(_entry(MoveKind.SLIDE, ["eps0~2", "eps0~1"], step, slid))

    split = split_off_handles(slid)
    if not split:
        raise UnexpectedShape("sliding the lifts of ε₀ did not split off an unknot")
    done = cancel_pair_23(slid, split[0])
    log = log.append(_entry(MoveKind.CANCEL_PAIR_23, [slid.handles2[split[0]].label, "h3"], slid, done))

    renamed = {"delta0~1": "gamma0", "eps0~1": "alpha"}
    result = _build(
        done.dotted,
        _rows(done),
        [h.runs_over for h in done.handles2],
        [renamed.get(h.label, h.label) for h in done.handles2],
        done.handles3,
    )
    logger.info(f"Simplified extended model in {len(log)} moves, χ = {result.euler}")
    return result, log


def relatively_minimalize(c: FramedHandleComplex) -> Tuple[FramedHandleComplex, MoveLog]:
    """
    Blow down the α handle of a simplified model, leaving Σ_h×D² ∪ γ₀.

    Raises:
        UnexpectedShape: α still links another 2-handle
    """
    t = _index(c, "alpha")
    linked = [c.handles2[j].label for j, v in enumerate(c.handles2[t].linking) if v and j != t]
    if linked:
        raise UnexpectedShape(f"alpha is not split: it links {linked}")
    result = blow_down(c, t)
    return result, MoveLog().append(_entry(MoveKind.BLOW_DOWN, ["alpha"], c, result))


def separating_model_ledger(h: int, g: int) -> Tuple[MoveLog, MoveLog]:
    """
    Blow-downs behind one separating vanishing cycle.

    Returns:
        tuple: (downstairs log: δ₀ then ε₀ blown down in S²×D² # 2CP̄²,
                upstairs log: simplify_model followed by the blow-down of α)
    """
    base = emit_sep_base_model(g)
    once = blow_down(base, "delta0")
    twice = blow_down(once, "eps0")
    downstairs = MoveLog(
        entries=(
            _entry(MoveKind.BLOW_DOWN, ["delta0"], base, once),
            _entry(MoveKind.BLOW_DOWN, ["eps0"], once, twice),
        )
    )
    simplified, log = simplify_model(emit_gamma0_model(h, g, extended=True))
    _, final = relatively_minimalize(simplified)
    return downstairs, MoveLog(entries=log.entries + final.entries)


def render_handle_list(c: FramedHandleComplex) -> str:
    """One line per handle: dotted circles, then 2-handles, then the 3-handle count."""
    lines = ["dot"] * c.dotted
    for i, handle in enumerate(c.handles2):
        lk = ",".join(str(v) for j, v in enumerate(handle.linking) if j != i)
        over = ",".join(str(d) for d in handle.runs_over)
        lines.append(f"h2 framing={handle.framing} lk=[{lk}] over=[{over}]")
    lines.append(f"h3 x{c.handles3}")
    return "\n".join(lines) + "\n"


def complex_summary(c: FramedHandleComplex) -> Dict[str, int]:
    return {
        "dotted": c.dotted,
        "handles2": len(c.handles2),
        "handles3": c.handles3,
        "euler": c.euler,
        "signature": signature(c),
        "components": nx.number_connected_components(linking_graph(c)) if c.handles2 else 0,
    }
