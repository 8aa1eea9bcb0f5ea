"""Game groupoids: sliding puzzles and complex-derived position graphs.

A puzzle groupoid's objects are hole positions (pieces unlabelled); the
piece labels live one level up, in the labelled states that transport
carries around.  Reachability between labelled states then reduces to a
single membership test in the puzzle's holonomy group.

Closed-tour convention: moving the hole one step swaps it with the
piece next to it, so a hole tour around a closed walk shifts the pieces
on the walk one step against the hole's motion.  On the 2x2 board with
cells numbered row-major (0 1 / 2 3), the tour 0 -> 2 -> 3 -> 1 -> 0
sends the piece on 1 to 3, the piece on 3 to 2, and the piece on 2 to
1: a 3-cycle, which generates the whole holonomy group of that board.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complexes import CubicalComplex, SimplicialComplex
from .groupoid import Groupoid
from .permgroup import Perm, PermGroup, schreier_sims


class DegenerateBoard(ValueError):
    """Board too small or disconnected."""


class BoardMismatch(ValueError):
    """States belong to a different board."""


@dataclass(frozen=True)
class Puzzle:
    """A board graph; every position leaves exactly one cell unoccupied."""

    cell_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.cell_count < 2:
            raise DegenerateBoard("need at least two cells")
        object.__setattr__(self, "edges", tuple(sorted(
            tuple(sorted(e)) for e in self.edges)))
        for a, b in self.edges:
            if a == b or not (0 <= a < self.cell_count and 0 <= b < self.cell_count):
                raise DegenerateBoard(f"bad edge {(a, b)}")
        if not self._connected():
            raise DegenerateBoard("board graph must be connected")

    def _connected(self) -> bool:
        seen = {0}
        queue = [0]
        while queue:
            u = queue.pop(0)
            for a, b in self.edges:
                for x, y in ((a, b), (b, a)):
                    if x == u and y not in seen:
                        seen.add(y)
                        queue.append(y)
        return len(seen) == self.cell_count

    @property
    def piece_count(self) -> int:
        return self.cell_count - 1

    def neighbors(self, cell: int) -> tuple[int, ...]:
        out = []
        for a, b in self.edges:
            if a == cell:
                out.append(b)
            elif b == cell:
                out.append(a)
        return tuple(sorted(out))


def grid_puzzle(m: int, n: int) -> Puzzle:
    """The m x n sliding puzzle board, cells numbered row-major."""
    if m * n < 2:
        raise DegenerateBoard("need at least two cells")
    edges = []
    for r in range(m):
        for c in range(n):
            v = r * n + c
            if c + 1 < n:
                edges.append((v, v + 1))
            if r + 1 < m:
                edges.append((v, v + n))
    return Puzzle(cell_count=m * n, edges=tuple(edges))


@dataclass(frozen=True)
class LabelledState:
    """A hole cell plus a bijection from piece labels to occupied cells."""

    hole: int
    placement: tuple[tuple[str, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "placement", tuple(sorted(self.placement)))

    @staticmethod
    def from_mapping(hole: int, placement: dict) -> "LabelledState":
        return LabelledState(hole=hole, placement=tuple(
            (str(k), int(v)) for k, v in placement.items()))

    @property
    def cells(self) -> dict[str, int]:
        return dict(self.placement)

    def validate(self, board: Puzzle) -> None:
        occupied = [c for _, c in self.placement]
        if len(set(occupied)) != len(occupied):
            raise BoardMismatch("two pieces share a cell")
        want = set(range(board.cell_count)) - {self.hole}
        if set(occupied) != want:
            raise BoardMismatch("placement does not cover the non-hole cells")


def ordered_state(board: Puzzle, hole: int | None = None) -> LabelledState:
    """Pieces \"1\"..\"n-1\" laid out in cell order, hole in the last cell."""
    if hole is None:
        hole = board.cell_count - 1
    cells = [c for c in range(board.cell_count) if c != hole]
    return LabelledState(hole=hole, placement=tuple(
        (str(i + 1), c) for i, c in enumerate(cells)))


def fifteen_puzzle_states() -> tuple[Puzzle, LabelledState, LabelledState]:
    """The classic unsolvable challenge: swap the last two pieces."""
    board = grid_puzzle(4, 4)
    start = ordered_state(board)
    swapped_cells = dict(start.placement)
    swapped_cells["14"], swapped_cells["15"] = swapped_cells["15"], swapped_cells["14"]
    target = LabelledState.from_mapping(start.hole, swapped_cells)
    return board, start, target


def game_groupoid_from_complex(K: SimplicialComplex | CubicalComplex) -> Groupoid:
    """Positions are facets, moves are ridge flips.

    This is exactly the facet-flip groupoid of the complex; the games
    view adds nothing but vocabulary.
    """
    return Groupoid.from_complex(K)


def _apply_hole_path(board: Puzzle, occupancy: dict[int, str], path: list[int]) -> dict[int, str]:
    occ = dict(occupancy)
    for here, there in zip(path, path[1:]):
        if there not in board.neighbors(here):
            raise BoardMismatch(f"cells {here}, {there} are not adjacent")
        occ[here] = occ.pop(there)
    return occ


def _hole_path(board: Puzzle, start: int, goal: int) -> list[int]:
    parent: dict[int, int] = {}
    seen = {start}
    queue = [start]
    while queue:
        u = queue.pop(0)
        if u == goal:
            break
        for v in board.neighbors(u):
            if v not in seen:
                seen.add(v)
                parent[v] = u
                queue.append(v)
    path = [goal]
    while path[-1] != start:
        path.append(parent[path[-1]])
    return path[::-1]


@lru_cache(maxsize=None)
def _puzzle_holonomy_cached(board: Puzzle, base_hole: int) -> PermGroup:
    slots = [c for c in range(board.cell_count) if c != base_hole]
    slot_of = {c: i for i, c in enumerate(slots)}

    parent: dict[int, int] = {}
    seen = {base_hole}
    order = [base_hole]
    queue = [base_hole]
    while queue:
        u = queue.pop(0)
        for v in board.neighbors(u):
            if v not in seen:
                seen.add(v)
                parent[v] = u
                order.append(v)
                queue.append(v)

    def tree_path(node: int) -> list[int]:
        path = [node]
        while path[-1] != base_hole:
            path.append(parent[path[-1]])
        return path[::-1]

    tree = {tuple(sorted((v, u))) for v, u in parent.items()}
    gens = []
    for a, b in board.edges:
        if (a, b) in tree:
            continue
        tour = tree_path(a) + tree_path(b)[::-1]
        occ = {c: str(c) for c in slots}
        occ = _apply_hole_path(board, occ, tour)
        images = [0] * len(slots)
        for cell, piece in occ.items():
            images[slot_of[int(piece)]] = slot_of[cell]
        gens.append(Perm(tuple(images)))
    return schreier_sims(gens, degree=len(slots))


def puzzle_holonomy(board: Puzzle, base_hole: int = 0) -> PermGroup:
    """Holonomy of the puzzle groupoid at a hole position.

    Generators come from closed hole tours along the fundamental cycles
    of the board graph; the group acts on piece slots, i.e. the
    non-hole cells in increasing order.
    """
    if not 0 <= base_hole < board.cell_count:
        raise BoardMismatch(f"no cell {base_hole}")
    return _puzzle_holonomy_cached(board, base_hole)


def reachable(board: Puzzle, a: LabelledState, b: LabelledState) -> bool:
    """Can sliding moves turn state a into state b?

    Transport a's pieces along any hole path to b's hole, then test the
    residual piece permutation against the holonomy group.  Holonomy
    quotients away the path choice, so any path gives the same answer.
    """
    a.validate(board)
    b.validate(board)
    if {p for p, _ in a.placement} != {p for p, _ in b.placement}:
        raise BoardMismatch("states use different piece labels")
    occ_a = {c: p for p, c in a.placement}
    path = _hole_path(board, a.hole, b.hole)
    occ_a = _apply_hole_path(board, occ_a, path)

    slots = [c for c in range(board.cell_count) if c != b.hole]
    slot_of = {c: i for i, c in enumerate(slots)}
    cell_of_b = dict(b.placement)
    images = [0] * len(slots)
    for cell, piece in occ_a.items():
        images[slot_of[cell]] = slot_of[cell_of_b[piece]]
    residual = Perm(tuple(images))
    return puzzle_holonomy(board, b.hole).contains(residual)


def reachable_bfs(board: Puzzle, a: LabelledState, b: LabelledState) -> bool:
    """Oracle: explicit search over the whole labelled state graph.

    Only for tiny boards; the state count is factorial in the cell
    count.
    """
    a.validate(board)
    b.validate(board)

    def key(hole: int, occ: dict[int, str]):
        return hole, tuple(sorted(occ.items()))

    occ_a = {c: p for p, c in a.placement}
    occ_b = {c: p for p, c in b.placement}
    start = key(a.hole, occ_a)
    goal = key(b.hole, occ_b)
    seen = {start}
    queue = [(a.hole, occ_a)]
    while queue:
        hole, occ = queue.pop(0)
        if key(hole, occ) == goal:
            return True
        for nxt in board.neighbors(hole):
            occ2 = dict(occ)
            occ2[hole] = occ2.pop(nxt)
            k = key(nxt, occ2)
            if k not in seen:
                seen.add(k)
                queue.append((nxt, occ2))
    return False
