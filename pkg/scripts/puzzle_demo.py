#!/usr/bin/env python3
"""Sliding-puzzle holonomy demo.

Computes the holonomy group of several boards, shows the classic
swapped-pair position is unreachable, and counts the reachable fraction
of labelled states on boards small enough to enumerate.
"""

import math
import sys
from itertools import permutations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from groupoids.games import (
    LabelledState,
    fifteen_puzzle_states,
    grid_puzzle,
    ordered_state,
    puzzle_holonomy,
    reachable,
)
from groupoids.permgroup import recognize


def main() -> None:
    for m, n in ((2, 2), (2, 3), (3, 3), (4, 4)):
        board = grid_puzzle(m, n)
        group = puzzle_holonomy(board, base_hole=0)
        full = math.factorial(m * n - 1)
        print(f"{m}x{n}: holonomy order {group.order} ({recognize(group)}), "
              f"index {full // group.order} in the full piece group")

    board, start, swapped = fifteen_puzzle_states()
    verdict = "reachable" if reachable(board, start, swapped) else "unreachable"
    print(f"4x4 swapped-pair position: {verdict}")

    # brute count on the 2x2 board: which of the 3! arrangements with a
    # fixed hole can be reached from the ordered state?
    small = grid_puzzle(2, 2)
    base = ordered_state(small, hole=0)
    labels = ["1", "2", "3"]
    reached = 0
    for arrangement in permutations((1, 2, 3)):
        state = LabelledState.from_mapping(0, dict(zip(labels, arrangement)))
        reached += reachable(small, base, state)
    print(f"2x2 with hole fixed: {reached} of 6 arrangements reachable")


if __name__ == "__main__":
    main()
