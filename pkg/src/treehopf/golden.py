"""Reference tables: Gram matrices, their inverses and the planar tree counts."""

from __future__ import annotations

GRAM: dict[int, list[list[int]]] = {
    1: [
        [1],
    ],
    2: [
        [2, 1],
        [1, 0],
    ],
    3: [
        [6, 3, 3, 2, 1],
        [3, 1, 1, 1, 0],
        [3, 1, 1, 0, 0],
        [2, 1, 0, 0, 0],
        [1, 0, 0, 0, 0],
    ],
    4: [
        [24, 12, 12, 8, 4, 12, 6, 8, 4, 6, 3, 3, 2, 1],
        [12, 5, 5, 4, 1, 5, 2, 4, 1, 3, 1, 1, 1, 0],
        [12, 5, 5, 3, 1, 5, 2, 3, 1, 3, 1, 1, 0, 0],
        [8, 4, 3, 2, 1, 2, 1, 2, 0, 2, 1, 0, 0, 0],
        [4, 1, 1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0],
        [12, 5, 5, 2, 1, 5, 2, 2, 1, 0, 0, 0, 0, 0],
        [6, 2, 2, 1, 0, 2, 1, 1, 0, 0, 0, 0, 0, 0],
        [8, 4, 3, 2, 1, 2, 1, 0, 0, 0, 0, 0, 0, 0],
        [4, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        [6, 3, 3, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [3, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [3, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    ],
}

GRAM_INVERSE: dict[int, list[list[int]]] = {
    1: [
        [1],
    ],
    2: [
        [0, 1],
        [1, -2],
    ],
    3: [
        [0, 0, 0, 0, 1],
        [0, 0, 0, 1, -2],
        [0, 0, 1, -1, -1],
        [0, 1, -1, 0, 0],
        [1, -2, -1, 0, 3],
    ],
    4: [
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, -1, 0, 3],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, -1],
        [0, 0, 0, 0, 0, 0, 0, 1, -2, -1, 0, 1, -1, 2],
        [0, 0, 0, 0, 0, 0, 1, -1, 0, 1, -1, -1, 1, 0],
        [0, 0, 0, 0, 0, 1, -2, 0, -1, -1, 2, 1, 0, 1],
        [0, 0, 0, 0, 1, 0, -1, 1, -1, -1, 0, 2, -1, 0],
        [0, 0, 0, 1, -2, 0, 0, -1, 2, 0, 2, -2, 0, 0],
        [0, 0, 1, -1, -1, -1, 2, -1, 1, 2, -2, -2, 2, 0],
        [0, 1, -1, 0, 0, 0, -1, 1, 0, -1, 0, 2, -1, 0],
        [1, -2, -1, 0, 3, -1, 2, 0, 1, 0, 0, 0, 0, -4],
    ],
}

TAU = (
    1, 1, 2, 5, 14, 42,
    132, 429, 1430, 4862, 16796, 58786,
    208012, 742900, 2674440, 9694845, 35357670, 129644790,
    477638700, 1767263190, 6564120420, 24466267020, 91482563640, 343059613650,
)
