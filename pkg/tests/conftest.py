"""Shared fixture lattices used across the test suites."""

import pytest

from hibiring import from_covers, from_points


def chain(k):
    return from_covers([str(i) for i in range(k)],
                       [(i, i + 1) for i in range(k - 1)])


@pytest.fixture(scope="session")
def stacked_diamonds():
    """Seven elements: two diamonds where the join of the lower pair is the
    meet of the upper pair.  The smallest lattice with a nonlinear first
    syzygy."""
    return from_covers([str(i) for i in range(7)],
                       [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5),
                        (4, 6), (5, 6)])


@pytest.fixture(scope="session")
def bridged_diamonds():
    """Thirteen elements, labels "1".."13": two comparable disjoint diamonds
    (2,3) and (11,12) joined through a chain of overlapping grids, so the
    diamond syzygy reduces to degree-3 types."""
    covers = [(1, 2), (1, 3), (2, 4), (3, 4), (3, 5), (4, 6), (4, 7), (5, 7),
              (5, 8), (6, 9), (7, 9), (7, 10), (8, 10), (9, 11), (9, 12),
              (10, 12), (11, 13), (12, 13)]
    return from_covers([str(i + 1) for i in range(13)],
                       [(a - 1, b - 1) for a, b in covers])


@pytest.fixture(scope="session")
def shared_corner():
    """Thirteen elements realizing the shared-element pair families: the
    witness (7, 5, 9) classifies as G3, the same triple with the b's swapped
    satisfies the G6 conditions, and on the dual lattice it gives G4."""
    covers = [(0, 1), (1, 4), (4, 7), (7, 10), (10, 12), (11, 12), (9, 11),
              (6, 9), (3, 6), (0, 3), (0, 2), (2, 4), (4, 8), (8, 10),
              (2, 6), (6, 8), (8, 11), (1, 5), (5, 8), (3, 5)]
    return from_covers([str(i) for i in range(13)], covers)


@pytest.fixture(scope="session")
def shared_corner_dual(shared_corner):
    return from_covers(list(shared_corner.labels),
                       [(b, a) for (a, b) in shared_corner.covers])


def overlapping_grids(m, n, p, q):
    """Union of the integer grids [0,m]x[0,n] and [p,m]x[0,q] (with q > n):
    two grid regions overlapping in a smaller grid.  The three JM elements
    are (0,n), (m,0) and (p,q)."""
    pts = [(i, j) for i in range(m + 1) for j in range(n + 1)]
    pts += [(i, j) for i in range(p, m + 1) for j in range(n + 1, q + 1)]
    return from_points(pts)


@pytest.fixture(scope="session")
def boolean_cube():
    """The 8-element Boolean lattice: distributive but not planar."""
    from itertools import product
    pts = sorted(product([0, 1], repeat=3), key=lambda p: (sum(p), p))
    idx = {p: i for i, p in enumerate(pts)}
    covers = []
    for p in pts:
        for k in range(3):
            if p[k] == 0:
                q = list(p)
                q[k] = 1
                covers.append((idx[p], idx[tuple(q)]))
    return from_covers(["".join(map(str, p)) for p in pts], covers)
