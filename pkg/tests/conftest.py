import random

from chromind.coloring import Coloring
from chromind.graphs import Graph


def random_proper(g: Graph, k: int, rng: random.Random) -> Coloring | None:
    """Random proper colouring with colours 1..k by randomised backtracking."""
    order = list(range(g.vertex_count))
    rng.shuffle(order)
    zeta = [0] * g.vertex_count

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {zeta[w] for w in g.adjacency[v]}
        choices = [c for c in range(1, k + 1) if c not in taken]
        rng.shuffle(choices)
        for c in choices:
            zeta[v] = c
            if rec(i + 1):
                return True
        zeta[v] = 0
        return False

    return Coloring(tuple(zeta), k) if rec(0) else None


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], name=f"path_{n}")


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
