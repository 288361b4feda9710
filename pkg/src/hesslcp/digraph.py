"""Orientation digraph of an instance over the basis hypercube.

Vertices are all 2^n bases; there is an arc from B to B xor {i} whenever
coordinate i of B's solved vector is negative, i.e. whenever flipping i looks
like an improvement from B.  Under nondegeneracy every hypercube edge is
oriented exactly one way and the unique sink is the optimal basis; the
digraph may still contain directed cycles, which is what makes it
interesting.

Arcs are stored as one out-bit per (vertex, coordinate): 2^n words of n bits.
Mode "lex" orients by the symbolic-perturbation sign and is total on every
instance; mode "plain" uses the raw sign, so a zero coordinate (degenerate
instance) leaves that edge unoriented in both directions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidArgumentError, MalformedCycleError
from .lcp import (
    Basis,
    LCPInstance,
    basis_solution,
    check_basis,
    lex_sign,
    lex_table,
)
from .exact import scalar_sign
from .limits import DEFAULT_DIGRAPH_LIMIT, check_dimension

MODES = ("lex", "plain")


@dataclass(frozen=True)
class OrientationDigraph:
    """Immutable arc table: out_bits[v] bit i set iff arc v -> v xor {i+1}."""

    n: int
    mode: str
    out_bits: tuple

    @property
    def vertex_count(self) -> int:
        return 1 << self.n

    @property
    def arc_count(self) -> int:
        return sum(bits.bit_count() for bits in self.out_bits)

    def has_arc(self, tail: Basis, head: Basis) -> bool:
        """True iff (tail, head) is an arc; the two must differ in one index."""
        t = _basis_bits(check_basis(tail, self.n))
        h = _basis_bits(check_basis(head, self.n))
        diff = t ^ h
        if diff.bit_count() != 1:
            raise MalformedCycleError(
                f"{_format_basis(tail)} and {_format_basis(head)} are not "
                f"hypercube neighbors"
            )
        return bool(self.out_bits[t] & diff)

    def out_neighbors(self, bits: int) -> list:
        """Successor bitmasks of the vertex with bitmask bits."""
        ob = self.out_bits[bits]
        return [bits ^ (1 << i) for i in range(self.n) if ob >> i & 1]


def _basis_bits(basis: Basis) -> int:
    bits = 0
    for i in basis:
        bits |= 1 << (i - 1)
    return bits


def _bits_basis(bits: int, n: int) -> Basis:
    return frozenset(i + 1 for i in range(n) if bits >> i & 1)


def _format_basis(basis) -> str:
    return "{" + ",".join(str(i) for i in sorted(basis)) + "}"


def build_digraph(instance: LCPInstance, mode: str = "lex",
                  limit: int | None = None) -> OrientationDigraph:
    """Orient every hypercube edge by solving each of the 2^n bases once."""
    if mode not in MODES:
        raise InvalidArgumentError(f"unknown mode {mode!r}, expected 'lex' or 'plain'")
    n = instance.n
    check_dimension(n, DEFAULT_DIGRAPH_LIMIT, limit, "build_digraph")
    out = []
    for bits in range(1 << n):
        basis = _bits_basis(bits, n)
        word = 0
        if mode == "lex":
            table = lex_table(instance, basis)
            for i in range(n):
                if lex_sign(table.row(i)) < 0:
                    word |= 1 << i
        else:
            x = basis_solution(instance, basis)
            for i in range(n):
                if scalar_sign(x[i]) < 0:
                    word |= 1 << i
        out.append(word)
    return OrientationDigraph(n, mode, tuple(out))


def find_sinks(g: OrientationDigraph) -> list:
    """All vertices with no outgoing arc, in bitmask order."""
    return [
        _bits_basis(bits, g.n)
        for bits, word in enumerate(g.out_bits)
        if word == 0
    ]


def find_cycle(g: OrientationDigraph):
    """Some directed cycle as a closed basis sequence, or None if acyclic.

    Iterative depth-first search with back-edge detection; the returned
    sequence starts and ends at the same basis.
    """
    size = g.vertex_count
    WHITE, GRAY, BLACK = 0, 1, 2
    color = [WHITE] * size
    parent = {}
    for root in range(size):
        if color[root] != WHITE:
            continue
        stack = [(root, iter(g.out_neighbors(root)))]
        color[root] = GRAY
        while stack:
            v, it = stack[-1]
            advanced = False
            for u in it:
                if color[u] == GRAY:
                    # back edge v -> u: u is an ancestor on the active path,
                    # so the parent chain from v closes the cycle
                    path = [v]
                    w = v
                    while w != u:
                        w = parent[w]
                        path.append(w)
                    path.reverse()
                    path.append(u)
                    return [_bits_basis(b, g.n) for b in path]
                if color[u] == WHITE:
                    color[u] = GRAY
                    parent[u] = v
                    stack.append((u, iter(g.out_neighbors(u))))
                    advanced = True
                    break
            if not advanced:
                color[v] = BLACK
                stack.pop()
    return None


def contains_cycle(g: OrientationDigraph, cycle) -> bool:
    """True iff the closed vertex sequence walks only along arcs of g.

    The sequence may repeat its first vertex at the end or leave the closure
    implicit.  Consecutive vertices must be hypercube neighbors; anything
    else raises MalformedCycleError.
    """
    seq = [check_basis(b, g.n) for b in cycle]
    if len(seq) >= 2 and seq[0] == seq[-1]:
        seq = seq[:-1]
    if len(seq) < 2:
        raise MalformedCycleError("a cycle needs at least two distinct vertices")
    pairs = list(zip(seq, seq[1:] + seq[:1]))
    return all(g.has_arc(tail, head) for tail, head in pairs)


def to_dot(g: OrientationDigraph) -> str:
    """Deterministic DOT rendering: vertices and arcs in bitmask order."""
    lines = ["digraph orientation {", "  rankdir=BT;"]
    for bits in range(g.vertex_count):
        lines.append(f'  v{bits} [label="{_format_basis(_bits_basis(bits, g.n))}"];')
    for bits in range(g.vertex_count):
        for head in g.out_neighbors(bits):
            lines.append(f"  v{bits} -> v{head};")
    lines.append("}")
    return "\n".join(lines) + "\n"
