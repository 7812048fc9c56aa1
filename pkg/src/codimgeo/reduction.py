"""Support-level rewriting closures for the two spanning mechanisms.

The classic step rewrites a d-bad monomial as the d! - 1 block rearrangements
at its dictionary-least witness; every child is strictly dictionary-smaller,
so iterating terminates with d-good support.  The main step decomposes a word
of length below the threshold K = (n - d)/2 into d chunk-preserving pieces
and rearranges; every child is strictly longer, so iterating drives all
support out of the ball B(K).

Both closures are memoized multi-source worklists.  Traces record every
expansion edge, and the recorded depth is the longest rewrite chain in the
trace, bounded by C(n,2) in main mode (word length ascends) and by the
dictionary order in classic mode (images descend).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import FalsificationError, check_scale
from .greedy import apply_rearrangement, enumerate_chunk_preserving, left_greedy_form
from .mahonian import ball_complement_count
from .perm import (
    Permutation,
    all_permutations,
    find_d_bad_witness,
    is_d_good,
    word_length,
)

MODE_CLASSIC = "classic"
MODE_MAIN = "main"

CLASSIC_CLOSURE_MAX_N = 7
MAIN_CLOSURE_MAX_N = 8


@dataclass(frozen=True)
class ReductionTrace:
    """A finished closure run: every expansion edge plus summary counts."""

    mode: str
    n: int
    d: int
    sources: tuple[Permutation, ...]
    steps: tuple[tuple[Permutation, tuple[Permutation, ...]], ...]
    visited: int
    max_depth: int
    terminal_support: frozenset[Permutation]
    complement_size: int | None = None


def _nonidentity_orders(d: int):
    """All d! - 1 nontrivial orders of d blocks, in dictionary order."""
    trivial = tuple(range(d))
    for order in itertools.permutations(range(d)):
        if order != trivial:
            yield order


def classic_step(p: Permutation, d: int) -> tuple[Permutation, ...]:
    """Rearrange the d blocks cut at the dictionary-least d-bad witness.

    With witness positions i_1 < ... < i_d, the blocks are w_0 = [1, i_1 - 1],
    w_j = [i_j, i_{j+1} - 1], w_d = [i_d, n].  The d! - 1 children keep w_0
    fixed and permute w_1 .. w_d; each is strictly dictionary-smaller than p.

    >>> [str(c) for c in classic_step(Permutation((2, 1)), 2)]
    ['1,2']
    """
    n = p.n
    if not (2 <= d <= n):
        raise ValueError(f"need 2 <= d <= n, got d = {d}, n = {n}")
    witness = find_d_bad_witness(p, d)
    if witness is None:
        raise ValueError(f"permutation {p} is {d}-good; nothing to rewrite")
    image = p.image
    prefix = image[: witness[0] - 1]
    cuts = list(witness) + [n + 1]
    blocks = [image[cuts[t] - 1 : cuts[t + 1] - 1] for t in range(d)]
    children = []
    for order in _nonidentity_orders(d):
        out = prefix
        for t in order:
            out = out + blocks[t]
        children.append(Permutation(out))
    return tuple(children)


def main_step(p: Permutation, d: int) -> tuple[Permutation, ...]:
    """Rearrange the lexicographically first d-piece chunk-preserving decomposition.

    Requires word_length(p) < (n - d)/2.  Each of the d! - 1 children must be
    strictly longer; a missing decomposition or a non-increasing child is a
    falsification event, raised as FalsificationError rather than ignored.
    """
    n = p.n
    if not (2 <= d <= n):
        raise ValueError(f"need 2 <= d <= n, got d = {d}, n = {n}")
    threshold = Fraction(n - d, 2)
    base = word_length(p)
    if base >= threshold:
        raise ValueError(
            f"word length {base} is not below the threshold {threshold}; "
            "the rewrite only applies inside the ball"
        )
    form = left_greedy_form(p)
    decompositions = enumerate_chunk_preserving(form, d)
    if not decompositions:
        raise FalsificationError(
            f"no chunk-preserving decomposition of {p} into {d} pieces; "
            "existence is claimed for every word inside the ball"
        )
    first = decompositions[0]
    children = []
    for order in _nonidentity_orders(d):
        tau = Permutation(tuple(t + 1 for t in order))
        child = apply_rearrangement(first, tau)
        if word_length(child) <= base:
            raise FalsificationError(
                f"rearrangement of {p} produced {child} with word length "
                f"{word_length(child)} <= {base}; growth is claimed for every "
                "nontrivial rearrangement"
            )
        children.append(child)
    return tuple(children)


def _close(
    mode: str,
    n: int,
    d: int,
    sources: list[Permutation],
    expandable,
    step,
    complement_size: int | None,
) -> ReductionTrace:
    """Memoized worklist closure; expandable nodes are rewritten exactly once."""
    visited: set[Permutation] = set(sources)
    steps: dict[Permutation, tuple[Permutation, ...]] = {}
    worklist = list(sources)
    while worklist:
        node = worklist.pop()
        if not expandable(node) or node in steps:
            continue
        children = step(node, d)
        steps[node] = children
        for child in children:
            if child not in visited:
                visited.add(child)
                worklist.append(child)
    terminal = frozenset(p for p in visited if not expandable(p))

    # longest rewrite chain: process parents after all their children
    if mode == MODE_CLASSIC:
        topo = sorted(steps, key=lambda p: p.image)  # children are smaller
    else:
        topo = sorted(steps, key=lambda p: (word_length(p), p.image), reverse=True)
    chain: dict[Permutation, int] = {}
    for node in topo:
        chain[node] = 1 + max((chain.get(c, 0) for c in steps[node]), default=0)
    max_depth = max(chain.values(), default=0)

    ordered_steps = tuple(sorted(steps.items(), key=lambda item: item[0].image))
    return ReductionTrace(
        mode=mode,
        n=n,
        d=d,
        sources=tuple(sorted(sources, key=lambda p: p.image)),
        steps=ordered_steps,
        visited=len(visited),
        max_depth=max_depth,
        terminal_support=terminal,
        complement_size=complement_size,
    )


def classic_closure(n: int, d: int) -> ReductionTrace:
    """Rewrite every d-bad permutation of degree n down to d-good support.

    Terminates by strict dictionary descent.  Capped at n <= 7.
    """
    if not (2 <= d <= n):
        raise ValueError(f"need 2 <= d <= n, got d = {d}, n = {n}")
    check_scale(n, CLASSIC_CLOSURE_MAX_N, "classic_closure")
    sources = [p for p in all_permutations(n) if not is_d_good(p, d)]
    return _close(
        MODE_CLASSIC,
        n,
        d,
        sources,
        expandable=lambda p: not is_d_good(p, d),
        step=classic_step,
        complement_size=None,
    )


def main_closure(n: int, d: int) -> ReductionTrace:
    """Rewrite every permutation inside the ball B((n - d)/2) out of the ball.

    Terminates because word length strictly increases, bounded by C(n,2).
    Records the complement count for cross-reference.  Capped at n <= 8.
    """
    if not (2 <= d <= n):
        raise ValueError(f"need 2 <= d <= n, got d = {d}, n = {n}")
    check_scale(n, MAIN_CLOSURE_MAX_N, "main_closure")
    threshold = Fraction(n - d, 2)
    sources = [p for p in all_permutations(n) if word_length(p) < threshold]
    return _close(
        MODE_MAIN,
        n,
        d,
        sources,
        expandable=lambda p: word_length(p) < threshold,
        step=main_step,
        complement_size=ball_complement_count(n, threshold),
    )


def trace_json(trace: ReductionTrace, summary_only: bool = False) -> dict:
    """Serialize a trace; summary_only suppresses edges and node lists."""
    summary = {
        "visited": trace.visited,
        "max_depth": trace.max_depth,
        "terminal_size": len(trace.terminal_support),
    }
    if trace.complement_size is not None:
        summary["complement_size"] = trace.complement_size
    out: dict = {"mode": trace.mode, "n": trace.n, "d": trace.d, "summary": summary}
    if not summary_only:
        out["sources"] = [str(p) for p in trace.sources]
        out["steps"] = {
            str(parent): [str(c) for c in children]
            for parent, children in trace.steps
        }
        out["terminal"] = sorted(str(p) for p in trace.terminal_support)
    return out
