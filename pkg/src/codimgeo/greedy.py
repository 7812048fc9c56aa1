"""Left greedy form and chunk-preserving decompositions.

Reading a permutation's one-line word left to right, the initial chunk is the
smallest prefix-minimal block that closes off under inversion partners: start
from the dictionary-least inversion pair and extend the right end while any
position inside still has an inversion partner beyond it.  Iterating on the
remaining suffix tiles the word into alternating gaps and chunks

    w = y_0 c_1 y_1 c_2 ... c_k y_k

(the left greedy form; gaps may be empty).  Gap positions are never the left
element of an inversion, and every inversion lives inside a single chunk.

A decomposition of the word into consecutive nonempty pieces is
chunk-preserving when each piece either contains no chunk positions (a gap
piece) or starts exactly at some chunk's start and covers that chunk; only
the final piece may run on into later chunks, in which case it extends to the
end of the word.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .perm import Permutation, word_length

GAP = "y"
CHUNK = "c"


@dataclass(frozen=True)
class Span:
    """A 1-based inclusive interval of positions."""

    start: int
    end: int

    def __post_init__(self):
        if not (1 <= self.start <= self.end):
            raise ValueError(f"bad span [{self.start}, {self.end}]")

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def positions(self) -> range:
        return range(self.start, self.end + 1)

    def __str__(self) -> str:
        return f"[{self.start},{self.end}]"


@dataclass(frozen=True)
class GreedyForm:
    """The tiling w = y_0 c_1 y_1 ... c_k y_k; gaps[i] is None when empty."""

    perm: Permutation
    chunks: tuple[Span, ...]
    gaps: tuple[Span | None, ...]

    def __post_init__(self):
        if len(self.gaps) != len(self.chunks) + 1:
            raise ValueError("need exactly one gap slot around each chunk")

    @property
    def k(self) -> int:
        return len(self.chunks)


def _min_inversion_pair(image: tuple[int, ...], start: int) -> tuple[int, int] | None:
    """Dictionary-least inversion pair (i, j) with i >= start, or None."""
    n = len(image)
    for i in range(start, n + 1):
        for j in range(i + 1, n + 1):
            if image[j - 1] < image[i - 1]:
                return (i, j)
    return None


def _chunk_from(image: tuple[int, ...], start: int) -> Span | None:
    """The initial chunk of the suffix beginning at position start.

    Extends the right end to a fixpoint: while some position within the
    current block has an inversion partner beyond it, absorb up to the
    furthest such partner.  The fixpoint does not depend on update order.
    """
    pair = _min_inversion_pair(image, start)
    if pair is None:
        return None
    i0, j0 = pair
    n = len(image)
    while True:
        furthest = j0
        for i in range(i0, j0 + 1):
            for j in range(n, j0, -1):
                if image[j - 1] < image[i - 1]:
                    if j > furthest:
                        furthest = j
                    break
        if furthest == j0:
            return Span(i0, j0)
        j0 = furthest


def initial_chunk(perm: Permutation) -> tuple[Span | None, Span | None, Span | None]:
    """Split the word as (leading gap, initial chunk, remaining suffix).

    For the identity the whole word is a gap: (Span(1, n), None, None).

    >>> initial_chunk(Permutation((1, 3, 2, 4)))
    (Span(start=1, end=1), Span(start=2, end=3), Span(start=4, end=4))
    """
    n = perm.n
    chunk = _chunk_from(perm.image, 1)
    if chunk is None:
        return (Span(1, n), None, None)
    before = Span(1, chunk.start - 1) if chunk.start > 1 else None
    after = Span(chunk.end + 1, n) if chunk.end < n else None
    return (before, chunk, after)


def left_greedy_form(perm: Permutation) -> GreedyForm:
    """Iterate initial-chunk extraction over suffixes until no inversions remain.

    >>> gf = left_greedy_form(Permutation((2, 1, 4, 3)))
    >>> gf.chunks
    (Span(start=1, end=2), Span(start=3, end=4))
    >>> gf.gaps
    (None, None, None)
    """
    image = perm.image
    n = perm.n
    chunks: list[Span] = []
    gaps: list[Span | None] = []
    cursor = 1
    while cursor <= n:
        chunk = _chunk_from(image, cursor)
        if chunk is None:
            break
        gaps.append(Span(cursor, chunk.start - 1) if chunk.start > cursor else None)
        chunks.append(chunk)
        cursor = chunk.end + 1
    gaps.append(Span(cursor, n) if cursor <= n else None)
    return GreedyForm(perm, tuple(chunks), tuple(gaps))


@dataclass(frozen=True)
class Piece:
    """One consecutive piece of a decomposition; chunk pieces carry their index."""

    span: Span
    kind: str
    chunk_index: int | None = None

    def __post_init__(self):
        if self.kind not in (GAP, CHUNK):
            raise ValueError(f"kind must be {GAP!r} or {CHUNK!r}")
        if (self.kind == CHUNK) != (self.chunk_index is not None):
            raise ValueError("chunk pieces and only chunk pieces carry an index")


@dataclass(frozen=True)
class PieceDecomposition:
    """A tiling of the word into consecutive nonempty pieces."""

    perm: Permutation
    pieces: tuple[Piece, ...]

    def __post_init__(self):
        cursor = 1
        for piece in self.pieces:
            if piece.span.start != cursor:
                raise ValueError("pieces must tile the word consecutively")
            cursor = piece.span.end + 1
        if cursor != self.perm.n + 1:
            raise ValueError("pieces must cover every position")

    @property
    def p(self) -> int:
        return len(self.pieces)

    @property
    def chunk_piece_count(self) -> int:
        return sum(1 for piece in self.pieces if piece.kind == CHUNK)


def _classify_pieces(form: GreedyForm, spans: list[Span]) -> tuple[Piece, ...] | None:
    """Label spans as gap or chunk pieces, or None if not chunk-preserving."""
    chunks = form.chunks
    k = len(chunks)
    n = form.perm.n
    pieces: list[Piece] = []
    t = 0  # next chunk not yet covered
    for span in spans:
        if t < k and span.end >= chunks[t].start:
            # span contains chunk t's start, so it must be the chunk piece
            if span.start != chunks[t].start or span.end < chunks[t].end:
                return None
            if t + 1 < k and span.end >= chunks[t + 1].start:
                # runs into a later chunk: only legal as the final piece
                if span.end != n:
                    return None
                pieces.append(Piece(span, CHUNK, t + 1))
                t = k
            else:
                pieces.append(Piece(span, CHUNK, t + 1))
                t += 1
        else:
            pieces.append(Piece(span, GAP))
    return tuple(pieces)


def enumerate_chunk_preserving(form: GreedyForm, pieces: int) -> list[PieceDecomposition]:
    """All chunk-preserving decompositions into the given number of pieces.

    Ordered lexicographically by the tuple of piece boundaries.  Any word with
    at least one chunk admits at least one chunk-preserving decomposition into
    p pieces for every 1 <= p <= (number of positions).

    >>> form = left_greedy_form(Permutation((1, 3, 2, 4)))
    >>> [len(d.pieces) for d in enumerate_chunk_preserving(form, 3)]
    [3]
    """
    if pieces < 1:
        raise ValueError(f"need at least one piece, got {pieces}")
    n = form.perm.n
    if pieces > n:
        return []
    found: list[PieceDecomposition] = []
    for boundaries in itertools.combinations(range(1, n), pieces - 1):
        ends = list(boundaries) + [n]
        spans = []
        cursor = 1
        for end in ends:
            spans.append(Span(cursor, end))
            cursor = end + 1
        labeled = _classify_pieces(form, spans)
        if labeled is not None:
            found.append(PieceDecomposition(form.perm, labeled))
    return found


def apply_rearrangement(dec: PieceDecomposition, tau: Permutation) -> Permutation:
    """Concatenate the pieces in the order tau: piece tau(i) lands in slot i.

    >>> form = left_greedy_form(Permutation((1, 3, 2, 4)))
    >>> dec = enumerate_chunk_preserving(form, 3)[0]
    >>> apply_rearrangement(dec, Permutation((2, 3, 1))).image
    (3, 2, 4, 1)
    """
    if tau.n != dec.p:
        raise ValueError(f"tau must permute {dec.p} pieces, got degree {tau.n}")
    image = dec.perm.image
    out: list[int] = []
    for slot in range(1, tau.n + 1):
        span = dec.pieces[tau.value_at(slot) - 1].span
        out.extend(image[span.start - 1:span.end])
    return Permutation(tuple(out))


def check_growth(dec: PieceDecomposition) -> bool:
    """Does every nonidentity rearrangement strictly increase word length?

    Requires at least two pieces and a word that is not one single chunk.
    """
    if dec.p < 2:
        raise ValueError("growth needs at least two pieces")
    form = left_greedy_form(dec.perm)
    if form.k == 1 and form.chunks[0].length == dec.perm.n:
        raise ValueError("word is a single chunk; growth does not apply")
    base = word_length(dec.perm)
    slots = range(1, dec.p + 1)
    for images in itertools.permutations(slots):
        tau = Permutation(images)
        if tau.image == tuple(slots):
            continue
        if word_length(apply_rearrangement(dec, tau)) <= base:
            return False
    return True


@dataclass(frozen=True)
class ChunkStats:
    """Chunk count, total chunk length, and word length for one permutation."""

    chunk_count: int
    total_chunk_length: int
    word_length: int


def chunk_stats(perm: Permutation) -> ChunkStats:
    """Summary triple (k, sum of chunk lengths, |sigma|).

    >>> chunk_stats(Permutation((2, 1, 4, 3)))
    ChunkStats(chunk_count=2, total_chunk_length=4, word_length=2)
    """
    form = left_greedy_form(perm)
    total = sum(chunk.length for chunk in form.chunks)
    return ChunkStats(form.k, total, word_length(perm))


def annotated(form: GreedyForm) -> str:
    """Render gaps in parentheses and chunks in brackets, e.g. "(1) [3 2] (4)"."""
    image = form.perm.image

    def values(span: Span) -> str:
        return " ".join(str(image[i - 1]) for i in span.positions())

    parts: list[str] = []
    for idx, chunk in enumerate(form.chunks):
        gap = form.gaps[idx]
        if gap is not None:
            parts.append(f"({values(gap)})")
        parts.append(f"[{values(chunk)}]")
    last = form.gaps[-1]
    if last is not None:
        parts.append(f"({values(last)})")
    return " ".join(parts) if parts else "()"


def greedy_form_json(form: GreedyForm) -> dict:
    return {
        "perm": str(form.perm),
        "chunks": [[c.start, c.end] for c in form.chunks],
        "gaps": [None if g is None else [g.start, g.end] for g in form.gaps],
    }


def decomposition_json(dec: PieceDecomposition) -> dict:
    pieces = []
    for piece in dec.pieces:
        entry: dict = {"kind": piece.kind, "start": piece.span.start, "end": piece.span.end}
        if piece.chunk_index is not None:
            entry["chunk"] = piece.chunk_index
        pieces.append(entry)
    return {"perm": str(dec.perm), "pieces": pieces}
