"""Bounded equational proof search over interchange classes.

Rules are undirected equations between diagrams with equal boundaries.  A rule
side matches a target when some member of the target's interchange class
contains the side as a contiguous block of slices, uniformly shifted by a
left-whisker width k, with the side's input word sitting at position k of the
word entering the block.  Applying the rule splices the other side into that
block.

``prove_equal`` runs breadth-first search from both endpoints simultaneously,
one canonical form per node, alternating sides level by level, and returns a
replayable trace when the two waves meet.  Running out of budget raises
SearchExhausted; it never claims the diagrams are unequal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Diagram, MorGen, Slice, boundaries, codomain, fmt_word
from .errors import MatchInvalidError, SearchExhausted, SignatureError, TypingError
from .exchange import LINEARIZATION_CAP, canonicalize, interchange_equal, linearizations

FORWARD = "forward"
BACKWARD = "backward"

MAX_RULE_SLICES = 6


@dataclass(frozen=True, slots=True)
class RewriteRule:
    """A named equation; the prover uses it in both orientations."""

    name: str
    lhs: Diagram
    rhs: Diagram

    def __post_init__(self):
        if boundaries(self.lhs) != boundaries(self.rhs):
            raise TypingError(
                f"rule {self.name}: sides have different boundaries: "
                f"{fmt_word(self.lhs.input)} -> {fmt_word(codomain(self.lhs))} vs "
                f"{fmt_word(self.rhs.input)} -> {fmt_word(codomain(self.rhs))}"
            )
        for side in (self.lhs, self.rhs):
            if len(side.slices) > MAX_RULE_SLICES:
                raise ValueError(
                    f"rule {self.name}: side has {len(side.slices)} slices, "
                    f"limit is {MAX_RULE_SLICES}"
                )

    def side(self, direction: str) -> Diagram:
        """The side that gets matched when applying in ``direction``."""
        return self.lhs if direction == FORWARD else self.rhs

    def other(self, direction: str) -> Diagram:
        return self.rhs if direction == FORWARD else self.lhs


@dataclass(frozen=True, slots=True)
class Match:
    """Where a rule side sits inside one linearization of the target.

    ``lin`` is the concrete member of the target's interchange class holding
    the block at slice positions [start, end), shifted left-to-right by
    ``whisker_left`` wires.  ``lin_index`` is the position of ``lin`` in the
    deterministic enumeration when the match came from ``find_matches``, and
    None for matches synthesized while assembling traces.
    """

    lin: Diagram
    start: int
    end: int
    whisker_left: int
    whisker_right: int
    lin_index: int | None = None


@dataclass(frozen=True, slots=True)
class ProofStep:
    rule: str
    direction: str
    match: Match


@dataclass(frozen=True, slots=True)
class ProofTrace:
    """A replayable path of rule applications from ``start`` to ``end``."""

    start: Diagram
    steps: tuple[ProofStep, ...]
    end: Diagram


@dataclass(frozen=True, slots=True)
class SearchBudget:
    max_depth_per_side: int = 8
    max_nodes: int = 50_000
    linearization_cap: int = LINEARIZATION_CAP

    def __post_init__(self):
        if self.max_depth_per_side <= 0 or self.max_nodes <= 0 or self.linearization_cap <= 0:
            raise ValueError("budget values must be positive")


def _word_at(lin: Diagram, position: int) -> tuple[str, ...]:
    w = lin.input
    for s in lin.slices[:position]:
        lo = s.offset
        w = w[:lo] + s.gen.cod + w[lo + len(s.gen.dom) :]
    return w


def _block_matches(lin: Diagram, start: int, side: Diagram, k: int) -> bool:
    """Does side, shifted by k, occupy slices [start, start+len) of lin?"""
    end = start + len(side.slices)
    if not 0 <= start <= end <= len(lin.slices):
        return False
    if k < 0:
        return False
    for got, want in zip(lin.slices[start:end], side.slices):
        if got.gen != want.gen or got.offset != want.offset + k:
            return False
    w = _word_at(lin, start)
    return w[k : k + len(side.input)] == side.input


def _splice(lin: Diagram, start: int, end: int, k: int, replacement: Diagram) -> Diagram:
    moved = tuple(Slice(s.offset + k, s.gen) for s in replacement.slices)
    return Diagram(lin.input, lin.slices[:start] + moved + lin.slices[end:])


_HOLE_NAME = "\x00hole"


def find_matches(d: Diagram, side: Diagram, cap: int = LINEARIZATION_CAP) -> list[Match]:
    """All matches of ``side`` in ``d``, deduplicated by resulting rewrite.

    Two matches are redundant when replacing their blocks (by anything with
    the side's boundaries) yields interchange-equal results; that is detected
    by canonicalizing the diagram with the block collapsed to a reserved
    placeholder slice.  An empty side matches at every cut where its input
    word embeds in the word at that cut.
    """
    side_cod = codomain(side)
    hole = MorGen(_HOLE_NAME, side.input, side_cod, index=-1)
    lins = linearizations(d, cap)
    out: list[Match] = []
    seen: set[Diagram] = set()
    nslices = len(side.slices)
    for li, lin in enumerate(lins):
        words = _all_words(lin)
        if nslices > 0:
            for start in range(len(lin.slices) - nslices + 1):
                k = lin.slices[start].offset - side.slices[0].offset
                if k < 0 or not _block_same(lin, start, side, k):
                    continue
                w = words[start]
                if w[k : k + len(side.input)] != side.input:
                    continue
                m = Match(lin, start, start + nslices, k, len(w) - k - len(side.input), li)
                _push_dedup(out, seen, m, hole)
        else:
            for cut in range(len(lin.slices) + 1):
                w = words[cut]
                for k in range(len(w) - len(side.input) + 1):
                    if w[k : k + len(side.input)] != side.input:
                        continue
                    m = Match(lin, cut, cut, k, len(w) - k - len(side.input), li)
                    _push_dedup(out, seen, m, hole)
    return out


def _all_words(lin: Diagram) -> list[tuple[str, ...]]:
    words = [lin.input]
    w = lin.input
    for s in lin.slices:
        lo = s.offset
        w = w[:lo] + s.gen.cod + w[lo + len(s.gen.dom) :]
        words.append(w)
    return words


def _block_same(lin: Diagram, start: int, side: Diagram, k: int) -> bool:
    for got, want in zip(lin.slices[start : start + len(side.slices)], side.slices):
        if got.gen != want.gen or got.offset != want.offset + k:
            return False
    return True


def _push_dedup(out: list[Match], seen: set[Diagram], m: Match, hole: MorGen) -> None:
    plugged = _splice(m.lin, m.start, m.end, m.whisker_left, Diagram(hole.dom, (Slice(0, hole),)))
    key = canonicalize(plugged).diagram
    if key not in seen:
        seen.add(key)
        out.append(m)


def apply_rule(d: Diagram, rule: RewriteRule, m: Match, direction: str = FORWARD) -> Diagram:
    """Replace the matched side by the other side; validates the match."""
    if direction not in (FORWARD, BACKWARD):
        raise ValueError(f"bad direction: {direction!r}")
    src = rule.side(direction)
    if not _match_valid(d, src, m):
        raise MatchInvalidError(
            f"match of rule {rule.name} ({direction}) does not apply to {d}"
        )
    return _splice(m.lin, m.start, m.end, m.whisker_left, rule.other(direction))


def _match_valid(d: Diagram, src: Diagram, m: Match) -> bool:
    if m.end - m.start != len(src.slices):
        return False
    if not 0 <= m.start <= m.end <= len(m.lin.slices):
        return False
    if m.whisker_left < 0 or m.whisker_right < 0:
        return False
    if not _block_matches(m.lin, m.start, src, m.whisker_left):
        return False
    w = _word_at(m.lin, m.start)
    if len(w) != m.whisker_left + len(src.input) + m.whisker_right:
        return False
    return interchange_equal(d, m.lin)


def replay(trace: ProofTrace, rules: list[RewriteRule] | dict[str, RewriteRule]) -> bool:
    """Re-run a trace step by step; True iff every step checks out.

    Unknown rule names raise SignatureError; any invalid step (stale match,
    corrupted offsets, wrong block) just yields False.
    """
    by_name = rules if isinstance(rules, dict) else {r.name: r for r in rules}
    current = trace.start
    for step in trace.steps:
        if step.rule not in by_name:
            raise SignatureError(f"trace refers to unknown rule: {step.rule}")
        rule = by_name[step.rule]
        if step.direction not in (FORWARD, BACKWARD):
            return False
        src = rule.side(step.direction)
        if not _match_valid(current, src, step.match):
            return False
        current = _splice(
            step.match.lin, step.match.start, step.match.end,
            step.match.whisker_left, rule.other(step.direction),
        )
    return interchange_equal(current, trace.end)


@dataclass(frozen=True, slots=True)
class _Edge:
    parent: Diagram  # canonical node the step was taken from
    rule: RewriteRule
    direction: str
    match: Match
    raw: Diagram  # spliced result, a concrete linearization of the child


def prove_equal(
    lhs: Diagram,
    rhs: Diagram,
    rules: list[RewriteRule],
    budget: SearchBudget = SearchBudget(),
) -> ProofTrace:
    """A trace turning ``lhs`` into ``rhs`` modulo interchange, or SearchExhausted.

    Bidirectional breadth-first search on canonical forms; the two frontiers
    advance alternately one level at a time, so the first meeting point gives
    a shortest proof.  Deterministic for a fixed rule list.
    """
    if boundaries(lhs) != boundaries(rhs):
        raise TypingError(
            f"cannot compare: {fmt_word(lhs.input)} -> {fmt_word(codomain(lhs))} "
            f"against {fmt_word(rhs.input)} -> {fmt_word(codomain(rhs))}"
        )
    cl = canonicalize(lhs).diagram
    cr = canonicalize(rhs).diagram
    if cl == cr:
        trace = ProofTrace(lhs, (), rhs)
        assert replay(trace, rules)
        return trace

    # per side: canonical node -> edge that discovered it (None at the root)
    visited: tuple[dict[Diagram, _Edge | None], dict[Diagram, _Edge | None]] = (
        {cl: None},
        {cr: None},
    )
    frontier: list[list[Diagram]] = [[cl], [cr]]
    nodes = 2
    depths = [0, 0]

    def exhausted() -> SearchExhausted:
        return SearchExhausted(
            "proof search budget exhausted (this is not a disproof)",
            nodes=nodes,
            depth_left=depths[0],
            depth_right=depths[1],
            frontier_left=len(frontier[0]),
            frontier_right=len(frontier[1]),
        )

    for _ in range(budget.max_depth_per_side):
        for side in (0, 1):
            if not frontier[side]:
                continue
            new: dict[Diagram, _Edge] = {}
            for node in frontier[side]:
                for rule in rules:
                    for direction in (FORWARD, BACKWARD):
                        src = rule.side(direction)
                        dst = rule.other(direction)
                        for m in find_matches(node, src, budget.linearization_cap):
                            raw = _splice(m.lin, m.start, m.end, m.whisker_left, dst)
                            child = canonicalize(raw).diagram
                            if child in visited[side] or child in new:
                                continue
                            new[child] = _Edge(node, rule, direction, m, raw)
                            nodes += 1
                            if nodes > budget.max_nodes:
                                raise exhausted()
            visited[side].update(new)
            frontier[side] = list(new)
            depths[side] += 1
            for child in new:
                if child in visited[1 - side]:
                    return _assemble(lhs, rhs, child, visited, rules)
        if not frontier[0] and not frontier[1]:
            raise exhausted()  # both classes saturated without meeting
    raise exhausted()


def _assemble(
    lhs: Diagram,
    rhs: Diagram,
    meet: Diagram,
    visited: tuple[dict[Diagram, _Edge | None], dict[Diagram, _Edge | None]],
    rules: list[RewriteRule],
) -> ProofTrace:
    steps: list[ProofStep] = []
    for edge in _path(visited[0], meet):
        steps.append(ProofStep(edge.rule.name, edge.direction, edge.match))
    for edge in reversed(_path(visited[1], meet)):
        steps.append(_inverted(edge))
    trace = ProofTrace(lhs, tuple(steps), rhs)
    if not replay(trace, rules):
        raise AssertionError("internal error: assembled trace failed replay")
    return trace


def _path(parents: dict[Diagram, _Edge | None], node: Diagram) -> list[_Edge]:
    edges: list[_Edge] = []
    while True:
        edge = parents[node]
        if edge is None:
            edges.reverse()
            return edges
        edges.append(edge)
        node = edge.parent


def _inverted(edge: _Edge) -> ProofStep:
    """Undo an edge: match the side it wrote, apply the opposite direction."""
    direction = BACKWARD if edge.direction == FORWARD else FORWARD
    written = edge.rule.other(edge.direction)
    m = edge.match
    inv = Match(
        lin=edge.raw,
        start=m.start,
        end=m.start + len(written.slices),
        whisker_left=m.whisker_left,
        whisker_right=m.whisker_right,
        lin_index=None,
    )
    return ProofStep(edge.rule.name, direction, inv)


def rules_from_signature(sig) -> list[RewriteRule]:
    """Wrap a signature's named equations as rewrite rules."""
    return [RewriteRule(name, lhs, rhs) for name, lhs, rhs in sig.equations]
