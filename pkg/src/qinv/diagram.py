"""Framed link diagrams as Morse words.

A diagram is read left to right as a sequence of events acting on a growing
and shrinking stack of horizontal strands:

* ``cup p``  -- two new adjacent strands appear at positions p, p+1
                (existing strands at >= p shift up by two);
* ``cap p``  -- the strands at positions p, p+1 are joined and removed;
* ``x+ p`` / ``x- p`` -- the strands at p, p+1 cross.  ``x+`` is the positive
                (braid-generator) crossing: with both strands co-oriented in
                the sweep direction it contributes +1 to the writhe.

A closed diagram starts and ends with zero strands.  Components, orientations,
writhes and linking numbers are derived by traversing the arcs; framings are
stored per component as target integers and are realized at evaluation time by
inserting Reidemeister-I kinks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

CUP, CAP, XPOS, XNEG = "cup", "cap", "x+", "x-"
_CROSSINGS = (XPOS, XNEG)
_KINDS = (CUP, CAP, XPOS, XNEG)


class MorseEvent(NamedTuple):
    kind: str
    pos: int


class DiagramError(ValueError):
    """Structurally invalid Morse word or diagram operation."""


class ParseError(ValueError):
    """Syntax error in a braid/Morse/link text, with a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


@dataclass(frozen=True)
class MorseWord:
    """A validated closed Morse word."""

    events: tuple[MorseEvent, ...]

    def __post_init__(self):
        w = 0
        for i, (kind, p) in enumerate(self.events):
            if p < 0:
                raise DiagramError(f"event {i}: negative position")
            if kind == CUP:
                if p > w:
                    raise DiagramError(f"event {i}: cup position {p} out of range 0..{w}")
                w += 2
            elif kind == CAP:
                if p + 1 >= w:
                    raise DiagramError(f"event {i}: cap position {p} out of range")
                w -= 2
            elif kind in _CROSSINGS:
                if p + 1 >= w:
                    raise DiagramError(f"event {i}: crossing position {p} out of range")
            else:
                raise DiagramError(f"event {i}: unknown kind {kind!r}")
        if w != 0:
            raise DiagramError(f"word is not closed: {w} strands remain open")

    @cached_property
    def max_width(self) -> int:
        w = peak = 0
        for kind, _ in self.events:
            if kind == CUP:
                w += 2
                peak = max(peak, w)
            elif kind == CAP:
                w -= 2
        return peak

    @cached_property
    def crossing_count(self) -> int:
        return sum(1 for kind, _ in self.events if kind in _CROSSINGS)

    def __len__(self) -> int:
        return len(self.events)


class _Analysis(NamedTuple):
    n_strands: int
    component_of: tuple[int, ...]      # strand id -> component index
    n_components: int
    directions: tuple[int, ...]        # strand id -> +1 forward / -1 backward
    crossings: tuple[tuple[int, int, int], ...]  # (id at p, id at p+1, kind sign)
    writhes: tuple[int, ...]
    linking: tuple[tuple[int, ...], ...]


def _analyze(word: MorseWord) -> _Analysis:
    open_ids: list[int] = []
    cup_partner: dict[int, int] = {}
    cap_partner: dict[int, int] = {}
    crossings: list[tuple[int, int, int]] = []
    nxt = 0
    for kind, p in word.events:
        if kind == CUP:
            u, v = nxt, nxt + 1
            nxt += 2
            cup_partner[u] = v
            cup_partner[v] = u
            open_ids[p:p] = [u, v]
        elif kind == CAP:
            a, b = open_ids[p], open_ids[p + 1]
            cap_partner[a] = b
            cap_partner[b] = a
            del open_ids[p:p + 2]
        else:
            a, b = open_ids[p], open_ids[p + 1]
            crossings.append((a, b, +1 if kind == XPOS else -1))
            open_ids[p], open_ids[p + 1] = b, a

    # Traverse each closed curve.  A forward strand ends at its cap, whose
    # partner is then traversed backward, reaching that strand's cup, and so
    # on; directions alternate around every component.
    comp_of = [-1] * nxt
    direction = [0] * nxt
    n_comp = 0
    for start in range(nxt):
        if comp_of[start] >= 0:
            continue
        cur, d = start, +1
        while comp_of[cur] < 0:
            comp_of[cur] = n_comp
            direction[cur] = d
            cur = cap_partner[cur] if d == +1 else cup_partner[cur]
            d = -d
        n_comp += 1

    writhes = [0] * n_comp
    lk = [[0] * n_comp for _ in range(n_comp)]
    for a, b, s in crossings:
        sign = s * direction[a] * direction[b]
        ca, cb = comp_of[a], comp_of[b]
        if ca == cb:
            writhes[ca] += sign
        else:
            lk[ca][cb] += sign
            lk[cb][ca] += sign
    for i in range(n_comp):
        for j in range(n_comp):
            if i != j:
                assert lk[i][j] % 2 == 0, "odd crossing-sign sum between components"
                lk[i][j] //= 2

    return _Analysis(nxt, tuple(comp_of), n_comp, tuple(direction),
                     tuple(crossings), tuple(writhes),
                     tuple(tuple(row) for row in lk))


@dataclass(frozen=True)
class FramedLinkDiagram:
    """A closed Morse diagram with one integer framing per component."""

    word: MorseWord
    framings: tuple[int, ...]

    @classmethod
    def from_word(cls, word: MorseWord,
                  framings: Iterable[int] | dict[int, int] | None = None,
                  ) -> FramedLinkDiagram:
        """Build a diagram; framings default to the blackboard writhes.

        ``framings`` may be a full sequence or a {component: framing} dict of
        overrides on top of the blackboard defaults.
        """
        ana = _analyze(word)
        fr = list(ana.writhes)
        if isinstance(framings, dict):
            for c, f in framings.items():
                if not 0 <= c < ana.n_components:
                    raise DiagramError(f"no component {c} (have {ana.n_components})")
                fr[c] = f
        elif framings is not None:
            fr = list(framings)
            if len(fr) != ana.n_components:
                raise DiagramError(
                    f"{len(fr)} framings for {ana.n_components} components")
        d = cls(word, tuple(fr))
        d.__dict__["_analysis"] = ana
        return d

    @cached_property
    def _analysis(self) -> _Analysis:
        return _analyze(self.word)

    def __post_init__(self):
        if len(self.framings) != self._analysis.n_components:
            raise DiagramError(
                f"{len(self.framings)} framings for "
                f"{self._analysis.n_components} components")

    @property
    def n_components(self) -> int:
        return self._analysis.n_components

    @property
    def writhes(self) -> tuple[int, ...]:
        return self._analysis.writhes

    @property
    def linking(self) -> tuple[tuple[int, ...], ...]:
        return self._analysis.linking

    def component_of_strand(self, strand_id: int) -> int:
        return self._analysis.component_of[strand_id]


EMPTY_DIAGRAM = FramedLinkDiagram(MorseWord(()), ())


def unknot(framing: int = 0) -> FramedLinkDiagram:
    return FramedLinkDiagram(
        MorseWord((MorseEvent(CUP, 0), MorseEvent(CAP, 0))), (framing,))


def components_and_linking(d: FramedLinkDiagram,
                           ) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """(component label per strand id, pairwise linking matrix, writhes).

    Orientations are assigned by first-traversal order per component; the
    linking number of two components is half the sum of the signs of the
    crossings between them, the writhe the sum of self-crossing signs.
    """
    ana = d._analysis
    return ana.component_of, ana.linking, ana.writhes


def mirror(d: FramedLinkDiagram) -> FramedLinkDiagram:
    """Flip every crossing and negate all framings."""
    events = tuple(
        MorseEvent(XNEG if k == XPOS else XPOS if k == XNEG else k, p)
        for k, p in d.word.events)
    return FramedLinkDiagram(MorseWord(events), tuple(-f for f in d.framings))


def distant_union(d1: FramedLinkDiagram, d2: FramedLinkDiagram) -> FramedLinkDiagram:
    """Place d2 after (and disjoint from) d1; component labels concatenate."""
    word = MorseWord(d1.word.events + d2.word.events)
    return FramedLinkDiagram(word, d1.framings + d2.framings)


def insert_kinks(d: FramedLinkDiagram, component: int, t: int) -> FramedLinkDiagram:
    """Insert |t| curls of sign(t) on an arc of the given component.

    Changes the blackboard writhe of that component by exactly t and no
    linking number; stored framings are unchanged (they are targets).
    Kinks are placed immediately after the component's first cup, where the
    ambient width is smallest.
    """
    ana = d._analysis
    if not 0 <= component < ana.n_components:
        raise DiagramError(f"no component {component}")
    if t == 0:
        return d
    kind = XPOS if t > 0 else XNEG
    # Find the cup that gives birth to the component's first strand id.
    first_id = ana.component_of.index(component)
    nxt = 0
    events = list(d.word.events)
    for i, (k, p) in enumerate(d.word.events):
        if k == CUP:
            if nxt == first_id:
                kink = [MorseEvent(CUP, p + 1), MorseEvent(kind, p),
                        MorseEvent(CAP, p + 1)] * abs(t)
                events[i + 1:i + 1] = kink
                break
            nxt += 2
    else:  # pragma: no cover - component index already validated
        raise DiagramError("component has no cup")
    out = FramedLinkDiagram(MorseWord(tuple(events)), d.framings)
    assert out.writhes[component] == d.writhes[component] + t
    return out


def cable(d: FramedLinkDiagram, multiplicities: Iterable[int]) -> FramedLinkDiagram:
    """Replace every strand by m parallel (blackboard-framed) copies.

    A cup becomes m nested cups, a cap m nested caps, and a crossing of
    components with multiplicities a and b an a*b grid of crossings of the
    same sign.  Components with multiplicity 0 are deleted.  Framings of the
    result default to the blackboard writhes of the cabled word.
    """
    m = tuple(multiplicities)
    ana = d._analysis
    if len(m) != ana.n_components:
        raise DiagramError(
            f"{len(m)} multiplicities for {ana.n_components} components")
    if any(x < 0 for x in m):
        raise DiagramError("multiplicities must be >= 0")

    open_mults: list[int] = []   # multiplicity of each currently open strand
    nxt = 0
    out: list[MorseEvent] = []
    for kind, p in d.word.events:
        base = sum(open_mults[:p])
        if kind == CUP:
            mm = m[ana.component_of[nxt]]
            nxt += 2
            out.extend(MorseEvent(CUP, base + i) for i in range(mm))
            open_mults[p:p] = [mm, mm]
        elif kind == CAP:
            mm = open_mults[p]
            out.extend(MorseEvent(CAP, base + mm - 1 - i) for i in range(mm))
            del open_mults[p:p + 2]
        else:
            a, b = open_mults[p], open_mults[p + 1]
            for j in range(a):
                start = base + a - 1 - j
                out.extend(MorseEvent(kind, start + t) for t in range(b))
            open_mults[p], open_mults[p + 1] = b, a
    return FramedLinkDiagram.from_word(MorseWord(tuple(out)))


# ---------------------------------------------------------------------------
# Braid words and closures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BraidWord:
    """A braid on ``strands`` strands; letters are (generator index, sign)."""

    strands: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.strands < 1:
            raise DiagramError("braid needs at least one strand")
        for i, s in self.letters:
            if not 1 <= i < self.strands:
                raise DiagramError(f"generator s{i} out of range for {self.strands} strands")
            if s not in (1, -1):
                raise DiagramError("letter sign must be +-1")


def braid_closure(b: BraidWord) -> FramedLinkDiagram:
    """Trace closure: n nested cups, the crossing sequence, n nested caps.

    Framings default to the blackboard writhe of each closed component.
    """
    n = b.strands
    events = [MorseEvent(CUP, i) for i in range(n)]
    events += [MorseEvent(XPOS if s > 0 else XNEG, n - 1 + i) for i, s in b.letters]
    events += [MorseEvent(CAP, i) for i in range(n - 1, -1, -1)]
    return FramedLinkDiagram.from_word(MorseWord(tuple(events)))


_BRAID_RE = re.compile(r"^braid\s+(\d+)\s*:\s*(.*)$")
_LETTER_RE = re.compile(r"^([sS])(\d+)$")
_EVENT_RE = re.compile(r"^(cup|cap)\s+(\d+)$")
_CROSS_RE = re.compile(r"^x([+-])\s+(\d+)$")
_FRAMING_RE = re.compile(r"^framing\s+(\d+)\s*=\s*(-?\d+)$")
_SPECIAL_RE = re.compile(r"^special\s+(\d+)$")


def parse_braid(text: str, line: int | None = None) -> BraidWord:
    """Parse ``braid <n> : s<i> S<i> ...`` (S denotes a negative generator)."""
    m = _BRAID_RE.match(text.strip())
    if not m:
        raise ParseError(f"not a braid line: {text.strip()!r}", line)
    strands = int(m.group(1))
    if strands < 1:
        raise ParseError("braid needs at least one strand", line)
    letters = []
    for tok in m.group(2).split():
        lm = _LETTER_RE.match(tok)
        if not lm:
            raise ParseError(f"bad braid letter {tok!r}", line)
        i = int(lm.group(2))
        if not 1 <= i < strands:
            raise ParseError(f"generator s{i} out of range for {strands} strands", line)
        letters.append((i, 1 if lm.group(1) == "s" else -1))
    return BraidWord(strands, tuple(letters))


def _strip_comment(raw: str) -> str:
    return raw.split("#", 1)[0].strip()


@dataclass(frozen=True)
class ParsedLink:
    """One named link block: a diagram plus special-component declarations."""

    name: str
    diagram: FramedLinkDiagram
    special: frozenset[int] = field(default_factory=frozenset)


def _build_block(name: str, braid: BraidWord | None,
                 events: list[MorseEvent], framings: dict[int, int],
                 special: set[int], line: int) -> ParsedLink:
    if braid is not None and events:
        raise ParseError(f"link {name!r} mixes a braid line with morse events", line)
    try:
        if braid is not None:
            d = braid_closure(b=braid)
        else:
            d = FramedLinkDiagram.from_word(MorseWord(tuple(events)))
    except DiagramError as exc:
        raise ParseError(str(exc), line) from exc
    n = d.n_components
    for c in list(framings) + list(special):
        if not 0 <= c < n:
            raise ParseError(f"link {name!r} references component {c}, "
                             f"but it has {n}", line)
    if framings:
        d = FramedLinkDiagram.from_word(d.word, dict(framings)) \
            if braid is None else FramedLinkDiagram(d.word, tuple(
                framings.get(i, d.framings[i]) for i in range(n)))
    return ParsedLink(name, d, frozenset(special))


def parse_link_file(text: str) -> list[ParsedLink]:
    """Parse a link file: one or more ``link <name>`` blocks.

    Each block holds either a single braid line or a sequence of morse event
    lines, plus optional ``framing <c>=<int>`` and ``special <c>`` lines.
    ``#`` starts a comment; ``/`` may separate events within a line.  A file
    with no ``link`` header is a single anonymous block named ``link0``.
    """
    links: list[ParsedLink] = []
    name = None
    braid: BraidWord | None = None
    events: list[MorseEvent] = []
    framings: dict[int, int] = {}
    special: set[int] = set()
    block_line = 1
    seen_any = False

    def flush(line):
        nonlocal braid, events, framings, special, name
        if name is None:
            return
        links.append(_build_block(name, braid, events, framings, special, line))
        name, braid, events, framings, special = None, None, [], {}, set()

    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        stripped = _strip_comment(raw)
        if not stripped:
            continue
        if stripped.startswith("link"):
            parts = stripped.split()
            if len(parts) != 2:
                raise ParseError("expected 'link <name>'", lineno)
            flush(lineno - 1)
            name, block_line = parts[1], lineno
            seen_any = True
            continue
        if name is None:
            if seen_any:
                raise ParseError("content outside a link block", lineno)
            name, block_line = "link0", lineno
            seen_any = True
        for piece in stripped.split("/"):
            piece = piece.strip()
            if not piece:
                continue
            if piece.startswith("braid"):
                if braid is not None:
                    raise ParseError("second braid line in one block", lineno)
                braid = parse_braid(piece, lineno)
                continue
            m = _EVENT_RE.match(piece)
            if m:
                events.append(MorseEvent(m.group(1), int(m.group(2))))
                continue
            m = _CROSS_RE.match(piece)
            if m:
                events.append(MorseEvent("x" + m.group(1), int(m.group(2))))
                continue
            m = _FRAMING_RE.match(piece)
            if m:
                framings[int(m.group(1))] = int(m.group(2))
                continue
            m = _SPECIAL_RE.match(piece)
            if m:
                special.add(int(m.group(1)))
                continue
            raise ParseError(f"unrecognized line {piece!r}", lineno)
    flush(len(lines))
    if not seen_any:
        raise ParseError("empty link file", 1)
    return links


def parse_morse(text: str) -> FramedLinkDiagram:
    """Parse a single Morse block (no ``link`` headers) into a diagram."""
    links = parse_link_file("link block\n" + text)
    if len(links) != 1:
        raise ParseError("expected a single morse block")
    return links[0].diagram


def to_link_text(name: str, d: FramedLinkDiagram,
                 special: frozenset[int] | set[int] = frozenset()) -> str:
    """Serialize a diagram in the same text format the parser reads."""
    lines = [f"link {name}"]
    lines += [f"{k} {p}" for k, p in d.word.events]
    lines += [f"framing {i}={f}" for i, f in enumerate(d.framings)]
    lines += [f"special {c}" for c in sorted(special)]
    return "\n".join(lines) + "\n"
