"""Move generators and the slide-fixture corpus for the invariance suites.

Programmatic moves (blow-up, adding a special Hopf pair, adding a trivial
unknot, mirroring) are exact constructors.  Handle slides are shipped as a
small corpus of before/after diagram pairs instead: each fixture documents
which move produced it, and one restricted slide (band sum of two split
unknots in Morse position) is generated programmatically via cabling.  A
general band-slide rewriting engine is out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import (
    FramedLinkDiagram,
    MorseEvent,
    MorseWord,
    braid_closure,
    cable,
    distant_union,
    insert_kinks,
    parse_braid,
    unknot,
)
from .invariants import SpecialFramedLink


def _hopf(f0: int = 0, f1: int = 0) -> FramedLinkDiagram:
    return FramedLinkDiagram(
        braid_closure(parse_braid("braid 2 : s1 s1")).word, (f0, f1))


def k1_add(d: FramedLinkDiagram, sign: int) -> FramedLinkDiagram:
    """Blow-up: distant union with an unknotted component of framing +-1."""
    if sign not in (1, -1):
        raise ValueError("blow-up sign must be +-1")
    return distant_union(d, unknot(sign))


def gamma_d_add(sl: SpecialFramedLink) -> SpecialFramedLink:
    """Add a distant special Hopf pair (ordinary + special, both 0-framed)."""
    n = sl.diagram.n_components
    return SpecialFramedLink(
        distant_union(sl.diagram, _hopf(0, 0)),
        sl.special | {n + 1})


def gamma_e_add(sl: SpecialFramedLink) -> SpecialFramedLink:
    """Add a distant trivial 0-framed ordinary unknot."""
    return SpecialFramedLink(distant_union(sl.diagram, unknot(0)), sl.special)


def band_sum_split_unknots(f1: int, f2: int) -> tuple[FramedLinkDiagram, FramedLinkDiagram]:
    """Slide one split unknot over another, programmatically.

    Before: U_{f1} ⊔ U_{f2}.  After: component 0 is unchanged (the slid-over
    unknot, framing f2 realized as blackboard curls); component 1 is its
    band-summed pushoff with framing f1 + f2 and linking number f2 to
    component 0.  Built as the parallel double of the curled unknot, which is
    exactly the slid picture when the band is straight.
    """
    before = distant_union(unknot(f1), unknot(f2))
    doubled = cable(insert_kinks(unknot(0), 0, f2), [2])
    after = FramedLinkDiagram(doubled.word, (f2, f1 + f2))
    assert after.linking[0][1] == f2
    return before, after


def _padded_trefoil(framing: int) -> FramedLinkDiagram:
    """The 3-crossing torus knot redrawn with a cancelling crossing pair."""
    d = braid_closure(parse_braid("braid 2 : s1 s1 s1 s1 S1"))
    return FramedLinkDiagram(d.word, (framing,))


def _parallel_special_triple() -> FramedLinkDiagram:
    """Hopf pair with the second component doubled: the slid picture of an
    extra circle banded onto a 0-framed pushoff of the special component."""
    return cable(_hopf(0, 0), [1, 2])


@dataclass(frozen=True)
class MoveFixture:
    """A before/after presentation pair related by one documented move.

    ``mode`` selects the comparison: "rtw" (3-manifold invariant), "broda"
    (4-manifold invariant, plus numerator and nullity bookkeeping), or
    "graded-bracket" (raw graded evaluation, for the one disallowed slide
    whose presentations are not valid special links).
    """

    name: str
    kind: str
    mode: str
    before: SpecialFramedLink
    after: SpecialFramedLink
    expect_equal: bool = True


def fixture_corpus() -> tuple[MoveFixture, ...]:
    trefoil = braid_closure(parse_braid("braid 2 : s1 s1 s1"))
    slide_before, slide_after = band_sum_split_unknots(0, 1)
    hopf_special = SpecialFramedLink(_hopf(0, 0), frozenset({1}))

    return (
        # Handle slide of a 0-framed unknot over a +1-framed one: the slid
        # component becomes the framed pushoff, giving a clasped pair with
        # framings (1, 1) and linking number 1.
        MoveFixture(
            "k2-slide-unknot-over-blowup", "K2-slide", "rtw",
            SpecialFramedLink(slide_before),
            SpecialFramedLink(slide_after)),
        # The same slide with both components ordinary (even-graded labels):
        # sliding ordinary over ordinary.
        MoveFixture(
            "gamma-c-ordinary-over-ordinary", "Gamma-c", "broda",
            SpecialFramedLink(slide_before),
            SpecialFramedLink(slide_after)),
        # Ordinary circle slid over the special half of a special Hopf pair:
        # it becomes a 0-framed parallel of that special circle.
        MoveFixture(
            "gamma-b-ordinary-over-special", "Gamma-b", "broda",
            SpecialFramedLink(distant_union(_hopf(0, 0), unknot(0)),
                              frozenset({1})),
            SpecialFramedLink(_parallel_special_triple(), frozenset({1}))),
        # Special circle slid over the special half of a special Hopf pair.
        MoveFixture(
            "gamma-a-special-over-special", "Gamma-a", "broda",
            SpecialFramedLink(distant_union(_hopf(0, 0), unknot(0)),
                              frozenset({1, 2})),
            SpecialFramedLink(_parallel_special_triple(), frozenset({1, 2}))),
        # Plane isotopy: the same framed knot drawn with an extra cancelling
        # crossing pair.
        MoveFixture(
            "gamma-f-isotopy-trefoil", "Gamma-f-isotopy", "broda",
            SpecialFramedLink(FramedLinkDiagram(trefoil.word, (3,))),
            SpecialFramedLink(_padded_trefoil(3))),
        MoveFixture(
            "kirby-isotopy-trefoil", "Gamma-f-isotopy", "rtw",
            SpecialFramedLink(FramedLinkDiagram(trefoil.word, (-1,))),
            SpecialFramedLink(_padded_trefoil(-1))),
        # The disallowed graded slide: the fully-graded component slid over an
        # even-graded one.  The slid pushoff keeps the full label but acquires
        # framing 1, so the pair is not a special link, and the graded
        # evaluations genuinely differ.
        MoveFixture(
            "negative-full-slid-over-even", "disallowed-slide", "graded-bracket",
            SpecialFramedLink(slide_before, frozenset({0})),
            SpecialFramedLink(slide_after, frozenset({1})),
            expect_equal=False),
    )
