import random

import pytest

from qinv.diagram import CAP, CUP, XNEG, XPOS, FramedLinkDiagram, MorseEvent, MorseWord


def random_closed_word(rng: random.Random, max_crossings: int,
                       max_width: int = 8) -> MorseWord:
    """A random valid closed Morse word with at most max_crossings crossings."""
    events = []
    w = 0
    crossings = 0
    # random growth phase
    budget = rng.randint(0, max_crossings)
    steps = rng.randint(1, 4 * (budget + 1))
    for _ in range(steps):
        choices = []
        if w + 2 <= max_width:
            choices.append(CUP)
        if w >= 2:
            choices += [CAP]
            if crossings < budget:
                choices += [XPOS, XNEG] * 2
        kind = rng.choice(choices)
        if kind == CUP:
            p = rng.randint(0, w)
            w += 2
        else:
            p = rng.randint(0, w - 2)
            if kind == CAP:
                w -= 2
            else:
                crossings += 1
        events.append(MorseEvent(kind, p))
    while w > 0:
        events.append(MorseEvent(CAP, rng.randint(0, w - 2)))
        w -= 2
    return MorseWord(tuple(events))


def random_diagram(rng: random.Random, max_crossings: int,
                   max_width: int = 8) -> FramedLinkDiagram:
    return FramedLinkDiagram.from_word(
        random_closed_word(rng, max_crossings, max_width))


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
