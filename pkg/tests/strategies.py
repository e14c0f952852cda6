"""Shared hypothesis strategies."""

from __future__ import annotations

from hypothesis import strategies as st

from knottrap.diagram import BraidWord


@st.composite
def braid_words(draw, max_strands: int = 4, max_length: int = 10, alternating: bool = False):
    """Braid words in which every generator occurs, so the closure is non-split."""
    n = draw(st.integers(2, max_strands))
    length = draw(st.integers(n - 1, max_length))
    letters = list(range(1, n))
    extra = draw(st.lists(st.integers(1, n - 1), min_size=length - (n - 1), max_size=length - (n - 1)))
    gens = draw(st.permutations(letters + extra))
    if alternating:
        word = tuple(g if g % 2 else -g for g in gens)
    else:
        signs = draw(st.lists(st.sampled_from([1, -1]), min_size=len(gens), max_size=len(gens)))
        word = tuple(s * g for s, g in zip(signs, gens))
    return BraidWord(n, word)
