from itertools import combinations

from hypothesis import strategies as st

from ordbelief import build_frame, make_focal, validate_bpa

FRAME = build_frame([f"e{i}" for i in range(6)])
SUBSETS = [c for k in (1, 2, 3) for c in combinations(FRAME.elements, k)]
SUBSETS_BY_CARD = {k: [s for s in SUBSETS if len(s) == k] for k in (1, 2, 3)}


def _bpa(subsets, weights):
    total = sum(weights)
    return validate_bpa(FRAME, [(make_focal(FRAME, s), w / total) for s, w in zip(subsets, weights)])


@st.composite
def bpas(draw, min_size=1, max_size=6):
    """BPAs with 1-6 distinct focal elements of cardinality 1-3."""
    n = draw(st.integers(min_size, max_size))
    subsets = draw(st.lists(st.sampled_from(SUBSETS), min_size=n, max_size=n, unique=True))
    weights = draw(st.lists(st.integers(1, 10_000), min_size=n, max_size=n))
    return _bpa(subsets, weights)


@st.composite
def symmetric_bpas(draw, max_size=6):
    """Equal masses on focal elements that all share one cardinality."""
    card = draw(st.sampled_from([1, 2, 3]))
    n = draw(st.integers(1, max_size))
    subsets = draw(st.lists(st.sampled_from(SUBSETS_BY_CARD[card]), min_size=n, max_size=n, unique=True))
    return _bpa(subsets, [1] * n)
