import math

from hypothesis import strategies as st

from estfuse import SourceEstimate

values = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
uncertainties = st.floats(min_value=1e-3, max_value=1e3, allow_nan=False, allow_infinity=False)


@st.composite
def estimate_lists(draw, min_size=1, max_size=8):
    pairs = draw(st.lists(st.tuples(values, uncertainties), min_size=min_size, max_size=max_size))
    return [SourceEstimate(m, s) for m, s in pairs]


@st.composite
def overlapping_estimate_lists(draw, min_size=1, max_size=8):
    """Estimates whose intervals all contain one common point."""
    centre = draw(values)
    out = []
    for _ in range(draw(st.integers(min_size, max_size))):
        offset = draw(st.floats(min_value=-100, max_value=100))
        slack = draw(st.floats(min_value=1e-2, max_value=100))
        out.append(SourceEstimate(centre + offset, abs(offset) + slack))
    return out


def rel_close(a, b, rtol=1e-12, atol=1e-15):
    return math.isclose(a, b, rel_tol=rtol, abs_tol=atol)
