import numpy as np
from hypothesis import strategies as st

from symca.interval_table import IntervalTable, centers, validate_for_analysis
from symca.multivalued import MultiValuedVariable


@st.composite
def variables(draw, m=None, max_individuals=5, max_modalities=4, max_set=3):
    q = draw(st.integers(1, max_modalities))
    if m is None:
        m = draw(st.integers(1, max_individuals))
    obs = draw(
        st.lists(
            st.sets(st.integers(0, q - 1), min_size=1, max_size=min(max_set, q)),
            min_size=m,
            max_size=m,
        )
    )
    return MultiValuedVariable("v", tuple(f"m{j}" for j in range(q)), tuple(obs))


@st.composite
def variable_pairs(draw, max_individuals=5):
    m = draw(st.integers(1, max_individuals))
    return draw(variables(m=m)), draw(variables(m=m))


@st.composite
def interval_tables(draw, max_rows=4, max_cols=4, max_count=30, max_width=10):
    n = draw(st.integers(2, max_rows))
    p = draw(st.integers(2, max_cols))
    lo = np.array(draw(st.lists(st.integers(0, max_count), min_size=n * p, max_size=n * p)))
    w = np.array(draw(st.lists(st.integers(0, max_width), min_size=n * p, max_size=n * p)))
    lo, hi = lo.reshape(n, p), (lo + w).reshape(n, p)
    # keep margins positive
    lo[:, 0] += 1
    lo[0, :] += 1
    hi = np.maximum(hi, lo)
    t = IntervalTable.from_cells(np.stack([lo, hi], axis=-1))
    assert validate_for_analysis(centers(t)).analyzable
    return t
