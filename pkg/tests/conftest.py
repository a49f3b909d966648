from fractions import Fraction

from hypothesis import strategies as st

from dotgraph.model import VectorModel


def rationals(lo=-3, hi=3, max_den=7):
    return st.builds(
        lambda p, q: Fraction(p, q),
        st.integers(lo * max_den, hi * max_den),
        st.integers(1, max_den),
    )


@st.composite
def rational_models_2d(draw, min_n=1, max_n=8, halfplane=False):
    n = draw(st.integers(min_n, max_n))
    vecs = {}
    for i in range(n):
        x = draw(rationals(0 if halfplane else -3, 3))
        y = draw(rationals())
        if x == 0 and y == 0:
            x = Fraction(1)
        vecs[f"p{i}"] = (x, y)
    return VectorModel.build(vecs, 1)
