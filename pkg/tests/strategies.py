from fractions import Fraction

from hypothesis import strategies as st

from coverquant.coeffring import PiScalar, RatFunc

small_int = st.integers(-3, 3)
laurent_dict = st.dictionaries(st.integers(-4, 4), small_int, max_size=4)


@st.composite
def ratfuncs(draw, laurent_only=False):
    num = RatFunc.from_laurent({k: Fraction(c) for k, c in draw(laurent_dict).items()})
    if laurent_only:
        return num
    den = draw(laurent_dict)
    den = RatFunc.from_laurent({k: Fraction(c) for k, c in den.items()})
    return num if den.is_zero() else num / den


@st.composite
def piscalars(draw, laurent_only=False):
    return PiScalar(draw(ratfuncs(laurent_only)), draw(ratfuncs(laurent_only)))


@st.composite
def a_elements(draw):
    """Elements of Z^pi[v, 1/v] as a + pi b."""
    return PiScalar.from_pair(draw(laurent_dict), draw(laurent_dict))
