"""Random polynomial generators shared by the property tests."""

import random

from hypothesis import strategies as st

from concordium.laurent import LaurentPoly, monomial

exps = st.integers(min_value=-5, max_value=5)
coeffs = st.integers(min_value=-9, max_value=9)

polys = st.lists(st.tuples(exps, exps, coeffs), max_size=8).map(LaurentPoly)
units = st.builds(lambda s, a, b: monomial(s, a, b), st.sampled_from([1, -1]), exps, exps)


def random_poly(rng: random.Random, max_terms: int = 8, span: int = 5, cmax: int = 9) -> LaurentPoly:
    n = rng.randint(0, max_terms)
    return LaurentPoly(
        (rng.randint(-span, span), rng.randint(-span, span), rng.randint(-cmax, cmax)) for _ in range(n)
    )


def random_unit(rng: random.Random) -> LaurentPoly:
    return monomial(rng.choice([1, -1]), rng.randint(-5, 5), rng.randint(-5, 5))
