"""Table 1 of W*[n,k;t], transcribed entry by entry as printed."""
from pqwhitney.basics import bracket
from pqwhitney.laurent import ONE, LaurentPoly

GRID = [(m, r, t) for m in (1, 2) for r in (0, 1, 2) for t in (1, 2)]


def _p(e: int) -> LaurentPoly:
    return LaurentPoly.monomial(e, 0)


def table1(m: int, r: int, t: int) -> list[list[LaurentPoly]]:
    br, bmr = bracket(r), bracket(m + r)
    return [
        [ONE],
        [br * _p(m * t), ONE],
        [br**2 * _p(2 * m * t), br * _p(m * t) + bmr * _p(m * (t - 1)), ONE],
        [
            br**3 * _p(3 * m * t),
            br**2 * _p(2 * m * t) + br * bmr * _p(m * (2 * t - 1)) + bmr**2 * _p(2 * m * (t - 1)),
            br * _p(m * t) + 2 * bmr * _p(m * (t - 1)),
            ONE,
        ],
    ]
