from collections.abc import Callable, Mapping
from functools import cache
from math import comb

from .enums import BoundFormula
from .exceptions import InputError
from .models import BoundRequest


@cache
def canonical_c(s: int, t: int) -> int:
    """C(s, t) with C(2, t) = t - 1 and C(s, t) = (s + t) C(s - 1, t + 1) + s - 1."""
    if s == 2:
        return t - 1
    return (s + t) * canonical_c(s - 1, t + 1) + s - 1


def canonical_c_closed(s: int, t: int) -> int:
    m = s + t
    return m ** (s - 1) - 3 * m ** (s - 2) + sum((s - 1 - i) * m**i for i in range(s - 2))


@cache
def f_bound(n: int, s: int, t: int) -> int:
    """Upper bound on f(n; s, t) from the H_{s,t} recursion."""
    if s == 2:
        return comb(n + t - 1, t - 1) + 1
    return f_bound(n, s - 1, t + 1) ** (s + t) * n ** (s - 1)


def red_net_order(s: int, t: int) -> int:
    return 3 * (4 * s * s) ** t


# formula -> (required params, evaluator)
FORMULAS: dict[BoundFormula, tuple[tuple[str, ...], Callable[..., int]]] = {
    BoundFormula.ES: (("s", "n"), lambda s, n: (s - 1) * (n - 1) + 1),
    BoundFormula.CUPS_CAPS: (("s", "n"), lambda s, n: comb(s + n - 4, s - 2) + 1),
    BoundFormula.CLIQUE_POWERPATH: (("s", "t", "n"), lambda s, t, n: (24 * s**3) ** (s * t) * n),
    BoundFormula.POWERPATH_CLIQUE: (
        ("t", "n"),
        lambda t, n: 2 ** (2 * t - 1) * n ** (t * (2 * t - 1)),
    ),
    BoundFormula.DIAGONAL_POWERPATH: (
        ("t", "n"),
        lambda t, n: (400 * t**3) ** (t * t) * n ** (4 * t - 2),
    ),
    BoundFormula.CK: (("p", "q"), lambda p, q: comb(p + q - 2, p - 1) + 1),
    BoundFormula.CANONICAL_C: (("s", "t"), canonical_c),
    BoundFormula.F_BOUND: (("n", "s", "t"), f_bound),
    BoundFormula.RED_NET_ORDER: (("s", "t"), red_net_order),
    BoundFormula.RAMSEY_GREEDY: (("s", "n"), lambda s, n: comb(s + n - 2, s - 1)),
    BoundFormula.BLOWUP: (("t", "n"), lambda t, n: (2 * t * n**3) ** (2 * t - 1)),
    BoundFormula.WEAK_LEX_SIZE: (("s",), lambda s: 2 ** (s - 1)),
    BoundFormula.LEX_NON_INCREASING_SIZE: (("s",), lambda s: 2 ** (2 * s - 3)),
}

# smallest admissible value per parameter where the formula needs more than 1
_MINIMUM: dict[BoundFormula, Mapping[str, int]] = {
    BoundFormula.CUPS_CAPS: {"s": 2, "n": 2},
    BoundFormula.CANONICAL_C: {"s": 2},
    BoundFormula.F_BOUND: {"s": 2},
    BoundFormula.LEX_NON_INCREASING_SIZE: {"s": 2},
}


def bound_calculator(req: BoundRequest) -> int:
    """Exact integer value of a named bound."""
    names, evaluate = FORMULAS[req.formula]
    minimum = _MINIMUM.get(req.formula, {})
    args: list[int] = []
    for name in names:
        if name not in req.params:
            raise InputError(f"{req.formula.value} needs parameter {name!r}")
        value = int(req.params[name])
        if value < minimum.get(name, 1):
            raise InputError(f"{req.formula.value}: {name}={value} is below {minimum.get(name, 1)}")
        args.append(value)
    return evaluate(*args)


def bound(formula: BoundFormula | str, **params: int) -> int:
    return bound_calculator(BoundRequest(BoundFormula(formula), params))
