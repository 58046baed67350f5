import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from fractions import Fraction

from valdiv.fields import QQ, PrimeField, primitive_root_of_unity
from valdiv.laurent import Tower
from valdiv.symbol import SymbolAlgebra


def make_symbol_xy(n: int, p: int, prec: int = 16) -> SymbolAlgebra:
    """(x, y) symbol of degree n over F_p((x))((y)) with the smallest omega."""
    field = PrimeField(p)
    tower = Tower(field, ["x", "y"], default_prec=prec)
    omega = primitive_root_of_unity(field, n)
    return SymbolAlgebra(tower, n, omega, tower.var("x"), tower.var("y"))


def make_quaternion_f5(prec: int = 16) -> SymbolAlgebra:
    """(2, t) over F5((t)): 2 is a non-square unit, t a uniformizer."""
    field = PrimeField(5)
    tower = Tower(field, ["t"], default_prec=prec)
    omega = field.element(-1)
    return SymbolAlgebra(tower, 2, omega, tower.constant(2), tower.var("t"))


def make_rational_quaternion() -> SymbolAlgebra:
    """(-1, -1) over Q with the trivial valuation (height-0 tower)."""
    tower = Tower(QQ, [])
    return SymbolAlgebra(
        tower, 2, QQ.element(-1), tower.constant(-1), tower.constant(-1)
    )


def random_algebra_element(alg, rng, terms=2, span=2, allow_negative=True):
    """Sparse random element: few basis monomials with monomial coefficients."""
    n = alg.degree
    out = alg.zero()
    p = alg.tower.base.char
    for _ in range(rng.randint(1, terms)):
        k, l = rng.randrange(n), rng.randrange(n)
        lo = -span if allow_negative else 0
        exps = tuple(rng.randint(lo, span) for _ in range(alg.tower.height))
        c = rng.randint(1, p - 1) if p else Fraction(rng.randint(1, 9), rng.randint(1, 4))
        out = out + alg.monomial(k, l, alg.tower.monomial(exps, c))
    return out
