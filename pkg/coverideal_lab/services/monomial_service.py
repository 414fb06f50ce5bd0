"""Exact arithmetic on monomials and monomial ideals."""
import logging
from itertools import combinations_with_replacement
from typing import Iterable, List, Sequence, Set

from coverideal_lab.errors import (
    DimensionMismatchError,
    NotSquarefreeError,
    ZeroIdealError,
)
from coverideal_lab.models.monomial_model import (
    Monomial,
    MonomialIdeal,
    Polarization,
    minimal_generators,
)

logger = logging.getLogger(__name__)


def _check_dims(n: int, m: int) -> None:
    if n != m:
        raise DimensionMismatchError(f"ambient {n} vs {m}")


# ===== Monomials =====


def divides(a: Monomial, b: Monomial) -> bool:
    """Return True iff every exponent of a is at most the matching exponent of b."""
    _check_dims(len(a), len(b))
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_dims(len(a), len(b))
    return tuple(x if x >= y else y for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_dims(len(a), len(b))
    return tuple(x if x <= y else y for x, y in zip(a, b))


def monomial_product(a: Monomial, b: Monomial) -> Monomial:
    _check_dims(len(a), len(b))
    return tuple(x + y for x, y in zip(a, b))


def monomial_quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    _check_dims(len(a), len(b))
    return tuple(x - y for x, y in zip(a, b))


def monomial_degree(a: Monomial) -> int:
    return sum(a)


def support(a: Monomial) -> Set[int]:
    """0-based indices of the variables dividing a."""
    return {i for i, e in enumerate(a) if e}


def variable(n: int, i: int) -> Monomial:
    """The 0-based variable x_{i+1} in ambient n."""
    return tuple(1 if j == i else 0 for j in range(n))


# ===== Ideals =====


def minimize(gens: Iterable[Sequence[int]], ambient: int) -> MonomialIdeal:
    """
    Canonicalize a generating set.

    Args:
        gens: Any finite set of monomials of length ambient
        ambient: Number of variables

    Returns:
        The ideal whose generators are the minimal elements of gens
    """
    gens = list(gens)
    for g in gens:
        _check_dims(len(g), ambient)
    return MonomialIdeal.from_minimal(ambient, minimal_generators(gens))


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    """Return True iff some generator of the ideal divides m."""
    _check_dims(ideal.ambient, len(m))
    return any(all(x <= y for x, y in zip(g, m)) for g in ideal.generators)


def is_subideal(small: MonomialIdeal, big: MonomialIdeal) -> bool:
    _check_dims(small.ambient, big.ambient)
    return all(contains(big, g) for g in small.generators)


def multiply(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    _check_dims(first.ambient, second.ambient)
    products = {
        tuple(x + y for x, y in zip(u, v))
        for u in first.generators
        for v in second.generators
    }
    return minimize(products, first.ambient)


def power(ideal: MonomialIdeal, s: int) -> MonomialIdeal:
    """
    Ordinary power by repeated multiplication, minimizing after every step.

    Args:
        ideal: The base ideal
        s: Exponent; s = 0 gives the unit ideal

    Returns:
        ideal^s
    """
    if s < 0:
        raise ValueError(f"negative exponent {s}")
    result = MonomialIdeal.unit(ideal.ambient)
    for _ in range(s):
        result = multiply(result, ideal)
    return result


def add(*ideals: MonomialIdeal) -> MonomialIdeal:
    """Sum of ideals: union of generators, minimized."""
    if not ideals:
        raise ValueError("add needs at least one ideal")
    ambient = ideals[0].ambient
    gens: List[Monomial] = []
    for ideal in ideals:
        _check_dims(ideal.ambient, ambient)
        gens.extend(ideal.generators)
    return minimize(gens, ambient)


def intersect(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    _check_dims(first.ambient, second.ambient)
    lcms = {
        tuple(x if x >= y else y for x, y in zip(u, v))
        for u in first.generators
        for v in second.generators
    }
    return minimize(lcms, first.ambient)


def intersect_all(ideals: Sequence[MonomialIdeal], ambient: int) -> MonomialIdeal:
    """
    k-way intersection, folding the ideals with the fewest generators first.

    Args:
        ideals: Ideals to intersect
        ambient: Ambient dimension, used when ideals is empty

    Returns:
        The intersection; the unit ideal for an empty family
    """
    pending = sorted(ideals, key=lambda ideal: ideal.size)
    result = MonomialIdeal.unit(ambient)
    for ideal in pending:
        result = intersect(result, ideal)
    return result


def is_squarefree(ideal: MonomialIdeal) -> bool:
    return all(e <= 1 for g in ideal.generators for e in g)


def prime_ideal(ambient: int, indices: Iterable[int]) -> MonomialIdeal:
    """The monomial prime (x_i : i in indices) for 0-based indices."""
    return MonomialIdeal.from_minimal(ambient, [variable(ambient, i) for i in indices])


def prime_power(ambient: int, i: int, j: int, s: int) -> MonomialIdeal:
    """(x_i, x_j)^s for 0-based i != j."""
    gens = []
    for a in range(s + 1):
        m = [0] * ambient
        m[i] = a
        m[j] = s - a
        gens.append(tuple(m))
    return MonomialIdeal.from_minimal(ambient, gens)


def alexander_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    """
    Alexander dual of a squarefree ideal.

    Args:
        ideal: A squarefree monomial ideal

    Returns:
        The intersection of the primes generated by the supports of the generators
    """
    if not is_squarefree(ideal):
        raise NotSquarefreeError(f"{ideal} is not squarefree")
    primes = [prime_ideal(ideal.ambient, sorted(support(g))) for g in ideal.generators]
    return intersect_all(primes, ideal.ambient)


def polarize(ideal: MonomialIdeal) -> Polarization:
    """
    Replace x_i^a by x_{i,1}...x_{i,a}.

    Args:
        ideal: Any monomial ideal

    Returns:
        The squarefree ideal and, for each old variable, its block of new 0-based indices
    """
    widths = [max((g[i] for g in ideal.generators), default=0) for i in range(ideal.ambient)]
    blocks = []
    offset = 0
    for w in widths:
        blocks.append(tuple(range(offset, offset + w)))
        offset += w
    new_ambient = max(offset, 1)
    gens = []
    for g in ideal.generators:
        m = [0] * new_ambient
        for i, e in enumerate(g):
            for k in blocks[i][:e]:
                m[k] = 1
        gens.append(tuple(m))
    return Polarization(
        ideal=MonomialIdeal.from_minimal(new_ambient, gens), blocks=tuple(blocks)
    )


def monomials_of_degree(ambient: int, d: int) -> List[Monomial]:
    """All monomials of total degree d."""
    result = []
    for combo in combinations_with_replacement(range(ambient), d):
        m = [0] * ambient
        for i in combo:
            m[i] += 1
        result.append(tuple(m))
    return result


def truncate(ideal: MonomialIdeal, t: int) -> MonomialIdeal:
    """
    Minimal generators of ideal ∩ m^t.

    Generators of degree below t are multiplied by every monomial of the
    missing degree. The result needs no minimization beyond removing repeats:
    the new generators all have degree t and none of them can divide a kept
    generator of higher degree.

    Args:
        ideal: The ideal to truncate
        t: Degree bound, t >= 0

    Returns:
        ideal ∩ m^t
    """
    if t < 0:
        raise ValueError(f"negative truncation degree {t}")
    gens: Set[Monomial] = set()
    fillers = {}
    for g in ideal.generators:
        missing = t - sum(g)
        if missing <= 0:
            gens.add(g)
            continue
        if missing not in fillers:
            fillers[missing] = monomials_of_degree(ideal.ambient, missing)
        for e in fillers[missing]:
            gens.add(tuple(x + y for x, y in zip(g, e)))
    return MonomialIdeal.from_minimal(ideal.ambient, gens)


def degree_component(ideal: MonomialIdeal, d: int) -> MonomialIdeal:
    """The ideal generated by all degree-d members of the ideal."""
    truncated = truncate(ideal, d)
    return MonomialIdeal.from_minimal(
        ideal.ambient, [g for g in truncated.generators if sum(g) == d]
    )


def deg_min(ideal: MonomialIdeal) -> int:
    if ideal.is_zero:
        raise ZeroIdealError("deg_min of the zero ideal")
    return min(ideal.degrees())


def deg_max(ideal: MonomialIdeal) -> int:
    if ideal.is_zero:
        raise ZeroIdealError("deg_max of the zero ideal")
    return max(ideal.degrees())


def colon(ideal: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """(I : u), generated by v / gcd(v, u) over the generators v."""
    _check_dims(ideal.ambient, len(u))
    return minimize(
        [tuple(x - min(x, y) for x, y in zip(v, u)) for v in ideal.generators],
        ideal.ambient,
    )


def permute_variables(ideal: MonomialIdeal, perm: Sequence[int]) -> MonomialIdeal:
    """Send the 0-based variable i to position perm[i]."""
    if sorted(perm) != list(range(ideal.ambient)):
        raise ValueError(f"{perm} is not a permutation of 0..{ideal.ambient - 1}")
    gens = []
    for g in ideal.generators:
        m = [0] * ideal.ambient
        for i, e in enumerate(g):
            m[perm[i]] = e
        gens.append(tuple(m))
    return MonomialIdeal.from_minimal(ideal.ambient, gens)


def product_of_variables(ambient: int) -> MonomialIdeal:
    """The principal ideal (x1 x2 ... xn)."""
    return MonomialIdeal.from_minimal(ambient, [(1,) * ambient])
