"""Weak polymatroidality, the order search, and linear quotients."""
import logging
from typing import Dict, List, Optional, Sequence, Set, Tuple

from coverideal_lab.config import Caps, get_caps
from coverideal_lab.errors import CapExceededError, ZeroIdealError
from coverideal_lab.models.monomial_model import Monomial, MonomialIdeal, VariableOrder
from coverideal_lab.models.structure_model import (
    LinearQuotientsResult,
    OrderSearchResult,
    WpCertificate,
    WpResult,
    WpViolation,
    WpWitness,
)

logger = logging.getLogger(__name__)


def _require_nonzero(ideal: MonomialIdeal) -> None:
    if ideal.is_zero:
        raise ZeroIdealError("weak polymatroidality of the zero ideal")


def _exchange(u: Monomial, q: int, p: int) -> Monomial:
    w = list(u)
    w[q] += 1
    w[p] -= 1
    return tuple(w)


def _first_witness(
    u: Monomial, q: int, lower: Sequence[int], members: Set[Monomial]
) -> Optional[int]:
    for p in lower:
        if u[p] > 0 and _exchange(u, q, p) in members:
            return p
    return None


def is_weakly_polymatroidal(ideal: MonomialIdeal, order: VariableOrder) -> WpResult:
    """
    Check the exchange property under a variable order.

    For every ordered pair (u, v) of minimal generators that first differ at
    x_q with u smaller there, some x_p ranked below x_q must divide u with
    x_q u / x_p again a minimal generator. The witness depends on (u, q) only;
    the highest-ranked admissible p is recorded.

    Args:
        ideal: A nonzero monomial ideal, not necessarily equigenerated
        order: Variable order, rank 0 greatest

    Returns:
        A certificate, or the first violation found in canonical pair order
    """
    _require_nonzero(ideal)
    if order.n != ideal.ambient:
        raise ValueError(f"order on {order.n} variables for ambient {ideal.ambient}")
    by_rank = order.indices()
    members = set(ideal.generators)
    witnesses: Dict[Tuple[Monomial, int], Optional[int]] = {}
    for u in ideal.generators:
        for v in ideal.generators:
            if u == v:
                continue
            r = next(r for r, i in enumerate(by_rank) if u[i] != v[i])
            q = by_rank[r]
            if u[q] > v[q]:
                continue
            if (u, q) not in witnesses:
                witnesses[(u, q)] = _first_witness(u, q, by_rank[r + 1:], members)
            if witnesses[(u, q)] is None:
                return WpViolation(order=order, u=u, v=v, q=q + 1)
    return WpCertificate(
        order=order,
        witnesses=tuple(
            WpWitness(u=u, q=q + 1, p=p + 1) for (u, q), p in sorted(witnesses.items())
        ),
    )


def verify_certificate(ideal: MonomialIdeal, certificate: WpCertificate) -> bool:
    """
    Re-check a certificate by direct membership.

    Every witness must exchange inside G(I) with p ranked below q, and every
    pair with a deficit at its first difference must have a recorded witness.
    """
    rank = certificate.order.rank_of()
    members = set(ideal.generators)
    recorded = set()
    for w in certificate.witnesses:
        q, p = w.q - 1, w.p - 1
        if w.u not in members or w.u[p] <= 0 or rank[p] <= rank[q]:
            return False
        if w.exchanged() not in members:
            return False
        recorded.add((w.u, q))
    by_rank = certificate.order.indices()
    for u in ideal.generators:
        for v in ideal.generators:
            if u == v:
                continue
            q = next(i for i in by_rank if u[i] != v[i])
            if u[q] < v[q] and (u, q) not in recorded:
                return False
    return True


def _witness_masks(ideal: MonomialIdeal) -> Dict[Tuple[Monomial, int], int]:
    """Bitmask of every p with x_p | u and x_q u / x_p in G(I), keyed by (u, q)."""
    members = set(ideal.generators)
    masks = {}
    for u in ideal.generators:
        for q in range(ideal.ambient):
            mask = 0
            for p in range(ideal.ambient):
                if p != q and u[p] > 0 and _exchange(u, q, p) in members:
                    mask |= 1 << p
            masks[(u, q)] = mask
    return masks


def find_wp_order(ideal: MonomialIdeal, caps: Optional[Caps] = None) -> OrderSearchResult:
    """
    Search every variable order for one making the ideal weakly polymatroidal.

    Ranks are filled greatest first, trying variables in ascending label
    order, so the lexicographically least good order is returned. When z is
    placed, the pairs whose first difference is z are settled exactly: their
    witnesses must come from the variables still unplaced. Whether a partial
    order can be completed depends only on the set of placed variables, so
    failing sets are remembered.

    Args:
        ideal: A nonzero ideal with ambient at most caps.ambient
        caps: Resource caps

    Returns:
        The order and its certificate, or an exhausted result
    """
    _require_nonzero(ideal)
    caps = get_caps(caps)
    n = ideal.ambient
    if n > caps.ambient:
        raise CapExceededError("order search ambient", n, caps.ambient)
    witness = _witness_masks(ideal)
    full = (1 << n) - 1
    dead: Set[int] = set()
    explored = 0

    def place(z: int, remaining: int, classes: List[List[Monomial]]) -> Optional[List[List[Monomial]]]:
        refined = []
        for cls in classes:
            top = max(u[z] for u in cls)
            for u in cls:
                if u[z] < top and not witness[(u, z)] & remaining:
                    return None
            groups: Dict[int, List[Monomial]] = {}
            for u in cls:
                groups.setdefault(u[z], []).append(u)
            refined.extend(g for g in groups.values() if len(g) > 1)
        return refined

    def search(placed: int, ranking: List[int], classes: List[List[Monomial]]) -> Optional[List[int]]:
        nonlocal explored
        if placed == full or not classes:
            return ranking + [z for z in range(n) if not placed >> z & 1]
        if placed in dead:
            return None
        for z in range(n):
            if placed >> z & 1:
                continue
            explored += 1
            remaining = full & ~placed & ~(1 << z)
            refined = place(z, remaining, classes)
            if refined is None:
                continue
            found = search(placed | 1 << z, ranking + [z], refined)
            if found is not None:
                return found
        dead.add(placed)
        return None

    start = [list(ideal.generators)] if ideal.size > 1 else []
    found = search(0, [], start)
    if found is None:
        logger.info("no weakly polymatroidal order for %s after %d placements", ideal, explored)
        return OrderSearchResult(explored=explored)
    order = VariableOrder(ranking=tuple(z + 1 for z in found))
    certificate = is_weakly_polymatroidal(ideal, order)
    if not certificate.holds:
        raise RuntimeError(f"order search returned {order} but the check failed: {certificate}")
    return OrderSearchResult(order=order, certificate=certificate, explored=explored)


# ===== Linear quotients =====


def _quotient(v: Monomial, u: Monomial) -> Monomial:
    """v / gcd(v, u)."""
    return tuple(x - min(x, y) for x, y in zip(v, u))


def _colon_is_linear(previous: Sequence[Monomial], u: Monomial) -> bool:
    """(previous) : u is generated by variables."""
    quotients = [_quotient(v, u) for v in previous]
    variables = {q.index(1) for q in quotients if sum(q) == 1}
    return all(any(q[i] > 0 for i in variables) for q in quotients)


def is_linear_quotient_order(order: Sequence[Monomial]) -> bool:
    return all(_colon_is_linear(order[:j], order[j]) for j in range(1, len(order)))


def _lex_order(ideal: MonomialIdeal, order: VariableOrder) -> List[Monomial]:
    by_rank = order.indices()
    return sorted(ideal.generators, key=lambda u: tuple(u[i] for i in by_rank), reverse=True)


def has_linear_quotients(
    ideal: MonomialIdeal, hint: Optional[VariableOrder] = None, caps: Optional[Caps] = None
) -> LinearQuotientsResult:
    """
    Look for an order of G(I) with linear quotients.

    Tries descending lex under the hint, then the canonical graded order, and
    finally a backtracking search over the set of generators already used.
    The colon (u_1..u_(j-1)) : u_j only depends on that set, so dead sets are
    remembered.

    Args:
        ideal: A nonzero ideal with at most caps.generators generators
        hint: Variable order for the lex attempt; identity when omitted
        caps: Resource caps; caps.lattice bounds the number of search states

    Returns:
        The decision with the generator order found
    """
    _require_nonzero(ideal)
    caps = get_caps(caps)
    if ideal.size > caps.generators:
        raise CapExceededError("linear quotient generators", ideal.size, caps.generators)
    lex = _lex_order(ideal, hint or VariableOrder.identity(ideal.ambient))
    if is_linear_quotient_order(lex):
        return LinearQuotientsResult(holds=True, order=tuple(lex), strategy="lex")
    graded = list(ideal.generators)
    if is_linear_quotient_order(graded):
        return LinearQuotientsResult(holds=True, order=tuple(graded), strategy="graded")

    gens = list(ideal.generators)
    full = (1 << len(gens)) - 1
    dead: Set[int] = set()

    def extend(used: int, chosen: List[int]) -> Optional[List[int]]:
        if used == full:
            return chosen
        if used in dead:
            return None
        if len(dead) > caps.lattice:
            raise CapExceededError("linear quotient search states", len(dead), caps.lattice)
        previous = [gens[k] for k in chosen]
        for k in range(len(gens)):
            if used >> k & 1 or not _colon_is_linear(previous, gens[k]):
                continue
            found = extend(used | 1 << k, chosen + [k])
            if found is not None:
                return found
        dead.add(used)
        return None

    found = extend(0, [])
    if found is None:
        return LinearQuotientsResult(holds=False, strategy="search")
    return LinearQuotientsResult(
        holds=True, order=tuple(gens[k] for k in found), strategy="search"
    )
