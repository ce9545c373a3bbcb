"""Type, level and Gorenstein invariants of Cohen-Macaulay graphs.

All three are read off the fully deformed graph restricted to the cover
side: the socle generators are its maximal independent sets, the type
counts its minimal vertex covers, level-ness is its unmixedness, and
type one is equivalent to the graph being nothing but its matching.
These formulas hold only for Cohen-Macaulay inputs, so every operation
verifies that first and refuses otherwise.
"""

from dataclasses import dataclass

from .errors import PreconditionError
from .graphs import (
    is_unmixed_bruteforce,
    maximal_independent_sets,
    minimal_vertex_covers,
)
from .pairing import PairedLabeling, find_cycle
from .transform import restricted_o_full
from .verdicts import Verdict


def _require_cm(pl: PairedLabeling) -> None:
    unmixed = is_unmixed_bruteforce(pl.graph)
    if not unmixed.value:
        raise PreconditionError(
            "invariants are defined for Cohen-Macaulay graphs; this one is "
            "not even unmixed",
            witness=unmixed.certificate,
        )
    cycle = find_cycle(pl, max_r=2)
    if cycle is not None:
        raise PreconditionError(
            "invariants are defined for Cohen-Macaulay graphs only",
            witness={"cycle": cycle.to_list()},
        )


def socle_generators(pl: PairedLabeling) -> list[tuple[str, ...]]:
    """Socle monomials as x-vertex subsets: the maximal independent sets
    of the restricted deformation, sorted."""
    _require_cm(pl)
    restricted = restricted_o_full(pl)
    return sorted(tuple(sorted(s)) for s in maximal_independent_sets(restricted))


def cm_type(pl: PairedLabeling) -> int:
    """Number of minimal vertex covers of the restricted deformation.

    Always equals the socle generator count (complement duality).
    """
    _require_cm(pl)
    restricted = restricted_o_full(pl)
    covers = minimal_vertex_covers(restricted)
    generators = maximal_independent_sets(restricted)
    assert len(covers) == len(generators)
    return len(covers)


def is_level(pl: PairedLabeling) -> Verdict:
    """Level iff the restricted deformation is unmixed."""
    _require_cm(pl)
    v = is_unmixed_bruteforce(restricted_o_full(pl))
    return Verdict(v.value, "level", v.certificate)


def is_gorenstein(pl: PairedLabeling) -> Verdict:
    """Gorenstein iff the edge set is exactly the matching; equivalently
    the type is one (asserted)."""
    _require_cm(pl)
    matching = {frozenset(p) for p in pl.pairs}
    extra = sorted(
        sorted(e) for e in pl.graph.edges - matching
    )
    value = not extra
    assert value == (cm_type(pl) == 1)
    certificate = {"extra_edges": extra} if extra else None
    return Verdict(value, "matching-only", certificate)


@dataclass(frozen=True)
class InvariantReport:
    cm_type: int
    socle_monomials: tuple[tuple[str, ...], ...]
    level: bool
    gorenstein: bool
    complete_intersection: bool

    def to_dict(self) -> dict:
        return {
            "cm_type": self.cm_type,
            "socle_monomials": [list(s) for s in self.socle_monomials],
            "level": self.level,
            "gorenstein": self.gorenstein,
            "complete_intersection": self.complete_intersection,
        }


def invariant_report(pl: PairedLabeling) -> InvariantReport:
    gorenstein = is_gorenstein(pl).value
    return InvariantReport(
        cm_type=cm_type(pl),
        socle_monomials=tuple(socle_generators(pl)),
        level=bool(is_level(pl).value),
        gorenstein=gorenstein,
        complete_intersection=gorenstein,
    )
