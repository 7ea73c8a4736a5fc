"""
Condition records evaluated on open and closed point sets.

Field order follows the strength of the conditions, strongest first.
"""
from dataclasses import asdict, dataclass, field, fields
from typing import Any, Dict, List, Optional, Text, Tuple


@dataclass(frozen=True)
class OpenLadder:
    principal: bool = True
    intersection_closed: bool = True
    infimum_generates: bool = True
    infimum_bounded: bool = True
    meet_closed: bool = True
    single_minimal: bool = True
    vacuous: bool = False

    # (stronger, weaker, equivalent)
    implications = (
        ('principal', 'intersection_closed', True),
        ('intersection_closed', 'infimum_generates', False),
        ('infimum_generates', 'infimum_bounded', True),
        ('infimum_bounded', 'meet_closed', False),
        ('meet_closed', 'single_minimal', False),
    )

    @classmethod
    def vacuous_ladder(cls) -> 'OpenLadder':
        return cls(vacuous=True)

    def flags(self) -> Dict[Text, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != 'vacuous'}

    def broken(self) -> List[Tuple[Text, Text]]:
        if self.vacuous:
            return []
        return _broken(self, self.implications)

    def to_dict(self) -> Dict[Text, Any]:
        return asdict(self)


@dataclass(frozen=True)
class ClosedLadder:
    principal: bool = True
    sups_inside: bool = True
    sup_generates: bool = True
    sup_bounded: bool = True
    join_closed: bool = True
    single_maximal: bool = True
    ideal: bool = True
    sublattice: bool = True
    vacuous: bool = False

    implications = (
        ('principal', 'sups_inside', True),
        ('sups_inside', 'sup_generates', True),
        ('sup_generates', 'sup_bounded', True),
        ('sup_bounded', 'join_closed', False),
        ('join_closed', 'single_maximal', False),
        ('join_closed', 'ideal', False),
        ('join_closed', 'sublattice', False),
    )

    @classmethod
    def vacuous_ladder(cls) -> 'ClosedLadder':
        return cls(vacuous=True)

    def flags(self) -> Dict[Text, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != 'vacuous'}

    def broken(self) -> List[Tuple[Text, Text]]:
        if self.vacuous:
            return []
        return _broken(self, self.implications)

    def to_dict(self) -> Dict[Text, Any]:
        return asdict(self)


@dataclass(frozen=True)
class IrreducibleOpenLadder:
    """Conditions on a nonempty open set that are all equivalent."""
    greatest: bool
    closure_principal: bool
    unique_maximal: bool
    irreducible: bool
    join_closed: bool
    all_sups: bool

    def flags(self) -> Dict[Text, bool]:
        return asdict(self)

    @property
    def agree(self) -> bool:
        return len(set(self.flags().values())) == 1


@dataclass
class Violation:
    statement: Text
    points: Any
    detail: Dict[Text, Any] = field(default_factory=dict)
    model: Optional[Dict] = None

    def to_dict(self) -> Dict[Text, Any]:
        return asdict(self)


def _broken(ladder, implications) -> List[Tuple[Text, Text]]:
    broken = []
    for stronger, weaker, equivalent in implications:
        high, low = getattr(ladder, stronger), getattr(ladder, weaker)
        if (high and not low) or (equivalent and low and not high):
            broken.append((stronger, weaker))
    return broken
