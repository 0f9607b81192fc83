"""Finite ground sets, bitmask subsets and families of subsets.

A :class:`Subset` is a 64-bit mask over the atoms of its :class:`GroundSet`;
bit ``i`` set means atom ``i`` is present.  A :class:`SubsetFamily` holds
distinct subsets in canonical order: ascending cardinality, ties broken by
ascending mask value.  On a chain this is exactly the inclusion order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, EmptyFamily, GroundMismatch, UnknownAtom

MAX_ATOMS = 64


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def canonical_key(mask: int) -> tuple[int, int]:
    return (popcount(mask), mask)


class GroundSet:
    """The finite universe, as an ordered sequence of distinct labels."""

    __slots__ = ("atoms", "_index", "_hash")

    def __init__(self, atoms: Iterable[str]):
        atoms = tuple(atoms)
        if len(atoms) > MAX_ATOMS:
            raise CapacityError(f"{len(atoms)} atoms exceeds capacity of {MAX_ATOMS}")
        index = {}
        for i, label in enumerate(atoms):
            if not isinstance(label, str) or not label:
                raise ValueError(f"atom {i}: labels must be nonempty strings, got {label!r}")
            if label in index:
                raise ValueError(f"atom {i}: duplicate label {label!r}")
            index[label] = i
        self.atoms = atoms
        self._index = index
        self._hash = hash(atoms)

    def __repr__(self) -> str:
        return f"GroundSet({list(self.atoms)!r})"

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, GroundSet):
            return NotImplemented
        return self.atoms == other.atoms

    def __len__(self) -> int:
        return len(self.atoms)

    @property
    def size(self) -> int:
        return len(self.atoms)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.atoms)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownAtom(f"unknown atom {label!r}") from None

    def atom_index(self, atom: int | str) -> int:
        """Normalize an atom given by label or index to its index."""
        if isinstance(atom, str):
            return self.index(atom)
        if isinstance(atom, int) and not isinstance(atom, bool) and 0 <= atom < len(self.atoms):
            return atom
        raise UnknownAtom(f"unknown atom {atom!r}")

    def label(self, i: int) -> str:
        return self.atoms[i]

    def subset(self, labels: Iterable[str] = ()) -> "Subset":
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return Subset(self, mask)

    def from_mask(self, mask: int) -> "Subset":
        return Subset(self, mask)

    @property
    def empty(self) -> "Subset":
        return Subset(self, 0)

    @property
    def full(self) -> "Subset":
        return Subset(self, self.full_mask)

    def all_subsets(self) -> list["Subset"]:
        """Every subset of the ground set, in canonical order."""
        masks = sorted(range(1 << len(self.atoms)), key=canonical_key)
        return [Subset(self, m) for m in masks]


@dataclass(frozen=True)
class Subset:
    ground: GroundSet
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> len(self.ground.atoms):
            raise ValueError(f"mask {self.mask:#x} has bits outside a ground set of size {len(self.ground)}")

    def __len__(self) -> int:
        return popcount(self.mask)

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __contains__(self, atom) -> bool:
        return bool(self.mask >> self.ground.atom_index(atom) & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def labels(self) -> list[str]:
        return [self.ground.atoms[i] for i in bits(self.mask)]

    def __str__(self) -> str:
        return "{" + ",".join(self.labels()) + "}"

    def _check(self, other: "Subset") -> None:
        if self.ground is not other.ground and self.ground != other.ground:
            raise GroundMismatch(f"{self} and {other} live over different ground sets")

    def issubset(self, other: "Subset") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __or__(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.ground, self.mask | other.mask)

    def __and__(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.ground, self.mask & other.mask)

    def __sub__(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.ground, self.mask & ~other.mask)

    def with_atom(self, atom) -> "Subset":
        return Subset(self.ground, self.mask | 1 << self.ground.atom_index(atom))


class SubsetFamily:
    """An immutable set of distinct subsets of one ground set, canonically ordered."""

    __slots__ = ("ground", "_members", "_masks")

    def __init__(self, ground: GroundSet, members: Iterable[Subset] = ()):
        seen = {}
        for s in members:
            if s.ground is not ground and s.ground != ground:
                raise GroundMismatch(f"member {s} does not belong to the family's ground set")
            seen[s.mask] = s
        masks = tuple(sorted(seen, key=canonical_key))
        self.ground = ground
        self._masks = masks
        self._members = tuple(seen[m] for m in masks)

    @classmethod
    def from_masks(cls, ground: GroundSet, masks: Iterable[int]) -> "SubsetFamily":
        return cls(ground, (Subset(ground, m) for m in masks))

    @classmethod
    def _canonical(cls, ground: GroundSet, members: Sequence[Subset]) -> "SubsetFamily":
        # members must already be distinct, over ground, and canonically sorted
        fam = cls.__new__(cls)
        fam.ground = ground
        fam._members = tuple(members)
        fam._masks = tuple(s.mask for s in members)
        return fam

    @classmethod
    def _canonical_masks(cls, ground: GroundSet, masks: tuple) -> "SubsetFamily":
        # masks must already be distinct, within ground, and canonically sorted
        fam = cls.__new__(cls)
        fam.ground = ground
        fam._members = None
        fam._masks = masks
        return fam

    @property
    def members(self) -> tuple[Subset, ...]:
        if self._members is None:
            self._members = tuple(Subset(self.ground, m) for m in self._masks)
        return self._members

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.members)

    def __contains__(self, s: Subset) -> bool:
        return s.ground == self.ground and s.mask in self._masks

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubsetFamily):
            return NotImplemented
        return self.ground == other.ground and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self.ground, self._masks))

    def __str__(self) -> str:
        return "{" + ",".join(str(s) for s in self.members) + "}"

    def __repr__(self) -> str:
        return f"SubsetFamily({self})"

    def _check(self, other: "SubsetFamily") -> None:
        if self.ground != other.ground:
            raise GroundMismatch("families live over different ground sets")

    def issubset(self, other: "SubsetFamily") -> bool:
        self._check(other)
        return set(self._masks) <= set(other._masks)

    def __or__(self, other: "SubsetFamily") -> "SubsetFamily":
        self._check(other)
        return SubsetFamily(self.ground, self.members + other.members)

    def __and__(self, other: "SubsetFamily") -> "SubsetFamily":
        self._check(other)
        keep = set(other._masks)
        return SubsetFamily._canonical(self.ground, [s for s in self.members if s.mask in keep])

    def __sub__(self, other: "SubsetFamily") -> "SubsetFamily":
        self._check(other)
        drop = set(other._masks)
        return SubsetFamily._canonical(self.ground, [s for s in self.members if s.mask not in drop])

    def add(self, s: Subset) -> "SubsetFamily":
        return SubsetFamily(self.ground, self.members + (s,))

    def lower(self, p: Subset) -> "SubsetFamily":
        """Members strictly below ``p`` under inclusion."""
        _same_ground(self.ground, p)
        m = p.mask
        return SubsetFamily._canonical(
            self.ground, [s for s in self.members if s.mask & ~m == 0 and s.mask != m]
        )


def _same_ground(ground: GroundSet, s: Subset) -> None:
    if s.ground is not ground and s.ground != ground:
        raise GroundMismatch(f"{s} does not belong to the expected ground set")


def complement(x: Subset) -> Subset:
    return Subset(x.ground, x.ground.full_mask & ~x.mask)


def is_subset(x: Subset, y: Subset) -> bool:
    return x.issubset(y)


def is_strict_subset(x: Subset, y: Subset) -> bool:
    return x.issubset(y) and x.mask != y.mask


def family_union(family: SubsetFamily) -> Subset:
    """Union of all members; the empty family has the empty union."""
    acc = 0
    for m in family.masks:
        acc |= m
    return Subset(family.ground, acc)


def family_intersection(family: SubsetFamily) -> Subset:
    if not len(family):
        raise EmptyFamily("intersection of an empty family is undefined")
    acc = family.ground.full_mask
    for m in family.masks:
        acc &= m
    return Subset(family.ground, acc)


def strict_lower_union(family: SubsetFamily, p: Subset) -> Subset:
    """Union of the members of ``family`` lying strictly below ``p``."""
    _same_ground(family.ground, p)
    return Subset(family.ground, lower_union_mask(family.masks, p.mask))


def lower_union_mask(masks: Iterable[int], p: int) -> int:
    acc = 0
    for m in masks:
        if m & ~p == 0 and m != p:
            acc |= m
    return acc
