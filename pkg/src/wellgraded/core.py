"""Ground-set interning, set/family representations, and the span, base,
atom and surmise primitives everything else builds on.

Sets are stored as Python int bitmasks over a ground set that interns
element names to dense indices 0..|X|-1.  All set algebra (union, subset
test, symmetric difference) is therefore exact word-parallel integer
arithmetic.  Every type here is an immutable value; every operation is a
pure function, so values can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .errors import CapacityError, DomainError, UsageError

DEFAULT_SPAN_LIMIT = 1_000_000


class GroundSet:
    """Bidirectional mapping between element names and dense indices.

    Names must be nonempty, whitespace-free and printable; indices are
    contiguous from 0 in declaration order.
    """

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        index: dict[str, int] = {}
        for i, name in enumerate(names):
            if not _valid_name(name):
                raise UsageError(f"invalid element name: {name!r}")
            if name in index:
                raise UsageError(f"duplicate element name: {name!r}")
            index[name] = i
        self.names = names
        self._index = index

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, GroundSet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"GroundSet({list(self.names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UsageError(f"element {name!r} not in ground set") from None

    def name(self, i: int) -> str:
        return self.names[i]

    def mask_of(self, names: Iterable[str]) -> int:
        mask = 0
        for name in names:
            mask |= 1 << self.index(name)
        return mask

    def names_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.names[i] for i in _bits(mask))

    def full_mask(self) -> int:
        return (1 << len(self.names)) - 1


def _valid_name(name) -> bool:
    return (
        isinstance(name, str)
        and name != ""
        and name.isprintable()
        and not any(c.isspace() for c in name)
    )


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class StateSet:
    """A subset of a ground set, with value semantics."""

    ground: GroundSet
    mask: int

    @classmethod
    def of(cls, ground: GroundSet, names: Iterable[str]) -> "StateSet":
        return cls(ground, ground.mask_of(names))

    def members(self) -> tuple[str, ...]:
        return self.ground.names_of(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, name: str) -> bool:
        return bool(self.mask >> self.ground.index(name) & 1)

    def __or__(self, other: "StateSet") -> "StateSet":
        _check_same_ground(self, other)
        return StateSet(self.ground, self.mask | other.mask)

    def issubset(self, other: "StateSet") -> bool:
        _check_same_ground(self, other)
        return self.mask & ~other.mask == 0

    def __repr__(self) -> str:
        return "{" + " ".join(self.members()) + "}"


def _check_same_ground(x: StateSet, y: StateSet) -> None:
    if x.ground != y.ground:
        raise UsageError("sets are over different ground sets")


def distance(x: StateSet, y: StateSet) -> int:
    """Symmetric-difference distance |X Δ Y|."""
    _check_same_ground(x, y)
    return (x.mask ^ y.mask).bit_count()


def canonical_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key fixing the output order of every family-returning operation:
    by cardinality, then lexicographically on the sorted index tuple."""
    return (mask.bit_count(), tuple(_bits(mask)))


class SetFamily:
    """A duplicate-free collection of subsets of a shared ground set.

    The ground set defaults to the union of the members; a larger ground
    must be declared explicitly.  Constructors reject duplicate sets
    unless dedupe=True is passed, since silently merging duplicates hides
    input errors.
    """

    __slots__ = ("ground", "masks")

    def __init__(self, ground: GroundSet, masks: Iterable[int], *, dedupe: bool = False):
        masks = list(masks)
        full = (1 << len(ground)) - 1
        seen: set[int] = set()
        kept: list[int] = []
        for m in masks:
            if m & ~full:
                raise UsageError("set member index outside ground set")
            if m in seen:
                if dedupe:
                    continue
                raise UsageError(
                    f"duplicate set {{{' '.join(ground.names_of(m))}}} in family"
                )
            seen.add(m)
            kept.append(m)
        if not kept:
            raise UsageError("family must contain at least one set")
        self.ground = ground
        self.masks = tuple(kept)

    @classmethod
    def from_members(
        cls,
        sets: Iterable[Iterable[str]],
        ground: Iterable[str] | None = None,
        *,
        dedupe: bool = False,
    ) -> "SetFamily":
        sets = [tuple(s) for s in sets]
        if ground is None:
            names: list[str] = []
            seen: set[str] = set()
            for s in sets:
                for name in s:
                    if name not in seen:
                        seen.add(name)
                        names.append(name)
            ground_set = GroundSet(names)
        else:
            ground_set = ground if isinstance(ground, GroundSet) else GroundSet(ground)
        return cls(ground_set, [ground_set.mask_of(s) for s in sets], dedupe=dedupe)

    @property
    def sets(self) -> tuple[StateSet, ...]:
        return tuple(StateSet(self.ground, m) for m in self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[StateSet]:
        return iter(self.sets)

    def __contains__(self, item) -> bool:
        if isinstance(item, StateSet):
            return item.ground == self.ground and item.mask in set(self.masks)
        return item in set(self.masks)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SetFamily)
            and self.ground == other.ground
            and frozenset(self.masks) == frozenset(other.masks)
        )

    def __hash__(self) -> int:
        return hash((self.ground, frozenset(self.masks)))

    def __repr__(self) -> str:
        return "SetFamily[" + ", ".join(repr(s) for s in self.sorted()) + "]"

    def sorted(self) -> tuple[StateSet, ...]:
        return tuple(
            StateSet(self.ground, m) for m in sorted(self.masks, key=canonical_key)
        )

    def replaced(self, masks: Iterable[int]) -> "SetFamily":
        """New family over the same ground with the given member masks,
        emitted in canonical order."""
        return SetFamily(self.ground, sorted(set(masks), key=canonical_key))

    def union_mask(self) -> int:
        u = 0
        for m in self.masks:
            u |= m
        return u

    def size_params(self) -> "SizeParams":
        return SizeParams(
            n=len(self.masks),
            ell=max(m.bit_count() for m in self.masks),
            m=sum(m.bit_count() for m in self.masks),
        )


@dataclass(frozen=True)
class SizeParams:
    """Input-size parameters: n sets, largest cardinality ell, total
    cardinality m.  Always ell <= m <= n*ell."""

    n: int
    ell: int
    m: int

    def __post_init__(self):
        if not (self.ell <= self.m <= self.n * self.ell):
            raise UsageError(f"inconsistent size parameters {self}")


@dataclass(frozen=True)
class SurmiseFunction:
    """Map from each ground element to its atoms (the minimal sets of the
    spanned family containing it)."""

    atoms_at: dict[str, tuple[StateSet, ...]]

    def __getitem__(self, name: str) -> tuple[StateSet, ...]:
        return self.atoms_at[name]

    def elements(self) -> tuple[str, ...]:
        return tuple(self.atoms_at)


@dataclass(frozen=True)
class TightPath:
    """Sequence of sets stepping by single-element changes with no
    redundant moves: consecutive distance 1 and total length equal to the
    endpoint distance."""

    steps: tuple[StateSet, ...]

    def __len__(self) -> int:
        return len(self.steps) - 1

    def __iter__(self) -> Iterator[StateSet]:
        return iter(self.steps)

    def validate(self) -> None:
        if not self.steps:
            raise ValueError("path must contain at least one set")
        for a, b in zip(self.steps, self.steps[1:]):
            if distance(a, b) != 1:
                raise ValueError(f"non-adjacent consecutive steps {a} -> {b}")
        if distance(self.steps[0], self.steps[-1]) != len(self):
            raise ValueError("path length exceeds endpoint distance")


def span(family: SetFamily, *, limit: int = DEFAULT_SPAN_LIMIT) -> SetFamily:
    """Closure of the family under nonempty unions.

    The empty set belongs to the result only when it belongs to the input.
    Raises CapacityError when the closure would exceed `limit` sets, since
    spans grow exponentially in general.
    """
    masks = span_masks(family.masks, limit=limit)
    return family.replaced(masks)


def span_masks(masks: Iterable[int], *, limit: int = DEFAULT_SPAN_LIMIT) -> set[int]:
    closed: set[int] = set()
    frontier = list(dict.fromkeys(masks))
    for m in frontier:
        closed.add(m)
    if len(closed) > limit:
        raise CapacityError(f"span exceeds the configured limit of {limit} sets")
    while frontier:
        fresh: list[int] = []
        for new in frontier:
            for old in list(closed):
                u = new | old
                if u not in closed:
                    closed.add(u)
                    if len(closed) > limit:
                        raise CapacityError(
                            f"span exceeds the configured limit of {limit} sets"
                        )
                    fresh.append(u)
        frontier = fresh
    return closed


def is_union_closed(family: SetFamily) -> bool:
    """Whether the union of every pair of members is again a member.

    Pairwise closure implies closure under all nonempty finite unions.
    """
    present = set(family.masks)
    masks = family.masks
    for i, x in enumerate(masks):
        for y in masks[i + 1 :]:
            if x | y not in present:
                return False
    return True


def atoms(family: SetFamily) -> SetFamily:
    """The atoms of a union-closed family: the empty set if present, plus
    every member that is not the union of the members strictly contained
    in it.  This collection is exactly the base of the family."""
    if not is_union_closed(family):
        raise DomainError("atoms are defined for union-closed families; span first")
    return family.replaced(atom_masks(family.masks))


def atom_masks(masks: Iterable[int]) -> list[int]:
    masks = list(masks)
    out: list[int] = []
    for x in masks:
        if x == 0:
            out.append(x)
            continue
        covered = 0
        for y in masks:
            if y != x and y & ~x == 0:
                covered |= y
        if covered != x:
            out.append(x)
    return out


def surmise(base: SetFamily) -> SurmiseFunction:
    """Surmise function of the family spanned by a base: for each element
    of the union, the base sets having that element as an endpoint, i.e.
    the minimal spanned sets containing it."""
    from .verify import is_base  # deferred: verify builds on core

    if not is_base(base).verdict:
        raise DomainError("surmise requires a base (some set has no endpoint)")
    ground = base.ground
    order = sorted(base.masks, key=canonical_key)
    at: dict[str, list[StateSet]] = {}
    for x in order:
        covered = 0
        for y in base.masks:
            if y != x and y & ~x == 0:
                covered |= y
        for i in _bits(x & ~covered):
            at.setdefault(ground.name(i), []).append(StateSet(ground, x))
    union = base.union_mask()
    result = {
        ground.name(i): tuple(at[ground.name(i)]) for i in _bits(union)
    }
    assert all(result.values()), "finite families have an atom at every point"
    return SurmiseFunction(result)


def is_discriminative(family: SetFamily) -> bool:
    """Whether no two distinct elements of the union belong to exactly the
    same members."""
    union = family.union_mask()
    signatures: set[tuple[bool, ...]] = set()
    for i in _bits(union):
        sig = tuple(bool(m >> i & 1) for m in family.masks)
        if sig in signatures:
            return False
        signatures.add(sig)
    return True
