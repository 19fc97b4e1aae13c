"""Path families, path extensions, and the minimal well-graded extension
algorithm.

The extension algorithm grows a generating family B' >= B by adding sets
in nondecreasing cardinality order.  For every ordered pair (K, L) of
input sets it maintains

    S(K, L) = union of all X in B' with X inside K|L and X|K != K|L,

the largest union-reachable waypoint strictly short of completing the
tight path from K to K|L.  A pair is finished once |S| >= |K|L| - 1.  At
step i the pending pairs with |S| = i - 1 are grouped by their exact S
value; per group a bipartite instance (pairs vs. candidate elements) is
solved by the forced-vertex/deletion rule, and each chosen element x
contributes the new set S | {x}.  Every addition is folded back into the
S table under the definitional guards, and pending pairs are re-collected
after each group so that an addition for one group never leaves a stale
sibling entry that would trigger a redundant set.

Grouping compares S values directly rather than through the pairwise
"S(A,B) inside C|D" predicate: the predicate agrees with S-equality on
most inputs but not all (two pending pairs can satisfy it asymmetrically
with different S values), and only equal S values share an added set.
The predicate itself stays available on the final state as c(); it is
evaluated lazily from the S table, since a materialized table over all
quadruples of pairs is quartic in the number of sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import (
    DEFAULT_SPAN_LIMIT,
    GroundSet,
    SetFamily,
    StateSet,
    TightPath,
    atom_masks,
    canonical_key,
    span_masks,
)
from .errors import CapacityError, UsageError, ValidationError
from .oracle import DEFAULT_ORACLE_LIMIT, oracle_is_well_graded
from .verify import VerificationReport, Witness


class PathFamily:
    """Per-ordered-pair tight paths: for input sets K, L a tight path in
    the power set from K to K|L.  Pairs with L inside K carry the trivial
    one-set path."""

    __slots__ = ("ground", "_paths")

    def __init__(
        self,
        ground: GroundSet,
        paths: dict[tuple[int, int], tuple[int, ...]],
    ):
        self.ground = ground
        self._paths = dict(paths)

    @classmethod
    def from_state_sets(
        cls,
        paths: dict[tuple[StateSet, StateSet], Sequence[StateSet]],
    ) -> "PathFamily":
        grounds = {k.ground for pair in paths for k in pair}
        if len(grounds) != 1:
            raise UsageError("all path sets must share one ground set")
        ground = grounds.pop()
        return cls(
            ground,
            {
                (k.mask, l.mask): tuple(s.mask for s in steps)
                for (k, l), steps in paths.items()
            },
        )

    def path(self, k: StateSet, l: StateSet) -> TightPath:
        steps = self._paths[(k.mask, l.mask)]
        return TightPath(tuple(StateSet(self.ground, m) for m in steps))

    def items(self) -> Iterator[tuple[tuple[StateSet, StateSet], TightPath]]:
        for (km, lm) in sorted(
            self._paths, key=lambda p: (canonical_key(p[0]), canonical_key(p[1]))
        ):
            k = StateSet(self.ground, km)
            l = StateSet(self.ground, lm)
            yield (k, l), self.path(k, l)

    def __len__(self) -> int:
        return len(self._paths)

    def set_masks(self) -> set[int]:
        out: set[int] = set()
        for steps in self._paths.values():
            out.update(steps)
        return out

    def total_length(self) -> int:
        return sum(len(steps) - 1 for steps in self._paths.values())

    def validate(self, family: SetFamily) -> None:
        """Check coverage of all ordered pairs of distinct sets and
        tightness of each path from K to K|L."""
        if self.ground != family.ground:
            raise ValidationError("path family is over a different ground set")
        for k in family.masks:
            for l in family.masks:
                if k == l:
                    continue
                name = (
                    f"({{{' '.join(self.ground.names_of(k))}}}, "
                    f"{{{' '.join(self.ground.names_of(l))}}})"
                )
                steps = self._paths.get((k, l))
                if steps is None:
                    raise ValidationError(f"missing path for pair {name}")
                if steps[0] != k or steps[-1] != (k | l):
                    raise ValidationError(f"path for pair {name} has wrong endpoints")
                if len(steps) - 1 != (k ^ (k | l)).bit_count():
                    raise ValidationError(f"path for pair {name} is not tight")
                for a, b in zip(steps, steps[1:]):
                    if (a ^ b).bit_count() != 1:
                        raise ValidationError(f"path for pair {name} is not tight")


class ExtensionState:
    """Final bookkeeping of an extension run: the grown generating family,
    the S table, and the last processed cardinality.  The quadruple
    predicate c is evaluated on demand from the S table."""

    __slots__ = ("bprime", "_s", "cardinality")

    def __init__(self, bprime: SetFamily, s: dict[tuple[int, int], int], cardinality: int):
        self.bprime = bprime
        self._s = s
        self.cardinality = cardinality

    @property
    def s_table(self) -> dict[tuple[StateSet, StateSet], StateSet]:
        g = self.bprime.ground
        return {
            (StateSet(g, k), StateSet(g, l)): StateSet(g, s)
            for (k, l), s in self._s.items()
        }

    def c(self, a: StateSet, b: StateSet, c: StateSet, d: StateSet) -> bool:
        s = self._s[(a.mask, b.mask)]
        t = c.mask | d.mask
        return s & ~t == 0 and s != t


@dataclass(frozen=True)
class ExtensionResult:
    generators: SetFamily  # the input sets plus everything added
    added: tuple[StateSet, ...]  # in addition order
    base: SetFamily  # base of the spanned extension
    paths: PathFamily
    state: ExtensionState

    def spanned(self, *, limit: int = DEFAULT_SPAN_LIMIT) -> SetFamily:
        return self.generators.replaced(
            span_masks(self.generators.masks, limit=limit)
        )


def _in_span(mask: int, masks: Iterable[int]) -> bool:
    if mask == 0:
        return 0 in masks
    u = 0
    for y in masks:
        if y & ~mask == 0:
            u |= y
    return u == mask


def path_extension(
    family: SetFamily, pf: PathFamily, *, limit: int = DEFAULT_SPAN_LIMIT
) -> SetFamily:
    """Span of all sets occurring on the paths of a valid path family.
    Always well-graded."""
    pf.validate(family)
    masks = pf.set_masks() | set(family.masks)
    return family.replaced(span_masks(masks, limit=limit))


def _s_from_scratch(bprime: Sequence[int], k: int, t: int) -> int:
    s = 0
    for x in bprime:
        if x & ~t == 0 and (x | k) != t:
            s |= x
    return s


def _dominating_elements(cand: dict[int, int]) -> list[int]:
    """Minimal subset of candidate elements dominating every pair.

    Repeatedly include any element that is the unique neighbor of some
    pair (smallest element first), otherwise delete the element of
    smallest degree, ties toward the largest index, which biases the kept
    elements to be lexicographically smallest.
    """
    cand = dict(cand)
    chosen: list[int] = []
    while cand:
        forced = sorted(
            m.bit_length() - 1 for m in set(cand.values()) if m.bit_count() == 1
        )
        if forced:
            for x in forced:
                hit = [u for u, m in cand.items() if m >> x & 1]
                if hit:
                    chosen.append(x)
                    for u in hit:
                        del cand[u]
            continue
        degree: dict[int, int] = {}
        for m in cand.values():
            rest = m
            while rest:
                low = rest & -rest
                x = low.bit_length() - 1
                degree[x] = degree.get(x, 0) + 1
                rest ^= low
        victim = min(degree, key=lambda x: (degree[x], -x))
        for u in list(cand):
            cand[u] &= ~(1 << victim)
            assert cand[u], "deleted element was a unique neighbor"
    return chosen


def minimal_wg_extension(
    family: SetFamily, *, check_tables: bool = False
) -> ExtensionResult:
    """Minimal well-graded extension: a generating family B' >= B whose
    span is union-closed, well-graded, contains every input set, and
    admits no well-graded union-closed family strictly between.

    With check_tables=True the incrementally maintained S values are
    compared against from-scratch recomputation after every addition.
    """
    ground = family.ground
    base_masks = sorted(family.masks, key=canonical_key)
    n = len(base_masks)

    # nontrivial ordered pairs, as parallel arrays; pairs with L inside K
    # keep a trivial path and never need growing
    pk: list[int] = []
    pt: list[int] = []
    for j in range(n):
        bj = base_masks[j]
        for k in range(n):
            if j == k:
                continue
            if base_masks[k] & ~bj == 0:
                continue
            pk.append(bj)
            pt.append(bj | base_masks[k])
    npairs = len(pk)
    by_target: dict[int, list[int]] = {}
    for i in range(npairs):
        by_target.setdefault(pt[i], []).append(i)

    bprime: list[int] = list(base_masks)
    ps: list[int] = [0] * npairs
    for t, idxs in by_target.items():
        subs = [x for x in bprime if x & ~t == 0]
        for i in idxs:
            k = pk[i]
            s = 0
            for x in subs:
                if (x | k) != t:
                    s |= x
            ps[i] = s

    incomplete = [i for i in range(npairs) if ps[i].bit_count() < pt[i].bit_count() - 1]
    added: list[int] = []
    bset = set(bprime)
    max_card = max((t.bit_count() for t in pt), default=0)
    last_card = 0

    for card in range(1, max_card + 1):
        while True:
            incomplete = [
                i for i in incomplete if ps[i].bit_count() < pt[i].bit_count() - 1
            ]
            pending = [i for i in incomplete if ps[i].bit_count() == card - 1]
            assert all(ps[i].bit_count() >= card - 1 for i in incomplete)
            if not pending:
                break
            last_card = card
            group_s = ps[pending[0]]
            group = [i for i in pending if ps[i] == group_s]
            cand = {i: pt[i] & ~group_s for i in group}
            assert all(cand.values()), "pending pair with no candidate element"
            for x in sorted(_dominating_elements(cand)):
                new = group_s | (1 << x)
                assert new not in bset, "chosen set already present"
                assert new.bit_count() == card
                bprime.append(new)
                bset.add(new)
                added.append(new)
                for t, idxs in by_target.items():
                    if new & ~t == 0:
                        for i in idxs:
                            if (new | pk[i]) != t:
                                ps[i] |= new
                if check_tables:
                    for i in range(npairs):
                        assert ps[i] == _s_from_scratch(bprime, pk[i], pt[i])

    generators = family.replaced(bprime)
    base = family.replaced(atom_masks(bprime))
    paths = _witness_paths(ground, base_masks, bprime)
    _check_paths_generate(paths, base_masks, bprime)
    pair_pos = 0
    s_table: dict[tuple[int, int], int] = {}
    for j in range(n):
        bj = base_masks[j]
        for k in range(n):
            if j == k or base_masks[k] & ~bj == 0:
                continue
            s_table[(bj, base_masks[k])] = ps[pair_pos]
            pair_pos += 1
    state = ExtensionState(generators, s_table, last_card)
    return ExtensionResult(
        generators=generators,
        added=tuple(StateSet(ground, m) for m in added),
        base=base,
        paths=paths,
        state=state,
    )


def _witness_paths(
    ground: GroundSet, base_masks: Sequence[int], bprime: Sequence[int]
) -> PathFamily:
    """Tight paths K -> K|L inside the spanned extension, recovered by
    greedy single-element steps.

    A step from E to E|{x} stays in the span exactly when some generator
    Y inside the target satisfies Y \\ E = {x}; in a well-graded
    union-closed family any such step can be taken without dead ends, so
    the greedy walk with the smallest admissible element is sound.
    """
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    sub_cache: dict[int, list[int]] = {}
    for km in base_masks:
        for lm in base_masks:
            if km == lm:
                continue
            t = km | lm
            if lm & ~km == 0:
                paths[(km, lm)] = (km,)
                continue
            sub = sub_cache.get(t)
            if sub is None:
                sub = [y for y in bprime if y & ~t == 0]
                sub_cache[t] = sub
            e = km
            steps = [e]
            live = sub
            while e != t:
                best = 0
                fresh: list[int] = []
                for y in live:
                    d = y & ~e
                    if d:
                        fresh.append(y)
                        if d & (d - 1) == 0 and (best == 0 or d < best):
                            best = d
                assert best, "no admissible step: extension is not well-graded"
                e |= best
                steps.append(e)
                live = fresh
            paths[(km, lm)] = tuple(steps)
    return PathFamily(ground, paths)


def _check_paths_generate(
    paths: PathFamily, base_masks: Sequence[int], bprime: Sequence[int]
) -> None:
    # the span of the sets on the witness paths must equal the span of
    # the generating family; a shortfall would mean a redundant generator.
    # The reverse inclusion holds by construction: every walk step unions
    # a generator into a set that started from a generator.  Input sets
    # are unioned in for the degenerate single-set family, which has no
    # ordered pairs and hence no paths.
    path_masks = paths.set_masks() | set(base_masks)
    for m in bprime:
        if m in path_masks:
            continue
        assert _in_span(m, path_masks), "generator missing from witness paths' span"


def verify_extension(
    family: SetFamily,
    extension: SetFamily,
    *,
    oracle_limit: int = DEFAULT_ORACLE_LIMIT,
    max_added: int = 12,
) -> VerificationReport:
    """Oracle-backed check that `extension` is a minimal well-graded
    extension of `family`: union-closed, well-graded, containing every
    input set, with no well-graded union-closed family generated by a
    proper subset of its added base sets over the input."""
    if family.ground != extension.ground:
        raise UsageError("families are over different ground sets")
    if len(extension) > oracle_limit:
        raise CapacityError(
            f"extension has {len(extension)} sets, above the oracle limit of {oracle_limit}"
        )
    ground = family.ground
    witnesses: list[Witness] = []

    ext_masks = set(extension.masks)
    for x in extension.masks:
        for y in extension.masks:
            if x | y not in ext_masks:
                witnesses.append(
                    Witness(StateSet(ground, x | y), "union of members is missing")
                )
                break
        else:
            continue
        break

    for m in family.masks:
        if m not in ext_masks:
            witnesses.append(
                Witness(StateSet(ground, m), "input set missing from extension")
            )

    if not witnesses and not oracle_is_well_graded(extension, limit=oracle_limit):
        witnesses.append(
            Witness(StateSet(ground, 0), "extension is not well-graded")
        )

    if not witnesses:
        added = [
            m
            for m in sorted(atom_masks(extension.masks), key=canonical_key)
            if m not in set(family.masks)
        ]
        if len(added) > max_added:
            raise CapacityError(
                f"{len(added)} added generators exceed the enumeration limit of {max_added}"
            )
        base_masks = list(family.masks)
        for code in range((1 << len(added)) - 1):
            subset = [added[i] for i in range(len(added)) if code >> i & 1]
            sub_span = span_masks(base_masks + subset, limit=oracle_limit)
            assert sub_span != ext_masks
            candidate = family.replaced(sub_span)
            if oracle_is_well_graded(candidate, limit=oracle_limit):
                dropped = [m for m in added if m not in subset]
                name = ", ".join(
                    "{" + " ".join(ground.names_of(m)) + "}" for m in dropped
                )
                witnesses.append(
                    Witness(
                        StateSet(ground, dropped[0]),
                        f"not minimal: well-graded without {name}",
                    )
                )
                break

    return VerificationReport(not witnesses, tuple(witnesses))
