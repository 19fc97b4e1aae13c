"""Executable NP-completeness gadget: 3-SAT instances become set
families whose membership in the base of some well-graded union-closed
family decides satisfiability.

Ground-set naming: the two literals of a variable v become the elements
"+v" and "-v", and clause number i becomes the element "c:i", so literal
and clause names can never collide.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .core import SetFamily, StateSet, atom_masks, canonical_key, span_masks
from .errors import CapacityError, DomainError, ParseError, ValidationError
from .verify import _endpoint_mask

DEFAULT_SEARCH_BUDGET = 1_000_000


@dataclass(frozen=True)
class Sat3Instance:
    """A 3-SAT instance: variables plus clauses of exactly three terms.

    A term is "+v" or "-v" for a declared variable v; terms within a
    clause may repeat, but a clause must not contain a variable together
    with its complement.  Such tautological clauses are vacuous and the
    reduction is not defined for them: their reduced set {c} | terms
    would be the union of {c} and the variable set, hence never an atom.
    """

    variables: tuple[str, ...]
    clauses: tuple[tuple[str, str, str], ...]

    def __post_init__(self):
        seen = set()
        for v in self.variables:
            if v in seen:
                raise ValidationError(f"duplicate variable {v!r}")
            seen.add(v)
        for i, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise ValidationError(f"clause {i + 1} must have exactly 3 terms")
            for term in clause:
                if len(term) < 2 or term[0] not in "+-" or term[1:] not in seen:
                    raise ValidationError(
                        f"clause {i + 1} has malformed term {term!r}"
                    )
            used = {t[1:] for t in clause}
            if any(f"+{v}" in clause and f"-{v}" in clause for v in used):
                raise ValidationError(
                    f"clause {i + 1} contains a variable and its complement"
                )

    def clause_element(self, i: int) -> str:
        return f"c:{i + 1}"


@dataclass(frozen=True)
class TruthAssignment:
    """Total map from variables to {0, 1}, extended to terms by
    complementing on "-"."""

    values: dict[str, int]

    def of_term(self, term: str) -> int:
        v = self.values[term[1:]]
        return v if term[0] == "+" else 1 - v

    def satisfies(self, inst: Sat3Instance) -> bool:
        for v in inst.variables:
            if v not in self.values:
                raise ValidationError(f"assignment misses variable {v!r}")
        return all(
            any(self.of_term(t) == 1 for t in clause) for clause in inst.clauses
        )


def reduce_3sat(inst: Sat3Instance) -> SetFamily:
    """The reduction family: the empty set, one {+v, -v} set per
    variable, and per clause the sets {c} and {c} | terms."""
    names = []
    for v in inst.variables:
        names.append(f"+{v}")
        names.append(f"-{v}")
    for i in range(len(inst.clauses)):
        names.append(inst.clause_element(i))
    sets: list[tuple[str, ...]] = [()]
    for v in inst.variables:
        sets.append((f"+{v}", f"-{v}"))
    for i, clause in enumerate(inst.clauses):
        c = inst.clause_element(i)
        sets.append((c,))
        sets.append(tuple(dict.fromkeys((c,) + clause)))
    return SetFamily.from_members(sets, ground=names)


def witness_from_assignment(inst: Sat3Instance, f: TruthAssignment) -> SetFamily:
    """The spanned witness family for a satisfying assignment: span of the
    reduction sets, the singletons of false literals, and per clause the
    prefix sets {c, t0} and {c, t0, t1} where the terms are ordered so
    the last one is true."""
    if not f.satisfies(inst):
        for i, clause in enumerate(inst.clauses):
            if all(f.of_term(t) == 0 for t in clause):
                raise DomainError(
                    f"assignment does not satisfy clause {i + 1} {clause!r}"
                )
        raise DomainError("assignment does not satisfy the instance")
    reduced = reduce_3sat(inst)
    ground = reduced.ground
    masks = set(reduced.masks)
    for v in inst.variables:
        for lit in (f"+{v}", f"-{v}"):
            if f.of_term(lit) == 0:
                masks.add(ground.mask_of([lit]))
    for i, clause in enumerate(inst.clauses):
        c = inst.clause_element(i)
        # prefixes grow over the distinct terms short of a chosen true
        # term, so that term stays the clause set's endpoint; repeated
        # literals collapse before the split
        terms = list(dict.fromkeys(clause))
        true_pos = next(j for j, t in enumerate(terms) if f.of_term(t) == 1)
        prefix = [c]
        for j, t in enumerate(terms):
            if j == true_pos:
                continue
            prefix.append(t)
            masks.add(ground.mask_of(prefix))
    return reduced.replaced(span_masks(masks))


def _chain_prefixes(base: int, extra_bits: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    cur = base
    for b in extra_bits[:-1]:
        cur |= 1 << b
        out.append(cur)
    return tuple(out)


def _bits_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def decide_subset_of_base(
    family: SetFamily, *, budget: int = DEFAULT_SEARCH_BUDGET
) -> bool:
    """Whether some well-graded union-closed family has every member of
    the input in its base.

    Exhaustive search over path extensions: every candidate augments the
    input with tight chains (one per required pair), which makes the
    spanned family well-graded by construction, so only the base
    condition needs checking.  Branches that already cost some input set
    its last endpoint are pruned, since endpoints only shrink as sets are
    added.  The problem is NP-complete; the node budget caps the search.
    """
    base_masks = sorted(family.masks, key=canonical_key)
    if 0 in base_masks:
        # chains from the empty set to each input set suffice
        chain_specs = [
            (0, m) for m in base_masks if m != 0
        ]
    else:
        chain_specs = [
            (k, k | l)
            for k in base_masks
            for l in base_masks
            if k != l and l & ~k != 0
        ]
    option_lists: list[list[tuple[int, ...]]] = []
    for start, end in chain_specs:
        options = {
            _chain_prefixes(start, order)
            for order in permutations(_bits_of(end & ~start))
        }
        option_lists.append(sorted(options))

    nodes = 0

    def base_ok(masks: list[int]) -> bool:
        return all(
            m == 0 or _endpoint_mask(masks, m) != 0 for m in base_masks
        )

    def dfs(depth: int, current: list[int], present: set[int]) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise CapacityError(f"search exceeded the budget of {budget} nodes")
        if not base_ok(current):
            return False
        if depth == len(option_lists):
            return True
        for chain in option_lists[depth]:
            fresh = [m for m in chain if m not in present]
            current.extend(fresh)
            present.update(fresh)
            if dfs(depth + 1, current, present):
                return True
            for m in fresh:
                present.discard(m)
            del current[len(current) - len(fresh) :]
        return False

    return dfs(0, list(base_masks), set(base_masks))


def parse_dimacs(text: str) -> Sat3Instance:
    """DIMACS CNF with exactly 3 literals per clause; anything else is
    rejected."""
    tokens: list[str] = []
    declared: tuple[int, int] | None = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        if stripped.startswith("p"):
            parts = stripped.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("malformed problem line", lineno)
            try:
                declared = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError("malformed problem line", lineno) from None
            continue
        tokens.extend(stripped.split())
    if declared is None:
        raise ParseError("missing 'p cnf' problem line")
    nvars, nclauses = declared
    clauses: list[tuple[str, str, str]] = []
    current: list[str] = []
    for tok in tokens:
        try:
            lit = int(tok)
        except ValueError:
            raise ParseError(f"bad literal {tok!r}") from None
        if lit == 0:
            if len(current) != 3:
                raise ParseError(
                    f"clause {len(clauses) + 1} has {len(current)} literals, expected 3"
                )
            clauses.append(tuple(current))
            current = []
            continue
        if not 1 <= abs(lit) <= nvars:
            raise ParseError(f"literal {lit} outside declared variable range")
        current.append(f"+{abs(lit)}" if lit > 0 else f"-{abs(lit)}")
    if current:
        raise ParseError("last clause is not terminated by 0")
    if len(clauses) != nclauses:
        raise ParseError(
            f"found {len(clauses)} clauses, header declared {nclauses}"
        )
    return Sat3Instance(
        variables=tuple(str(i) for i in range(1, nvars + 1)),
        clauses=tuple(clauses),
    )
