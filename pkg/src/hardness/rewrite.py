"""
Formula rewrites: NAESAT (3-clauses) to the restricted occurrence form, and
redundancy removal ahead of the graph construction.
"""

from __future__ import annotations

import logging
from collections import Counter

from src.hardness.cnf import Clause, CnfInstance
from src.utils.errors import ValidationError

logger = logging.getLogger(__name__)


def _discard_single_occurrences(clauses: list[Clause]) -> list[Clause]:
    """Drop clauses containing a variable that occurs once, until none is left."""
    while True:
        counts = Counter(abs(lit) for clause in clauses for lit in clause)
        kept = [c for c in clauses if all(counts[abs(lit)] > 1 for lit in c)]
        if len(kept) == len(clauses):
            return kept
        logger.debug("discarded %d clauses with single-occurrence variables", len(clauses) - len(kept))
        clauses = kept


def from_naesat(phi3: CnfInstance) -> CnfInstance:
    """
    Rewrite a 3-clause NAESAT formula so every variable occurs once in a 3-clause and
    twice, with opposite polarities, in 2-clauses.

    Each of the k >= 2 occurrences of x_i gets a fresh variable x_i1..x_ik, tied
    together by the cycle (-x_i1 | x_i2), ..., (-x_ik | x_i1). Fresh ids follow
    (original variable, occurrence order).

    Raises:
        ValidationError: If a clause does not have exactly three literals
    """
    for idx, clause in enumerate(phi3.clauses, start=1):
        if len(clause) != 3:
            raise ValidationError(f"clause {idx} has {len(clause)} literals; expected 3")

    clauses = _discard_single_occurrences(list(phi3.clauses))

    # fresh ids in (variable, occurrence) order
    positions: dict[int, list[tuple[int, int]]] = {}
    for c_idx, clause in enumerate(clauses):
        for l_idx, lit in enumerate(clause):
            positions.setdefault(abs(lit), []).append((c_idx, l_idx))

    rewritten = [list(clause) for clause in clauses]
    cycles: list[Clause] = []
    next_id = 1
    for var in sorted(positions):
        copies = []
        for c_idx, l_idx in positions[var]:
            lit = rewritten[c_idx][l_idx]
            rewritten[c_idx][l_idx] = next_id if lit > 0 else -next_id
            copies.append(next_id)
            next_id += 1
        for k, copy in enumerate(copies):
            cycles.append((-copy, copies[(k + 1) % len(copies)]))

    return CnfInstance(
        num_vars=next_id - 1,
        clauses=tuple(tuple(c) for c in rewritten) + tuple(cycles),
    )


def _negated(clause: Clause) -> frozenset[int]:
    return frozenset(-lit for lit in clause)


def _one_pass(clauses: list[Clause]) -> list[Clause]:
    # a literal together with its negation
    kept = [c for c in clauses if not any(-lit in c for lit in c)]

    # exact duplicates (as literal sets), keeping the first
    seen: set[frozenset[int]] = set()
    unique = []
    for clause in kept:
        key = frozenset(clause)
        if key not in seen:
            seen.add(key)
            unique.append(clause)
    kept = unique

    # a 2-clause repeated with both polarities reversed: drop the later one
    twos_seen: set[frozenset[int]] = set()
    out = []
    for clause in kept:
        if len(clause) == 2:
            if _negated(clause) in twos_seen:
                continue
            twos_seen.add(frozenset(clause))
        out.append(clause)
    kept = out

    # a 3-clause holding both literals of a 2-clause, same or reversed polarity
    twos = [frozenset(c) for c in kept if len(c) == 2]
    reversed_twos = [_negated(c) for c in kept if len(c) == 2]

    def covered(clause: Clause) -> bool:
        lits = frozenset(clause)
        return any(t <= lits for t in twos) or any(t <= lits for t in reversed_twos)

    return [c for c in kept if len(c) != 3 or not covered(c)]


def remove_redundancies(phi: CnfInstance) -> CnfInstance:
    """
    Drop redundant clauses until none remain:

    - a 3-clause containing both literals of some 2-clause
    - a 3-clause containing both literals of some 2-clause with polarity reversed
    - a 2-clause whose literals reversed form an earlier 2-clause
    - any clause holding a literal and its negation
    - exact duplicate clauses

    NAE-satisfiability is unchanged by each rule.
    """
    clauses = list(phi.clauses)
    while True:
        reduced = _one_pass(clauses)
        if reduced == clauses:
            break
        logger.debug("redundancy pass removed %d clauses", len(clauses) - len(reduced))
        clauses = reduced
    return CnfInstance(num_vars=phi.num_vars, clauses=tuple(clauses))
