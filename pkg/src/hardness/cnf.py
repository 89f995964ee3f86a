"""
CNF instances for not-all-equal satisfiability, with DIMACS I/O.

A literal is a signed variable id: +i for x_i, -i for its negation, 1 <= i <= n.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from pathlib import Path

from src.utils.errors import CnfParseError, ValidationError

Clause = tuple[int, ...]


@dataclass(frozen=True)
class CnfInstance:
    """
    Clauses of two or three literals over variables 1..num_vars.

    Attributes:
        num_vars: n
        clauses: Literal tuples in input order
    """

    num_vars: int
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self):
        if self.num_vars < 0:
            raise ValidationError(f"variable count must be nonnegative, got {self.num_vars}")
        for idx, clause in enumerate(self.clauses, start=1):
            if len(clause) not in (2, 3):
                raise ValidationError(f"clause {idx} has {len(clause)} literals; expected 2 or 3")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValidationError(
                        f"clause {idx} references variable {abs(lit)} outside 1..{self.num_vars}"
                    )

    @classmethod
    def of(cls, num_vars: int, clauses: Iterable[Iterable[int]]) -> CnfInstance:
        return cls(num_vars=num_vars, clauses=tuple(tuple(int(l) for l in c) for c in clauses))

    @property
    def three_clauses(self) -> list[Clause]:
        return [c for c in self.clauses if len(c) == 3]

    @property
    def two_clauses(self) -> list[Clause]:
        return [c for c in self.clauses if len(c) == 2]

    @property
    def m(self) -> int:
        """Number of 3-clauses."""
        return len(self.three_clauses)

    @property
    def m_prime(self) -> int:
        """Number of 2-clauses."""
        return len(self.two_clauses)

    def occurrences(self) -> dict[int, list[tuple[int, int]]]:
        """variable -> [(clause index, literal), ...] in clause order."""
        occ: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, self.num_vars + 1)}
        for idx, clause in enumerate(self.clauses):
            for lit in clause:
                occ[abs(lit)].append((idx, lit))
        return occ


@dataclass
class NaeStarReport:
    """Result of checking the occurrence pattern, with one message per violating variable."""

    valid: bool
    violations: dict[int, str] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.valid

    def summary(self) -> str:
        if self.valid:
            return "valid"
        return "; ".join(f"x{v}: {msg}" for v, msg in sorted(self.violations.items()))


def validate_naestar(phi: CnfInstance) -> NaeStarReport:
    """
    Every variable must occur exactly three times: once in a 3-clause and twice, with
    opposite polarities, in 2-clauses.
    """
    violations: dict[int, str] = {}
    for var, occ in phi.occurrences().items():
        in_three = [lit for idx, lit in occ if len(phi.clauses[idx]) == 3]
        in_two = [lit for idx, lit in occ if len(phi.clauses[idx]) == 2]
        if len(occ) != 3:
            violations[var] = f"appears {len(occ)} times, expected 3"
        elif len(in_three) != 1:
            violations[var] = f"appears {len(in_three)} times in 3-clauses, expected 1"
        elif len(in_two) != 2 or in_two[0] != -in_two[1]:
            violations[var] = "2-clause occurrences must have opposite polarities"
    return NaeStarReport(valid=not violations, violations=violations)


def literal_value(lit: int, assignment: Sequence[bool]) -> bool:
    value = bool(assignment[abs(lit) - 1])
    return value if lit > 0 else not value


def nae_satisfies(phi: CnfInstance, assignment: Sequence[bool]) -> bool:
    """True iff every clause has at least one true and one false literal."""
    if len(assignment) != phi.num_vars:
        raise ValidationError(
            f"assignment has {len(assignment)} values for {phi.num_vars} variables"
        )
    for clause in phi.clauses:
        values = {literal_value(lit, assignment) for lit in clause}
        if len(values) < 2:
            return False
    return True


def parse_dimacs(text: str) -> CnfInstance:
    """
    Parse DIMACS CNF: comment lines start with 'c', one "p cnf <vars> <clauses>" header,
    clauses are 0-terminated literal lists that may span lines. A '%' line ends input.

    Raises:
        CnfParseError: On syntax errors, a missing header, a clause count mismatch
            or a clause that is not 2 or 3 literals long
    """
    num_vars: int | None = None
    declared = 0
    clauses: list[tuple[Clause, int]] = []
    pending: list[int] = []
    pending_line = 0

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if num_vars is not None:
                raise CnfParseError("duplicate problem line", line_number)
            if len(parts) != 4 or parts[1] != "cnf":
                raise CnfParseError(f"invalid problem line {line!r}", line_number)
            try:
                num_vars, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise CnfParseError(f"invalid problem line {line!r}", line_number)
            if num_vars < 0 or declared < 0:
                raise CnfParseError("negative counts in problem line", line_number)
            continue
        if num_vars is None:
            raise CnfParseError("clause before the 'p cnf' problem line", line_number)
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise CnfParseError(f"invalid literal {token!r}", line_number)
            if lit == 0:
                clauses.append((tuple(pending), pending_line or line_number))
                pending, pending_line = [], 0
                continue
            if abs(lit) > num_vars:
                raise CnfParseError(f"literal {lit} outside 1..{num_vars}", line_number)
            if not pending:
                pending_line = line_number
            pending.append(lit)

    if num_vars is None:
        raise CnfParseError("missing 'p cnf' problem line")
    if pending:
        raise CnfParseError("last clause is not terminated by 0", pending_line)
    if len(clauses) != declared:
        raise CnfParseError(f"problem line declares {declared} clauses, found {len(clauses)}")
    for clause, line_number in clauses:
        if len(clause) not in (2, 3):
            raise CnfParseError(f"clause has {len(clause)} literals; expected 2 or 3", line_number)
    return CnfInstance(num_vars=num_vars, clauses=tuple(c for c, _ in clauses))


def dump_dimacs(phi: CnfInstance, comment: str | None = None) -> str:
    lines = [f"c {comment}"] if comment else []
    lines.append(f"p cnf {phi.num_vars} {len(phi.clauses)}")
    lines.extend(" ".join(str(lit) for lit in clause) + " 0" for clause in phi.clauses)
    return "\n".join(lines) + "\n"


def read_dimacs(path: str | Path) -> CnfInstance:
    return parse_dimacs(Path(path).read_text(encoding="utf-8"))
