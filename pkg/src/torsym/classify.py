"""Classification tables: accepted covering lattices, genus census, claim checks."""

from dataclasses import dataclass
from functools import lru_cache

from .errors import UnmatchedLattice
from .lattices import SubgroupHNF, covolume, hnf
from .periodic_graphs import (
    PeriodicGraph,
    SingularEdge,
    cycle_image_lattice,
    edge_orbit_graph,
    lift_connected,
    lift_connected_bruteforce,
    marked_edges,
)
from .spacegroups import canonical_group_name, make_group
from .sublattices import LatticeFamily, instantiate, normal_translation_subgroups

# ============================================================
# frozen case tables
# ============================================================

# the nine (group, marked edge) cases, in fixed report order
CASES: tuple[tuple[str, str], ...] = (
    ("P432", "alpha"),
    ("F4_132", "alpha"),
    ("I4_132", "alpha"),
    ("I432", "beta"),
    ("P4_232", "beta"),
    ("P4_232", "gamma"),
    ("I432", "gamma"),
    ("I4_132", "beta"),
    ("P622", "beta"),
)

EDGE_LABELS = ("alpha", "beta", "gamma")


def _expected_images() -> dict[tuple[str, str], SubgroupHNF]:
    return {
        ("P432", "alpha"): instantiate("CUBIC_PRIMITIVE", 1),
        ("F4_132", "alpha"): instantiate("CUBIC_FACE", 1),
        ("I4_132", "alpha"): instantiate("CUBIC_BODY", 2),
        ("I432", "beta"): instantiate("CUBIC_PRIMITIVE", 1),
        ("P4_232", "beta"): instantiate("CUBIC_FACE", 1),
        ("P4_232", "gamma"): instantiate("CUBIC_BODY", 2),
        ("I432", "gamma"): instantiate("CUBIC_BODY", 2),
        ("I4_132", "beta"): instantiate("CUBIC_BODY", 6),
        ("P622", "beta"): hnf([(1, 0, 0), (0, 1, 0)]),
    }


# an alpha edge bounds a product region on both sides; beta and gamma do not
KNOTTED: dict[tuple[str, str], bool] = {
    ("P432", "alpha"): False,
    ("F4_132", "alpha"): False,
    ("I4_132", "alpha"): False,
    ("I432", "beta"): True,
    ("P4_232", "beta"): True,
    ("P4_232", "gamma"): True,
    ("I432", "gamma"): True,
    ("I4_132", "beta"): True,
    ("P622", "beta"): True,
}

# per group: (family tag, raw-parameter multiplier) in report order; an
# instance with raw parameter u corresponds to the reduced parameter n = u/mult
FAMILY_MULTIPLIERS: dict[str, tuple[tuple[str, int], ...]] = {
    "P432": (("CUBIC_PRIMITIVE", 1), ("CUBIC_FACE", 1), ("CUBIC_BODY", 2)),
    "F4_132": (("CUBIC_FACE", 1), ("CUBIC_PRIMITIVE", 2), ("CUBIC_BODY", 4)),
    "I4_132": (("CUBIC_BODY", 2), ("CUBIC_PRIMITIVE", 2), ("CUBIC_FACE", 2)),
    "I432": (("CUBIC_BODY", 1), ("CUBIC_PRIMITIVE", 1), ("CUBIC_FACE", 1)),
    "P4_232": (("CUBIC_PRIMITIVE", 1), ("CUBIC_FACE", 1), ("CUBIC_BODY", 2)),
    "P622": (("HEX_PRIMITIVE", 1), ("HEX_ROT", 1)),
}

CONSTRAINTS = ("none", "2∤n", "3∤n", "m=1")

# expected survivors per case: (family tag, constraint) in report order
EXPECTED_ACCEPTED: dict[tuple[str, str], tuple[tuple[str, str], ...]] = {
    ("P432", "alpha"): (
        ("CUBIC_PRIMITIVE", "none"),
        ("CUBIC_FACE", "none"),
        ("CUBIC_BODY", "none"),
    ),
    ("F4_132", "alpha"): (
        ("CUBIC_FACE", "none"),
        ("CUBIC_PRIMITIVE", "none"),
        ("CUBIC_BODY", "none"),
    ),
    ("I4_132", "alpha"): (
        ("CUBIC_BODY", "none"),
        ("CUBIC_PRIMITIVE", "none"),
        ("CUBIC_FACE", "none"),
    ),
    ("I432", "beta"): (("CUBIC_BODY", "2∤n"),),
    ("P4_232", "beta"): (("CUBIC_PRIMITIVE", "2∤n"), ("CUBIC_BODY", "2∤n")),
    ("P4_232", "gamma"): (("CUBIC_PRIMITIVE", "2∤n"), ("CUBIC_FACE", "2∤n")),
    ("I432", "gamma"): (("CUBIC_BODY", "2∤n"),),
    ("I4_132", "beta"): (
        ("CUBIC_BODY", "3∤n"),
        ("CUBIC_PRIMITIVE", "3∤n"),
        ("CUBIC_FACE", "3∤n"),
    ),
    ("P622", "beta"): (("HEX_PRIMITIVE", "m=1"), ("HEX_ROT", "m=1")),
}

# genus - 1 as coefficient * n^exponent per accepted family, in report order
GENUS_FORMS: dict[tuple[str, str], tuple[tuple[str, int, int, str], ...]] = {
    ("P432", "alpha"): (
        ("2n^3", 2, 3, "CUBIC_PRIMITIVE"),
        ("4n^3", 4, 3, "CUBIC_FACE"),
        ("8n^3", 8, 3, "CUBIC_BODY"),
    ),
    ("F4_132", "alpha"): (
        ("2n^3", 2, 3, "CUBIC_FACE"),
        ("8n^3", 8, 3, "CUBIC_PRIMITIVE"),
        ("4(2n)^3", 32, 3, "CUBIC_BODY"),
    ),
    ("I4_132", "alpha"): (
        ("2n^3", 2, 3, "CUBIC_BODY"),
        ("4n^3", 4, 3, "CUBIC_PRIMITIVE"),
        ("8n^3", 8, 3, "CUBIC_FACE"),
    ),
    ("I432", "beta"): (("2n^3", 2, 3, "CUBIC_BODY"),),
    ("P4_232", "beta"): (
        ("2n^3", 2, 3, "CUBIC_PRIMITIVE"),
        ("8n^3", 8, 3, "CUBIC_BODY"),
    ),
    ("P4_232", "gamma"): (
        ("2n^3", 2, 3, "CUBIC_PRIMITIVE"),
        ("4n^3", 4, 3, "CUBIC_FACE"),
    ),
    ("I432", "gamma"): (("2n^3", 2, 3, "CUBIC_BODY"),),
    ("I4_132", "beta"): (
        ("2n^3", 2, 3, "CUBIC_BODY"),
        ("4n^3", 4, 3, "CUBIC_PRIMITIVE"),
        ("8n^3", 8, 3, "CUBIC_FACE"),
    ),
    ("P622", "beta"): (("n^2", 1, 2, "HEX_PRIMITIVE"), ("3n^2", 3, 2, "HEX_ROT")),
}

GENUS_FORM_NAMES = ("2n^3", "4n^3", "8n^3", "n^2", "3n^2", "4(2n)^3")


# ============================================================
# domain types
# ============================================================


def _constraint_holds(constraint: str, n: int, m: int | None) -> bool:
    if constraint == "none":
        return True
    if constraint == "2∤n":
        return n % 2 == 1
    if constraint == "3∤n":
        return n % 3 != 0
    if constraint == "m=1":
        return m == 1
    raise ValueError(f"unknown constraint {constraint!r}")


@dataclass(frozen=True)
class ClassificationRow:
    """One accepted covering lattice for a marked edge, with derived invariants."""

    group: str
    edge_label: str
    orbit_id: int
    family: LatticeFamily
    n: int
    m: int | None
    lattice: SubgroupHNF
    constraint: str
    lattice_index: int
    group_order: int
    genus: int
    knotted: bool

    def __post_init__(self) -> None:
        if self.edge_label not in EDGE_LABELS:
            raise ValueError(f"unknown edge label {self.edge_label!r}")
        if self.constraint not in CONSTRAINTS:
            raise ValueError(f"unknown constraint {self.constraint!r}")
        if self.genus <= 1:
            raise ValueError("genus must exceed one")
        if self.group_order != 12 * (self.genus - 1):
            raise ValueError("group order must equal twelve times genus minus one")
        if not _constraint_holds(self.constraint, self.n, self.m):
            raise ValueError("row parameters violate the fitted constraint")

    @property
    def lattice_label(self) -> str:
        """Volume-subscript name of the lattice, such as T_4 or T_1/2 or Tw_3."""
        v = covolume(self.lattice)
        prefix = "Tw" if self.family.tag.startswith("HEX") else "T"
        sub = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return f"{prefix}_{sub}"

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "edge": self.edge_label,
            "orbit_id": self.orbit_id,
            "family": self.family.to_json(),
            "n": self.n,
            "m": self.m,
            "lattice": self.lattice.to_json(),
            "lattice_label": self.lattice_label,
            "constraint": self.constraint,
            "lattice_index": self.lattice_index,
            "group_order": self.group_order,
            "genus": self.genus,
            "knotted": self.knotted,
        }


@dataclass(frozen=True)
class Theorem1Cell:
    """One symbolic genus form in the nine-column census."""

    column: int
    group: str
    edge_label: str
    form: str
    coefficient: int
    exponent: int
    constraint: str
    knotted: bool

    def genus_minus_one(self, n: int) -> int:
        return self.coefficient * n**self.exponent


@dataclass(frozen=True)
class GenusEntry:
    """All maximal-order actions at one genus."""

    genus: int
    actions: tuple[tuple[int, "ClassificationRow"], ...]  # (column, row)
    unknotted: int
    knotted: int

    @property
    def group_order(self) -> int:
        return 12 * (self.genus - 1)


@dataclass(frozen=True)
class ClaimCheck:
    """Connectivity and cycle-image verdict for one marked edge."""

    group: str
    edge_label: str
    connected: bool
    computed_image: SubgroupHNF
    expected_image: SubgroupHNF

    @property
    def ok(self) -> bool:
        return self.connected and self.computed_image == self.expected_image


@dataclass(frozen=True)
class VerificationReport:
    """Per-case claim checks plus optional survivor-table comparison."""

    checks: tuple[ClaimCheck, ...]
    table_errors: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks) and not self.table_errors


# ============================================================
# labelled marked edges
# ============================================================


@lru_cache(maxsize=None)
def labeled_marked_edges(name: str) -> dict[str, SingularEdge]:
    """The group's marked edge orbits keyed by label, via cycle-image matching."""
    name = canonical_group_name(name)
    G = make_group(name)
    images = _expected_images()
    wanted = {label: images[(g, label)] for g, label in images if g == name}
    out: dict[str, SingularEdge] = {}
    for e in marked_edges(G):
        img = cycle_image_lattice(edge_orbit_graph(G, e))
        hits = [label for label, lat in wanted.items() if lat == img]
        if len(hits) != 1:
            raise UnmatchedLattice(
                f"{name}: cycle image of marked orbit {e.orbit_id} matches "
                f"{len(hits)} labels"
            )
        if hits[0] in out:
            raise UnmatchedLattice(f"{name}: duplicate marked edge label {hits[0]}")
        out[hits[0]] = e
    if set(out) != set(wanted):
        raise UnmatchedLattice(f"{name}: marked edges carry labels {sorted(out)}")
    return out


@lru_cache(maxsize=None)
def _case_graph(name: str, label: str) -> PeriodicGraph:
    G = make_group(name)
    return edge_orbit_graph(G, labeled_marked_edges(name)[label])


# ============================================================
# classification
# ============================================================


def _reduced_parameters(group: str, fam: LatticeFamily) -> tuple[int, int | None]:
    for tag, mult in FAMILY_MULTIPLIERS[group]:
        if tag == fam.tag:
            if fam.n % mult:
                raise UnmatchedLattice(
                    f"{group}: family {fam.tag} parameter {fam.n} is not a "
                    f"multiple of {mult}"
                )
            return fam.n // mult, fam.m
    raise UnmatchedLattice(f"{group}: unexpected family {fam.tag}")


def _consistent_constraints(
    accepted: list[tuple[int, int | None]], rejected: list[tuple[int, int | None]]
) -> list[str | None]:
    """Listed predicates separating accepted from rejected; None marks full rejection."""
    out: list[str | None] = []
    for constraint in CONSTRAINTS:
        if all(_constraint_holds(constraint, n, m) for n, m in accepted) and not any(
            _constraint_holds(constraint, n, m) for n, m in rejected
        ):
            out.append(constraint)
    if not accepted:
        out.append(None)
    return out


def _probe_constraint(
    g: PeriodicGraph, group: str, tag: str, mult: int, constraint: str | None
) -> None:
    """Re-verify a fitted constraint on one representative per residue class.

    Lift connectivity of a family instance depends on its reduced parameters
    only through n mod 6 (the join with a fixed image lattice is determined by
    gcds whose prime support is {2, 3}) and, for the planar hexagonal image,
    through whether m = 1.  Probing n = 1..6 and m = 1..3 therefore covers
    every residue class; constraint None means the family is fully rejected.
    """
    hexagonal = tag.startswith("HEX")
    for n in range(1, 7):
        for m in (1, 2, 3) if hexagonal else (None,):
            expected = False if constraint is None else _constraint_holds(constraint, n, m)
            L = instantiate(tag, mult * n, m)
            if lift_connected(g, L) != expected:
                raise UnmatchedLattice(
                    f"{group} {tag}: constraint {constraint!r} fails at n={n}, m={m}"
                )


def classify_case(group: str, edge: str, max_index: int) -> list[ClassificationRow]:
    """All accepted covering lattices for one marked edge up to a lattice index."""
    group = canonical_group_name(group)
    if edge not in EDGE_LABELS:
        raise ValueError(f"unknown edge label {edge!r}")
    available = labeled_marked_edges(group)
    if edge not in available:
        raise ValueError(f"{group} has no edge {edge}; choose from {sorted(available)}")
    if max_index < 1:
        raise ValueError("max_index must be a positive integer")
    G = make_group(group)
    g = _case_graph(group, edge)
    order = [tag for tag, _ in FAMILY_MULTIPLIERS[group]]
    mult_of = dict(FAMILY_MULTIPLIERS[group])

    survivors: dict[str, list[tuple[int, int | None, LatticeFamily, SubgroupHNF, int]]] = {}
    rejected: dict[str, list[tuple[int, int | None]]] = {}
    for L, fam, pi1 in normal_translation_subgroups(G, max_index):
        n, m = _reduced_parameters(group, fam)
        if lift_connected(g, L):
            survivors.setdefault(fam.tag, []).append((n, m, fam, L, pi1))
        else:
            rejected.setdefault(fam.tag, []).append((n, m))

    constraints: dict[str, str] = {}
    for tag in order:
        if tag not in survivors and tag not in rejected:
            continue
        accepted_nm = [(n, m) for n, m, _, _, _ in survivors.get(tag, [])]
        for candidate in _consistent_constraints(accepted_nm, rejected.get(tag, [])):
            try:
                _probe_constraint(g, group, tag, mult_of[tag], candidate)
            except UnmatchedLattice:
                continue
            if candidate is not None:
                constraints[tag] = candidate
            break
        else:
            raise UnmatchedLattice(
                f"{group} {edge}: no divisibility predicate explains the "
                f"accepted {tag} parameters"
            )

    rows = []
    for tag in order:
        for n, m, fam, L, pi1 in survivors.get(tag, []):
            lattice_index = pi1 // G.point_order
            genus = pi1 // 12 + 1
            rows.append(
                ClassificationRow(
                    group=group,
                    edge_label=edge,
                    orbit_id=available[edge].orbit_id,
                    family=fam,
                    n=n,
                    m=m,
                    lattice=L,
                    constraint=constraints[tag],
                    lattice_index=lattice_index,
                    group_order=pi1,
                    genus=genus,
                    knotted=KNOTTED[(group, edge)],
                )
            )
    rows.sort(key=lambda r: (r.lattice_index, order.index(r.family.tag), r.n))
    return rows


# ============================================================
# the genus census
# ============================================================


def theorem1_cells() -> tuple[Theorem1Cell, ...]:
    """The symbolic nine-column census of genus forms."""
    cells = []
    for column, case in enumerate(CASES, start=1):
        expected = dict(EXPECTED_ACCEPTED[case])
        for form, coeff, exp, tag in GENUS_FORMS[case]:
            cells.append(
                Theorem1Cell(
                    column=column,
                    group=case[0],
                    edge_label=case[1],
                    form=form,
                    coefficient=coeff,
                    exponent=exp,
                    constraint=expected[tag],
                    knotted=KNOTTED[case],
                )
            )
    return tuple(cells)


def theorem1_table(max_genus: int) -> list[GenusEntry]:
    """Every maximal-order action of genus at most max_genus, grouped by genus."""
    if max_genus < 2:
        raise ValueError("max_genus must be at least 2")
    by_genus: dict[int, list[tuple[int, ClassificationRow]]] = {}
    for column, (group, edge) in enumerate(CASES, start=1):
        point_order = make_group(group).point_order
        bound = 12 * (max_genus - 1) // point_order
        if bound < 1:
            continue
        for row in classify_case(group, edge, bound):
            if row.genus <= max_genus:
                by_genus.setdefault(row.genus, []).append((column, row))
    entries = []
    for genus in sorted(by_genus):
        actions = tuple(sorted(by_genus[genus], key=lambda cr: cr[0]))
        knotted = sum(1 for _, row in actions if row.knotted)
        entries.append(
            GenusEntry(
                genus=genus,
                actions=actions,
                unknotted=len(actions) - knotted,
                knotted=knotted,
            )
        )
    return entries


# ============================================================
# claim verification
# ============================================================


def verify_claims() -> VerificationReport:
    """Check connectivity and cycle image of all nine marked edge graphs."""
    images = _expected_images()
    checks = []
    for group, label in CASES:
        G = make_group(group)
        e = labeled_marked_edges(group)[label]
        raw = edge_orbit_graph(G, e, suppress=False)
        connected = lift_connected_bruteforce(raw, G.T0)
        computed = cycle_image_lattice(raw) if connected else hnf([])
        checks.append(
            ClaimCheck(
                group=group,
                edge_label=label,
                connected=connected,
                computed_image=computed,
                expected_image=images[(group, label)],
            )
        )
    return VerificationReport(checks=tuple(checks))


def verify_tables(max_index: int) -> VerificationReport:
    """Claim checks plus survivor families and constraints against the fixed lists."""
    report = verify_claims()
    errors: list[str] = []
    for group, edge in CASES:
        rows = classify_case(group, edge, max_index)
        found = []
        for row in rows:
            pair = (row.family.tag, row.constraint)
            if pair not in found:
                found.append(pair)
        expected = list(EXPECTED_ACCEPTED[(group, edge)])
        if found != expected:
            errors.append(
                f"{group} {edge}: survivors {found} do not match {expected}"
            )
        for row in rows:
            forms = [
                (coeff, exp)
                for _, coeff, exp, tag in GENUS_FORMS[(group, edge)]
                if tag == row.family.tag
            ]
            if len(forms) != 1 or row.genus - 1 != forms[0][0] * row.n ** forms[0][1]:
                errors.append(
                    f"{group} {edge}: genus {row.genus} does not fit the census "
                    f"form for {row.family.tag} at n={row.n}"
                )
    return VerificationReport(checks=report.checks, table_errors=tuple(errors))


# ============================================================
# emitters
# ============================================================

SCHEMA_VERSION = 1


def _fmt_params(row: ClassificationRow) -> str:
    return f"n={row.n}" if row.m is None else f"n={row.n},m={row.m}"


def rows_to_text(rows: list[ClassificationRow]) -> str:
    header = ("lattice", "family", "params", "constraint", "index", "order", "genus", "knotted")
    body = [
        (
            row.lattice_label,
            row.family.tag,
            _fmt_params(row),
            row.constraint,
            str(row.lattice_index),
            str(row.group_order),
            str(row.genus),
            "yes" if row.knotted else "no",
        )
        for row in rows
    ]
    widths = [max(len(line[i]) for line in [header, *body]) for i in range(len(header))]
    out = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for line in body:
        out.append("  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip())
    return "\n".join(out)


def rows_to_json(rows: list[ClassificationRow]) -> dict:
    return {"schema_version": SCHEMA_VERSION, "rows": [row.to_json() for row in rows]}


def rows_to_csv(rows: list[ClassificationRow]) -> str:
    out = ["group,edge,family,n,m,constraint,lattice_index,group_order,genus,knotted"]
    for row in rows:
        out.append(
            ",".join(
                [
                    row.group,
                    row.edge_label,
                    row.family.tag,
                    str(row.n),
                    "" if row.m is None else str(row.m),
                    row.constraint,
                    str(row.lattice_index),
                    str(row.group_order),
                    str(row.genus),
                    str(int(row.knotted)),
                ]
            )
        )
    return "\n".join(out)


def table_to_text(entries: list[GenusEntry]) -> str:
    out = []
    for entry in entries:
        out.append(
            f"genus {entry.genus}  order {entry.group_order}  "
            f"actions {len(entry.actions)} ({entry.unknotted} unknotted, "
            f"{entry.knotted} knotted)"
        )
        for column, row in entry.actions:
            out.append(
                f"  column {column}: {row.group} {row.edge_label} "
                f"{row.lattice_label} ({_fmt_params(row)})"
            )
    return "\n".join(out)


def table_to_json(entries: list[GenusEntry]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "genera": [
            {
                "genus": entry.genus,
                "group_order": entry.group_order,
                "unknotted": entry.unknotted,
                "knotted": entry.knotted,
                "actions": [
                    {"column": column, **row.to_json()} for column, row in entry.actions
                ],
            }
            for entry in entries
        ],
    }


def table_to_csv(entries: list[GenusEntry]) -> str:
    out = ["genus,group_order,column,group,edge,family,n,m,lattice_index,knotted"]
    for entry in entries:
        for column, row in entry.actions:
            out.append(
                ",".join(
                    [
                        str(entry.genus),
                        str(entry.group_order),
                        str(column),
                        row.group,
                        row.edge_label,
                        row.family.tag,
                        str(row.n),
                        "" if row.m is None else str(row.m),
                        str(row.lattice_index),
                        str(int(row.knotted)),
                    ]
                )
            )
    return "\n".join(out)


def report_to_text(report: VerificationReport) -> str:
    out = []
    for c in report.checks:
        verdict = "ok" if c.ok else "FAIL"
        out.append(
            f"{c.group} {c.edge_label}: connected={str(c.connected).lower()} "
            f"image={'match' if c.computed_image == c.expected_image else 'MISMATCH'} "
            f"[{verdict}]"
        )
    for err in report.table_errors:
        out.append(f"table: {err} [FAIL]")
    out.append("PASS" if report.ok else "FAIL")
    return "\n".join(out)


def report_to_json(report: VerificationReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "checks": [
            {
                "group": c.group,
                "edge": c.edge_label,
                "connected": c.connected,
                "computed_image": c.computed_image.to_json(),
                "expected_image": c.expected_image.to_json(),
                "ok": c.ok,
            }
            for c in report.checks
        ],
        "table_errors": list(report.table_errors),
        "ok": report.ok,
    }
