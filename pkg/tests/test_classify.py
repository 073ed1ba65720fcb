"""Tests for classification rows, the genus census, claim checks, and the CLI."""

import json

import pytest

from torsym import cli
from torsym.classify import (
    CASES,
    EXPECTED_ACCEPTED,
    GENUS_FORMS,
    KNOTTED,
    ClassificationRow,
    classify_case,
    labeled_marked_edges,
    report_to_json,
    report_to_text,
    rows_to_csv,
    rows_to_json,
    rows_to_text,
    table_to_csv,
    table_to_json,
    theorem1_cells,
    theorem1_table,
    verify_claims,
    verify_tables,
)
from torsym.lattices import covolume, index
from torsym.spacegroups import make_group

# ============================================================
# marked edge labels
# ============================================================


def test_edge_labels_per_group():
    expected = {
        "P432": ["alpha"],
        "F4_132": ["alpha"],
        "I4_132": ["alpha", "beta"],
        "I432": ["beta", "gamma"],
        "P4_232": ["beta", "gamma"],
        "P622": ["beta"],
    }
    for name, labels in expected.items():
        assert sorted(labeled_marked_edges(name)) == labels


def test_case_list_covers_every_label_once():
    assert len(CASES) == 9
    for name in {g for g, _ in CASES}:
        case_labels = sorted(label for g, label in CASES if g == name)
        assert case_labels == sorted(labeled_marked_edges(name))


# ============================================================
# classification rows
# ============================================================


def test_p432_alpha_has_four_rows_up_to_index_eight():
    rows = classify_case("P432", "alpha", 8)
    assert [r.lattice_index for r in rows] == [1, 2, 4, 8]
    assert [r.lattice_label for r in rows] == ["T_1", "T_2", "T_4", "T_8"]
    assert all(r.constraint == "none" and not r.knotted for r in rows)


def test_i432_beta_accepts_only_odd_body_lattices():
    rows = classify_case("I432", "beta", 64)
    assert [(r.family.tag, r.n, r.lattice_index) for r in rows] == [
        ("CUBIC_BODY", 1, 1),
        ("CUBIC_BODY", 3, 27),
    ]
    assert all(r.constraint == "2∤n" for r in rows)
    assert rows[0].lattice_label == "T_1/2"
    assert rows[1].lattice_label == "T_27/2"


def test_p4_232_gamma_accepts_odd_primitive_and_face():
    rows = classify_case("P4_232", "gamma", 64)
    assert [(r.family.tag, r.n) for r in rows] == [
        ("CUBIC_PRIMITIVE", 1),
        ("CUBIC_FACE", 1),
        ("CUBIC_PRIMITIVE", 3),
        ("CUBIC_FACE", 3),
    ]
    assert all(r.constraint == "2∤n" for r in rows)


def test_p622_beta_forces_single_layer():
    rows = classify_case("P622", "beta", 27)
    assert all(r.m == 1 and r.constraint == "m=1" for r in rows)
    assert [(r.family.tag, r.n) for r in rows] == [
        ("HEX_PRIMITIVE", 1),
        ("HEX_ROT", 1),
        ("HEX_PRIMITIVE", 2),
        ("HEX_PRIMITIVE", 3),
        ("HEX_ROT", 2),
        ("HEX_PRIMITIVE", 4),
        ("HEX_PRIMITIVE", 5),
        ("HEX_ROT", 3),
    ]


def test_i4_132_beta_skips_multiples_of_three():
    rows = classify_case("I4_132", "beta", 512)
    ns = {(r.family.tag, r.n) for r in rows}
    assert all(n % 3 != 0 for _, n in ns)
    assert ("CUBIC_BODY", 1) in ns and ("CUBIC_BODY", 2) in ns
    assert ("CUBIC_BODY", 4) in ns and ("CUBIC_BODY", 3) not in ns


@pytest.mark.parametrize("case", CASES, ids=lambda c: f"{c[0]}-{c[1]}")
def test_row_invariants(case):
    group, edge = case
    G = make_group(group)
    for row in classify_case(group, edge, 64):
        assert row.group_order == 12 * (row.genus - 1)
        assert row.group_order == G.point_order * row.lattice_index
        assert row.lattice_index == index(row.lattice, G.T0)
        assert row.knotted == KNOTTED[case]
        forms = [f for f in GENUS_FORMS[case] if f[3] == row.family.tag]
        assert len(forms) == 1
        _, coeff, exp, _ = forms[0]
        assert row.genus - 1 == coeff * row.n**exp


def test_survivor_families_match_the_fixed_lists():
    for group, edge in CASES:
        rows = classify_case(group, edge, 64)
        found = []
        for row in rows:
            pair = (row.family.tag, row.constraint)
            if pair not in found:
                found.append(pair)
        assert found == list(EXPECTED_ACCEPTED[(group, edge)]), (group, edge)


def test_classify_rejects_bad_arguments():
    with pytest.raises(ValueError):
        classify_case("P432", "beta", 8)
    with pytest.raises(ValueError):
        classify_case("P432", "delta", 8)
    with pytest.raises(ValueError):
        classify_case("P432", "alpha", 0)


def test_row_validation():
    row = classify_case("P432", "alpha", 1)[0]
    with pytest.raises(ValueError):
        ClassificationRow(
            group=row.group,
            edge_label=row.edge_label,
            orbit_id=row.orbit_id,
            family=row.family,
            n=row.n,
            m=row.m,
            lattice=row.lattice,
            constraint=row.constraint,
            lattice_index=row.lattice_index,
            group_order=row.group_order + 12,
            genus=row.genus,
            knotted=row.knotted,
        )
    with pytest.raises(ValueError):
        ClassificationRow(
            group=row.group,
            edge_label=row.edge_label,
            orbit_id=row.orbit_id,
            family=row.family,
            n=2,
            m=None,
            lattice=row.lattice,
            constraint="2∤n",
            lattice_index=row.lattice_index,
            group_order=row.group_order,
            genus=row.genus,
            knotted=row.knotted,
        )


# ============================================================
# genus census
# ============================================================


def _entry(entries, genus):
    match = [e for e in entries if e.genus == genus]
    return match[0] if match else None


def test_genus_sixty_five_has_five_actions():
    entries = theorem1_table(65)
    entry = _entry(entries, 65)
    assert len(entry.actions) == 5
    assert entry.unknotted == 3 and entry.knotted == 2
    assert entry.group_order == 768
    assert [column for column, _ in entry.actions] == [1, 2, 3, 8, 9]


def test_small_genus_census():
    entries = theorem1_table(10)
    assert [e.genus for e in entries] == [2, 3, 4, 5, 9, 10]
    assert len(_entry(entries, 2).actions) == 1
    genus3 = _entry(entries, 3)
    assert len(genus3.actions) == 8
    assert genus3.unknotted == 3 and genus3.knotted == 5
    first = [row for column, row in genus3.actions if column == 1]
    assert first[0].group == "P432" and first[0].n == 1 and first[0].group_order == 24


def test_census_is_stable_under_extension():
    small = theorem1_table(33)
    large = [e for e in theorem1_table(65) if e.genus <= 33]
    assert small == large


def test_every_census_genus_fits_one_of_five_forms():
    def fits(v: int) -> bool:
        for coeff, exp in ((2, 3), (4, 3), (8, 3), (1, 2), (3, 2)):
            n = 1
            while coeff * n**exp <= v:
                if coeff * n**exp == v:
                    return True
                n += 1
        return False

    for entry in theorem1_table(101):
        assert fits(entry.genus - 1), entry.genus


def test_theorem1_cells_cover_the_nine_columns():
    cells = theorem1_cells()
    assert len(cells) == 20
    by_column = {}
    for c in cells:
        by_column.setdefault(c.column, []).append(c)
    assert sorted(by_column) == list(range(1, 10))
    for column, group in by_column.items():
        for c in group:
            assert c.knotted == (column > 3)
    assert [len(by_column[c]) for c in range(1, 10)] == [3, 3, 3, 1, 2, 2, 1, 3, 2]
    forms = {(c.coefficient, c.exponent) for c in cells}
    assert forms == {(2, 3), (4, 3), (8, 3), (32, 3), (1, 2), (3, 2)}
    assert {c.form for c in cells} == {"2n^3", "4n^3", "8n^3", "4(2n)^3", "n^2", "3n^2"}
    four_doubled = [c for c in cells if c.form == "4(2n)^3"]
    assert len(four_doubled) == 1 and four_doubled[0].genus_minus_one(1) == 32


def test_census_rejects_tiny_bound():
    with pytest.raises(ValueError):
        theorem1_table(1)


# ============================================================
# claim verification
# ============================================================


def test_verify_claims_passes():
    report = verify_claims()
    assert report.ok
    assert len(report.checks) == 9
    assert [(c.group, c.edge_label) for c in report.checks] == list(CASES)
    for c in report.checks:
        assert c.connected
        assert c.computed_image == c.expected_image
    deep = [c for c in report.checks if (c.group, c.edge_label) == ("I4_132", "beta")]
    assert covolume(deep[0].computed_image) == 108
    hexcase = [c for c in report.checks if c.group == "P622"]
    assert hexcase[0].computed_image.rank == 2


def test_verify_tables_passes_at_moderate_index():
    report = verify_tables(48)
    assert report.ok
    assert report.table_errors == ()


def test_report_rendering():
    report = verify_claims()
    text = report_to_text(report)
    assert text.endswith("PASS")
    assert text.count("[ok]") == 9
    data = report_to_json(report)
    assert data["ok"] is True
    assert len(data["checks"]) == 9


# ============================================================
# emitters
# ============================================================


def test_rows_emitters_round_trip_basic_fields():
    rows = classify_case("I432", "beta", 64)
    data = rows_to_json(rows)
    assert data["schema_version"] == 1
    assert [r["genus"] for r in data["rows"]] == [3, 55]
    assert data["rows"][0]["lattice"]["scale"] == "1/2"
    csv = rows_to_csv(rows).splitlines()
    assert csv[0].startswith("group,edge,family")
    assert csv[1] == "I432,beta,CUBIC_BODY,1,,2∤n,1,24,3,1"
    text = rows_to_text(rows)
    assert "T_27/2" in text
    json.dumps(data)


def test_table_emitters():
    entries = theorem1_table(9)
    data = table_to_json(entries)
    assert data["genera"][0]["genus"] == 2
    csv = table_to_csv(entries).splitlines()
    assert csv[0].startswith("genus,group_order,column")
    assert len(csv) == 1 + sum(len(e.actions) for e in entries)
    json.dumps(data)


# ============================================================
# command line
# ============================================================


def test_cli_groups_lists_six(capsys):
    assert cli.main(["groups"]) == 0
    out = capsys.readouterr().out
    assert out.count("point_order") == 6


def test_cli_groups_json_has_generators(capsys):
    assert cli.main(["groups", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["groups"]) == 6
    assert all(g["generators"] for g in data["groups"])


def test_cli_classify_matches_library(capsys):
    assert cli.main(["classify", "P432", "alpha", "--max-index", "8"]) == 0
    out = capsys.readouterr().out
    assert out.rstrip("\n") == rows_to_text(classify_case("P432", "alpha", 8))


def test_cli_table_json(capsys):
    assert cli.main(["table", "--max-genus", "5", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [g["genus"] for g in data["genera"]] == [2, 3, 4, 5]


def test_cli_verify_exits_zero(capsys):
    assert cli.main(["verify"]) == 0
    assert capsys.readouterr().out.strip().endswith("PASS")


def test_cli_edges_json(capsys):
    assert cli.main(["edges", "I4_132", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [e["label"] for e in data["edges"]] == ["alpha", "beta"]


def test_cli_singular_graph_lists_every_segment(capsys):
    assert cli.main(["singular-graph", "P432"]) == 0
    out = capsys.readouterr().out
    assert len(out.splitlines()) == 1 + 56


def test_cli_rejects_unknown_group():
    with pytest.raises(SystemExit) as exc:
        cli.main(["classify", "NOSUCH", "alpha"])
    assert exc.value.code == 2


def test_cli_reports_usage_errors_with_exit_two(capsys):
    assert cli.main(["classify", "P432", "beta"]) == 2
    assert "no edge beta" in capsys.readouterr().err
