import json

import pytest

import reference_tables
from harmzeta.tables import TABLE_IDS, compare_with_golden, golden_text, table_data, table_text


@pytest.mark.parametrize("t", TABLE_IDS)
def test_regenerated_tables_are_byte_identical(t):
    assert compare_with_golden(t)
    assert table_text(t) == reference_tables.table_texts()[t]


@pytest.mark.parametrize("t", TABLE_IDS)
def test_canonical_serialization(t):
    text = golden_text(t)
    assert text.endswith("}\n")
    assert json.dumps(json.loads(text), indent=2, sort_keys=True) + "\n" == text


def test_shapes():
    assert len(table_data(1)["rows"]) == 11
    assert len(table_data(2)["rows"]) == 36
    assert [len(r["a"]) for r in table_data(3)["rows"]] == [4] * 9


def test_unknown_table():
    with pytest.raises(ValueError):
        table_data(4)
    with pytest.raises(ValueError):
        golden_text(0)
