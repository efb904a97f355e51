import json

import pytest

from arboreal.errors import DegeneratePresentationError, InputError
from arboreal.formats import (
    load_presentation,
    presentation_from_dict,
    presentation_to_dict,
    save_presentation,
)
from arboreal.graphs import INFINITY
from arboreal.words import format_word


FIXTURE_NAMES = [
    "p4_racg.json",
    "p3_raag.json",
    "fig2_raag.json",
    "c5_raag.json",
    "o2_racg.json",
    "z2_z3.json",
    "z2_z5.json",
]


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_round_trip(fixtures_dir, tmp_path, name):
    pres, words = load_presentation(fixtures_dir / name)
    out = tmp_path / name
    save_presentation(pres, out, words)
    pres2, words2 = load_presentation(out)
    assert pres2 == pres
    assert words2 == words


def test_infinite_orders_parse(fixtures_dir):
    pres, _ = load_presentation(fixtures_dir / "p3_raag.json")
    assert all(pres.orders[v] == INFINITY for v in pres.graph.vertices)


def test_named_words_parse():
    pres, words = presentation_from_dict(
        {
            "vertices": [{"name": "a", "order": "inf"}, {"name": "b", "order": "inf"}],
            "edges": [["a", "b"]],
            "words": {"g": "b a^2"},
        }
    )
    assert format_word(words["g"]) == "a^2 b"


def test_bad_order_rejected():
    with pytest.raises(InputError):
        presentation_from_dict(
            {"vertices": [{"name": "a", "order": 2.5}, {"name": "b", "order": 2}]}
        )


def test_degenerate_order_has_own_type():
    with pytest.raises(DegeneratePresentationError):
        presentation_from_dict(
            {"vertices": [{"name": "a", "order": 1}, {"name": "b", "order": 2}]}
        )


def test_missing_vertices_key():
    with pytest.raises(InputError):
        presentation_from_dict({"edges": []})


def test_bad_json_positioned(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{\n  broken\n}")
    with pytest.raises(InputError, match=r"bad\.json:2"):
        load_presentation(path)


def test_fig2_counts(fixtures_dir):
    pres, _ = load_presentation(fixtures_dir / "fig2_raag.json")
    assert len(pres.graph.vertices) == 6
    assert len(pres.graph.edges) == 9


def test_serialization_is_deterministic(fixtures_dir):
    pres, words = load_presentation(fixtures_dir / "p4_racg.json")
    a = json.dumps(presentation_to_dict(pres, words), sort_keys=True)
    b = json.dumps(presentation_to_dict(pres, words), sort_keys=True)
    assert a == b
