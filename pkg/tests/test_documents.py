"""
Tests for cone and polytope JSON documents.
"""

import json
import os
import sys
from fractions import Fraction

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../src")))

from conetensor.cone import make_cone, orthant
from conetensor.corpus import get_cone, get_polytope
from conetensor.documents import DocumentImporter, dumps, emit_cone, emit_polytope, vectors_to_json
from conetensor.exceptions import DocumentError, DoubleDescriptionLimitError


@pytest.fixture
def importer():
    return DocumentImporter(strict=True)


class TestParseCone:
    """Tests for DocumentImporter.parse_cone()"""

    def test_rays_document(self, importer):
        cone = importer.parse_cone({"dim": 2, "rays": [[1, 0], [0, 1]], "name": "corner"})
        assert cone == orthant(2)
        assert cone.name == "corner"

    def test_inequalities_with_fractions(self, importer):
        cone = importer.parse_cone({"format_version": "1", "dim": 2, "inequalities": [["1/2", 0], [0, "3"]]})
        assert cone == orthant(2)

    def test_empty_ray_list_is_zero_cone(self, importer):
        cone = importer.parse_cone({"dim": 2, "rays": []})
        assert cone.rays == () and cone.lineality == ()

    @pytest.mark.parametrize(
        "doc",
        [
            [],
            {"rays": [[1]]},
            {"dim": -1, "rays": []},
            {"dim": True, "rays": []},
            {"dim": 2},
            {"dim": 2, "rays": [[1, 0, 0]]},
            {"dim": 2, "rays": [[1, True]]},
            {"dim": 2, "rays": [[1, 0.5]]},
            {"dim": 2, "rays": [["1/0", 0]]},
            {"dim": 2, "rays": "[[1, 0]]"},
            {"dim": 2, "rays": [[1, 0]], "format_version": "2"},
            {"dim": 2, "rays": [[1, 0]], "colour": "red"},
        ],
    )
    def test_malformed_documents(self, importer, doc):
        with pytest.raises(DocumentError):
            importer.parse_cone(doc, "test")

    def test_unknown_fields_allowed_when_lenient(self):
        cone = DocumentImporter(strict=False).parse_cone({"dim": 1, "rays": [[1]], "colour": "red"})
        assert cone.rays == ((1,),)

    def test_inconsistent_sides_become_document_error(self, importer):
        with pytest.raises(DocumentError) as excinfo:
            importer.parse_cone({"dim": 2, "rays": [[1, 0]], "inequalities": [[0, 1]]}, "bad.json")
        assert "bad.json" in str(excinfo.value)

    def test_dd_limit_passes_through(self, importer, monkeypatch):
        monkeypatch.setenv("CONETENSOR_MAX_DD_ROWS", "1")
        doc = {"dim": 3, "inequalities": [[1, 0, 1], [-1, 0, 1], [0, 1, 1], [0, -1, 1]]}
        with pytest.raises(DoubleDescriptionLimitError):
            importer.parse_cone(doc)


class TestFiles:
    """Tests for loading documents from disk"""

    def test_load_cone_names_after_file(self, importer, tmp_path):
        path = tmp_path / "corner.json"
        path.write_text(json.dumps({"dim": 2, "rays": [[1, 0], [0, 1]]}))
        cone = importer.load_cone(path)
        assert cone.name == "corner"

    def test_missing_file(self, importer, tmp_path):
        with pytest.raises(DocumentError):
            importer.load_cone(tmp_path / "missing.json")

    def test_invalid_json(self, importer, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{ not json")
        with pytest.raises(DocumentError):
            importer.load_cone(path)

    def test_load_polytope(self, importer, tmp_path):
        path = tmp_path / "seg.json"
        path.write_text(json.dumps({"dim": 1, "vertices": [[-1], [0], [1]]}))
        polytope = importer.load_polytope(path)
        assert polytope.vertices == ((Fraction(-1),), (Fraction(1),))
        assert polytope.symmetric

    def test_polytope_needs_vertices(self, importer):
        with pytest.raises(DocumentError):
            importer.parse_polytope({"dim": 1, "vertices": []})


class TestEmit:
    """Tests for canonical output documents"""

    def test_rationals_as_strings(self):
        assert vectors_to_json([(Fraction(1, 2), 3, Fraction(-4, 2))]) == [["1/2", 3, -2]]

    def test_emitted_cone_parses_back(self, importer):
        q = get_cone("Q")
        doc = emit_cone(q)
        assert doc["name"] == "Q"
        assert doc["inequalities"] == [[-1, 0, 1], [0, -1, 1], [0, 1, 1], [1, 0, 1]]
        assert importer.parse_cone(json.loads(dumps(doc))) == q

    def test_emitted_polytope_parses_back(self, importer):
        square = get_polytope("square")
        doc = emit_polytope(square)
        assert doc["symmetric"] is True
        assert importer.parse_polytope(json.loads(dumps(doc))) == square

    def test_dumps_is_deterministic(self):
        doc = emit_cone(make_cone(2, rays=[(1, 0)]))
        assert dumps(doc) == dumps(dict(reversed(list(doc.items()))))
        assert dumps(doc).endswith("\n")
