"""
Test Serialization

Tests for export documents and their reload.
"""
import json

import pytest

from algebra.reference import SL3_HIGHEST_WEIGHT_GRADES
from algebra.rewrite import check_confluence
from algebra.scalars import parse_scalar
from utils.serialization import ArtifactSerializer, load_rule_file


@pytest.fixture(scope='module')
def serializer():
    """Exporter for sl2."""
    return ArtifactSerializer(2)


class TestDocuments:
    """JSON documents per target."""

    def test_basis_document(self, serializer):
        """Test the basis export lists every named element."""
        document = serializer.document('basis')
        assert document['names'] == ['X+', 'X-', 'X0']
        assert set(document['elements']) == {'X+', 'X-', 'X0'}
        assert document['schema_version'] == 1

    def test_sigma_document(self, serializer):
        """Test sigma has one entry per ordered pair."""
        document = serializer.document('sigma')
        assert len(document['entries']) == 9

    def test_unknown_target(self, serializer):
        """Test an unknown target."""
        with pytest.raises(ValueError):
            serializer.document('everything')

    def test_highest_weights_only_for_sl3(self, serializer):
        """Test that sl2 has no tabulated highest-weight vectors."""
        with pytest.raises(ValueError):
            serializer.document('highest-weights')


class TestReload:
    """load followed by reexport reproduces the document."""

    @pytest.mark.parametrize('target', ['basis', 'central-element', 'sigma', 'gamma', 'rules'])
    def test_reexport_is_identical(self, serializer, target):
        """Test that a reloaded object exports to the same JSON text."""
        document = serializer.document(target)
        text = json.dumps(document, indent=2)
        loaded = serializer.load(json.loads(text))
        assert json.dumps(serializer.reexport(loaded, target), indent=2) == text

    def test_loaded_central_element(self, serializer):
        """Test that the reloaded C is the computed one."""
        loaded = serializer.load(serializer.document('central-element'))
        assert loaded == serializer.qla.C

    def test_loaded_gamma_values(self, serializer):
        """Test a gamma coefficient after reload."""
        loaded = serializer.load(serializer.document('gamma'))
        assert ('X+', 'X+') in loaded
        assert all(value != 0 for image in loaded.values() for value in image.values())

    def test_wrong_rank(self, serializer):
        """Test that a document for another rank is refused."""
        document = serializer.document('rules')
        document['n'] = 3
        with pytest.raises(ValueError):
            serializer.load(document)

    def test_rule_file(self, serializer, tmp_path):
        """Test load_rule_file on an exported algebra rule set."""
        path = tmp_path / 'sl2-rules.json'
        assert serializer.export('rules', 'json', str(path))[0]
        system = load_rule_file(str(path))
        assert check_confluence(system).is_confluent


class TestExport:
    """Writing files."""

    def test_export_text(self, serializer, tmp_path):
        """Test a text export writes a file and reports success."""
        path = tmp_path / 'out' / 'c.txt'
        success, message = serializer.export('central-element', 'text', str(path))
        assert success
        assert "central-element" in message
        assert path.read_text().strip()

    def test_export_failure_is_reported(self, serializer, tmp_path):
        """Test that an invalid target returns a failure tuple."""
        success, message = serializer.export('everything', 'json', str(tmp_path / 'x.json'))
        assert not success
        assert message.startswith("Error exporting")

    def test_scalar_strings_are_canonical(self, serializer):
        """Test that every exported coefficient reprints to itself."""
        document = serializer.document('central-element')
        for record in document['element']:
            assert parse_scalar(record['coeff']).to_string() == record['coeff']


@pytest.mark.slow
class TestHighestWeightExport:
    """Only vectors that pass their checks are exported."""

    def test_all_vectors_exported(self):
        """Test that the six sl3 vectors pass and reload unchanged."""
        serializer = ArtifactSerializer(3)
        document = serializer.document('highest-weights')
        labels = {'W27', 'W10', 'W10*', 'W8s', 'W8a', 'W1'}
        assert set(document['vectors']) == labels
        assert set(document['gamma_eigenvalues']) == labels
        assert serializer.reexport(serializer.load(document), 'highest-weights') == document

    def test_failing_vector_withheld(self, monkeypatch):
        """Test that a vector with the wrong stated weight is left out."""
        monkeypatch.setitem(SL3_HIGHEST_WEIGHT_GRADES, 'W10', (1, 2))
        document = ArtifactSerializer(3).document('highest-weights')
        assert 'W10' not in document['vectors']
        assert 'W10' not in document['gamma_eigenvalues']
        assert 'W27' in document['vectors']
